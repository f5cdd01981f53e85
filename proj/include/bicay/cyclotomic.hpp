#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_e).  Values are stored on the
// power basis 1, zeta, ..., zeta^(phi(e)-1) with arbitrary-precision rational
// coefficients, reduced modulo the e-th cyclotomic polynomial.  The conductor
// is part of the value; binary operations require equal conductors and callers
// align via embedded()/lcm (embedding never reduces to the minimal conductor).

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bicay/errors.hpp"

namespace bicay {

unsigned euler_phi(unsigned n);

// Coefficients of the n-th cyclotomic polynomial, ascending degree, monic.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1, mpq_class(0)) {}

  static Cyclotomic from_rational(const mpq_class& q, unsigned conductor = 1);
  static Cyclotomic from_integer(long v, unsigned conductor = 1);
  // zeta_e^k, k taken mod e.
  static Cyclotomic root(unsigned e, long k);

  unsigned conductor() const { return conductor_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  // Re-expresses the value in Q(zeta_m); m must be a multiple of the
  // current conductor.
  Cyclotomic embedded(unsigned m) const;

  Cyclotomic conj() const;       // zeta -> zeta^(e-1)
  Cyclotomic galois(unsigned t) const;  // zeta -> zeta^t, gcd(t, e) = 1

  bool is_zero() const;
  bool is_rational(mpq_class* out = nullptr) const;
  bool is_real() const;

  std::complex<double> to_complex() const;
  double real_approx() const { return to_complex().real(); }

  // "(a0, a1/b1, ...)@e" with one coefficient per power-basis slot.
  std::string to_string() const;
  static Cyclotomic parse(const std::string& text);

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  // Value equality; operands at different conductors are aligned first.
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Representation order (conductor, then coefficient vector).  Total order
  // on values only among operands of equal conductor; set containers must
  // hold values at a uniform conductor.
  bool operator<(const Cyclotomic& o) const;

 private:
  Cyclotomic(unsigned conductor, std::vector<mpq_class> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}
  static Cyclotomic reduce(unsigned conductor, std::vector<mpq_class> dense);
  void require_same_conductor(const Cyclotomic& o) const;

  unsigned conductor_;
  std::vector<mpq_class> coeffs_;
};

// Both values re-expressed at lcm(conductors).
std::pair<Cyclotomic, Cyclotomic> align_conductors(const Cyclotomic& a,
                                                   const Cyclotomic& b);

}  // namespace bicay
