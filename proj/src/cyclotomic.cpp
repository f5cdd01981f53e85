#include "bicay/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bicay {

namespace {

constexpr unsigned kMaxConductor = 4096;

// Exact division of integer polynomials, quotient only; divisor monic.
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& num,
                                      const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  const size_t dd = den.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dd, mpz_class(0));
  for (size_t i = rem.size() - 1; ; --i) {
    mpz_class c = rem[i];
    if (c != 0) {
      quot[i - dd] = c;
      for (size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    if (i == dd) break;
  }
  return quot;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, std::vector<mpz_class>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0 || n > kMaxConductor) throw Error("cyclotomic_polynomial: bad index");

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.  Fill the cache for the
  // divisors of n in ascending order; every proper divisor of a divisor of n
  // also divides n, so each step only needs entries already present.
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    std::vector<mpz_class> num(d + 1, mpz_class(0));
    num[0] = -1;
    num[d] = 1;
    for (unsigned e = 1; e < d; ++e)
      if (d % e == 0) num = poly_div_exact(num, cache.at(e));
    cache[d] = std::move(num);
  }
  return cache.at(n);
}

Cyclotomic Cyclotomic::reduce(unsigned conductor, std::vector<mpq_class> dense) {
  const auto& phi_poly = cyclotomic_polynomial(conductor);
  const size_t deg = phi_poly.size() - 1;  // = euler_phi(conductor)
  for (size_t i = dense.size(); i-- > deg;) {
    mpq_class c = dense[i];
    if (c != 0) {
      dense[i] = 0;
      for (size_t j = 0; j < deg; ++j) dense[i - deg + j] -= c * phi_poly[j];
    }
  }
  dense.resize(deg);
  for (auto& q : dense) q.canonicalize();
  return Cyclotomic(conductor, std::move(dense));
}

Cyclotomic Cyclotomic::from_rational(const mpq_class& q, unsigned conductor) {
  std::vector<mpq_class> c(euler_phi(conductor), mpq_class(0));
  c[0] = q;
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::from_integer(long v, unsigned conductor) {
  return from_rational(mpq_class(v), conductor);
}

Cyclotomic Cyclotomic::root(unsigned e, long k) {
  if (e == 0) throw Error("root: conductor must be positive");
  long kk = k % static_cast<long>(e);
  if (kk < 0) kk += e;
  std::vector<mpq_class> dense(e, mpq_class(0));
  dense[static_cast<size_t>(kk)] = 1;
  return reduce(e, std::move(dense));
}

Cyclotomic Cyclotomic::embedded(unsigned m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    throw ConductorMismatch("embedded: target conductor not a multiple");
  const unsigned step = m / conductor_;
  std::vector<mpq_class> dense(m, mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) dense[i * step] += coeffs_[i];
  return reduce(m, std::move(dense));
}

Cyclotomic Cyclotomic::galois(unsigned t) const {
  if (std::gcd(t, conductor_) != 1)
    throw Error("galois: exponent not coprime to conductor");
  std::vector<mpq_class> dense(conductor_, mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      dense[(i * static_cast<size_t>(t)) % conductor_] += coeffs_[i];
  return reduce(conductor_, std::move(dense));
}

Cyclotomic Cyclotomic::conj() const {
  return galois(conductor_ == 1 ? 1 : conductor_ - 1);
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const mpq_class& q) { return q == 0; });
}

bool Cyclotomic::is_rational(mpq_class* out) const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  if (out) *out = coeffs_[0];
  return true;
}

bool Cyclotomic::is_real() const { return *this == conj(); }

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  const double theta = 2.0 * M_PI / conductor_;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    double c = coeffs_[i].get_d();
    acc += c * std::complex<double>(std::cos(theta * i), std::sin(theta * i));
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].get_str();
  }
  os << ")@" << conductor_;
  return os.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  auto fail = [&] { throw ParseError("bad cyclotomic literal: " + text); };
  size_t open = text.find('(');
  size_t close = text.rfind(")@");
  if (open == std::string::npos || close == std::string::npos || close < open) fail();
  unsigned conductor = 0;
  try {
    conductor = static_cast<unsigned>(std::stoul(text.substr(close + 2)));
  } catch (const std::exception&) {
    fail();
  }
  if (conductor == 0 || conductor > kMaxConductor) fail();
  std::vector<mpq_class> coeffs;
  std::string body = text.substr(open + 1, close - open - 1);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) fail();
    mpq_class q;
    if (q.set_str(tok.substr(b, e - b + 1), 10) != 0) fail();
    q.canonicalize();
    coeffs.push_back(q);
  }
  if (coeffs.size() != euler_phi(conductor)) fail();
  return Cyclotomic(conductor, std::move(coeffs));
}

void Cyclotomic::require_same_conductor(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_)
    throw ConductorMismatch("conductor mismatch: " + std::to_string(conductor_) +
                            " vs " + std::to_string(o.conductor_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& q : r.coeffs_) q = -q;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same_conductor(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same_conductor(o);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  require_same_conductor(o);
  std::vector<mpq_class> dense(2 * coeffs_.size(), mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      dense[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  *this = reduce(conductor_, std::move(dense));
  return *this;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  auto [a, b] = align_conductors(*this, o);
  return a.coeffs_ == b.coeffs_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::pair<Cyclotomic, Cyclotomic> align_conductors(const Cyclotomic& a,
                                                   const Cyclotomic& b) {
  unsigned l = std::lcm(a.conductor(), b.conductor());
  return {a.embedded(l), b.embedded(l)};
}

}  // namespace bicay
