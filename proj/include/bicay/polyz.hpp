#pragma once

// Exact univariate integer polynomial helpers.  Coefficient vectors are
// ascending: p[0] is the constant term, p.back() the leading coefficient.

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace bicay {

mpz_class poly_eval(const std::vector<mpz_class>& p, const mpz_class& x);

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b);

std::vector<mpz_class> poly_pow(const std::vector<mpz_class>& p, unsigned k);

// Divides p by (x - root) in place when the division is exact; returns false
// and leaves p untouched when root is not a root of p.
bool poly_divide_linear(std::vector<mpz_class>& p, const mpz_class& root);

unsigned root_multiplicity(std::vector<mpz_class> p, const mpz_class& root);

// Exact k-th root of a monic integer polynomial, or nullopt when p is not a
// perfect k-th power.  The result is monic with integer coefficients and is
// verified by re-expansion before being returned.
std::optional<std::vector<mpz_class>> poly_nth_root(
    const std::vector<mpz_class>& p, unsigned k);

}  // namespace bicay
