#include "bicay/polyz.hpp"

namespace bicay {

mpz_class poly_eval(const std::vector<mpz_class>& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<mpz_class> poly_pow(const std::vector<mpz_class>& p, unsigned k) {
  std::vector<mpz_class> acc{1};
  for (unsigned i = 0; i < k; ++i) acc = poly_mul(acc, p);
  return acc;
}

bool poly_divide_linear(std::vector<mpz_class>& p, const mpz_class& root) {
  if (p.size() < 2) return false;
  // Synthetic division by (x - root), high to low.
  std::vector<mpz_class> q(p.size() - 1);
  mpz_class carry = 0;
  for (size_t i = p.size(); i-- > 1;) {
    carry = carry * root + p[i];
    q[i - 1] = carry;
  }
  if (carry * root + p[0] != 0) return false;
  p = std::move(q);
  return true;
}

unsigned root_multiplicity(std::vector<mpz_class> p, const mpz_class& root) {
  unsigned count = 0;
  while (poly_divide_linear(p, root)) ++count;
  return count;
}

std::optional<std::vector<mpz_class>> poly_nth_root(
    const std::vector<mpz_class>& p, unsigned k) {
  if (k == 0 || p.empty() || p.back() != 1) return std::nullopt;
  const size_t n = p.size() - 1;
  if (n % k != 0) return std::nullopt;
  const size_t d = n / k;
  if (k == 1) return p;

  // Descending coefficient recursion: the coefficient of x^(n-t) in q^k is
  // k*q[d-t] plus terms in already-known higher coefficients only.
  std::vector<mpz_class> q(d + 1, mpz_class(0));
  q[d] = 1;
  for (size_t t = 1; t <= d; ++t) {
    std::vector<mpz_class> cur = poly_pow(q, k);
    mpz_class num = p[n - t] - cur[n - t];
    if (num % k != 0) return std::nullopt;
    q[d - t] = num / k;
  }
  if (poly_pow(q, k) != p) return std::nullopt;
  return q;
}

}  // namespace bicay
