#include "bicay/chars.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bicay {

namespace {

using Vec = std::vector<unsigned>;   // values in [0, p)
using Mat = std::vector<Vec>;        // row-major

unsigned modpow(unsigned long long b, unsigned long long e, unsigned p) {
  unsigned long long acc = 1, cur = b % p;
  while (e) {
    if (e & 1) acc = acc * cur % p;
    cur = cur * cur % p;
    e >>= 1;
  }
  return static_cast<unsigned>(acc);
}

unsigned modinv(unsigned a, unsigned p) { return modpow(a, p - 2, p); }

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned pick_prime(unsigned order, unsigned exponent) {
  for (unsigned p = exponent + 1; p <= 100000; p += exponent)
    if (1ull * p * p > 4ull * order && is_prime(p)) return p;
  throw NoSuitablePrime("no prime = 1 mod " + std::to_string(exponent) +
                        " under the search bound");
}

unsigned smallest_primitive_root(unsigned p) {
  std::vector<unsigned> prime_factors;
  unsigned m = p - 1;
  for (unsigned d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (unsigned g = 2; g < p; ++g) {
    bool ok = true;
    for (unsigned q : prime_factors)
      if (modpow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Inconsistent("no primitive root found");
}

// Reduced row echelon form in place; returns pivot column per row.
std::vector<unsigned> rref(Mat& m, unsigned p) {
  std::vector<unsigned> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    unsigned inv = modinv(m[row][col], p);
    for (size_t j = col; j < cols; ++j)
      m[row][j] = static_cast<unsigned>(1ull * m[row][j] * inv % p);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      unsigned f = m[i][col];
      for (size_t j = col; j < cols; ++j)
        m[i][j] = static_cast<unsigned>(
            (m[i][j] + 1ull * (p - f) * m[row][j]) % p);
    }
    pivots.push_back(static_cast<unsigned>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

// Kernel basis of a square matrix, rows of the result, deterministic.
Mat kernel_basis(Mat a, unsigned p) {
  const size_t n = a.size();
  std::vector<unsigned> pivots = rref(a, p);
  std::vector<bool> is_pivot(n, false);
  for (unsigned c : pivots) is_pivot[c] = true;
  Mat basis;
  for (size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(n, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (p - a[r][free_col]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<std::vector<std::vector<unsigned>>> class_structure_constants(
    const Group& g, const ConjugacyPartition& part) {
  const unsigned h = static_cast<unsigned>(part.classes.size());
  std::vector<std::vector<std::vector<unsigned>>> a(
      h, std::vector<std::vector<unsigned>>(h, std::vector<unsigned>(h, 0)));
  for (unsigned k = 0; k < h; ++k) {
    unsigned rep = part.reps[k];
    for (unsigned x = 0; x < g.order(); ++x) {
      unsigned y = g.op(g.inv(x), rep);  // x*y = rep
      ++a[part.class_of[x]][part.class_of[y]][k];
    }
  }
  return a;
}

namespace {

// Splits the ambient space into the 1-dimensional joint eigenspaces of the
// class matrices over the p-element field; returns one normalized central
// character vector per class (coordinate at the identity class scaled to 1).
std::vector<Vec> central_character_vectors(
    const std::vector<std::vector<std::vector<unsigned>>>& sc, unsigned h,
    unsigned p) {
  // Subspaces as RREF row bases.
  std::vector<Mat> spaces;
  {
    Mat full(h, Vec(h, 0));
    for (unsigned i = 0; i < h; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }

  for (unsigned mi = 1; mi < h; ++mi) {
    bool any_big = false;
    for (const auto& s : spaces) any_big |= s.size() > 1;
    if (!any_big) break;

    std::vector<Mat> next;
    for (auto& basis : spaces) {
      const size_t d = basis.size();
      if (d == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      std::vector<unsigned> pivots;
      for (const auto& row : basis) {
        unsigned c = 0;
        while (row[c] == 0) ++c;
        pivots.push_back(c);
      }
      // Restriction A: column t = coordinates of M_mi * basis[t].
      Mat a(d, Vec(d, 0));
      for (size_t t = 0; t < d; ++t) {
        Vec img(h, 0);
        for (unsigned j = 0; j < h; ++j) {
          unsigned long long acc = 0;
          for (unsigned k = 0; k < h; ++k)
            acc += 1ull * sc[mi][j][k] % p * basis[t][k];
          img[j] = static_cast<unsigned>(acc % p);
        }
        Vec coord(d);
        for (size_t s = 0; s < d; ++s) coord[s] = img[pivots[s]];
        // The subspace is invariant, so the coordinates must reproduce img.
        for (unsigned j = 0; j < h; ++j) {
          unsigned long long acc = 0;
          for (size_t s = 0; s < d; ++s) acc += 1ull * coord[s] * basis[s][j];
          if (acc % p != img[j])
            throw Inconsistent("class-matrix subspace not invariant");
        }
        for (size_t s = 0; s < d; ++s) a[s][t] = coord[s];
      }
      // Eigenvalues in ascending order; eigenspaces mapped back to ambient.
      size_t found = 0;
      for (unsigned lam = 0; lam < p && found < d; ++lam) {
        Mat shifted = a;
        for (size_t i = 0; i < d; ++i)
          shifted[i][i] = (shifted[i][i] + p - lam) % p;
        Mat ker = kernel_basis(std::move(shifted), p);
        if (ker.empty()) continue;
        found += ker.size();
        Mat ambient;
        for (const auto& kv : ker) {
          Vec w(h, 0);
          for (size_t t = 0; t < d; ++t)
            for (unsigned j = 0; j < h; ++j)
              w[j] = static_cast<unsigned>((w[j] + 1ull * kv[t] * basis[t][j]) % p);
          ambient.push_back(std::move(w));
        }
        rref(ambient, p);
        next.push_back(std::move(ambient));
      }
      if (found != d) throw Inconsistent("class matrix not diagonalizable");
    }
    spaces = std::move(next);
  }

  std::vector<Vec> omegas;
  for (const auto& s : spaces) {
    if (s.size() != 1)
      throw Inconsistent("joint eigenspaces failed to split to dimension 1");
    Vec v = s[0];
    if (v[0] == 0) throw Inconsistent("central character vanishes at identity");
    unsigned scale = modinv(v[0], p);
    for (auto& x : v) x = static_cast<unsigned>(1ull * x * scale % p);
    omegas.push_back(std::move(v));
  }
  if (omegas.size() != h) throw Inconsistent("wrong number of eigenspaces");
  return omegas;
}

}  // namespace

CharacterTable character_table(const Group& g) {
  CharacterTable t{g, conjugacy_classes(g), 0, 1, {}, {}};
  const unsigned h = static_cast<unsigned>(t.partition.classes.size());
  t.h = h;
  const unsigned e = group_exponent(g);
  t.conductor = e;
  const unsigned p = pick_prime(g.order(), e);

  auto sc = class_structure_constants(g, t.partition);
  std::vector<Vec> omegas = central_character_vectors(sc, h, p);

  std::vector<unsigned> sizes(h), inv_class(h);
  for (unsigned k = 0; k < h; ++k) {
    sizes[k] = static_cast<unsigned>(t.partition.classes[k].size());
    inv_class[k] = t.partition.class_of[g.inv(t.partition.reps[k])];
  }

  const unsigned w = modpow(smallest_primitive_root(p), (p - 1) / e, p);

  std::vector<std::vector<Cyclotomic>> rows;
  std::vector<unsigned> degrees;
  unsigned degree_square_sum = 0;

  for (const Vec& omega : omegas) {
    // |G| / n^2 = sum_k omega_k * omega_{k'} / |class_k| mod p.
    unsigned long long s = 0;
    for (unsigned k = 0; k < h; ++k)
      s = (s + 1ull * omega[k] * omega[inv_class[k]] % p * modinv(sizes[k], p)) % p;
    unsigned n2 = static_cast<unsigned>(1ull * g.order() % p * modinv(static_cast<unsigned>(s), p) % p);
    unsigned deg = 0;
    for (unsigned n = 1; n * n <= g.order(); ++n)
      if (n * n % p == n2) {
        deg = n;
        break;
      }
    if (deg == 0) throw Inconsistent("no admissible degree");
    degrees.push_back(deg);
    degree_square_sum += deg * deg;

    // chi(class k) mod p, from the central character.
    Vec chi_mod(h);
    for (unsigned k = 0; k < h; ++k)
      chi_mod[k] = static_cast<unsigned>(1ull * deg * omega[k] % p *
                                         modinv(sizes[k], p) % p);

    std::vector<Cyclotomic> row;
    for (unsigned k = 0; k < h; ++k) {
      unsigned rep = t.partition.reps[k];
      unsigned m = element_order(g, rep);
      unsigned zm = modpow(w, e / m, p);  // primitive m-th root mod p
      unsigned minv = modinv(m % p, p);
      Cyclotomic value = Cyclotomic::from_integer(0, e);
      unsigned total = 0;
      for (unsigned tt = 0; tt < m; ++tt) {
        // Multiplicity of the tt-th power of the m-th root among rho(rep).
        unsigned long long acc = 0;
        unsigned gu = 0;  // rep^u
        for (unsigned u = 0; u < m; ++u) {
          unsigned zexp = static_cast<unsigned>((1ull * tt * u) % m);
          unsigned zpow = modpow(zm, (m - zexp) % m, p);  // zm^(-tt*u)
          acc = (acc + 1ull * chi_mod[t.partition.class_of[gu]] * zpow) % p;
          gu = g.op(gu, rep);
        }
        unsigned mult = static_cast<unsigned>(acc * minv % p);
        if (mult > deg) throw Inconsistent("eigenvalue multiplicity too large");
        total += mult;
        if (mult)
          value += Cyclotomic::from_integer(mult, e) *
                   Cyclotomic::root(e, static_cast<long>(e / m) * tt);
      }
      if (total != deg) throw Inconsistent("multiplicities do not sum to degree");
      row.push_back(std::move(value));
    }
    rows.push_back(std::move(row));
  }

  if (degree_square_sum != g.order())
    throw Inconsistent("degree squares do not sum to the order");

  // Ascending degree, then descending float fingerprint per column (real
  // parts, then imaginary parts), exact compare as a final tiebreak.
  std::vector<unsigned> idx(h);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](unsigned a, unsigned b) {
    if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
    for (unsigned k = 0; k < h; ++k) {
      auto za = rows[a][k].to_complex(), zb = rows[b][k].to_complex();
      if (std::abs(za.real() - zb.real()) > 1e-9) return za.real() > zb.real();
      if (std::abs(za.imag() - zb.imag()) > 1e-9) return za.imag() > zb.imag();
      if (rows[a][k] != rows[b][k]) return rows[b][k] < rows[a][k];
    }
    return false;
  });
  for (unsigned i : idx) {
    t.degrees.push_back(degrees[i]);
    t.rows.push_back(std::move(rows[i]));
  }

  for (unsigned k = 0; k < h; ++k) {
    mpq_class q;
    if (!t.rows[0][k].is_rational(&q) || q != 1)
      throw Inconsistent("first row is not the principal character");
  }
  return t;
}

std::vector<unsigned> linear_characters(const CharacterTable& t) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < t.h; ++i)
    if (t.degrees[i] == 1) out.push_back(i);
  return out;
}

namespace {

bool complete_row_matching(const std::vector<std::vector<Cyclotomic>>& a,
                           const std::vector<std::vector<Cyclotomic>>& b,
                           const std::vector<unsigned>& col_map,
                           std::vector<bool>& used, size_t row) {
  if (row == a.size()) return true;
  for (size_t j = 0; j < b.size(); ++j) {
    if (used[j]) continue;
    bool ok = true;
    for (size_t k = 0; k < col_map.size() && ok; ++k)
      ok = a[row][k] == b[j][col_map[k]];
    if (!ok) continue;
    used[j] = true;
    if (complete_row_matching(a, b, col_map, used, row + 1)) return true;
    used[j] = false;
  }
  return false;
}

bool complete_col_matching(const CharacterTable& t, const GoldenTable& ref,
                           const std::vector<std::pair<unsigned, unsigned>>& mine,
                           std::vector<unsigned>& col_map,
                           std::vector<bool>& used, size_t col) {
  if (col == mine.size()) {
    std::vector<bool> row_used(ref.rows.size(), false);
    return complete_row_matching(t.rows, ref.rows, col_map, row_used, 0);
  }
  for (size_t j = 0; j < ref.columns.size(); ++j) {
    if (used[j] || ref.columns[j] != mine[col]) continue;
    used[j] = true;
    col_map[col] = static_cast<unsigned>(j);
    if (complete_col_matching(t, ref, mine, col_map, used, col + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool matches_golden(const CharacterTable& t, const GoldenTable& ref) {
  if (ref.columns.size() != t.h || ref.rows.size() != t.h) return false;
  std::vector<std::pair<unsigned, unsigned>> mine;
  for (unsigned k = 0; k < t.h; ++k)
    mine.emplace_back(static_cast<unsigned>(t.partition.classes[k].size()),
                      element_order(t.group, t.partition.reps[k]));
  std::vector<unsigned> col_map(t.h);
  std::vector<bool> used(t.h, false);
  return complete_col_matching(t, ref, mine, col_map, used, 0);
}

}  // namespace bicay
