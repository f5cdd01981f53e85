#include "bicay/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "bicay/errors.hpp"

namespace bicay {

namespace {

// Inverse-closed subsets are free unions of involution singletons and
// inverse pairs.  The basis lists involutions first (ascending), then pairs
// ascending by smaller element; count[i][w] is the number of ways to reach
// weight w using atoms i and later, which drives lexicographic enumeration,
// unranking, and uniform sampling.
struct AtomBasis {
  std::vector<uint64_t> masks;
  std::vector<unsigned> weights;
  std::vector<std::vector<uint64_t>> count;
};

AtomBasis atom_basis(const Group& g, unsigned max_size) {
  AtomBasis b;
  for (unsigned x = 1; x < g.order(); ++x)
    if (g.inv(x) == x) {
      b.masks.push_back(uint64_t(1) << x);
      b.weights.push_back(1);
    }
  for (unsigned x = 1; x < g.order(); ++x) {
    unsigned y = g.inv(x);
    if (y > x) {
      b.masks.push_back((uint64_t(1) << x) | (uint64_t(1) << y));
      b.weights.push_back(2);
    }
  }
  size_t a = b.masks.size();
  b.count.assign(a + 1, std::vector<uint64_t>(max_size + 1, 0));
  b.count[a][0] = 1;
  for (size_t i = a; i-- > 0;)
    for (unsigned w = 0; w <= max_size; ++w) {
      uint64_t c = b.count[i + 1][w];
      if (b.weights[i] <= w) c += b.count[i + 1][w - b.weights[i]];
      b.count[i][w] = c;
    }
  return b;
}

bool enumerate_rec(const AtomBasis& b, size_t i, unsigned need, uint64_t mask,
                   uint64_t limit, std::vector<uint64_t>& out) {
  if (need == 0) {
    out.push_back(mask);
    return out.size() < limit;
  }
  if (i == b.masks.size() || b.count[i][need] == 0) return true;
  if (!enumerate_rec(b, i + 1, need, mask, limit, out)) return false;
  if (b.weights[i] <= need)
    return enumerate_rec(b, i + 1, need - b.weights[i], mask | b.masks[i],
                         limit, out);
  return true;
}

// First `limit` masks of the given size in incidence-lex order.
std::vector<uint64_t> enumerate_masks(const AtomBasis& b, unsigned size,
                                      uint64_t limit) {
  std::vector<uint64_t> out;
  if (limit == 0) return out;
  out.reserve(std::min<uint64_t>(limit, b.count[0][size]));
  enumerate_rec(b, 0, size, 0, limit, out);
  return out;
}

// Mask at the given lexicographic rank among subsets of one size.
uint64_t unrank_mask(const AtomBasis& b, unsigned size, uint64_t rank) {
  uint64_t mask = 0;
  unsigned need = size;
  for (size_t i = 0; i < b.masks.size() && need; ++i) {
    uint64_t skip = b.count[i + 1][need];
    if (rank < skip) continue;
    rank -= skip;
    mask |= b.masks[i];
    need -= b.weights[i];
  }
  return mask;
}

// Unbiased draw from [0, bound); mt19937_64 keeps it platform-stable.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    uint64_t v = rng();
    if (v >= rem) return (v - rem) % bound;
  }
}

// Floyd's distinct sampling of `want` ranks out of [0, total), sorted.
std::vector<uint64_t> sample_ranks(uint64_t total, uint64_t want,
                                   uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<uint64_t> chosen;
  for (uint64_t j = total - want; j < total; ++j) {
    uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return std::vector<uint64_t>(chosen.begin(), chosen.end());
}

uint64_t sample_seed(const Group& g, unsigned size) {
  return 0x9e3779b97f4a7c15ull ^ (uint64_t(size) << 32) ^ g.order();
}

std::vector<unsigned> mask_members(uint64_t mask) {
  std::vector<unsigned> out;
  for (unsigned x = 0; x < 64; ++x)
    if (mask >> x & 1) out.push_back(x);
  return out;
}

uint64_t members_mask(const std::vector<unsigned>& members) {
  uint64_t m = 0;
  for (unsigned x : members) m |= uint64_t(1) << x;
  return m;
}

// Right-multiplication adjacency: x ~ x*s for every member.
std::vector<uint64_t> adjacency_of_mask(const Group& g,
                                        const std::vector<unsigned>& members) {
  std::vector<uint64_t> adj(g.order(), 0);
  for (unsigned x = 0; x < g.order(); ++x)
    for (unsigned s : members) adj[x] |= uint64_t(1) << g.op(x, s);
  return adj;
}

bool adjacency_connected(const std::vector<uint64_t>& adj, unsigned n) {
  uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  uint64_t seen = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    for (unsigned x = 0; x < n; ++x)
      if (frontier >> x & 1) next |= adj[x];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen == all;
}

// Characteristic polynomial over the prime field: Hessenberg reduction by a
// similarity transform, then the leading-minor recurrence.  Coefficients
// ascending, monic.  p must stay below 2^31 so products fit in 64 bits.
std::vector<uint64_t> charpoly_modp(const std::vector<uint64_t>& adjbits,
                                    unsigned n, uint64_t p) {
  std::vector<uint64_t> a(size_t(n) * n, 0);
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      if (adjbits[x] >> y & 1) a[size_t(x) * n + y] = 1;

  auto powmod = [p](uint64_t base, uint64_t e) {
    uint64_t r = 1 % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };

  for (unsigned col = 0; col + 2 < n; ++col) {
    unsigned piv = n;
    for (unsigned r = col + 1; r < n; ++r)
      if (a[size_t(r) * n + col]) {
        piv = r;
        break;
      }
    if (piv == n) continue;
    if (piv != col + 1) {
      for (unsigned c = 0; c < n; ++c)
        std::swap(a[size_t(piv) * n + c], a[size_t(col + 1) * n + c]);
      for (unsigned r = 0; r < n; ++r)
        std::swap(a[size_t(r) * n + piv], a[size_t(r) * n + col + 1]);
    }
    uint64_t inv = powmod(a[size_t(col + 1) * n + col], p - 2);
    for (unsigned r = col + 2; r < n; ++r) {
      uint64_t f = a[size_t(r) * n + col];
      if (!f) continue;
      uint64_t mult = f * inv % p;
      for (unsigned c = 0; c < n; ++c) {
        uint64_t sub = mult * a[size_t(col + 1) * n + c] % p;
        uint64_t& cell = a[size_t(r) * n + c];
        cell = (cell + p - sub) % p;
      }
      for (unsigned r2 = 0; r2 < n; ++r2) {
        uint64_t add = mult * a[size_t(r2) * n + r] % p;
        uint64_t& cell = a[size_t(r2) * n + col + 1];
        cell = (cell + add) % p;
      }
    }
  }

  // poly[m] = char poly of the leading m-by-m block.
  std::vector<std::vector<uint64_t>> poly(n + 1);
  poly[0] = {1 % p};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<uint64_t> q(m + 1, 0);
    // (x - a_mm) * poly[m-1]
    uint64_t amm = a[size_t(m - 1) * n + (m - 1)];
    for (unsigned j = 0; j < m; ++j) {
      q[j + 1] = (q[j + 1] + poly[m - 1][j]) % p;
      q[j] = (q[j] + (p - amm) * poly[m - 1][j]) % p;
    }
    uint64_t subprod = 1 % p;
    for (unsigned i = m - 1; i-- > 0;) {
      // subdiagonal product h_{i+2,i+1} * ... * h_{m,m-1} (1-based)
      subprod = subprod * a[size_t(i + 1) * n + i] % p;
      if (!subprod) break;
      uint64_t coef = a[size_t(i) * n + (m - 1)] * subprod % p;
      if (!coef) continue;
      coef = p - coef;
      for (unsigned j = 0; j < poly[i].size(); ++j)
        q[j] = (q[j] + coef * poly[i][j]) % p;
    }
    poly[m] = std::move(q);
  }
  return poly[n];
}

constexpr uint64_t kPrimeA = 2147483647;  // 2^31 - 1
constexpr uint64_t kPrimeB = 2147483629;

uint64_t spectral_key(const std::vector<uint64_t>& adj, unsigned n) {
  uint64_t h = 1469598103934665603ull;
  for (uint64_t p : {kPrimeA, kPrimeB})
    for (uint64_t c : charpoly_modp(adj, n, p)) {
      h ^= c;
      h *= 1099511628211ull;
    }
  return h;
}

// Runs fn(i) for i in [0, count) across `jobs` threads; each index is
// touched exactly once, so disjoint writes need no locking.
void parallel_for(uint64_t count, unsigned jobs,
                  const std::function<void(uint64_t)>& fn) {
  if (jobs <= 1 || count < 64) {
    for (uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  uint64_t block = (count + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    uint64_t lo = t * block, hi = std::min(count, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

size_t first_profile_difference(const std::vector<CharSumSet>& a,
                                const std::vector<CharSumSet>& b) {
  for (size_t d = 0; d < a.size() && d < b.size(); ++d)
    if (!(a[d] == b[d])) return d;
  return a.size();
}

// Exact Gaussian elimination; Inconsistent on a singular matrix.
std::vector<mpq_class> solve_exact(std::vector<std::vector<mpq_class>> a,
                                   std::vector<mpq_class> b) {
  size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Inconsistent("singular coefficient matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<mpq_class> x(n);
  for (size_t i = 0; i < n; ++i) {
    x[i] = b[i] / a[i][i];
    x[i].canonicalize();
  }
  return x;
}

long require_count(const mpq_class& v, const char* what) {
  if (v.get_den() != 1 || v < 0)
    throw Inconsistent(std::string(what) + " is not a non-negative integer");
  return v.get_num().get_si();
}

std::vector<std::vector<mpq_class>> f42_matrix(bool swapped) {
  mpq_class half(1, 2);
  std::vector<std::vector<mpq_class>> a = {
      {1, 1, 1, 1},
      {-1, 1, -1, 1},
      {1, -half, -half, 1},
      {-1, -half, half, 1},
  };
  if (swapped) std::swap(a[2], a[3]);
  return a;
}

}  // namespace

CharSumSet char_sum_set(const CharacterTable& table, const ConnectionSet& s,
                        unsigned nu, bool multiset) {
  if (s.class_profile.size() != table.h)
    throw Inconsistent("connection set and table disagree on class count");
  CharSumSet out;
  out.degree = nu;
  bool found = false;
  for (unsigned r = 0; r < table.h; ++r) {
    if (table.degrees[r] != nu) continue;
    found = true;
    Cyclotomic acc = Cyclotomic::from_integer(0, table.conductor);
    for (unsigned c = 0; c < table.h; ++c) {
      unsigned cnt = s.class_profile[c];
      if (!cnt) continue;
      acc += table.rows[r][c] *
             Cyclotomic::from_integer(long(cnt), table.conductor);
    }
    out.values.push_back(acc);
  }
  if (!found)
    throw NoSuchDegree("no character of degree " + std::to_string(nu));
  std::sort(out.values.begin(), out.values.end());
  if (!multiset)
    out.values.erase(std::unique(out.values.begin(), out.values.end()),
                     out.values.end());
  return out;
}

std::vector<CharSumSet> m_profile(const CharacterTable& table,
                                  const ConnectionSet& s) {
  std::vector<CharSumSet> out;
  unsigned prev = 0;
  for (unsigned r = 0; r < table.h; ++r) {
    if (table.degrees[r] == prev) continue;  // rows sorted by degree
    prev = table.degrees[r];
    out.push_back(char_sum_set(table, s, prev));
  }
  return out;
}

bool m_profiles_equal(const CharacterTable& table, const ConnectionSet& s,
                      const ConnectionSet& t) {
  return m_profile(table, s) == m_profile(table, t);
}

ConnectionSet complement_set(const Group& g, const ConjugacyPartition& part,
                             const ConnectionSet& s) {
  std::vector<unsigned> members;
  size_t k = 0;
  for (unsigned x = 1; x < g.order(); ++x) {
    if (k < s.members.size() && s.members[k] == x) {
      ++k;
      continue;
    }
    members.push_back(x);
  }
  return make_connection_set(g, part, std::move(members));
}

ConnectionSet complement_set(const Group& g, const ConnectionSet& s) {
  return complement_set(g, conjugacy_classes(g), s);
}

std::vector<ConnectionSet> enumerate_connection_sets(const Group& g,
                                                     unsigned size,
                                                     bool generating_only) {
  std::vector<ConnectionSet> out;
  if (size >= g.order() && size > 0) return out;
  ConjugacyPartition part = conjugacy_classes(g);
  AtomBasis basis = atom_basis(g, size);
  uint64_t total = basis.count[0][size];
  for (uint64_t mask : enumerate_masks(basis, size, total)) {
    std::vector<unsigned> members = mask_members(mask);
    if (generating_only &&
        subgroup_generated(g, members).size() != g.order())
      continue;
    out.push_back(make_connection_set(g, part, std::move(members)));
  }
  return out;
}

BIGroupReport bi_check_group(const Group& g, const CharacterTable& table,
                             BIMode mode, uint64_t budget_per_size,
                             unsigned jobs) {
  BIGroupReport rep;
  rep.mode = mode;
  unsigned n = g.order();
  if (n <= 1) return rep;
  if (jobs == 0) jobs = 1;
  if (budget_per_size == 0) budget_per_size = 1;

  ConjugacyPartition part = conjugacy_classes(g);
  AtomBasis basis = atom_basis(g, n - 1);
  CanonicalCache cache;
  unsigned lo = mode == BIMode::full ? 1 : std::max(1u, (n + 1) / 2 - 1);

  for (unsigned size = lo; size < n; ++size) {
    uint64_t total = basis.count[0][size];
    SizeCoverage cov{size, total, 0, false};
    if (total == 0) {
      rep.sizes.push_back(cov);
      continue;
    }

    std::vector<uint64_t> masks;
    if (total <= budget_per_size) {
      masks = enumerate_masks(basis, size, total);
    } else {
      cov.sampled = true;
      rep.complete = false;
      for (uint64_t rank :
           sample_ranks(total, budget_per_size, sample_seed(g, size)))
        masks.push_back(unrank_mask(basis, size, rank));
    }

    struct Rec {
      bool keep = false;
      uint64_t key = 0;
    };
    std::vector<Rec> recs(masks.size());
    parallel_for(masks.size(), jobs, [&](uint64_t i) {
      std::vector<unsigned> members = mask_members(masks[i]);
      std::vector<uint64_t> adj = adjacency_of_mask(g, members);
      if (!adjacency_connected(adj, n)) return;
      recs[i] = {true, spectral_key(adj, n)};
    });

    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
    for (uint32_t i = 0; i < recs.size(); ++i)
      if (recs[i].keep) {
        buckets[recs[i].key].push_back(i);
        ++cov.examined;
      }
    rep.sizes.push_back(cov);

    struct Cand {
      CanonicalForm form;
      uint32_t i, j;
    };
    std::vector<Cand> cands;
    for (const auto& [key, list] : buckets) {
      if (list.size() < 2) continue;
      ++rep.buckets_examined;
      std::vector<ConnectionSet> csets;
      std::vector<std::vector<CharSumSet>> profiles;
      csets.reserve(list.size());
      for (uint32_t idx : list)
        csets.push_back(make_connection_set(g, part, mask_members(masks[idx])));
      profiles.resize(list.size());
      parallel_for(list.size(), jobs, [&](uint64_t k) {
        profiles[k] = m_profile(table, csets[k]);
      });
      bool all_equal = true;
      for (size_t k = 1; k < list.size() && all_equal; ++k)
        all_equal = profiles[k] == profiles[0];
      if (all_equal) continue;

      std::map<CanonicalForm, std::vector<size_t>> by_form;
      for (size_t k = 0; k < list.size(); ++k)
        by_form[cache.get(g, csets[k])].push_back(k);
      for (const auto& [form, group] : by_form) {
        const auto& ref = profiles[group[0]];
        for (size_t k = 1; k < group.size(); ++k) {
          if (profiles[group[k]] == ref) continue;
          cands.push_back({form, list[group[0]], list[group[k]]});
          break;
        }
      }
    }

    if (!cands.empty()) {
      const Cand* best = &cands[0];
      for (const Cand& c : cands)
        if (std::tie(c.form, c.i, c.j) < std::tie(best->form, best->i, best->j))
          best = &c;
      ConnectionSet s = make_connection_set(g, part, mask_members(masks[best->i]));
      ConnectionSet t = make_connection_set(g, part, mask_members(masks[best->j]));
      std::vector<CharSumSet> ps = m_profile(table, s);
      std::vector<CharSumSet> pt = m_profile(table, t);
      size_t d = first_profile_difference(ps, pt);
      rep.violation = BIViolation{std::move(s), std::move(t), ps[d].degree,
                                  ps[d], pt[d], best->form};
      return rep;
    }
  }
  return rep;
}

bool ci_check_pair(const Group& g, const AutomorphismSet& auts,
                   const ConnectionSet& s, const ConnectionSet& t) {
  if (s.members.size() != t.members.size()) return false;
  uint64_t tm = members_mask(t.members);
  for (const auto& a : auts.maps) {
    uint64_t im = 0;
    for (unsigned x : s.members) im |= uint64_t(1) << a[x];
    if (im == tm) return true;
  }
  return false;
}

CISearchReport find_non_ci_witness(const Group& g, uint64_t budget) {
  CISearchReport rep;
  unsigned n = g.order();
  if (n <= 1) return rep;
  ConjugacyPartition part = conjugacy_classes(g);
  AutomorphismSet auts = automorphism_group(g);
  CanonicalCache cache;
  AtomBasis basis = atom_basis(g, n - 1);

  auto orbit_rep = [&](uint64_t mask) {
    std::vector<unsigned> members = mask_members(mask);
    uint64_t best = ~uint64_t(0);
    for (const auto& a : auts.maps) {
      uint64_t im = 0;
      for (unsigned x : members) im |= uint64_t(1) << a[x];
      best = std::min(best, im);
    }
    return best;
  };

  uint64_t remaining = budget;
  for (unsigned size = 1; size < n; ++size) {
    uint64_t total = basis.count[0][size];
    if (total == 0) continue;
    if (remaining == 0) {
      rep.complete = false;
      break;
    }
    uint64_t limit = total;
    if (total > remaining) {
      limit = remaining;
      rep.complete = false;
    }
    std::vector<uint64_t> masks = enumerate_masks(basis, size, limit);
    remaining -= masks.size();
    rep.sets_examined += masks.size();

    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
    for (uint32_t i = 0; i < masks.size(); ++i) {
      std::vector<uint64_t> adj =
          adjacency_of_mask(g, mask_members(masks[i]));
      buckets[spectral_key(adj, n)].push_back(i);
    }

    struct Cand {
      CanonicalForm form;
      uint32_t i, j;
    };
    std::vector<Cand> cands;
    for (const auto& [key, list] : buckets) {
      if (list.size() < 2) continue;
      std::vector<uint64_t> reps(list.size());
      bool mixed = false;
      for (size_t k = 0; k < list.size(); ++k) {
        reps[k] = orbit_rep(masks[list[k]]);
        if (reps[k] != reps[0]) mixed = true;
      }
      if (!mixed) continue;
      std::map<CanonicalForm, std::vector<size_t>> by_form;
      for (size_t k = 0; k < list.size(); ++k) {
        ConnectionSet cs =
            make_connection_set(g, part, mask_members(masks[list[k]]));
        by_form[cache.get(g, cs)].push_back(k);
      }
      for (const auto& [form, group] : by_form) {
        bool done = false;
        for (size_t x = 0; x < group.size() && !done; ++x)
          for (size_t y = x + 1; y < group.size() && !done; ++y)
            if (reps[group[x]] != reps[group[y]]) {
              cands.push_back({form, list[group[x]], list[group[y]]});
              done = true;
            }
      }
    }

    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return std::tie(a.form, a.i, a.j) < std::tie(b.form, b.i, b.j);
    });
    for (const Cand& c : cands) {
      ConnectionSet s = make_connection_set(g, part, mask_members(masks[c.i]));
      ConnectionSet t = make_connection_set(g, part, mask_members(masks[c.j]));
      if (ci_check_pair(g, auts, s, t)) continue;  // same orbit after all
      rep.witness = CIWitness{std::move(s), std::move(t), c.form,
                              auts.maps.size()};
      return rep;
    }
  }
  return rep;
}

std::optional<NonBIWitness> construct_non_bi_witness(const Group& g,
                                                     const CharacterTable& table,
                                                     uint64_t budget_per_size,
                                                     unsigned jobs) {
  std::vector<unsigned> derived = derived_subgroup(g);
  if (derived.size() <= 1) return std::nullopt;  // abelian: property holds
  uint64_t dmask = 0;
  for (unsigned x : derived) dmask |= uint64_t(1) << x;

  ConjugacyPartition part = conjugacy_classes(g);
  for (unsigned h = 1; h < g.order(); ++h) {
    if (dmask >> h & 1) continue;
    unsigned oh = element_order(g, h);
    for (unsigned k : derived) {
      if (k == 0 || element_order(g, k) != oh) continue;
      std::vector<unsigned> sm = {h, g.inv(h)};
      std::vector<unsigned> tm = {k, g.inv(k)};
      std::sort(sm.begin(), sm.end());
      sm.erase(std::unique(sm.begin(), sm.end()), sm.end());
      std::sort(tm.begin(), tm.end());
      tm.erase(std::unique(tm.begin(), tm.end()), tm.end());
      ConnectionSet s = make_connection_set(g, part, std::move(sm));
      ConnectionSet t = make_connection_set(g, part, std::move(tm));
      std::vector<CharSumSet> ps = m_profile(table, s);
      std::vector<CharSumSet> pt = m_profile(table, t);
      size_t d = first_profile_difference(ps, pt);
      if (d == ps.size()) continue;
      if (!are_isomorphic(build_cayley(g, s), build_cayley(g, t))) continue;
      return NonBIWitness{std::move(s), std::move(t), ps[d].degree, ps[d],
                          pt[d], "order-pattern"};
    }
  }

  BIGroupReport rep =
      bi_check_group(g, table, BIMode::full, budget_per_size, jobs);
  if (rep.violation) {
    BIViolation& v = *rep.violation;
    return NonBIWitness{std::move(v.s), std::move(v.t), v.degree,
                        std::move(v.m_s), std::move(v.m_t), "search"};
  }
  return std::nullopt;
}

F20OrderProfile recover_order_profile_f20(const mpq_class& total,
                                          const mpq_class& mu2,
                                          const mpq_class& mu3) {
  if (total == 0) throw Inconsistent("empty connection set has no profile");
  std::vector<std::vector<mpq_class>> a = {
      {1, 1, 1},
      {1, -1, 1},
      {-1, 0, 1},
  };
  std::vector<mpq_class> x = solve_exact(std::move(a), {total, mu2, mu3});
  return F20OrderProfile{require_count(x[0], "order-2 count"),
                         require_count(x[1], "order-4 count"),
                         require_count(x[2], "order-5 count")};
}

F42OrderProfile recover_order_profile_f42(const std::array<mpq_class, 4>& m,
                                          F42Case c) {
  if (m[0] == 0) throw Inconsistent("empty connection set has no profile");
  bool swapped = c == F42Case::ii || c == F42Case::vi;
  std::vector<mpq_class> x =
      solve_exact(f42_matrix(swapped), {m[0], m[1], m[2], m[3]});
  return F42OrderProfile{require_count(x[0], "order-2 count"),
                         require_count(x[1], "order-3 count"),
                         require_count(x[2], "order-6 count"),
                         require_count(x[3], "order-7 count")};
}

std::array<std::array<mpq_class, 4>, 4> f42_transfer_matrix() {
  // Columns of M solve A * column = corresponding column of the swapped
  // matrix, i.e. M = A^-1 * A_swap.
  std::vector<std::vector<mpq_class>> a = f42_matrix(false);
  std::vector<std::vector<mpq_class>> sw = f42_matrix(true);
  std::array<std::array<mpq_class, 4>, 4> out;
  for (size_t col = 0; col < 4; ++col) {
    std::vector<mpq_class> rhs(4);
    for (size_t r = 0; r < 4; ++r) rhs[r] = sw[r][col];
    std::vector<mpq_class> x = solve_exact(a, rhs);
    for (size_t r = 0; r < 4; ++r) out[r][col] = x[r];
  }
  return out;
}

}  // namespace bicay
