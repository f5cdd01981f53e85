#include "bicay/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace bicay {

Group Group::from_table(std::string name, unsigned order,
                        std::vector<uint8_t> mul,
                        std::vector<unsigned> generators) {
  if (order == 0 || order > kMaxGroupOrder)
    throw StructureViolation("group order out of range: " + std::to_string(order));
  if (mul.size() != static_cast<size_t>(order) * order)
    throw StructureViolation("multiplication table size mismatch");
  for (uint8_t v : mul)
    if (v >= order) throw StructureViolation("table entry out of range");
  for (unsigned g : generators)
    if (g >= order) throw StructureViolation("generator index out of range");

  auto at = [&](unsigned x, unsigned y) { return mul[x * order + y]; };

  for (unsigned x = 0; x < order; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      throw StructureViolation("element 0 is not a two-sided identity");

  for (unsigned x = 0; x < order; ++x) {
    uint64_t row = 0, col = 0;
    for (unsigned y = 0; y < order; ++y) {
      row |= uint64_t(1) << at(x, y);
      col |= uint64_t(1) << at(y, x);
    }
    uint64_t full = (order == 64) ? ~uint64_t(0) : ((uint64_t(1) << order) - 1);
    if (row != full || col != full)
      throw StructureViolation("row or column is not a permutation");
  }

  for (unsigned x = 0; x < order; ++x)
    for (unsigned y = 0; y < order; ++y)
      for (unsigned z = 0; z < order; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          throw StructureViolation("associativity fails");

  std::vector<uint8_t> inv(order);
  for (unsigned x = 0; x < order; ++x) {
    unsigned y = 0;
    while (at(x, y) != 0) ++y;
    if (at(y, x) != 0) throw StructureViolation("inverse is one-sided");
    inv[x] = static_cast<uint8_t>(y);
  }

  Group g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.inv_ = std::move(inv);
  g.generators_ = std::move(generators);
  return g;
}

std::vector<unsigned> Group::generating_set() const {
  if (!generators_.empty()) return generators_;
  std::vector<unsigned> all;
  for (unsigned x = 1; x < order_; ++x) all.push_back(x);
  return all;
}

Group group_from_permutations(unsigned degree,
                              const std::vector<std::vector<unsigned>>& gens,
                              std::string name) {
  for (const auto& p : gens) {
    if (p.size() != degree) throw InvalidPermutation("wrong length");
    std::vector<bool> seen(degree, false);
    for (unsigned v : p) {
      if (v >= degree || seen[v]) throw InvalidPermutation("not a bijection");
      seen[v] = true;
    }
  }

  using Perm = std::vector<unsigned>;
  auto compose = [degree](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (unsigned t = 0; t < degree; ++t) r[t] = p[q[t]];
    return r;
  };

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);

  std::vector<Perm> elements{id};
  std::map<Perm, unsigned> index{{id, 0u}};
  for (size_t head = 0; head < elements.size(); ++head) {
    Perm cur = elements[head];  // copy: elements may reallocate
    for (const auto& g : gens) {
      Perm next = compose(cur, g);
      if (index.emplace(next, elements.size()).second) {
        elements.push_back(std::move(next));
        if (elements.size() > kMaxGroupOrder)
          throw ClosureTooLarge("permutation closure exceeds 64 elements");
      }
    }
  }

  const unsigned n = static_cast<unsigned>(elements.size());
  std::vector<uint8_t> mul(static_cast<size_t>(n) * n);
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      mul[x * n + y] = static_cast<uint8_t>(index.at(compose(elements[x], elements[y])));

  std::vector<unsigned> gen_idx;
  for (const auto& g : gens) {
    unsigned i = index.at(g);
    if (i != 0 && std::find(gen_idx.begin(), gen_idx.end(), i) == gen_idx.end())
      gen_idx.push_back(i);
  }
  if (name.empty()) name = "perm" + std::to_string(n);
  return Group::from_table(std::move(name), n, std::move(mul), std::move(gen_idx));
}

Group group_semidirect_cyclic(unsigned m, unsigned n, unsigned r,
                              std::string name) {
  if (m == 0 || n == 0) throw StructureViolation("factors must be positive");
  if (m * n > kMaxGroupOrder)
    throw ClosureTooLarge("semidirect product order exceeds 64");
  r %= m;
  if (std::gcd(r, m) != 1) throw BadTwist("twist not invertible mod m");

  std::vector<unsigned> rpow(n + 1);
  rpow[0] = 1 % m;
  for (unsigned j = 1; j <= n; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  if (rpow[n] != 1 % m) throw BadTwist("twist order does not divide n");

  const unsigned order = m * n;
  std::vector<uint8_t> mul(static_cast<size_t>(order) * order);
  for (unsigned j1 = 0; j1 < n; ++j1)
    for (unsigned i1 = 0; i1 < m; ++i1)
      for (unsigned j2 = 0; j2 < n; ++j2)
        for (unsigned i2 = 0; i2 < m; ++i2) {
          // a^i1 b^j1 a^i2 b^j2 = a^(i1 + i2 r^(-j1)) b^(j1+j2)
          unsigned i = (i1 + i2 * rpow[n - j1]) % m;
          unsigned j = (j1 + j2) % n;
          mul[(i1 + m * j1) * order + (i2 + m * j2)] =
              static_cast<uint8_t>(i + m * j);
        }

  std::vector<unsigned> gens;
  if (m > 1) gens.push_back(1);      // a
  if (n > 1) gens.push_back(m);      // b
  if (name.empty())
    name = "sdp(" + std::to_string(m) + "," + std::to_string(n) + "," +
           std::to_string(r) + ")";
  return Group::from_table(std::move(name), order, std::move(mul), std::move(gens));
}

Group group_direct_product(const Group& a, const Group& b, std::string name) {
  const unsigned na = a.order(), nb = b.order();
  if (na * nb > kMaxGroupOrder)
    throw ClosureTooLarge("direct product order exceeds 64");
  const unsigned order = na * nb;
  std::vector<uint8_t> mul(static_cast<size_t>(order) * order);
  for (unsigned x = 0; x < order; ++x)
    for (unsigned y = 0; y < order; ++y) {
      unsigned xa = x % na, xb = x / na;
      unsigned ya = y % na, yb = y / na;
      mul[x * order + y] =
          static_cast<uint8_t>(a.op(xa, ya) + na * b.op(xb, yb));
    }
  std::vector<unsigned> gens;
  for (unsigned g : a.generating_set()) gens.push_back(g);
  for (unsigned g : b.generating_set()) gens.push_back(na * g);
  if (name.empty()) name = a.name() + "x" + b.name();
  return Group::from_table(std::move(name), order, std::move(mul), std::move(gens));
}

Group group_sl23() {
  // Matrices (a b; c d) over F_3 with ad - bc = 1, as row-major tuples.
  using Mat = std::array<unsigned, 4>;
  std::vector<Mat> mats;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c)
        for (unsigned d = 0; d < 3; ++d)
          if ((a * d + 2 * b * c) % 3 == 1) mats.push_back({a, b, c, d});
  std::sort(mats.begin(), mats.end());
  const Mat id{1, 0, 0, 1};
  mats.erase(std::find(mats.begin(), mats.end(), id));
  mats.insert(mats.begin(), id);

  std::map<Mat, unsigned> index;
  for (unsigned i = 0; i < mats.size(); ++i) index[mats[i]] = i;

  const unsigned n = static_cast<unsigned>(mats.size());
  std::vector<uint8_t> mul(static_cast<size_t>(n) * n);
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      const Mat &p = mats[x], &q = mats[y];
      Mat r{(p[0] * q[0] + p[1] * q[2]) % 3, (p[0] * q[1] + p[1] * q[3]) % 3,
            (p[2] * q[0] + p[3] * q[2]) % 3, (p[2] * q[1] + p[3] * q[3]) % 3};
      mul[x * n + y] = static_cast<uint8_t>(index.at(r));
    }

  std::vector<unsigned> gens{index.at(Mat{0, 1, 2, 0}), index.at(Mat{1, 1, 0, 1})};
  return Group::from_table("SL(2,3)", n, std::move(mul), std::move(gens));
}

ConjugacyPartition conjugacy_classes(const Group& g) {
  const unsigned n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<unsigned>> classes;
  for (unsigned x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    std::vector<unsigned> orbit;
    int id = static_cast<int>(classes.size());
    for (unsigned t = 0; t < n; ++t) {
      unsigned y = g.op(g.op(g.inv(t), x), t);
      if (cls[y] < 0) {
        cls[y] = id;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a[0] < b[0];
            });
  ConjugacyPartition part;
  part.classes = std::move(classes);
  part.class_of.assign(n, 0);
  for (unsigned i = 0; i < part.classes.size(); ++i) {
    part.reps.push_back(part.classes[i][0]);
    for (unsigned x : part.classes[i]) part.class_of[x] = i;
  }
  return part;
}

unsigned element_order(const Group& g, unsigned x) {
  unsigned t = 1, y = x;
  while (y != 0) {
    y = g.op(y, x);
    ++t;
  }
  return t;
}

unsigned element_pow(const Group& g, unsigned x, long k) {
  if (k < 0) {
    x = g.inv(x);
    k = -k;
  }
  unsigned acc = 0;
  for (long i = 0; i < k; ++i) acc = g.op(acc, x);
  return acc;
}

unsigned group_exponent(const Group& g) {
  unsigned e = 1;
  for (unsigned x = 0; x < g.order(); ++x)
    e = std::lcm(e, element_order(g, x));
  return e;
}

std::vector<unsigned> subgroup_generated(const Group& g,
                                         const std::vector<unsigned>& s) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::vector<unsigned> members{0};
  for (size_t head = 0; head < members.size(); ++head) {
    unsigned x = members[head];
    for (unsigned y : s) {
      unsigned z = g.op(x, y);
      if (!in[z]) {
        in[z] = true;
        members.push_back(z);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<unsigned> derived_subgroup(const Group& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<unsigned> comms;
  for (unsigned x = 0; x < g.order(); ++x)
    for (unsigned y = 0; y < g.order(); ++y) {
      unsigned c = g.op(g.op(g.inv(x), g.inv(y)), g.op(x, y));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return subgroup_generated(g, comms);
}

namespace {

// Greedy minimal generating tuple: take elements in index order whenever they
// enlarge the generated subgroup.
std::vector<unsigned> generating_tuple(const Group& g) {
  std::vector<unsigned> tuple;
  size_t have = 1;
  for (unsigned x = 1; x < g.order() && have < g.order(); ++x) {
    std::vector<unsigned> trial = tuple;
    trial.push_back(x);
    size_t size = subgroup_generated(g, trial).size();
    if (size > have) {
      tuple = std::move(trial);
      have = size;
    }
  }
  return tuple;
}

struct BfsTree {
  // For each element: the word that reaches it, as (parent, tuple slot).
  std::vector<unsigned> parent;
  std::vector<unsigned> via;
  std::vector<unsigned> order;  // discovery order, starts with identity
};

BfsTree bfs_words(const Group& g, const std::vector<unsigned>& tuple) {
  BfsTree t;
  t.parent.assign(g.order(), 0);
  t.via.assign(g.order(), 0);
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  t.order.push_back(0);
  for (size_t head = 0; head < t.order.size(); ++head) {
    unsigned x = t.order[head];
    for (unsigned s = 0; s < tuple.size(); ++s) {
      unsigned y = g.op(x, tuple[s]);
      if (!seen[y]) {
        seen[y] = true;
        t.parent[y] = x;
        t.via[y] = s;
        t.order.push_back(y);
      }
    }
  }
  return t;
}

void extend_automorphisms(const Group& g, const std::vector<unsigned>& tuple,
                          const BfsTree& tree,
                          const std::vector<size_t>& prefix_sizes,
                          std::vector<unsigned>& images,
                          std::vector<std::vector<uint8_t>>& out) {
  const size_t depth = images.size();
  if (depth == tuple.size()) {
    // Build the full map along the BFS tree, then verify.
    std::vector<uint8_t> map(g.order());
    map[0] = 0;
    for (size_t i = 1; i < tree.order.size(); ++i) {
      unsigned x = tree.order[i];
      map[x] = static_cast<uint8_t>(g.op(map[tree.parent[x]], images[tree.via[x]]));
    }
    std::vector<bool> hit(g.order(), false);
    for (unsigned x = 0; x < g.order(); ++x) {
      if (hit[map[x]]) return;
      hit[map[x]] = true;
    }
    for (unsigned x = 0; x < g.order(); ++x)
      for (unsigned y = 0; y < g.order(); ++y)
        if (map[g.op(x, y)] != g.op(map[x], map[y])) return;
    out.push_back(std::move(map));
    return;
  }
  const unsigned want_order = element_order(g, tuple[depth]);
  for (unsigned cand = 1; cand < g.order(); ++cand) {
    if (element_order(g, cand) != want_order) continue;
    images.push_back(cand);
    if (subgroup_generated(g, images).size() == prefix_sizes[depth])
      extend_automorphisms(g, tuple, tree, prefix_sizes, images, out);
    images.pop_back();
  }
}

}  // namespace

AutomorphismSet automorphism_group(const Group& g) {
  AutomorphismSet result;
  if (g.order() == 1) {
    result.maps.push_back({0});
    return result;
  }
  std::vector<unsigned> tuple = generating_tuple(g);
  BfsTree tree = bfs_words(g, tuple);
  std::vector<size_t> prefix_sizes;
  for (size_t k = 1; k <= tuple.size(); ++k)
    prefix_sizes.push_back(
        subgroup_generated(g, {tuple.begin(), tuple.begin() + k}).size());
  std::vector<unsigned> images;
  extend_automorphisms(g, tuple, tree, prefix_sizes, images, result.maps);
  std::sort(result.maps.begin(), result.maps.end());
  return result;
}

}  // namespace bicay
