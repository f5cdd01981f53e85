#include "bicay/graphiso.hpp"

#include <algorithm>
#include <numeric>

namespace bicay {

std::string CanonicalForm::to_hex() const {
  std::string out;
  unsigned nibble = 0, filled = 0;
  auto flush = [&] {
    out += "0123456789abcdef"[nibble];
    nibble = 0;
    filled = 0;
  };
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      nibble = (nibble << 1) | unsigned((bits[i] >> (63 - j)) & 1);
      if (++filled == 4) flush();
    }
  if (filled) {
    nibble <<= (4 - filled);
    flush();
  }
  return out;
}

namespace {

// Union-find over vertex ids, used for automorphism-orbit pruning.
struct Orbits {
  std::vector<unsigned> parent;
  explicit Orbits(unsigned n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  unsigned find(unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class CanonicalSearch {
 public:
  CanonicalSearch(const std::vector<uint64_t>& adj, unsigned n)
      : adj_(adj), n_(n) {}

  CanonicalForm run() {
    if (n_ == 0) return {0, {}};
    std::vector<unsigned> color(n_, 0);
    descend(color, {});
    return {n_, best_};
  }

 private:
  static constexpr size_t kMaxGenerators = 64;
  static constexpr size_t kMaxStoredLeaves = 4096;

  // Equitable refinement to a fixpoint.  The signature of a vertex is its
  // color plus the count of neighbors in every color; signatures are ranked
  // in sorted order, which keeps cell numbering isomorphism-invariant.
  void refine(std::vector<unsigned>& color) const {
    unsigned k = *std::max_element(color.begin(), color.end()) + 1;
    while (true) {
      std::vector<std::vector<unsigned>> sig(n_);
      for (unsigned v = 0; v < n_; ++v) {
        sig[v].assign(k + 1, 0);
        sig[v][0] = color[v];
        for (unsigned u = 0; u < n_; ++u)
          if ((adj_[v] >> u) & 1) ++sig[v][1 + color[u]];
      }
      std::vector<std::vector<unsigned>> ranking(sig.begin(), sig.end());
      std::sort(ranking.begin(), ranking.end());
      ranking.erase(std::unique(ranking.begin(), ranking.end()), ranking.end());
      if (ranking.size() == k) return;
      for (unsigned v = 0; v < n_; ++v)
        color[v] = unsigned(std::lower_bound(ranking.begin(), ranking.end(),
                                             sig[v]) -
                            ranking.begin());
      k = unsigned(ranking.size());
    }
  }

  // First largest non-singleton cell, members in ascending vertex order.
  std::vector<unsigned> target_cell(const std::vector<unsigned>& color) const {
    unsigned k = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<unsigned> size(k, 0);
    for (unsigned v = 0; v < n_; ++v) ++size[color[v]];
    unsigned pick = k, best_size = 1;
    for (unsigned c = 0; c < k; ++c)
      if (size[c] > best_size) {
        best_size = size[c];
        pick = c;
      }
    std::vector<unsigned> cell;
    if (pick == k) return cell;  // discrete
    for (unsigned v = 0; v < n_; ++v)
      if (color[v] == pick) cell.push_back(v);
    return cell;
  }

  std::vector<uint64_t> serialize(const std::vector<unsigned>& pos) const {
    std::vector<uint64_t> rows(n_, 0);
    for (unsigned u = 0; u < n_; ++u)
      for (unsigned v = 0; v < n_; ++v)
        if ((adj_[u] >> v) & 1)
          rows[pos[u]] |= uint64_t(1) << (63 - pos[v]);
    return rows;
  }

  void leaf(const std::vector<unsigned>& pos) {
    std::vector<uint64_t> rows = serialize(pos);
    if (best_.empty() || rows < best_) best_ = rows;
    auto it = leaves_.find(rows);
    if (it == leaves_.end()) {
      if (leaves_.size() < kMaxStoredLeaves) leaves_.emplace(std::move(rows), pos);
      return;
    }
    if (generators_.size() >= kMaxGenerators) return;
    // Equal serializations compose to a graph automorphism.
    const std::vector<unsigned>& first = it->second;
    std::vector<unsigned> at(n_);
    for (unsigned v = 0; v < n_; ++v) at[first[v]] = v;
    std::vector<unsigned> sigma(n_);
    bool identity = true;
    for (unsigned v = 0; v < n_; ++v) {
      sigma[v] = at[pos[v]];
      identity &= sigma[v] == v;
    }
    if (!identity) generators_.push_back(std::move(sigma));
  }

  // Orbits of the subgroup generated by automorphisms fixing the prefix.
  Orbits prefix_orbits(const std::vector<unsigned>& prefix) const {
    Orbits orbits(n_);
    for (const auto& sigma : generators_) {
      bool fixes = true;
      for (unsigned v : prefix) fixes &= sigma[v] == v;
      if (!fixes) continue;
      for (unsigned v = 0; v < n_; ++v) orbits.unite(v, sigma[v]);
    }
    return orbits;
  }

  void descend(std::vector<unsigned> color, std::vector<unsigned> prefix) {
    refine(color);
    std::vector<unsigned> cell = target_cell(color);
    if (cell.empty()) {
      leaf(color);
      return;
    }
    unsigned fresh = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<unsigned> tried;
    size_t generators_seen = generators_.size();
    Orbits orbits = prefix_orbits(prefix);
    for (unsigned v : cell) {
      if (generators_.size() != generators_seen) {
        orbits = prefix_orbits(prefix);
        generators_seen = generators_.size();
      }
      unsigned root = orbits.find(v);
      if (std::find(tried.begin(), tried.end(), root) != tried.end()) continue;
      tried.push_back(root);
      std::vector<unsigned> child = color;
      child[v] = fresh;
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  const std::vector<uint64_t>& adj_;
  unsigned n_;
  std::vector<uint64_t> best_;
  std::map<std::vector<uint64_t>, std::vector<unsigned>> leaves_;
  std::vector<std::vector<unsigned>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const std::vector<uint64_t>& adj, unsigned n) {
  return CanonicalSearch(adj, n).run();
}

CanonicalForm canonical_form(const CayleyGraph& graph) {
  return canonical_form(graph.adj, graph.order());
}

namespace {

std::vector<unsigned> degree_multiset(const std::vector<uint64_t>& adj,
                                      unsigned n) {
  std::vector<unsigned> degrees;
  for (unsigned v = 0; v < n; ++v) {
    uint64_t row = adj[v];
    if (n < 64) row &= (uint64_t(1) << n) - 1;
    degrees.push_back(unsigned(__builtin_popcountll(row)));
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace

bool are_isomorphic(const std::vector<uint64_t>& a, unsigned na,
                    const std::vector<uint64_t>& b, unsigned nb) {
  if (na != nb) return false;
  if (degree_multiset(a, na) != degree_multiset(b, nb)) return false;
  if (char_poly_exact(a, na) != char_poly_exact(b, nb)) return false;
  return canonical_form(a, na) == canonical_form(b, nb);
}

bool are_isomorphic(const CayleyGraph& a, const CayleyGraph& b) {
  return are_isomorphic(a.adj, a.order(), b.adj, b.order());
}

namespace {

bool extend_bijection(const std::vector<uint64_t>& a,
                      const std::vector<uint64_t>& b, unsigned n,
                      std::vector<unsigned>& image, unsigned v) {
  if (v == n) return true;
  std::vector<bool> used(n, false);
  for (unsigned u = 0; u < v; ++u) used[image[u]] = true;
  for (unsigned w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (unsigned u = 0; u < v && ok; ++u)
      ok = (((a[v] >> u) & 1) == ((b[w] >> image[u]) & 1)) &&
           (((a[u] >> v) & 1) == ((b[image[u]] >> w) & 1));
    if (!ok) continue;
    image[v] = w;
    if (extend_bijection(a, b, n, image, v + 1)) return true;
  }
  return false;
}

}  // namespace

bool brute_force_isomorphic(const std::vector<uint64_t>& a, unsigned na,
                            const std::vector<uint64_t>& b, unsigned nb) {
  if (na > 8 || nb > 8) throw TooLarge("bijection search is capped at 8 vertices");
  if (na != nb) return false;
  std::vector<unsigned> image(na, 0);
  return extend_bijection(a, b, na, image, 0);
}

const CanonicalForm& CanonicalCache::get(const Group& g,
                                         const ConnectionSet& s) {
  uint64_t mask = 0;
  for (unsigned x : s.members) mask |= uint64_t(1) << x;
  std::pair<const Group*, uint64_t> key{&g, mask};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = forms_.find(key);
    if (it != forms_.end()) return it->second;
  }
  CanonicalForm form = canonical_form(build_cayley(g, s));
  std::lock_guard<std::mutex> lock(mutex_);
  return forms_.emplace(key, std::move(form)).first->second;
}

size_t CanonicalCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return forms_.size();
}

}  // namespace bicay
