#pragma once

// Graph isomorphism on at most 64 vertices through canonical labeling.
// Equality of canonical forms decides isomorphism; a factorial-time oracle
// exists for cross-checking at toy sizes.

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "bicay/cayley.hpp"

namespace bicay {

// Adjacency matrix of the canonically relabeled graph.  Row r of `bits`
// stores column j at bit position 63 - j, so lexicographic comparison of the
// vectors equals lexicographic comparison of the row-major bit string.
struct CanonicalForm {
  unsigned n = 0;
  std::vector<uint64_t> bits;

  bool operator==(const CanonicalForm& o) const = default;
  bool operator<(const CanonicalForm& o) const {
    return n != o.n ? n < o.n : bits < o.bits;
  }

  // Row-major bit string, zero-padded to whole nibbles, lowercase hex.
  std::string to_hex() const;
};

// Individualization-refinement canonical labeling: equitable refinement by
// neighbor-color counts, branching over the first largest non-singleton cell
// (lowest-index vertex first), lexicographically smallest serialized
// adjacency over all completed branches.  Discovered automorphisms prune
// branches that fix the current individualization prefix.
CanonicalForm canonical_form(const std::vector<uint64_t>& adj, unsigned n);
CanonicalForm canonical_form(const CayleyGraph& graph);

// Degree-multiset and exact characteristic-polynomial prefilters, then
// canonical-form equality.
bool are_isomorphic(const std::vector<uint64_t>& a, unsigned na,
                    const std::vector<uint64_t>& b, unsigned nb);
bool are_isomorphic(const CayleyGraph& a, const CayleyGraph& b);

// Backtracking search over all vertex bijections.  Only for validation;
// throws TooLarge above 8 vertices.
bool brute_force_isomorphic(const std::vector<uint64_t>& a, unsigned na,
                            const std::vector<uint64_t>& b, unsigned nb);

// Insert-or-get cache of canonical forms keyed by (group, member bitset).
// Safe for concurrent use; the first writer wins and later writers compute
// an equal value by construction.
class CanonicalCache {
 public:
  const CanonicalForm& get(const Group& g, const ConnectionSet& s);
  size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::pair<const Group*, uint64_t>, CanonicalForm> forms_;
};

}  // namespace bicay
