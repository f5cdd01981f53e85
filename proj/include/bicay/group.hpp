#pragma once

// Finite groups of order <= 64 as explicit multiplication tables.  Every
// construction path funnels through from_table(), which checks the identity
// law, the Latin-square property, two-sided inverses, and associativity on
// all triples before the object can exist.  Element 0 is always the identity.

#include <cstdint>
#include <string>
#include <vector>

#include "bicay/errors.hpp"

namespace bicay {

constexpr unsigned kMaxGroupOrder = 64;

class Group {
 public:
  // Validates the table (StructureViolation on any failure) and derives
  // inverses.  `generators` lists element indices used by later word-based
  // interfaces; empty means "unspecified".
  static Group from_table(std::string name, unsigned order,
                          std::vector<uint8_t> mul,
                          std::vector<unsigned> generators);

  unsigned order() const { return order_; }
  const std::string& name() const { return name_; }
  unsigned op(unsigned x, unsigned y) const { return mul_[x * order_ + y]; }
  unsigned inv(unsigned x) const { return inv_[x]; }
  const std::vector<unsigned>& generators() const { return generators_; }

  // Stored generators, or every non-identity element when unspecified.
  std::vector<unsigned> generating_set() const;

 private:
  Group() = default;

  std::string name_;
  unsigned order_ = 1;
  std::vector<uint8_t> mul_;
  std::vector<uint8_t> inv_;
  std::vector<unsigned> generators_;
};

// Closure of the given permutations of 0..degree-1 under composition
// (p*q maps t to p[q[t]]).  Elements are indexed in breadth-first discovery
// order: identity first, then products old*generator with generators cycled
// in the given order.  Throws ClosureTooLarge past 64 elements and
// InvalidPermutation on malformed input.
Group group_from_permutations(unsigned degree,
                              const std::vector<std::vector<unsigned>>& gens,
                              std::string name = "");

// <a, b | a^m = b^n = 1, b^-1 a b = a^r> with element a^i b^j at index
// i + m*j.  Requires gcd(r, m) = 1 and r^n = 1 mod m (BadTwist otherwise).
Group group_semidirect_cyclic(unsigned m, unsigned n, unsigned r,
                              std::string name = "");

// Componentwise product; pair (a, b) sits at index a + |A|*b.
Group group_direct_product(const Group& a, const Group& b,
                           std::string name = "");

// The 24 determinant-1 matrices over the 3-element field under matrix
// multiplication.  Index 0 is the identity matrix; the remaining matrices
// follow in lexicographic row-major order.
Group group_sl23();

struct ConjugacyPartition {
  std::vector<std::vector<unsigned>> classes;  // sorted by (size, min elem)
  std::vector<unsigned> reps;                  // minimal element per class
  std::vector<unsigned> class_of;              // element -> class index
};

ConjugacyPartition conjugacy_classes(const Group& g);

unsigned element_order(const Group& g, unsigned x);
unsigned element_pow(const Group& g, unsigned x, long k);  // negative k ok
unsigned group_exponent(const Group& g);

// Subgroup generated by all commutators x^-1 y^-1 x y, as a sorted index set.
std::vector<unsigned> derived_subgroup(const Group& g);

// Closure of S together with the identity, as a sorted index set.
std::vector<unsigned> subgroup_generated(const Group& g,
                                         const std::vector<unsigned>& s);

struct AutomorphismSet {
  // Each entry is a permutation of element indices fixing 0; the list is
  // the full automorphism group, sorted lexicographically.
  std::vector<std::vector<uint8_t>> maps;
};

AutomorphismSet automorphism_group(const Group& g);

}  // namespace bicay
