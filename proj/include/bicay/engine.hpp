#pragma once

// Decision procedures on character-sum sets: M profiles, whole-group BI
// verification, CI witness search, and constructive non-BI witnesses.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicay/cayley.hpp"
#include "bicay/chars.hpp"
#include "bicay/graphiso.hpp"

namespace bicay {

// Deduplicated exact values of sum over S of chi(s), over the rows of one
// degree.  Values are sorted in representation order.
struct CharSumSet {
  unsigned degree = 0;
  std::vector<Cyclotomic> values;

  bool operator==(const CharSumSet& o) const = default;
};

// NoSuchDegree when the table has no row of degree nu.  multiset keeps
// repeated values (diagnostic mode; all verdict paths use set semantics).
CharSumSet char_sum_set(const CharacterTable& table, const ConnectionSet& s,
                        unsigned nu, bool multiset = false);

// Char-sum sets for every degree of the table, ascending by degree.
std::vector<CharSumSet> m_profile(const CharacterTable& table,
                                  const ConnectionSet& s);

bool m_profiles_equal(const CharacterTable& table, const ConnectionSet& s,
                      const ConnectionSet& t);

// G* minus S; inverse-closed automatically.
ConnectionSet complement_set(const Group& g, const ConjugacyPartition& part,
                             const ConnectionSet& s);
ConnectionSet complement_set(const Group& g, const ConnectionSet& s);

// All inverse-closed subsets of G* of the given size, as unions of
// involution singletons and inverse pairs, in lexicographic order of the
// (singleton, pair) incidence vector.  generating_only keeps sets with
// closure G.
std::vector<ConnectionSet> enumerate_connection_sets(const Group& g,
                                                     unsigned size,
                                                     bool generating_only);

// Two generating sets with isomorphic graphs and different M profiles.
struct BIViolation {
  ConnectionSet s, t;
  unsigned degree = 0;  // smallest degree whose char-sum sets differ
  CharSumSet m_s, m_t;
  CanonicalForm form;  // shared canonical form of both graphs
};

enum class BIMode { reduced, full };

struct SizeCoverage {
  unsigned size = 0;
  uint64_t candidates = 0;  // inverse-closed sets of this size
  uint64_t examined = 0;
  bool sampled = false;
};

struct BIGroupReport {
  BIMode mode = BIMode::reduced;
  std::vector<SizeCoverage> sizes;
  uint64_t buckets_examined = 0;
  bool complete = true;  // no size fell back to sampling
  std::optional<BIViolation> violation;
};

// Scans admissible sizes ascending (reduced: ceil(|G|/2)-1 .. |G|-1, full:
// 1 .. |G|-1), keeping generating sets only.  Sets are bucketed by exact
// characteristic polynomial and, where profiles disagree, by canonical form;
// the first violation in (size, canonical form, enumeration order) is
// returned.  Sizes whose candidate count exceeds the budget are sampled
// uniformly with a fixed seed and flagged.
BIGroupReport bi_check_group(const Group& g, const CharacterTable& table,
                             BIMode mode,
                             uint64_t budget_per_size = uint64_t(1) << 20,
                             unsigned jobs = 1);

// True iff some alpha in auts maps S onto T setwise.
bool ci_check_pair(const Group& g, const AutomorphismSet& auts,
                   const ConnectionSet& s, const ConnectionSet& t);

// Isomorphic graphs from sets no automorphism relates.
struct CIWitness {
  ConnectionSet s, t;
  CanonicalForm form;
  uint64_t automorphisms_checked = 0;  // full scan size
};

struct CISearchReport {
  std::optional<CIWitness> witness;
  bool complete = true;  // every size fully enumerated within budget
  uint64_t sets_examined = 0;
};

// Scans inverse-closed sets smallest sizes first, bucketing isomorphic
// graphs, and returns the first pair no automorphism maps.  The budget caps
// the total number of sets examined.
CISearchReport find_non_ci_witness(const Group& g,
                                   uint64_t budget = uint64_t(1) << 20);

struct NonBIWitness {
  ConnectionSet s, t;
  unsigned degree = 0;
  CharSumSet m_s, m_t;
  std::string method;  // "order-pattern" or "search"
};

// Order-matched witness pattern: h outside the derived subgroup and k inside
// with equal orders give S = {h, h^-1}, T = {k, k^-1} with isomorphic graphs
// and different M_1.  When no such pair exists, falls back to a bounded
// full-mode group scan.  Abelian groups return not-found.
std::optional<NonBIWitness> construct_non_bi_witness(
    const Group& g, const CharacterTable& table,
    uint64_t budget_per_size = uint64_t(1) << 17, unsigned jobs = 1);

// Order profiles recovered from tagged M_1 values by exact linear solves.

struct F20OrderProfile {
  long s2 = 0, s4 = 0, s5 = 0;
  bool operator==(const F20OrderProfile&) const = default;
};

// Inputs: |S| plus the two distinguished linear-character sums.  Inconsistent
// when the solution is not a vector of non-negative integers or |S| = 0.
F20OrderProfile recover_order_profile_f20(const mpq_class& total,
                                          const mpq_class& mu2,
                                          const mpq_class& mu3);

struct F42OrderProfile {
  long s2 = 0, s3 = 0, s6 = 0, s7 = 0;
  bool operator==(const F42OrderProfile&) const = default;
};

// Coincidence cases of the three distinguished values between the two sets
// being compared; ii and vi are the tag-swapped cases that route through the
// transfer matrix.
enum class F42Case { i, ii, iii, iv, v, vi };

F42OrderProfile recover_order_profile_f42(const std::array<mpq_class, 4>& m,
                                          F42Case c);

// Change of profile induced by exchanging the two conjugate-pair tags; the
// last row is (0,0,0,1), so the count of order-7 elements never moves.
std::array<std::array<mpq_class, 4>, 4> f42_transfer_matrix();

}  // namespace bicay
