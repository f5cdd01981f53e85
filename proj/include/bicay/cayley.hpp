#pragma once

// Cayley graphs over small groups with exact and floating spectra.  Exact
// characteristic polynomials are the ground truth for all spectral equality
// decisions; floats only ever feed reports and eigenvalue clustering.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bicay/chars.hpp"
#include "bicay/cyclotomic.hpp"
#include "bicay/group.hpp"
#include "bicay/polyz.hpp"

namespace bicay {

struct ConnectionSet {
  const Group* group = nullptr;
  std::vector<unsigned> members;  // sorted, identity-free, inverse-closed
  std::map<unsigned, std::vector<unsigned>> order_partition;  // order -> subset
  std::vector<unsigned> class_profile;  // per class, |members ∩ class|
};

// Validates and annotates a member list (ContainsIdentity / NotInverseClosed
// on bad input; duplicates are rejected).  The partition must belong to g.
ConnectionSet make_connection_set(const Group& g, const ConjugacyPartition& part,
                                  std::vector<unsigned> members);
ConnectionSet make_connection_set(const Group& g, std::vector<unsigned> members);

struct CayleyGraph {
  const Group* group = nullptr;
  ConnectionSet set;
  std::vector<uint64_t> adj;  // bit y of adj[x]: x adjacent to y

  unsigned order() const { return group ? group->order() : 0; }
  bool edge(unsigned x, unsigned y) const { return (adj[x] >> y) & 1; }
};

// Vertices x, y adjacent iff x^-1 y is in the set.
CayleyGraph build_cayley(const Group& g, const ConnectionSet& s);

bool graph_connected(const CayleyGraph& graph);

// det(xI - A), ascending integer coefficients, leading coefficient 1.
// Division-free exact computation.
std::vector<mpz_class> char_poly_exact(const CayleyGraph& graph);
std::vector<mpz_class> char_poly_exact(const std::vector<uint64_t>& adj,
                                       unsigned n);

// Descending (eigenvalue, multiplicity) clusters at absolute tolerance 1e-8.
// Throws ClusterAmbiguity when two clusters sit closer than ten times the
// tolerance, so callers can switch to the exact path.
std::vector<std::pair<double, unsigned>> eigenvalues_float(
    const std::vector<uint64_t>& adj, unsigned n);
std::vector<std::pair<double, unsigned>> eigenvalues_float(
    const CayleyGraph& graph);

// Both sides of the trace identity for one character row and power t (1 or
// 2): right = sum of chi over t-fold products of set members; left = the
// matching power sum extracted from the spectrum.  Exact entries are
// authoritative when `exact` is set; the float mirrors are always filled.
// Nonlinear rows are supported only when the table has exactly one, which
// lets the block be isolated by subtracting the linear eigenvalues from the
// trace.
struct BabaiPowerSum {
  Cyclotomic left, right;
  double left_approx = 0, right_approx = 0;
  bool exact = false;
};
BabaiPowerSum babai_power_sum_check(const CayleyGraph& graph,
                                    const CharacterTable& table, unsigned row,
                                    unsigned t);

// Spectrum structure for the order-20 Frobenius group.  Type 1: the two
// distinguished eigenvalues differ (multiplicities 1 and 2 mod 4); type 2:
// they coincide (multiplicity 3 mod 4).  All other eigenvalues carry
// multiplicity 0 mod 4.  Verified against the exact characteristic
// polynomial; StructureViolation on any mismatch.
struct F20Classification {
  unsigned type = 0;
  long mu2 = 0, mu3 = 0;
  unsigned mult2 = 0, mult3 = 0;  // equal when merged (type 2)
};
F20Classification classify_f20_spectrum(const ConnectionSet& s);

// Same for the order-42 Frobenius group, with three distinguished values and
// five coincidence patterns (multiplicities mod 6):
//   type 1: all distinct (1, 2, 2);  type 2: mu3 = mu5 (1, 4);
//   type 3: mu2 = mu3 (3, 2);        type 4: mu2 = mu5 (3, 2);
//   type 5: all equal (5).
struct F42Classification {
  unsigned type = 0;
  long mu2 = 0, mu3 = 0, mu5 = 0;
  unsigned mult2 = 0, mult3 = 0, mult5 = 0;  // merged slots share a value
};
F42Classification classify_f42_spectrum(const ConnectionSet& s);

struct SpectrumReport {
  std::vector<mpz_class> char_poly;                 // ascending, monic
  std::vector<std::pair<double, unsigned>> eigs;    // descending clusters
  std::vector<Cyclotomic> babai_m1;                 // per linear row
  std::string structure_tag;                        // empty when untagged
};

// Char poly, float clusters, linear-character sums, and (for generating sets
// on the two Frobenius groups) the structure tag.
SpectrumReport spectrum_report(const CayleyGraph& graph,
                               const CharacterTable& table);

}  // namespace bicay
