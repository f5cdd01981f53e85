#pragma once

// Built-in table of the small groups the tool suite works over.  Every entry
// pairs a [order,id] label with a concrete construction plus the recorded
// BI/CI verdicts, which downstream code treats as cross-check metadata only:
// BI gets recomputed, CI is only ever searched for counterexamples.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicay/chars.hpp"
#include "bicay/group.hpp"

namespace bicay {

struct CatalogEntry {
  std::string label;    // "[20,3]"
  std::string name;     // "F20"
  unsigned order;
  bool abelian;
  // Recorded classification; unset where no record exists (abelian controls
  // carry bi_recorded = true and no CI record).
  std::optional<bool> bi_recorded;
  std::optional<bool> ci_recorded;
  Group (*build)();
  // Group spec file text that reproduces build() element for element.
  std::string recipe;
  const GoldenTable* golden = nullptr;  // reference character table, if any
  bool has_golden_sets = false;         // true only for the SL(2,3) row
};

// All entries, sorted by (order, id).  Built once, then immutable.
const std::vector<CatalogEntry>& catalog();

// Lookup by label ("[20,3]", "20,3", "20.3") or display name ("F20").
// Throws UnknownLabel.
const CatalogEntry& catalog_entry(const std::string& label);

Group build_group(const std::string& label);

// Dicyclic group of order 4m: <a, b | a^(2m) = 1, b^2 = a^m, bab^-1 = a^-1>,
// realized on 4m points.  m = 2 gives Q8, m = 4 gives Q16.
Group group_dicyclic(unsigned m, std::string name = "");

// Central product of C4 and D8 (the one-qubit Pauli group), order 16.
Group group_pauli16();

// Reference character tables for the order-20 and order-42 Frobenius groups,
// with columns keyed by (class size, element order).
const GoldenTable& golden_table_f20();
const GoldenTable& golden_table_f42();

// Recorded non-BI witness pair for SL(2,3), as sorted element indices under
// the group_sl23() enumeration.  Both sets are inverse-closed and the two
// Cayley graphs are isomorphic while their degree-2 character sums differ.
std::pair<std::vector<unsigned>, std::vector<unsigned>> sl23_golden_sets();

}  // namespace bicay
