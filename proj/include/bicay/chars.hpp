#pragma once

// Exact irreducible character tables for groups of order <= 64, computed by
// the classical modular method: pick a prime p = 1 mod exp(G) exceeding
// 2*sqrt(|G|), split the class-matrix eigenspaces over the p-element field,
// read off degrees, then lift eigenvalue multiplicities to exact cyclotomic
// values at conductor exp(G).

#include <cstdint>
#include <vector>

#include "bicay/cyclotomic.hpp"
#include "bicay/group.hpp"

namespace bicay {

// a[i][j][k] = #{(x,y) : x in class i, y in class j, x*y = representative
// of class k}.
std::vector<std::vector<std::vector<unsigned>>> class_structure_constants(
    const Group& g, const ConjugacyPartition& p);

struct CharacterTable {
  Group group;
  ConjugacyPartition partition;
  unsigned h = 0;          // number of classes = number of characters
  unsigned conductor = 1;  // exponent of the group
  std::vector<unsigned> degrees;            // per row
  std::vector<std::vector<Cyclotomic>> rows;  // rows[i][k] = chi_i(class k)
};

// Rows are sorted by ascending degree, then by a descending float fingerprint
// (real parts per column, then imaginary parts, exact compare as tiebreak),
// which places the principal character first.  Throws NoSuitablePrime if the
// prime search passes 100000 and Inconsistent on any internal cross-check
// failure.
CharacterTable character_table(const Group& g);

// Indices of the degree-1 rows.
std::vector<unsigned> linear_characters(const CharacterTable& t);

// Reference table with columns described by (class size, element order).
struct GoldenTable {
  std::vector<std::pair<unsigned, unsigned>> columns;
  std::vector<std::vector<Cyclotomic>> rows;
};

// True when some column bijection preserving (class size, element order) and
// some row bijection make the tables equal exactly.
bool matches_golden(const CharacterTable& t, const GoldenTable& ref);

}  // namespace bicay
