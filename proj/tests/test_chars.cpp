#include "bicay/chars.hpp"

#include <algorithm>

#include "doctest.h"

using namespace bicay;

namespace {

Group f20() { return group_semidirect_cyclic(5, 4, 3); }
Group f42() { return group_semidirect_cyclic(7, 6, 3); }
Group s3() { return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }
Group q8() {
  // Left-multiplication action on {1,-1,i,-i,j,-j,k,-k}.
  return group_from_permutations(
      8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
}

Cyclotomic row_inner(const CharacterTable& t, unsigned i, unsigned j) {
  Cyclotomic acc = Cyclotomic::from_integer(0, t.conductor);
  for (unsigned k = 0; k < t.h; ++k) {
    Cyclotomic term = t.rows[i][k] * t.rows[j][k].conj();
    acc += Cyclotomic::from_integer(
               static_cast<long>(t.partition.classes[k].size()), t.conductor) *
           term;
  }
  return acc;
}

Cyclotomic col_inner(const CharacterTable& t, unsigned k, unsigned l) {
  Cyclotomic acc = Cyclotomic::from_integer(0, t.conductor);
  for (unsigned i = 0; i < t.h; ++i) acc += t.rows[i][k] * t.rows[i][l].conj();
  return acc;
}

void check_table_axioms(const Group& g) {
  CAPTURE(g.name());
  CharacterTable t = character_table(g);
  REQUIRE(t.h == t.rows.size());

  unsigned sq = 0;
  for (unsigned d : t.degrees) sq += d * d;
  CHECK(sq == g.order());

  for (unsigned k = 0; k < t.h; ++k) {
    mpq_class q;
    REQUIRE(t.rows[0][k].is_rational(&q));
    CHECK(q == 1);
  }

  for (unsigned i = 0; i < t.h; ++i)
    for (unsigned j = 0; j < t.h; ++j) {
      long want = (i == j) ? static_cast<long>(g.order()) : 0;
      CHECK(row_inner(t, i, j) ==
            Cyclotomic::from_integer(want, t.conductor));
    }

  for (unsigned k = 0; k < t.h; ++k)
    for (unsigned l = 0; l < t.h; ++l) {
      long want = (k == l)
                      ? static_cast<long>(g.order() / t.partition.classes[k].size())
                      : 0;
      CHECK(col_inner(t, k, l) == Cyclotomic::from_integer(want, t.conductor));
    }

  // chi(x^-1) = conj(chi(x)), checked through inverse classes.
  for (unsigned k = 0; k < t.h; ++k) {
    unsigned kinv = t.partition.class_of[g.inv(t.partition.reps[k])];
    for (unsigned i = 0; i < t.h; ++i)
      CHECK(t.rows[i][kinv] == t.rows[i][k].conj());
  }

  // Sum over non-identity elements: |G|-1 for the principal row,
  // -degree for every other row.
  for (unsigned i = 0; i < t.h; ++i) {
    Cyclotomic sum = Cyclotomic::from_integer(0, t.conductor);
    for (unsigned k = 0; k < t.h; ++k) {
      long size = static_cast<long>(t.partition.classes[k].size());
      if (k == 0) size -= 1;  // drop the identity element itself
      sum += Cyclotomic::from_integer(size, t.conductor) * t.rows[i][k];
    }
    long want = (i == 0) ? static_cast<long>(g.order()) - 1
                         : -static_cast<long>(t.degrees[i]);
    CHECK(sum == Cyclotomic::from_integer(want, t.conductor));
  }
}

}  // namespace

TEST_CASE("two-element group table") {
  CharacterTable t = character_table(group_semidirect_cyclic(2, 1, 1));
  REQUIRE(t.h == 2);
  CHECK(t.degrees == std::vector<unsigned>{1, 1});
  CHECK(t.rows[0][0] == Cyclotomic::from_integer(1, 2));
  CHECK(t.rows[0][1] == Cyclotomic::from_integer(1, 2));
  CHECK(t.rows[1][0] == Cyclotomic::from_integer(1, 2));
  CHECK(t.rows[1][1] == Cyclotomic::from_integer(-1, 2));
}

TEST_CASE("symmetric group on three points") {
  CharacterTable t = character_table(s3());
  REQUIRE(t.h == 3);
  CHECK(t.degrees == std::vector<unsigned>{1, 1, 2});
  // Columns: identity, the 3-cycles (size 2), the transpositions (size 3).
  CHECK(t.rows[1][1] == Cyclotomic::from_integer(1, 6));
  CHECK(t.rows[1][2] == Cyclotomic::from_integer(-1, 6));
  CHECK(t.rows[2][1] == Cyclotomic::from_integer(-1, 6));
  CHECK(t.rows[2][2] == Cyclotomic::from_integer(0, 6));
}

TEST_CASE("degree multisets for the fixed menagerie") {
  CHECK(character_table(q8()).degrees ==
        std::vector<unsigned>{1, 1, 1, 1, 2});
  CHECK(character_table(group_sl23()).degrees ==
        std::vector<unsigned>{1, 1, 1, 2, 2, 2, 3});
  CHECK(character_table(f20()).degrees ==
        std::vector<unsigned>{1, 1, 1, 1, 4});
  CHECK(character_table(f42()).degrees ==
        std::vector<unsigned>{1, 1, 1, 1, 1, 1, 6});
}

TEST_CASE("order-20 table shape") {
  CharacterTable t = character_table(f20());
  // Degree-4 row: -1 on the class of the order-5 elements (size 4),
  // 0 on each size-5 class.
  REQUIRE(t.degrees[4] == 4);
  for (unsigned k = 0; k < t.h; ++k) {
    size_t size = t.partition.classes[k].size();
    if (size == 4) CHECK(t.rows[4][k] == Cyclotomic::from_integer(-1, 20));
    if (size == 5) CHECK(t.rows[4][k] == Cyclotomic::from_integer(0, 20));
  }
  CHECK(linear_characters(t) == std::vector<unsigned>{0, 1, 2, 3});
}

TEST_CASE("order-42 table shape") {
  CharacterTable t = character_table(f42());
  REQUIRE(t.degrees[6] == 6);
  for (unsigned k = 0; k < t.h; ++k) {
    size_t size = t.partition.classes[k].size();
    if (size == 6) CHECK(t.rows[6][k] == Cyclotomic::from_integer(-1, 42));
    if (size == 7) CHECK(t.rows[6][k] == Cyclotomic::from_integer(0, 42));
  }
  // Primitive cube roots of unity appear among the linear values.
  bool found_zeta3 = false;
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned k = 0; k < t.h; ++k)
      if (t.rows[i][k] == Cyclotomic::root(3, 1)) found_zeta3 = true;
  CHECK(found_zeta3);
}

TEST_CASE("table axioms hold across the menagerie") {
  check_table_axioms(group_semidirect_cyclic(8, 1, 1));
  check_table_axioms(s3());
  check_table_axioms(q8());
  check_table_axioms(group_sl23());
  check_table_axioms(f20());
  check_table_axioms(f42());
  Group c3 = group_semidirect_cyclic(3, 1, 1);
  check_table_axioms(group_direct_product(c3, s3()));
}

TEST_CASE("linear character counts match derived quotients") {
  for (const Group& g : {f20(), f42(), group_sl23(), q8()}) {
    CharacterTable t = character_table(g);
    CHECK(linear_characters(t).size() ==
          g.order() / derived_subgroup(g).size());
  }
}

TEST_CASE("structure constants") {
  Group triv = group_semidirect_cyclic(1, 1, 1);
  auto a0 = class_structure_constants(triv, conjugacy_classes(triv));
  CHECK(a0[0][0][0] == 1);

  Group g = f20();
  ConjugacyPartition part = conjugacy_classes(g);
  auto a = class_structure_constants(g, part);
  const unsigned h = static_cast<unsigned>(part.classes.size());
  for (unsigned j = 0; j < h; ++j)
    for (unsigned k = 0; k < h; ++k)
      CHECK(a[0][j][k] == (j == k ? 1u : 0u));
  // Counting identity: the products C_i C_j biject with the union of the
  // classes counted with multiplicity.
  for (unsigned i = 0; i < h; ++i)
    for (unsigned j = 0; j < h; ++j) {
      size_t total = 0;
      for (unsigned k = 0; k < h; ++k)
        total += static_cast<size_t>(a[i][j][k]) * part.classes[k].size();
      CHECK(total == part.classes[i].size() * part.classes[j].size());
    }
}

TEST_CASE("table computation is deterministic") {
  CharacterTable t1 = character_table(f42());
  CharacterTable t2 = character_table(f42());
  REQUIRE(t1.h == t2.h);
  for (unsigned i = 0; i < t1.h; ++i)
    for (unsigned k = 0; k < t1.h; ++k) CHECK(t1.rows[i][k] == t2.rows[i][k]);
}

TEST_CASE("golden comparison logic") {
  CharacterTable t = character_table(group_semidirect_cyclic(2, 1, 1));
  GoldenTable ref;
  ref.columns = {{1, 2}, {1, 1}};  // columns deliberately swapped
  ref.rows = {{Cyclotomic::from_integer(1), Cyclotomic::from_integer(1)},
              {Cyclotomic::from_integer(-1), Cyclotomic::from_integer(1)}};
  CHECK(matches_golden(t, ref));
  ref.rows[1][0] = Cyclotomic::from_integer(1);
  CHECK_FALSE(matches_golden(t, ref));
}
