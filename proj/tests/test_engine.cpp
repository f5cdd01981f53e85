#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "doctest.h"

#include "bicay/cayley.hpp"
#include "bicay/chars.hpp"
#include "bicay/engine.hpp"
#include "bicay/errors.hpp"
#include "bicay/graphiso.hpp"
#include "bicay/group.hpp"

using namespace bicay;

namespace {

Group cyclic(unsigned n) {
  std::vector<unsigned> rot(n);
  for (unsigned i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return group_from_permutations(n, {rot}, "C" + std::to_string(n));
}

Group f20() { return group_semidirect_cyclic(5, 4, 3, "F20"); }
Group f42() { return group_semidirect_cyclic(7, 6, 3, "F42"); }
Group d8() { return group_semidirect_cyclic(4, 2, 3, "D8"); }
Group d12() { return group_semidirect_cyclic(6, 2, 5, "D12"); }
Group s3() { return group_semidirect_cyclic(3, 2, 2, "S3"); }

// Bijection against a list of distinct integers (values are deduplicated).
bool values_are(const CharSumSet& cs, const std::vector<long>& expect) {
  if (cs.values.size() != expect.size()) return false;
  for (long e : expect) {
    Cyclotomic want = Cyclotomic::from_integer(e);
    bool found = false;
    for (const auto& v : cs.values)
      if (v == want) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

ConnectionSet image_set(const Group& g, const ConjugacyPartition& part,
                        const ConnectionSet& s,
                        const std::vector<uint8_t>& alpha) {
  std::vector<unsigned> m;
  for (unsigned x : s.members) m.push_back(alpha[x]);
  std::sort(m.begin(), m.end());
  return make_connection_set(g, part, std::move(m));
}

std::vector<unsigned> order_counts(const ConnectionSet& s,
                                   const std::vector<unsigned>& orders) {
  std::vector<unsigned> out;
  for (unsigned o : orders) {
    auto it = s.order_partition.find(o);
    out.push_back(it == s.order_partition.end() ? 0 : it->second.size());
  }
  return out;
}

}  // namespace

TEST_CASE("char-sum sets on the order-20 Frobenius group") {
  Group g = f20();
  CharacterTable table = character_table(g);
  ConjugacyPartition part = conjugacy_classes(g);

  ConnectionSet s = make_connection_set(g, part, {1, 4, 5, 15});
  CHECK(values_are(char_sum_set(table, s, 1), {4, 0, 2}));
  CHECK(values_are(char_sum_set(table, s, 4), {-2}));
  CHECK_THROWS_AS(char_sum_set(table, s, 2), NoSuchDegree);
  CHECK_THROWS_AS(char_sum_set(table, s, 3), NoSuchDegree);

  std::vector<unsigned> all;
  for (unsigned x = 1; x < 20; ++x) all.push_back(x);
  ConnectionSet star = make_connection_set(g, part, all);
  CHECK(values_are(char_sum_set(table, star, 1), {19, -1}));
  CHECK(values_are(char_sum_set(table, star, 4), {-4}));
  CHECK(char_sum_set(table, star, 1, true).values.size() == 4);  // multiset

  ConnectionSet empty = make_connection_set(g, part, {});
  CHECK(values_are(char_sum_set(table, empty, 1), {0}));
  CHECK(values_are(char_sum_set(table, empty, 4), {0}));

  std::vector<CharSumSet> prof = m_profile(table, s);
  REQUIRE(prof.size() == 2);
  CHECK(prof[0].degree == 1);
  CHECK(prof[1].degree == 4);
}

TEST_CASE("automorphic images share m-profiles") {
  for (Group g : {s3(), d8(), f20()}) {
    CharacterTable table = character_table(g);
    ConjugacyPartition part = conjugacy_classes(g);
    AutomorphismSet auts = automorphism_group(g);
    std::vector<ConnectionSet> sets = enumerate_connection_sets(g, 2, false);
    auto more = enumerate_connection_sets(g, 3, false);
    sets.insert(sets.end(), more.begin(), more.end());
    size_t checked = 0;
    for (size_t i = 0; i < sets.size() && checked < 60; i += 2) {
      for (size_t a = 0; a < auts.maps.size() && checked < 60; a += 3) {
        ConnectionSet im = image_set(g, part, sets[i], auts.maps[a]);
        REQUIRE(m_profiles_equal(table, sets[i], im));
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("profiles separate reflection from central rotation in D8") {
  Group g = d8();
  CharacterTable table = character_table(g);
  ConjugacyPartition part = conjugacy_classes(g);
  ConnectionSet refl = make_connection_set(g, part, {4});   // b
  ConnectionSet rot = make_connection_set(g, part, {2});    // a^2
  CHECK_FALSE(m_profiles_equal(table, refl, rot));
  CHECK(values_are(char_sum_set(table, refl, 1), {1, -1}));
  CHECK(values_are(char_sum_set(table, rot, 1), {1}));
  CHECK(values_are(char_sum_set(table, refl, 2), {0}));
  CHECK(values_are(char_sum_set(table, rot, 2), {-2}));
  CHECK(m_profiles_equal(table, refl, refl));
}

TEST_CASE("complements preserve profile equality") {
  Group g = f20();
  CharacterTable table = character_table(g);
  ConjugacyPartition part = conjugacy_classes(g);
  AutomorphismSet auts = automorphism_group(g);

  ConnectionSet s = make_connection_set(g, part, {1, 4, 5, 15});
  ConnectionSet cs = complement_set(g, part, s);
  CHECK(cs.members.size() == 15);
  ConnectionSet back = complement_set(g, part, cs);
  CHECK(back.members == s.members);

  size_t checked = 0;
  for (size_t a = 1; a < auts.maps.size() && checked < 10; a += 7) {
    ConnectionSet im = image_set(g, part, s, auts.maps[a]);
    REQUIRE(m_profiles_equal(table, s, im));
    REQUIRE(m_profiles_equal(table, cs, complement_set(g, part, im)));
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("inverse-closed enumeration is lexicographic and complete") {
  Group g = f20();

  size_t total = 0;
  for (unsigned s = 0; s < 20; ++s)
    total += enumerate_connection_sets(g, s, false).size();
  CHECK(total == 4096);  // 5 involutions + 7 pairs

  auto star = enumerate_connection_sets(g, 19, false);
  REQUIRE(star.size() == 1);
  CHECK(star[0].members.size() == 19);

  auto size2 = enumerate_connection_sets(g, 2, false);
  REQUIRE(size2.size() == 17);
  CHECK(size2[0].members == std::vector<unsigned>{9, 18});
  CHECK(size2[1].members == std::vector<unsigned>{8, 16});
  CHECK(size2[2].members == std::vector<unsigned>{7, 19});
  CHECK(size2[3].members == std::vector<unsigned>{6, 17});
  CHECK(size2[4].members == std::vector<unsigned>{5, 15});
  CHECK(size2[5].members == std::vector<unsigned>{2, 3});
  CHECK(size2[6].members == std::vector<unsigned>{1, 4});
  CHECK(size2[7].members == std::vector<unsigned>{13, 14});

  // No inverse-closed pair generates: order-4 and order-5 cyclic parts and
  // involution pairs all land in proper subgroups.
  CHECK(enumerate_connection_sets(g, 2, true).empty());
  auto gen3 = enumerate_connection_sets(g, 3, true);
  CHECK(!gen3.empty());
  CHECK(gen3.size() < enumerate_connection_sets(g, 3, false).size());

  Group c5 = cyclic(5);
  CHECK(enumerate_connection_sets(c5, 1, false).empty());
  CHECK(enumerate_connection_sets(c5, 2, false).size() == 2);
  CHECK(enumerate_connection_sets(c5, 3, false).empty());
  CHECK(enumerate_connection_sets(c5, 4, false).size() == 1);
}

TEST_CASE("group scans pass on cyclic and first Frobenius groups") {
  Group c6 = cyclic(6);
  BIGroupReport r6 = bi_check_group(c6, character_table(c6), BIMode::full);
  CHECK(!r6.violation);
  CHECK(r6.complete);
  CHECK(r6.sizes.size() == 5);

  Group g = f20();
  CharacterTable table = character_table(g);
  BIGroupReport r1 = bi_check_group(g, table, BIMode::reduced, 1 << 20, 1);
  CHECK(!r1.violation);
  CHECK(r1.complete);
  REQUIRE(r1.sizes.size() == 11);  // sizes 9..19
  CHECK(r1.sizes.front().size == 9);
  CHECK(r1.sizes.back().size == 19);
  for (const auto& cov : r1.sizes) {
    CHECK(!cov.sampled);
    CHECK(cov.candidates ==
          enumerate_connection_sets(g, cov.size, false).size());
    CHECK(cov.examined ==
          enumerate_connection_sets(g, cov.size, true).size());
  }

  BIGroupReport r4 = bi_check_group(g, table, BIMode::reduced, 1 << 20, 4);
  CHECK(r4.violation.has_value() == r1.violation.has_value());
  REQUIRE(r4.sizes.size() == r1.sizes.size());
  for (size_t i = 0; i < r1.sizes.size(); ++i) {
    CHECK(r4.sizes[i].candidates == r1.sizes[i].candidates);
    CHECK(r4.sizes[i].examined == r1.sizes[i].examined);
  }
}

TEST_CASE("group scan reports the special linear violation") {
  Group g = group_sl23();
  CharacterTable table = character_table(g);
  BIGroupReport rep = bi_check_group(g, table, BIMode::reduced, 1 << 20, 2);
  REQUIRE(rep.violation.has_value());
  const BIViolation& v = *rep.violation;
  CHECK(v.degree >= 1);
  CHECK(v.m_s.values != v.m_t.values);
  CHECK_FALSE(m_profiles_equal(table, v.s, v.t));
  CHECK(are_isomorphic(build_cayley(g, v.s), build_cayley(g, v.t)));
  CHECK(subgroup_generated(g, v.s.members).size() == 24);
  CHECK(subgroup_generated(g, v.t.members).size() == 24);
  CHECK(canonical_form(build_cayley(g, v.s)) == v.form);
  CHECK(rep.sizes.back().size == v.s.members.size());
}

TEST_CASE("dihedral violations agree between scan modes") {
  Group g = d8();
  CharacterTable table = character_table(g);
  BIGroupReport full = bi_check_group(g, table, BIMode::full);
  BIGroupReport reduced = bi_check_group(g, table, BIMode::reduced);
  REQUIRE(full.violation.has_value());
  REQUIRE(reduced.violation.has_value());
  // Size-1 singletons never generate, so the first generating violation
  // appears at the same size in both modes.
  CHECK(full.sizes.back().size == reduced.sizes.back().size);
  for (const BIGroupReport* rep : {&full, &reduced}) {
    const BIViolation& v = *rep->violation;
    CHECK_FALSE(m_profiles_equal(table, v.s, v.t));
    CHECK(are_isomorphic(build_cayley(g, v.s), build_cayley(g, v.t)));
  }

  Group h = s3();
  CharacterTable th = character_table(h);
  CHECK(!bi_check_group(h, th, BIMode::full).violation);
  CHECK(!bi_check_group(h, th, BIMode::reduced).violation);
}

TEST_CASE("sampling degrades deterministically under tiny budgets") {
  Group g = f20();
  CharacterTable table = character_table(g);
  BIGroupReport a = bi_check_group(g, table, BIMode::full, 16, 1);
  BIGroupReport b = bi_check_group(g, table, BIMode::full, 16, 3);
  CHECK(!a.complete);
  CHECK(!a.violation);
  bool any_sampled = false;
  REQUIRE(a.sizes.size() == b.sizes.size());
  for (size_t i = 0; i < a.sizes.size(); ++i) {
    CHECK(a.sizes[i].sampled == b.sizes[i].sampled);
    CHECK(a.sizes[i].examined == b.sizes[i].examined);
    CHECK(a.sizes[i].candidates == b.sizes[i].candidates);
    if (a.sizes[i].sampled) {
      any_sampled = true;
      CHECK(a.sizes[i].examined <= 16);
    }
  }
  CHECK(any_sampled);
}

TEST_CASE("automorphism pair checks") {
  Group c5 = cyclic(5);
  ConjugacyPartition p5 = conjugacy_classes(c5);
  AutomorphismSet a5 = automorphism_group(c5);
  CHECK(ci_check_pair(c5, a5, make_connection_set(c5, p5, {1, 4}),
                      make_connection_set(c5, p5, {2, 3})));

  Group g = d8();
  ConjugacyPartition pg = conjugacy_classes(g);
  AutomorphismSet ag = automorphism_group(g);
  CHECK_FALSE(ci_check_pair(g, ag, make_connection_set(g, pg, {4}),
                            make_connection_set(g, pg, {2})));
  CHECK(ci_check_pair(g, ag, make_connection_set(g, pg, {4}),
                      make_connection_set(g, pg, {4})));

  Group f = f20();
  ConjugacyPartition pf = conjugacy_classes(f);
  AutomorphismSet af = automorphism_group(f);
  ConnectionSet s = make_connection_set(f, pf, {1, 4, 5, 15});
  ConnectionSet im = image_set(f, pf, s, af.maps[af.maps.size() / 2]);
  CHECK(ci_check_pair(f, af, s, im));
}

TEST_CASE("ci witness search exhausts tiny groups honestly") {
  CISearchReport c5 = find_non_ci_witness(cyclic(5));
  CHECK(!c5.witness);
  CHECK(c5.complete);
  CHECK(c5.sets_examined == 3);

  CISearchReport c6 = find_non_ci_witness(cyclic(6));
  CHECK(!c6.witness);
  CHECK(c6.complete);

  CISearchReport capped = find_non_ci_witness(f20(), 10);
  CHECK(!capped.complete);
  CHECK(capped.sets_examined == 10);
}

TEST_CASE("ci witness search on the order-20 Frobenius group is verified") {
  Group g = f20();
  CISearchReport rep = find_non_ci_witness(g);
  if (rep.witness) {
    AutomorphismSet auts = automorphism_group(g);
    const CIWitness& w = *rep.witness;
    CHECK(w.automorphisms_checked == auts.maps.size());
    CHECK_FALSE(ci_check_pair(g, auts, w.s, w.t));
    CHECK(are_isomorphic(build_cayley(g, w.s), build_cayley(g, w.t)));
    CHECK(canonical_form(build_cayley(g, w.s)) == w.form);
    CHECK(canonical_form(build_cayley(g, w.t)) == w.form);
  } else {
    CHECK(rep.complete);  // budget covers all 4096 subsets
    CHECK(rep.sets_examined > 0);
  }
}

TEST_CASE("order-pattern witnesses on dihedral and product groups") {
  Group g = d8();
  CharacterTable tg = character_table(g);
  auto w = construct_non_bi_witness(g, tg);
  REQUIRE(w.has_value());
  CHECK(w->method == "order-pattern");
  CHECK(w->degree == 1);
  CHECK(w->s.members == std::vector<unsigned>{4});
  CHECK(w->t.members == std::vector<unsigned>{2});
  CHECK(values_are(w->m_s, {1, -1}));
  CHECK(values_are(w->m_t, {1}));

  Group p = group_direct_product(cyclic(3), s3(), "C3xS3");
  CharacterTable tp = character_table(p);
  auto wp = construct_non_bi_witness(p, tp);
  REQUIRE(wp.has_value());
  CHECK(wp->method == "order-pattern");
  CHECK(wp->degree == 1);
  CHECK(wp->s.members == std::vector<unsigned>{1, 2});
  CHECK(values_are(wp->m_s, {2, -1}));
  CHECK(values_are(wp->m_t, {2}));
  CHECK(are_isomorphic(build_cayley(p, wp->s), build_cayley(p, wp->t)));

  Group s4 = group_from_permutations(
      4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, "S4");
  CharacterTable ts = character_table(s4);
  auto ws = construct_non_bi_witness(s4, ts);
  REQUIRE(ws.has_value());
  CHECK(ws->method == "order-pattern");
  CHECK(ws->degree == 1);
}

TEST_CASE("witness construction falls back to search where patterns fail") {
  Group g = d12();
  CharacterTable tg = character_table(g);
  auto w = construct_non_bi_witness(g, tg);
  REQUIRE(w.has_value());
  CHECK(w->method == "search");
  CHECK(w->degree == 2);
  CHECK(w->s.members.size() == w->t.members.size());
  CHECK(subgroup_generated(g, w->s.members).size() == g.order());
  bool orient_a = values_are(w->m_s, {0}) && values_are(w->m_t, {-2, 2});
  bool orient_b = values_are(w->m_s, {-2, 2}) && values_are(w->m_t, {0});
  CHECK((orient_a || orient_b));

  Group q = group_direct_product(cyclic(4), s3(), "C4xS3");
  CharacterTable tq = character_table(q);
  auto wq = construct_non_bi_witness(q, tq);
  REQUIRE(wq.has_value());
  CHECK(wq->method == "search");
  CHECK(wq->s.members.size() == wq->t.members.size());
  CHECK(wq->degree == 2);
  CHECK_FALSE(m_profiles_equal(tq, wq->s, wq->t));
}

TEST_CASE("witness construction declines on groups with the property") {
  Group g = f20();
  CHECK(!construct_non_bi_witness(g, character_table(g)).has_value());
  Group c6 = cyclic(6);
  CHECK(!construct_non_bi_witness(c6, character_table(c6)).has_value());
}

TEST_CASE("order profile recovery for the order-20 group") {
  F20OrderProfile p = recover_order_profile_f20(4, 0, 2);
  CHECK(p == F20OrderProfile{0, 2, 2});
  CHECK(recover_order_profile_f20(19, -1, -1) == F20OrderProfile{5, 10, 4});
  CHECK_THROWS_AS(recover_order_profile_f20(0, 0, 0), Inconsistent);
  CHECK_THROWS_AS(recover_order_profile_f20(2, 1, 0), Inconsistent);
  CHECK_THROWS_AS(recover_order_profile_f20(1, 5, 0), Inconsistent);

  // Recovered counts match the actual order partition on real sets.
  Group g = f20();
  for (unsigned size : {9u, 13u, 19u}) {
    auto sets = enumerate_connection_sets(g, size, true);
    size_t step = std::max<size_t>(1, sets.size() / 3);
    for (size_t i = 0; i < sets.size(); i += step) {
      F20Classification c = classify_f20_spectrum(sets[i]);
      F20OrderProfile got = recover_order_profile_f20(
          long(sets[i].members.size()), c.mu2, c.mu3);
      std::vector<unsigned> actual = order_counts(sets[i], {2, 4, 5});
      CHECK(got.s2 == long(actual[0]));
      CHECK(got.s4 == long(actual[1]));
      CHECK(got.s5 == long(actual[2]));
    }
  }
}

TEST_CASE("order profile recovery for the order-42 group") {
  F42OrderProfile star = recover_order_profile_f42({41, -1, -1, -1},
                                                   F42Case::i);
  CHECK(star == F42OrderProfile{7, 14, 14, 6});

  // Round trips through the plain and tag-swapped matrices.
  mpq_class half(1, 2);
  std::array<std::array<mpq_class, 4>, 4> a = {{
      {1, 1, 1, 1},
      {-1, 1, -1, 1},
      {1, -half, -half, 1},
      {-1, -half, half, 1},
  }};
  std::array<mpq_class, 4> x = {3, 4, 2, 6};
  auto apply = [&](const std::array<std::array<mpq_class, 4>, 4>& m) {
    std::array<mpq_class, 4> out;
    for (int r = 0; r < 4; ++r) {
      out[r] = 0;
      for (int c = 0; c < 4; ++c) out[r] += m[r][c] * x[c];
    }
    return out;
  };
  std::array<mpq_class, 4> plain = apply(a);
  std::swap(a[2], a[3]);
  std::array<mpq_class, 4> swapped = apply(a);
  std::swap(a[2], a[3]);
  F42OrderProfile want{3, 4, 2, 6};
  CHECK(recover_order_profile_f42(plain, F42Case::i) == want);
  CHECK(recover_order_profile_f42(plain, F42Case::iii) == want);
  CHECK(recover_order_profile_f42(swapped, F42Case::ii) == want);
  CHECK(recover_order_profile_f42(swapped, F42Case::vi) == want);

  auto m = f42_transfer_matrix();
  mpq_class third(1, 3);
  CHECK(m[0] == (std::array<mpq_class, 4>{-third, 0, 2 * third, 0}));
  CHECK(m[1] == (std::array<mpq_class, 4>{0, 1, 0, 0}));
  CHECK(m[2] == (std::array<mpq_class, 4>{4 * third, 0, third, 0}));
  CHECK(m[3] == (std::array<mpq_class, 4>{0, 0, 0, 1}));

  // Real-set cross-check: tags from the spectrum match the order counts.
  Group g = f42();
  ConjugacyPartition part = conjugacy_classes(g);
  ConnectionSet s =
      make_connection_set(g, part, {1, g.inv(1), 7, g.inv(7)});
  F42Classification c = classify_f42_spectrum(s);
  F42OrderProfile got = recover_order_profile_f42(
      {long(s.members.size()), c.mu2, c.mu3, c.mu5}, F42Case::i);
  std::vector<unsigned> actual = order_counts(s, {2, 3, 6, 7});
  CHECK(got == F42OrderProfile{long(actual[0]), long(actual[1]),
                               long(actual[2]), long(actual[3])});

  CHECK_THROWS_AS(recover_order_profile_f42({0, 0, 0, 0}, F42Case::i),
                  Inconsistent);
  // Forces s2 + s7 = 1/3, which no integer profile satisfies.
  CHECK_THROWS_AS(recover_order_profile_f42({1, 1, 0, 0}, F42Case::i),
                  Inconsistent);
}
