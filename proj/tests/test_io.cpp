#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"

#include "bicay/catalog.hpp"
#include "bicay/engine.hpp"
#include "bicay/graphiso.hpp"
#include "bicay/io.hpp"

using namespace bicay;
using nlohmann::json;

TEST_CASE("every catalog recipe reloads to the identical group") {
  for (const auto& entry : catalog()) {
    CAPTURE(std::string(entry.label));
    Group built = entry.build();
    Group loaded = load_group_spec(entry.recipe);
    REQUIRE(loaded.order() == built.order());
    CHECK(loaded.generators() == built.generators());
    bool tables_match = true;
    for (unsigned x = 0; x < built.order() && tables_match; ++x)
      for (unsigned y = 0; y < built.order(); ++y)
        if (loaded.op(x, y) != built.op(x, y)) {
          tables_match = false;
          break;
        }
    CHECK(tables_match);
  }
}

TEST_CASE("group spec forms parse and reject malformed input") {
  Group c4 = load_group_spec("perm 4\n(0 1 2 3)\n");
  CHECK(c4.order() == 4);
  CHECK(element_order(c4, 1) == 4);

  Group v4 = load_group_spec("# the Klein group\nperm 4\n(0 1)(2 3)\n(0 2)(1 3)\n");
  CHECK(v4.order() == 4);
  CHECK(element_order(v4, 1) == 2);

  // Commas and spaces both separate cycle points.
  Group s3a = load_group_spec("perm 3\n(0,1,2)\n(0,1)\n");
  Group s3b = load_group_spec("perm 3\n(0 1 2)\n(0 1)\n");
  CHECK(s3a.order() == 6);
  for (unsigned x = 0; x < 6; ++x)
    for (unsigned y = 0; y < 6; ++y) CHECK(s3a.op(x, y) == s3b.op(x, y));

  CHECK(load_group_spec("sdp 5 4 3\n").order() == 20);
  CHECK(load_group_spec("dp [4,1] [2,1]\n").order() == 8);
  CHECK(load_group_spec("sl23\n").order() == 24);

  CHECK_THROWS_AS(load_group_spec(""), ParseError);
  CHECK_THROWS_AS(load_group_spec("perm\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("perm x\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("perm 3\n(0 1 5)\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("perm 3\n(0 1)(1 2)\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("perm 3\n(0 1\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("perm 3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("sdp 5 4\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("sdp 5 4 3\nextra\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("dp [4,1]\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("dp [4,1] [999,1]\n"), UnknownLabel);
  CHECK_THROWS_AS(load_group_spec("sl23 1\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("ring 5\n"), ParseError);
  CHECK_THROWS_AS(load_group_spec("sdp 4 2 2\n"), BadTwist);
}

TEST_CASE("generator words round-trip on varied constructions") {
  for (const char* label :
       {"[20,3]", "[24,3]", "[8,3]", "[24,6]", "[24,7]", "[16,13]"}) {
    CAPTURE(std::string(label));
    Group g = build_group(label);
    CHECK(element_word(g, 0) == "e");
    for (unsigned x = 0; x < g.order(); ++x) {
      std::string w = element_word(g, x);
      CHECK(parse_word(g, w) == x);
    }
  }
}

TEST_CASE("word parsing follows the power-product grammar") {
  Group f20 = build_group("[20,3]");  // a = index 1 (order 5), b = index 5
  CHECK(parse_word(f20, "e") == 0);
  CHECK(parse_word(f20, "a") == 1);
  CHECK(parse_word(f20, "a^2") == 2);
  CHECK(parse_word(f20, "a^-1") == f20.inv(1));
  CHECK(parse_word(f20, "b") == 5);
  CHECK(parse_word(f20, "a^2*b") == f20.op(2, 5));
  CHECK(parse_word(f20, "b^-1*a") == f20.op(f20.inv(5), 1));
  CHECK(parse_word(f20, "a^5") == 0);
  CHECK(parse_word(f20, "a^0") == 0);

  CHECK_THROWS_AS(parse_word(f20, ""), ParseError);
  CHECK_THROWS_AS(parse_word(f20, "q"), ParseError);
  CHECK_THROWS_AS(parse_word(f20, "a^"), ParseError);
  CHECK_THROWS_AS(parse_word(f20, "a^-"), ParseError);
  CHECK_THROWS_AS(parse_word(f20, "a**b"), ParseError);
  CHECK_THROWS_AS(parse_word(f20, "a*"), ParseError);
  CHECK_THROWS_AS(parse_word(f20, "2a"), ParseError);
  CHECK_THROWS_AS(parse_word(f20, "a b"), ParseError);
}

TEST_CASE("connection sets load from indices, words, or both") {
  Group f20 = build_group("[20,3]");

  ConnectionSet byindex = load_connection_set(f20, "1 4\n5\n15\n");
  CHECK(byindex.members == std::vector<unsigned>{1, 4, 5, 15});

  ConnectionSet byword = load_connection_set(f20, "a a^4 b b^3\n");
  CHECK(byword.members == byindex.members);

  ConnectionSet mixed = load_connection_set(f20, "# comment\n1 a^-1\nb 15\n");
  CHECK(mixed.members == byindex.members);

  // Duplicate mentions of one element collapse.
  ConnectionSet dup = load_connection_set(f20, "a 1 a^-1 4\n");
  CHECK(dup.members == std::vector<unsigned>{1, 4});

  CHECK_THROWS_AS(load_connection_set(f20, "a b\n"), NotInverseClosed);
  ConnectionSet closed = load_connection_set(f20, "a b\n", true);
  CHECK(closed.members == byindex.members);

  CHECK_THROWS_AS(load_connection_set(f20, "e\n", true), ContainsIdentity);
  CHECK_THROWS_AS(load_connection_set(f20, "0\n", true), ContainsIdentity);
  CHECK_THROWS_AS(load_connection_set(f20, "99\n"), ParseError);
  CHECK_THROWS_AS(load_connection_set(f20, "a^\n"), ParseError);

  std::string rendered = connection_set_text(f20, byindex);
  ConnectionSet reparsed = load_connection_set(f20, rendered);
  CHECK(reparsed.members == byindex.members);
}

TEST_CASE("spec and set files load from disk") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "bicay_io_test";
  fs::create_directories(dir);

  fs::path spec = dir / "group.txt";
  write_text_file(spec.string(), "sdp 5 4 3\n");
  Group g = load_group_spec_file(spec.string());
  CHECK(g.order() == 20);

  fs::path setfile = dir / "set.txt";
  write_text_file(setfile.string(), "a a^-1 b b^-1\n");
  ConnectionSet s = load_connection_set_file(g, setfile.string());
  CHECK(s.members.size() == 4);

  CHECK(read_text_file(spec.string()) == "sdp 5 4 3\n");
  CHECK_THROWS_AS(read_text_file((dir / "absent.txt").string()), ParseError);
}

TEST_CASE("character table serialization parses back exactly") {
  Group f20 = build_group("[20,3]");
  CharacterTable table = character_table(f20);
  json j = chartable_json(table, "[20,3]");

  CHECK(j["label"] == "[20,3]");
  CHECK(j["order"] == 20);
  CHECK(j["conductor"] == table.conductor);
  CHECK(j["degrees"] == json({1, 1, 1, 1, 4}));
  CHECK(j["classes"].size() == 5);
  unsigned total = 0;
  for (const auto& c : j["classes"]) total += c["size"].get<unsigned>();
  CHECK(total == 20);

  REQUIRE(j["characters"].size() == 5);
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned k = 0; k < 5; ++k) {
      Cyclotomic parsed =
          Cyclotomic::parse(j["characters"][i][k].get<std::string>());
      CHECK(parsed == table.rows[i][k]);
    }
}

TEST_CASE("spectrum serialization carries the exact polynomial") {
  Group f20 = build_group("[20,3]");
  CharacterTable table = character_table(f20);
  ConnectionSet s = load_connection_set(f20, "a a^-1 b b^-1\n");
  CayleyGraph graph = build_cayley(f20, s);
  SpectrumReport rep = spectrum_report(graph, table);
  json j = spectrum_json(f20, s, rep, "[20,3]");

  auto poly = char_poly_exact(graph);
  REQUIRE(j["char_poly"].size() == poly.size());
  for (size_t i = 0; i < poly.size(); ++i)
    CHECK(j["char_poly"][i].get<std::string>() == poly[i].get_str());

  unsigned mult = 0;
  for (const auto& c : j["clusters"]) mult += c["multiplicity"].get<unsigned>();
  CHECK(mult == 20);
  CHECK(j["set"]["words"].size() == 4);
  CHECK(!j["structure_tag"].get<std::string>().empty());
}

TEST_CASE("pair reports flag the reference violation and replay from disk") {
  Group sl23 = group_sl23();
  CharacterTable table = character_table(sl23);
  auto [sm, tm] = sl23_golden_sets();
  ConnectionSet s = make_connection_set(sl23, sm);
  ConnectionSet t = make_connection_set(sl23, tm);

  json j = bi_pair_report(table, s, t, "[24,3]");
  CHECK(j["m_profiles_equal"] == false);
  CHECK(j["isomorphic"] == true);
  CHECK(j["bi_violation"] == true);
  CHECK(j["first_unequal_degree"] == 2);
  CHECK(j["canonical_hex_s"] == j["canonical_hex_t"]);

  // A pair is recoverable from the report's own set objects.
  WitnessSets w = witness_sets_from_json(j);
  CHECK(w.s == sm);
  CHECK(w.t == tm);

  json same = bi_pair_report(table, s, s, "[24,3]");
  CHECK(same["m_profiles_equal"] == true);
  CHECK(same["bi_violation"] == false);
  CHECK(same["first_unequal_degree"].is_null());
}

TEST_CASE("group scan reports round-trip their witness") {
  Group d8 = build_group("[8,3]");
  CharacterTable table = character_table(d8);
  BIGroupReport rep = bi_check_group(d8, table, BIMode::full);
  REQUIRE(rep.violation.has_value());

  json j = bi_group_report_json(d8, rep, "[8,3]", 0.25);
  CHECK(j["verdict"] == "violation");
  CHECK(j["mode"] == "full");
  CHECK(j["complete"] == true);
  CHECK(j["seconds"] == 0.25);
  CHECK(j["witness"]["degree"] == rep.violation->degree);

  // Serialized, reloaded, and replayed: the violation must reproduce.
  std::string text = j.dump();
  WitnessSets w = witness_sets_from_json(json::parse(text));
  ConnectionSet s = make_connection_set(d8, w.s);
  ConnectionSet t = make_connection_set(d8, w.t);
  json replay = bi_pair_report(table, s, t, "[8,3]");
  CHECK(replay["bi_violation"] == true);
  CHECK(replay["first_unequal_degree"] == rep.violation->degree);
}

TEST_CASE("witness constructions serialize with their method") {
  Group d8 = build_group("[8,3]");
  CharacterTable table = character_table(d8);
  auto w = construct_non_bi_witness(d8, table);
  REQUIRE(w.has_value());

  json j = non_bi_witness_json(d8, w, "[8,3]", 0.0);
  CHECK(j["found"] == true);
  CHECK(j["witness"]["method"] == "order-pattern");
  CHECK(j["witness"]["s_words"].size() == j["witness"]["s"].size());

  WitnessSets pair = witness_sets_from_json(j);
  CHECK(pair.s == w->s.members);
  CHECK(pair.t == w->t.members);

  json none = non_bi_witness_json(d8, std::nullopt, "[8,3]", 0.0);
  CHECK(none["found"] == false);
  CHECK(none["witness"].is_null());
  CHECK_THROWS_AS(witness_sets_from_json(none), ParseError);
}

TEST_CASE("exhausted counterexample searches serialize as complete") {
  Group q8 = build_group("[8,4]");
  CISearchReport rep = find_non_ci_witness(q8);
  CHECK(!rep.witness.has_value());
  CHECK(rep.complete);

  json j = ci_search_json(q8, rep, "[8,4]", uint64_t(1) << 20, 0.1);
  CHECK(j["found"] == false);
  CHECK(j["complete"] == true);
  CHECK(j["witness"].is_null());
  CHECK(j["sets_examined"].get<uint64_t>() == rep.sets_examined);
}
