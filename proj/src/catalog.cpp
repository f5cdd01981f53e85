#include "bicay/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "bicay/errors.hpp"

namespace bicay {

namespace {

using Perm = std::vector<unsigned>;
using PermList = std::vector<Perm>;

PermList cyclic_gens(unsigned n) {
  if (n < 2) return {};
  Perm cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return {cyc};
}

Group cyclic(unsigned n, std::string name) {
  return group_from_permutations(n == 0 ? 1 : n, cyclic_gens(n),
                                 std::move(name));
}

// Two sheets of 2m points each; a rotates both sheets, b crosses between
// them with the half-turn offset that forces b^2 = a^m.
PermList dicyclic_gens(unsigned m) {
  const unsigned h = 2 * m;
  Perm a(4 * m), b(4 * m);
  for (unsigned i = 0; i < h; ++i) {
    a[i] = (i + 1) % h;
    a[h + i] = h + (i + 1) % h;
    b[i] = h + (h - i) % h;
    b[h + i] = (m + h - i) % h;
  }
  return {a, b};
}

// Points are (k, x, z) with k mod 4 tracking the central C4; the two
// non-central generators commute only up to that phase.
PermList pauli16_gens() {
  auto at = [](unsigned k, unsigned x, unsigned z) { return k + 4 * x + 8 * z; };
  Perm gx(16), gz(16), gw(16);
  for (unsigned k = 0; k < 4; ++k)
    for (unsigned x = 0; x < 2; ++x)
      for (unsigned z = 0; z < 2; ++z) {
        const unsigned t = at(k, x, z);
        gx[t] = at(k, 1 - x, z);
        gz[t] = at((k + 2 * x) % 4, x, 1 - z);
        gw[t] = at((k + 1) % 4, x, z);
      }
  return {gx, gz, gw};
}

const PermList& a4_gens() {
  static const PermList g{{1, 2, 0, 3}, {1, 0, 3, 2}};
  return g;
}

const PermList& s4_gens() {
  static const PermList g{{1, 2, 3, 0}, {1, 0, 2, 3}};
  return g;
}

// (C2 x C2) : C4 — the 4-element rotation swaps the two commuting
// transpositions and squares into the diagonal of the second block.
const PermList& g16_3_gens() {
  static const PermList g{
      {1, 0, 2, 3, 4, 5, 6, 7},
      {0, 1, 3, 2, 4, 5, 6, 7},
      {2, 3, 1, 0, 6, 7, 5, 4},
  };
  return g;
}

// Generalized dihedral group over C3 x C3.
const PermList& g18_4_gens() {
  static const PermList g{
      {1, 2, 0, 3, 4, 5},
      {0, 1, 2, 4, 5, 3},
      {0, 2, 1, 3, 5, 4},
  };
  return g;
}

// (C6 x C2) : C2 — f inverts the 3-cycle and t inverts f while fixing it.
const PermList& g24_8_gens() {
  static const PermList g{
      {1, 2, 0, 3, 4, 5, 6},
      {0, 2, 1, 4, 5, 6, 3},
      {0, 1, 2, 3, 6, 5, 4},
  };
  return g;
}

// Extraspecial group of order 27 and exponent 3.
const PermList& g27_3_gens() {
  static const PermList g{
      {1, 2, 0, 4, 5, 3, 7, 8, 6},
      {0, 4, 8, 3, 7, 2, 6, 1, 5},
  };
  return g;
}

Group c1() { return cyclic(1, "C1"); }
Group c2() { return cyclic(2, "C2"); }
Group c3() { return cyclic(3, "C3"); }
Group c4() { return cyclic(4, "C4"); }
Group c5() { return cyclic(5, "C5"); }
Group c6() { return cyclic(6, "C6"); }
Group c7() { return cyclic(7, "C7"); }
Group c8() { return cyclic(8, "C8"); }
Group c42() { return cyclic(42, "C42"); }
Group v4() { return group_direct_product(c2(), c2(), "C2 x C2"); }

Group s3() { return group_semidirect_cyclic(3, 2, 2, "S3"); }
Group d8() { return group_semidirect_cyclic(4, 2, 3, "D8"); }
Group q8() { return group_dicyclic(2, "Q8"); }
Group d10() { return group_semidirect_cyclic(5, 2, 4, "D10"); }
Group dic3() { return group_semidirect_cyclic(3, 4, 2, "Dic3"); }
Group a4() { return group_from_permutations(4, a4_gens(), "A4"); }
Group d12() { return group_semidirect_cyclic(6, 2, 5, "D12"); }
Group d14() { return group_semidirect_cyclic(7, 2, 6, "D14"); }

Group g16_3() { return group_from_permutations(8, g16_3_gens(), "(C2 x C2) : C4"); }
Group g16_4() { return group_semidirect_cyclic(4, 4, 3, "C4 : C4"); }
Group m16() { return group_semidirect_cyclic(8, 2, 5, "M16"); }
Group d16() { return group_semidirect_cyclic(8, 2, 7, "D16"); }
Group sd16() { return group_semidirect_cyclic(8, 2, 3, "SD16"); }
Group q16() { return group_dicyclic(4, "Q16"); }
Group d8xc2() { return group_direct_product(d8(), c2(), "D8 x C2"); }
Group q8xc2() { return group_direct_product(q8(), c2(), "Q8 x C2"); }

Group d18() { return group_semidirect_cyclic(9, 2, 8, "D18"); }
Group c3xs3() { return group_direct_product(c3(), s3(), "C3 x S3"); }
Group g18_4() { return group_from_permutations(6, g18_4_gens(), "(C3 x C3) : C2"); }

Group dic5() { return group_semidirect_cyclic(5, 4, 4, "Dic5"); }
Group f20() { return group_semidirect_cyclic(5, 4, 3, "F20"); }
Group d20() { return group_semidirect_cyclic(10, 2, 9, "D20"); }
Group c7c3() { return group_semidirect_cyclic(7, 3, 2, "C7 : C3"); }
Group d22() { return group_semidirect_cyclic(11, 2, 10, "D22"); }

Group c3c8() { return group_semidirect_cyclic(3, 8, 2, "C3 : C8"); }
Group dic6() { return group_dicyclic(6, "Dic6"); }
Group c4xs3() { return group_direct_product(c4(), s3(), "C4 x S3"); }
Group d24() { return group_semidirect_cyclic(12, 2, 11, "D24"); }
Group dic3xc2() { return group_direct_product(dic3(), c2(), "C2 x Dic3"); }
Group g24_8() { return group_from_permutations(7, g24_8_gens(), "(C6 x C2) : C2"); }
Group c3xd8() { return group_direct_product(d8(), c3(), "C3 x D8"); }
Group c3xq8() { return group_direct_product(q8(), c3(), "C3 x Q8"); }
Group s4() { return group_from_permutations(4, s4_gens(), "S4"); }
Group c2xa4() { return group_direct_product(a4(), c2(), "C2 x A4"); }
Group c22xs3() { return group_direct_product(v4(), s3(), "C2 x C2 x S3"); }

Group d26() { return group_semidirect_cyclic(13, 2, 12, "D26"); }
Group g27_3() { return group_from_permutations(9, g27_3_gens(), "(C3 x C3) : C3"); }
Group g27_4() { return group_semidirect_cyclic(9, 3, 4, "C9 : C3"); }
Group dic7() { return group_semidirect_cyclic(7, 4, 6, "Dic7"); }
Group d28() { return group_semidirect_cyclic(14, 2, 13, "D28"); }
Group c5xs3() { return group_direct_product(c5(), s3(), "C5 x S3"); }
Group c3xd10() { return group_direct_product(c3(), d10(), "C3 x D10"); }
Group d30() { return group_semidirect_cyclic(15, 2, 14, "D30"); }
Group f42() { return group_semidirect_cyclic(7, 6, 3, "F42"); }

std::string cycles_of(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (unsigned i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
      j = p[j];
    }
    out += ')';
  }
  return out;
}

std::string perm_recipe(unsigned degree, const PermList& gens) {
  std::string out = "perm " + std::to_string(degree) + "\n";
  for (const Perm& p : gens) out += cycles_of(p) + "\n";
  return out;
}

std::string sdp_recipe(unsigned m, unsigned n, unsigned r) {
  return "sdp " + std::to_string(m) + " " + std::to_string(n) + " " +
         std::to_string(r) + "\n";
}

std::string dp_recipe(const std::string& a, const std::string& b) {
  return "dp " + a + " " + b + "\n";
}

constexpr bool kY = true;
constexpr bool kN = false;
const std::optional<bool> kUnrecorded;

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> v;
  auto add = [&](const char* label, const char* name, unsigned order,
                 bool abelian, std::optional<bool> bi, std::optional<bool> ci,
                 Group (*build)(), std::string recipe,
                 const GoldenTable* golden = nullptr,
                 bool has_golden_sets = false) {
    v.push_back({label, name, order, abelian, bi, ci, build, std::move(recipe),
                 golden, has_golden_sets});
  };

  // Abelian controls.  BI holds for every abelian group; no CI record is
  // carried since such verdicts are never computed here.
  add("[1,1]", "C1", 1, true, kY, kUnrecorded, c1, perm_recipe(1, {}));
  add("[2,1]", "C2", 2, true, kY, kUnrecorded, c2, perm_recipe(2, cyclic_gens(2)));
  add("[3,1]", "C3", 3, true, kY, kUnrecorded, c3, perm_recipe(3, cyclic_gens(3)));
  add("[4,1]", "C4", 4, true, kY, kUnrecorded, c4, perm_recipe(4, cyclic_gens(4)));
  add("[4,2]", "C2 x C2", 4, true, kY, kUnrecorded, v4, dp_recipe("[2,1]", "[2,1]"));
  add("[5,1]", "C5", 5, true, kY, kUnrecorded, c5, perm_recipe(5, cyclic_gens(5)));

  add("[6,1]", "S3", 6, false, kY, kY, s3, sdp_recipe(3, 2, 2));
  add("[6,2]", "C6", 6, true, kY, kUnrecorded, c6, perm_recipe(6, cyclic_gens(6)));
  add("[7,1]", "C7", 7, true, kY, kUnrecorded, c7, perm_recipe(7, cyclic_gens(7)));
  add("[8,1]", "C8", 8, true, kY, kUnrecorded, c8, perm_recipe(8, cyclic_gens(8)));
  add("[8,3]", "D8", 8, false, kN, kN, d8, sdp_recipe(4, 2, 3));
  add("[8,4]", "Q8", 8, false, kY, kY, q8, perm_recipe(8, dicyclic_gens(2)));
  add("[10,1]", "D10", 10, false, kY, kY, d10, sdp_recipe(5, 2, 4));
  add("[12,1]", "Dic3", 12, false, kY, kY, dic3, sdp_recipe(3, 4, 2));
  add("[12,3]", "A4", 12, false, kY, kY, a4, perm_recipe(4, a4_gens()));
  add("[12,4]", "D12", 12, false, kN, kN, d12, sdp_recipe(6, 2, 5));
  add("[14,1]", "D14", 14, false, kY, kY, d14, sdp_recipe(7, 2, 6));

  add("[16,3]", "(C2 x C2) : C4", 16, false, kN, kN, g16_3,
      perm_recipe(8, g16_3_gens()));
  add("[16,4]", "C4 : C4", 16, false, kN, kN, g16_4, sdp_recipe(4, 4, 3));
  add("[16,6]", "M16", 16, false, kN, kN, m16, sdp_recipe(8, 2, 5));
  add("[16,7]", "D16", 16, false, kN, kN, d16, sdp_recipe(8, 2, 7));
  add("[16,8]", "SD16", 16, false, kN, kN, sd16, sdp_recipe(8, 2, 3));
  add("[16,9]", "Q16", 16, false, kN, kN, q16, perm_recipe(16, dicyclic_gens(4)));
  add("[16,11]", "D8 x C2", 16, false, kN, kN, d8xc2, dp_recipe("[8,3]", "[2,1]"));
  add("[16,12]", "Q8 x C2", 16, false, kN, kN, q8xc2, dp_recipe("[8,4]", "[2,1]"));
  add("[16,13]", "C4 o D8", 16, false, kN, kN, group_pauli16,
      perm_recipe(16, pauli16_gens()));

  add("[18,1]", "D18", 18, false, kY, kY, d18, sdp_recipe(9, 2, 8));
  add("[18,3]", "C3 x S3", 18, false, kN, kN, c3xs3, dp_recipe("[3,1]", "[6,1]"));
  add("[18,4]", "(C3 x C3) : C2", 18, false, kY, kY, g18_4,
      perm_recipe(6, g18_4_gens()));
  add("[20,1]", "Dic5", 20, false, kY, kY, dic5, sdp_recipe(5, 4, 4));
  add("[20,3]", "F20", 20, false, kY, kN, f20, sdp_recipe(5, 4, 3),
      &golden_table_f20());
  add("[20,4]", "D20", 20, false, kN, kN, d20, sdp_recipe(10, 2, 9));
  add("[21,1]", "C7 : C3", 21, false, kY, kY, c7c3, sdp_recipe(7, 3, 2));
  add("[22,1]", "D22", 22, false, kY, kY, d22, sdp_recipe(11, 2, 10));

  add("[24,1]", "C3 : C8", 24, false, kY, kY, c3c8, sdp_recipe(3, 8, 2));
  add("[24,3]", "SL(2,3)", 24, false, kN, kN, group_sl23, "sl23\n", nullptr,
      true);
  add("[24,4]", "Dic6", 24, false, kN, kN, dic6, perm_recipe(24, dicyclic_gens(6)));
  add("[24,5]", "C4 x S3", 24, false, kN, kN, c4xs3, dp_recipe("[4,1]", "[6,1]"));
  add("[24,6]", "D24", 24, false, kN, kN, d24, sdp_recipe(12, 2, 11));
  add("[24,7]", "C2 x Dic3", 24, false, kN, kN, dic3xc2,
      dp_recipe("[12,1]", "[2,1]"));
  add("[24,8]", "(C6 x C2) : C2", 24, false, kN, kN, g24_8,
      perm_recipe(7, g24_8_gens()));
  add("[24,10]", "C3 x D8", 24, false, kN, kN, c3xd8, dp_recipe("[8,3]", "[3,1]"));
  add("[24,11]", "C3 x Q8", 24, false, kN, kN, c3xq8, dp_recipe("[8,4]", "[3,1]"));
  add("[24,12]", "S4", 24, false, kN, kN, s4, perm_recipe(4, s4_gens()));
  add("[24,13]", "C2 x A4", 24, false, kN, kN, c2xa4, dp_recipe("[12,3]", "[2,1]"));
  add("[24,14]", "C2 x C2 x S3", 24, false, kN, kN, c22xs3,
      dp_recipe("[4,2]", "[6,1]"));

  add("[26,1]", "D26", 26, false, kY, kY, d26, sdp_recipe(13, 2, 12));
  add("[27,3]", "(C3 x C3) : C3", 27, false, kN, kN, g27_3,
      perm_recipe(9, g27_3_gens()));
  add("[27,4]", "C9 : C3", 27, false, kN, kN, g27_4, sdp_recipe(9, 3, 4));
  add("[28,1]", "Dic7", 28, false, kY, kY, dic7, sdp_recipe(7, 4, 6));
  add("[28,3]", "D28", 28, false, kN, kN, d28, sdp_recipe(14, 2, 13));
  add("[30,1]", "C5 x S3", 30, false, kY, kY, c5xs3, dp_recipe("[5,1]", "[6,1]"));
  add("[30,2]", "C3 x D10", 30, false, kY, kY, c3xd10,
      dp_recipe("[3,1]", "[10,1]"));
  add("[30,3]", "D30", 30, false, kY, kY, d30, sdp_recipe(15, 2, 14));

  add("[42,1]", "F42", 42, false, kY, kN, f42, sdp_recipe(7, 6, 3),
      &golden_table_f42());
  add("[42,6]", "C42", 42, true, kY, kUnrecorded, c42,
      perm_recipe(42, cyclic_gens(42)));
  return v;
}

// "[20,3]", "20,3" and "20.3" all normalize to "[20,3]"; anything else is
// returned unchanged so it can still match a display name.
std::string normalize_label(const std::string& s) {
  std::string body = s;
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
    body = body.substr(1, body.size() - 2);
  std::replace(body.begin(), body.end(), '.', ',');
  const auto comma = body.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == body.size())
    return s;
  for (size_t i = 0; i < body.size(); ++i)
    if (i != comma && !std::isdigit(static_cast<unsigned char>(body[i])))
      return s;
  return "[" + body + "]";
}

}  // namespace

Group group_dicyclic(unsigned m, std::string name) {
  if (m < 1 || 4 * m > kMaxGroupOrder)
    throw BadTwist("dicyclic parameter out of range: m=" + std::to_string(m));
  if (name.empty()) name = "Dic" + std::to_string(m);
  return group_from_permutations(4 * m, dicyclic_gens(m), std::move(name));
}

Group group_pauli16() {
  return group_from_permutations(16, pauli16_gens(), "C4 o D8");
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& label) {
  const std::string norm = normalize_label(label);
  for (const CatalogEntry& e : catalog())
    if (e.label == norm || e.name == label) return e;
  throw UnknownLabel("no catalog entry for \"" + label + "\"");
}

Group build_group(const std::string& label) { return catalog_entry(label).build(); }

const GoldenTable& golden_table_f20() {
  static const GoldenTable table = [] {
    auto q = [](long v) { return Cyclotomic::from_integer(v); };
    const Cyclotomic i = Cyclotomic::root(4, 1);
    const Cyclotomic mi = Cyclotomic::root(4, 3);
    GoldenTable g;
    g.columns = {{1, 1}, {5, 2}, {5, 4}, {5, 4}, {4, 5}};
    g.rows = {
        {q(1), q(1), q(1), q(1), q(1)},
        {q(1), q(1), q(-1), q(-1), q(1)},
        {q(1), q(-1), i, mi, q(1)},
        {q(1), q(-1), mi, i, q(1)},
        {q(4), q(0), q(0), q(0), q(-1)},
    };
    return g;
  }();
  return table;
}

const GoldenTable& golden_table_f42() {
  static const GoldenTable table = [] {
    auto q = [](long v) { return Cyclotomic::from_integer(v); };
    const Cyclotomic z3 = Cyclotomic::root(3, 1);
    const Cyclotomic z3s = Cyclotomic::root(3, 2);
    const Cyclotomic z6 = Cyclotomic::root(6, 1);
    const Cyclotomic z6f = Cyclotomic::root(6, 5);
    GoldenTable g;
    g.columns = {{1, 1}, {7, 2}, {7, 3}, {7, 3}, {7, 6}, {7, 6}, {6, 7}};
    g.rows = {
        {q(1), q(1), q(1), q(1), q(1), q(1), q(1)},
        {q(1), q(-1), q(1), q(1), q(-1), q(-1), q(1)},
        {q(1), q(1), z3s, z3, z3, z3s, q(1)},
        {q(1), q(1), z3, z3s, z3s, z3, q(1)},
        {q(1), q(-1), z3, z3s, z6, z6f, q(1)},
        {q(1), q(-1), z3s, z3, z6f, z6, q(1)},
        {q(6), q(0), q(0), q(0), q(0), q(0), q(-1)},
    };
    return g;
  }();
  return table;
}

std::pair<std::vector<unsigned>, std::vector<unsigned>> sl23_golden_sets() {
  using Mat = std::array<unsigned, 4>;
  std::vector<Mat> mats;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned b = 0; b < 3; ++b)
      for (unsigned c = 0; c < 3; ++c)
        for (unsigned d = 0; d < 3; ++d)
          if ((a * d + 2 * b * c) % 3 == 1) mats.push_back({a, b, c, d});
  std::sort(mats.begin(), mats.end());
  const Mat id{1, 0, 0, 1};
  mats.erase(std::find(mats.begin(), mats.end(), id));
  mats.insert(mats.begin(), id);
  auto at = [&](const Mat& m) {
    return static_cast<unsigned>(
        std::find(mats.begin(), mats.end(), m) - mats.begin());
  };

  const std::array<Mat, 6> s_mats{{{1, 1, 0, 1},
                                   {0, 1, 2, 2},
                                   {0, 2, 1, 2},
                                   {2, 1, 2, 0},
                                   {1, 2, 0, 1},
                                   {2, 2, 1, 0}}};
  const std::array<Mat, 6> t_mats{{{2, 0, 1, 2},
                                   {1, 2, 1, 0},
                                   {1, 1, 2, 0},
                                   {0, 1, 2, 1},
                                   {0, 2, 1, 1},
                                   {2, 0, 2, 2}}};
  std::vector<unsigned> s, t;
  for (const Mat& m : s_mats) s.push_back(at(m));
  for (const Mat& m : t_mats) t.push_back(at(m));
  std::sort(s.begin(), s.end());
  std::sort(t.begin(), t.end());
  return {s, t};
}

}  // namespace bicay
