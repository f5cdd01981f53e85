#include "bicay/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "bicay/catalog.hpp"
#include "bicay/graphiso.hpp"

namespace bicay {

namespace {

// Lines with comments stripped; blank lines dropped.
std::vector<std::string> meaningful_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto is_space = [](unsigned char c) { return std::isspace(c); };
    while (!line.empty() && is_space(line.back())) line.pop_back();
    size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    if (start < line.size()) out.push_back(line.substr(start));
  }
  return out;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(std::move(t));
  return toks;
}

unsigned parse_unsigned(const std::string& tok, const char* what) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
        return std::isdigit(c);
      }))
    throw ParseError(std::string(what) + " is not a number: '" + tok + "'");
  unsigned long v = std::stoul(tok);
  if (v > 1000000) throw ParseError(std::string(what) + " out of range");
  return static_cast<unsigned>(v);
}

// "(0 1 2)(3 4)" -> permutation of the given degree; commas also separate.
// Cycles must be disjoint.
std::vector<unsigned> parse_cycles(const std::string& line, unsigned degree) {
  std::vector<unsigned> perm(degree);
  for (unsigned i = 0; i < degree; ++i) perm[i] = i;
  std::vector<bool> used(degree, false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < line.size() &&
           (std::isspace(static_cast<unsigned char>(line[pos])) ||
            line[pos] == ','))
      ++pos;
  };
  skip_ws();
  while (pos < line.size()) {
    if (line[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + line);
    ++pos;
    std::vector<unsigned> cycle;
    skip_ws();
    while (pos < line.size() && line[pos] != ')') {
      size_t end = pos;
      while (end < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[end])))
        ++end;
      if (end == pos)
        throw ParseError("expected a point index in cycle: " + line);
      unsigned v = parse_unsigned(line.substr(pos, end - pos), "cycle point");
      if (v >= degree)
        throw ParseError("cycle point " + std::to_string(v) +
                         " exceeds degree " + std::to_string(degree));
      if (used[v])
        throw ParseError("point " + std::to_string(v) +
                         " appears twice in: " + line);
      used[v] = true;
      cycle.push_back(v);
      pos = end;
      skip_ws();
    }
    if (pos >= line.size())
      throw ParseError("unterminated cycle: " + line);
    ++pos;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k)
      perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return perm;
}

const std::vector<unsigned>& word_generators(const Group& g) {
  return g.generators();
}

char generator_letter(size_t slot) {
  if (slot >= 26) throw ParseError("too many generators to name");
  return static_cast<char>('a' + slot);
}

}  // namespace

Group load_group_spec(const std::string& text) {
  auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("empty group spec");
  auto head = split_tokens(lines[0]);
  const std::string& form = head[0];

  if (form == "perm") {
    if (head.size() != 2) throw ParseError("perm header wants one degree");
    unsigned degree = parse_unsigned(head[1], "degree");
    if (degree == 0) throw ParseError("degree must be positive");
    std::vector<std::vector<unsigned>> gens;
    for (size_t i = 1; i < lines.size(); ++i)
      gens.push_back(parse_cycles(lines[i], degree));
    return group_from_permutations(degree, gens);
  }
  if (form == "sdp") {
    if (head.size() != 4 || lines.size() != 1)
      throw ParseError("sdp wants exactly 'sdp m n r'");
    return group_semidirect_cyclic(parse_unsigned(head[1], "m"),
                                   parse_unsigned(head[2], "n"),
                                   parse_unsigned(head[3], "r"));
  }
  if (form == "dp") {
    if (head.size() != 3 || lines.size() != 1)
      throw ParseError("dp wants exactly 'dp <label> <label>'");
    Group a = build_group(head[1]);
    Group b = build_group(head[2]);
    return group_direct_product(a, b);
  }
  if (form == "sl23") {
    if (head.size() != 1 || lines.size() != 1)
      throw ParseError("sl23 takes no arguments");
    return group_sl23();
  }
  throw ParseError("unknown group spec form: " + form);
}

Group load_group_spec_file(const std::string& path) {
  return load_group_spec(read_text_file(path));
}

unsigned parse_word(const Group& g, const std::string& word) {
  if (word.empty()) throw ParseError("empty generator word");
  if (word == "e") return 0;
  const auto& gens = word_generators(g);

  unsigned acc = 0;
  size_t pos = 0;
  while (pos < word.size()) {
    char c = word[pos];
    if (c < 'a' || c > 'z')
      throw ParseError("expected a generator letter in word: " + word);
    size_t slot = static_cast<size_t>(c - 'a');
    if (slot >= gens.size())
      throw ParseError("group has no generator '" + std::string(1, c) + "'");
    ++pos;
    long k = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      size_t end = pos;
      if (end < word.size() && word[end] == '-') ++end;
      while (end < word.size() &&
             std::isdigit(static_cast<unsigned char>(word[end])))
        ++end;
      if (end == pos || (word[pos] == '-' && end == pos + 1))
        throw ParseError("malformed exponent in word: " + word);
      k = std::stol(word.substr(pos, end - pos));
      pos = end;
    }
    acc = g.op(acc, element_pow(g, gens[slot], k));
    if (pos < word.size()) {
      if (word[pos] != '*')
        throw ParseError("expected '*' between factors in word: " + word);
      ++pos;
      if (pos == word.size())
        throw ParseError("word ends with '*': " + word);
    }
  }
  return acc;
}

std::string element_word(const Group& g, unsigned x) {
  if (x >= g.order()) throw ParseError("element index out of range");
  if (x == 0) return "e";
  const auto& gens = word_generators(g);

  // Breadth-first tree rooted at the identity; parent edges carry the
  // generator slot that extends the word.
  std::vector<int> via(g.order(), -1), parent(g.order(), -1);
  std::vector<unsigned> queue{0};
  via[0] = -2;
  for (size_t head = 0; head < queue.size() && via[x] == -1; ++head) {
    unsigned cur = queue[head];
    for (size_t s = 0; s < gens.size(); ++s) {
      unsigned next = g.op(cur, gens[s]);
      if (via[next] == -1) {
        via[next] = static_cast<int>(s);
        parent[next] = static_cast<int>(cur);
        queue.push_back(next);
      }
    }
  }
  if (via[x] == -1)
    throw Inconsistent("declared generators do not reach element " +
                       std::to_string(x));

  std::vector<size_t> slots;
  for (unsigned cur = x; cur != 0; cur = static_cast<unsigned>(parent[cur]))
    slots.push_back(static_cast<size_t>(via[cur]));
  std::reverse(slots.begin(), slots.end());

  std::string out;
  for (size_t i = 0; i < slots.size();) {
    size_t j = i;
    while (j < slots.size() && slots[j] == slots[i]) ++j;
    if (!out.empty()) out += '*';
    out += generator_letter(slots[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<std::string> set_words(const Group& g,
                                   const std::vector<unsigned>& members) {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (unsigned x : members) out.push_back(element_word(g, x));
  return out;
}

ConnectionSet load_connection_set(const Group& g, const std::string& text,
                                  bool close_inverse) {
  std::vector<unsigned> members;
  for (const auto& line : meaningful_lines(text))
    for (const auto& tok : split_tokens(line)) {
      unsigned x;
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        x = parse_unsigned(tok, "element index");
        if (x >= g.order())
          throw ParseError("element index " + tok + " exceeds group order " +
                           std::to_string(g.order()));
      } else {
        x = parse_word(g, tok);
      }
      members.push_back(x);
    }

  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  if (close_inverse) {
    std::vector<unsigned> closed = members;
    for (unsigned x : members) closed.push_back(g.inv(x));
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    members = std::move(closed);
  } else {
    for (unsigned x : members)
      if (!std::binary_search(members.begin(), members.end(), g.inv(x)))
        throw NotInverseClosed("set lacks the inverse of element " +
                               std::to_string(x) +
                               " (pass --close-inverse to add it)");
  }
  return make_connection_set(g, std::move(members));
}

ConnectionSet load_connection_set_file(const Group& g, const std::string& path,
                                       bool close_inverse) {
  return load_connection_set(g, read_text_file(path), close_inverse);
}

std::string connection_set_text(const Group& g, const ConnectionSet& s) {
  std::string out;
  for (unsigned x : s.members)
    out += std::to_string(x) + "  # " + element_word(g, x) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
  if (!out) throw ParseError("short write: " + path);
}

namespace {

using nlohmann::json;

json exact_values(const std::vector<Cyclotomic>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(v.to_string());
  return arr;
}

json char_sum_json(const CharSumSet& m) {
  return json{{"degree", m.degree}, {"values", exact_values(m.values)}};
}

json profile_json(const std::vector<CharSumSet>& profile) {
  json arr = json::array();
  for (const auto& m : profile) arr.push_back(char_sum_json(m));
  return arr;
}

json poly_json(const std::vector<mpz_class>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

json index_array(const std::vector<unsigned>& v) {
  return json(v);
}

}  // namespace

json set_json(const Group& g, const ConnectionSet& s) {
  return json{{"members", index_array(s.members)},
              {"words", set_words(g, s.members)}};
}

json chartable_json(const CharacterTable& t, const std::string& label) {
  json classes = json::array();
  for (unsigned k = 0; k < t.h; ++k) {
    unsigned rep = t.partition.reps[k];
    classes.push_back(
        {{"representative", rep},
         {"size", t.partition.classes[k].size()},
         {"element_order", element_order(t.group, rep)}});
  }
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(exact_values(row));
  return json{{"label", label},          {"name", t.group.name()},
              {"order", t.group.order()}, {"conductor", t.conductor},
              {"classes", classes},       {"degrees", t.degrees},
              {"characters", rows}};
}

json spectrum_json(const Group& g, const ConnectionSet& s,
                   const SpectrumReport& r, const std::string& label) {
  json clusters = json::array();
  for (auto [value, mult] : r.eigs)
    clusters.push_back({{"value", value}, {"multiplicity", mult}});
  return json{{"label", label},
              {"set", set_json(g, s)},
              {"char_poly", poly_json(r.char_poly)},
              {"clusters", clusters},
              {"linear_sums", exact_values(r.babai_m1)},
              {"structure_tag", r.structure_tag}};
}

json bi_pair_report(const CharacterTable& table, const ConnectionSet& s,
                    const ConnectionSet& t, const std::string& label) {
  auto ms = m_profile(table, s);
  auto mt = m_profile(table, t);

  std::optional<unsigned> first_unequal;
  for (size_t i = 0; i < ms.size(); ++i)
    if (!(ms[i] == mt[i])) {
      first_unequal = ms[i].degree;
      break;
    }

  CayleyGraph gs = build_cayley(table.group, s);
  CayleyGraph gt = build_cayley(table.group, t);
  CanonicalForm fs = canonical_form(gs);
  CanonicalForm ft = canonical_form(gt);
  bool iso = fs == ft;

  json out{{"label", label},
           {"s", set_json(table.group, s)},
           {"t", set_json(table.group, t)},
           {"m_s", profile_json(ms)},
           {"m_t", profile_json(mt)},
           {"m_profiles_equal", !first_unequal.has_value()},
           {"isomorphic", iso},
           {"canonical_hex_s", fs.to_hex()},
           {"canonical_hex_t", ft.to_hex()},
           {"bi_violation", iso && first_unequal.has_value()}};
  out["first_unequal_degree"] =
      first_unequal ? json(*first_unequal) : json(nullptr);
  return out;
}

namespace {

json violation_json(const Group& g, const BIViolation& v) {
  return json{{"s", index_array(v.s.members)},
              {"s_words", set_words(g, v.s.members)},
              {"t", index_array(v.t.members)},
              {"t_words", set_words(g, v.t.members)},
              {"degree", v.degree},
              {"m_s", exact_values(v.m_s.values)},
              {"m_t", exact_values(v.m_t.values)},
              {"canonical_hex", v.form.to_hex()}};
}

}  // namespace

json bi_group_report_json(const Group& g, const BIGroupReport& r,
                          const std::string& label, double seconds) {
  json sizes = json::array();
  for (const auto& s : r.sizes)
    sizes.push_back({{"size", s.size},
                     {"candidates", s.candidates},
                     {"examined", s.examined},
                     {"sampled", s.sampled}});
  json out{{"label", label},
           {"mode", r.mode == BIMode::reduced ? "reduced" : "full"},
           {"sizes", sizes},
           {"buckets_examined", r.buckets_examined},
           {"complete", r.complete},
           {"verdict", r.violation ? "violation" : "pass"},
           {"seconds", seconds}};
  out["witness"] = r.violation ? violation_json(g, *r.violation) : json(nullptr);
  return out;
}

json ci_search_json(const Group& g, const CISearchReport& r,
                    const std::string& label, uint64_t budget,
                    double seconds) {
  json out{{"label", label},
           {"found", r.witness.has_value()},
           {"sets_examined", r.sets_examined},
           {"complete", r.complete},
           {"budget", budget},
           {"seconds", seconds}};
  if (r.witness) {
    out["witness"] =
        json{{"s", index_array(r.witness->s.members)},
             {"s_words", set_words(g, r.witness->s.members)},
             {"t", index_array(r.witness->t.members)},
             {"t_words", set_words(g, r.witness->t.members)},
             {"canonical_hex", r.witness->form.to_hex()},
             {"automorphisms_checked", r.witness->automorphisms_checked}};
  } else {
    out["witness"] = json(nullptr);
  }
  return out;
}

json non_bi_witness_json(const Group& g, const std::optional<NonBIWitness>& w,
                         const std::string& label, double seconds) {
  json out{{"label", label}, {"found", w.has_value()}, {"seconds", seconds}};
  if (w) {
    out["witness"] = json{{"s", index_array(w->s.members)},
                          {"s_words", set_words(g, w->s.members)},
                          {"t", index_array(w->t.members)},
                          {"t_words", set_words(g, w->t.members)},
                          {"degree", w->degree},
                          {"m_s", exact_values(w->m_s.values)},
                          {"m_t", exact_values(w->m_t.values)},
                          {"method", w->method}};
  } else {
    out["witness"] = json(nullptr);
  }
  return out;
}

WitnessSets witness_sets_from_json(const nlohmann::json& report) {
  const nlohmann::json* holder = nullptr;
  if (report.contains("witness") && report["witness"].is_object())
    holder = &report["witness"];
  else if (report.contains("s") && report.contains("t"))
    holder = &report;
  if (!holder) throw ParseError("report carries no witness pair");

  auto side = [&](const char* key) {
    const auto& v = (*holder)[key];
    const auto& arr = v.is_object() ? v.at("members") : v;
    if (!arr.is_array()) throw ParseError("witness side is not an index list");
    std::vector<unsigned> out;
    for (const auto& e : arr) out.push_back(e.get<unsigned>());
    return out;
  };
  return WitnessSets{side("s"), side("t")};
}

}  // namespace bicay
