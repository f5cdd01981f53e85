#pragma once

// Text and JSON interchange: group spec files, connection-set files,
// generator words, and the report shapes the command-line tool emits.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bicay/cayley.hpp"
#include "bicay/engine.hpp"
#include "bicay/group.hpp"

namespace bicay {

// Group spec text.  One header line picks the form:
//   perm <degree>   followed by one cycle-notation line per generator,
//                   e.g. "(0 1 2)(3 4)"; fixed points are omitted
//   sdp <m> <n> <r>
//   dp <label> <label>   factors resolved through the catalog
//   sl23
// '#' starts a comment; blank lines are skipped.  Element indexing matches
// the corresponding constructor exactly, so downstream index files are
// portable between spec-file and catalog construction.
Group load_group_spec(const std::string& text);
Group load_group_spec_file(const std::string& path);

// Generator words.  Letters name the declared generators in order
// (a, b, ...); a word is a '*'-separated product of powers: "a^2*b",
// "b^-1*a".  "e" is the identity.
unsigned parse_word(const Group& g, const std::string& word);

// Shortest positive word reaching x, by breadth-first search from the
// identity in generator declaration order; "e" for the identity.
std::string element_word(const Group& g, unsigned x);
std::vector<std::string> set_words(const Group& g,
                                   const std::vector<unsigned>& members);

// Connection-set text: whitespace-separated tokens, each a decimal element
// index or a generator word.  Duplicate mentions collapse.  Input that is
// not inverse-closed is rejected unless close_inverse is set, in which case
// the missing inverses are added.
ConnectionSet load_connection_set(const Group& g, const std::string& text,
                                  bool close_inverse = false);
ConnectionSet load_connection_set_file(const Group& g, const std::string& path,
                                       bool close_inverse = false);

// One index per line with its word alongside as a comment.
std::string connection_set_text(const Group& g, const ConnectionSet& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// JSON report builders.  Every exact value is rendered through
// Cyclotomic::to_string / mpz get_str so reports parse back losslessly.

nlohmann::json set_json(const Group& g, const ConnectionSet& s);
nlohmann::json chartable_json(const CharacterTable& t,
                              const std::string& label);
nlohmann::json spectrum_json(const Group& g, const ConnectionSet& s,
                             const SpectrumReport& r, const std::string& label);

// Computes profiles, graphs, and canonical forms for the pair and reports
// equality, the first degree where the char-sum sets split, and the
// isomorphism verdict.
nlohmann::json bi_pair_report(const CharacterTable& table,
                              const ConnectionSet& s, const ConnectionSet& t,
                              const std::string& label);

nlohmann::json bi_group_report_json(const Group& g, const BIGroupReport& r,
                                    const std::string& label, double seconds);
nlohmann::json ci_search_json(const Group& g, const CISearchReport& r,
                              const std::string& label, uint64_t budget,
                              double seconds);
nlohmann::json non_bi_witness_json(const Group& g,
                                   const std::optional<NonBIWitness>& w,
                                   const std::string& label, double seconds);

// Pulls the witness pair out of any report produced above (or out of a
// bi_pair_report's own sets) so a verdict can be replayed from disk.
struct WitnessSets {
  std::vector<unsigned> s, t;
};
WitnessSets witness_sets_from_json(const nlohmann::json& report);

}  // namespace bicay
