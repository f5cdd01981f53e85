// Command-line surface over the invariant engine: group inspection, exact
// character tables and spectra, pairwise and whole-group BI checks, witness
// searches, and the classification report.
//
// Exit codes: 0 verdict complete, 2 budget-partial result, 1 error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicay/catalog.hpp"
#include "bicay/cayley.hpp"
#include "bicay/chars.hpp"
#include "bicay/engine.hpp"
#include "bicay/errors.hpp"
#include "bicay/io.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// A group argument is a catalog label unless it names a readable file, in
// which case it is parsed as a group spec.
bicay::Group resolve_group(const std::string& arg) {
  if (std::filesystem::exists(arg)) return bicay::load_group_spec_file(arg);
  return bicay::build_group(arg);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_group_info(const std::string& label, bool as_json) {
  bicay::Group g = resolve_group(label);
  auto part = conjugacy_classes(g);
  bicay::CharacterTable table = character_table(g);

  std::vector<size_t> class_sizes;
  for (const auto& c : part.classes) class_sizes.push_back(c.size());

  bool abelian = true;
  for (unsigned x = 0; x < g.order() && abelian; ++x)
    for (unsigned y = x + 1; y < g.order(); ++y)
      if (g.op(x, y) != g.op(y, x)) {
        abelian = false;
        break;
      }

  if (as_json) {
    json gens = json::array();
    for (size_t i = 0; i < g.generators().size(); ++i)
      gens.push_back({{"letter", std::string(1, char('a' + i))},
                      {"index", g.generators()[i]},
                      {"order", element_order(g, g.generators()[i])}});
    emit(json{{"label", label},
              {"name", g.name()},
              {"order", g.order()},
              {"abelian", abelian},
              {"exponent", group_exponent(g)},
              {"class_sizes", class_sizes},
              {"degrees", table.degrees},
              {"generators", gens}});
    return 0;
  }

  std::cout << "label:       " << label << "\n";
  std::cout << "name:        " << g.name() << "\n";
  std::cout << "order:       " << g.order() << "\n";
  std::cout << "abelian:     " << (abelian ? "yes" : "no") << "\n";
  std::cout << "exponent:    " << group_exponent(g) << "\n";
  std::cout << "class sizes:";
  for (size_t s : class_sizes) std::cout << " " << s;
  std::cout << "\ndegrees:    ";
  for (unsigned d : table.degrees) std::cout << " " << d;
  std::cout << "\ngenerators: ";
  for (size_t i = 0; i < g.generators().size(); ++i)
    std::cout << " " << char('a' + i) << "=" << g.generators()[i];
  std::cout << "\n";
  return 0;
}

int cmd_chartable(const std::string& label, bool as_json) {
  bicay::Group g = resolve_group(label);
  bicay::CharacterTable table = character_table(g);
  if (as_json) {
    emit(chartable_json(table, label));
    return 0;
  }

  std::cout << g.name() << ", order " << g.order() << ", conductor "
            << table.conductor << "\n";
  std::cout << "class rep:  ";
  for (unsigned k = 0; k < table.h; ++k)
    std::cout << "\t" << table.partition.reps[k];
  std::cout << "\nclass size: ";
  for (unsigned k = 0; k < table.h; ++k)
    std::cout << "\t" << table.partition.classes[k].size();
  std::cout << "\n";
  for (unsigned i = 0; i < table.h; ++i) {
    std::cout << "chi_" << (i + 1) << " (deg " << table.degrees[i] << "):";
    for (unsigned k = 0; k < table.h; ++k)
      std::cout << "\t" << table.rows[i][k].to_string();
    std::cout << "\n";
  }
  return 0;
}

int cmd_spectrum(const std::string& label, const std::string& set_path,
                 bool close_inverse) {
  bicay::Group g = resolve_group(label);
  bicay::CharacterTable table = character_table(g);
  bicay::ConnectionSet s =
      bicay::load_connection_set_file(g, set_path, close_inverse);
  bicay::CayleyGraph graph = build_cayley(g, s);
  bicay::SpectrumReport rep = spectrum_report(graph, table);
  emit(spectrum_json(g, s, rep, label));
  return 0;
}

int cmd_bi_pair(const std::string& label, const std::string& s_path,
                const std::string& t_path, bool close_inverse) {
  bicay::Group g = resolve_group(label);
  bicay::CharacterTable table = character_table(g);
  bicay::ConnectionSet s =
      bicay::load_connection_set_file(g, s_path, close_inverse);
  bicay::ConnectionSet t =
      bicay::load_connection_set_file(g, t_path, close_inverse);
  emit(bi_pair_report(table, s, t, label));
  return 0;
}

int cmd_bi_group(const std::string& label, const std::string& mode,
                 uint64_t budget, unsigned jobs) {
  auto start = Clock::now();
  bicay::Group g = resolve_group(label);
  bicay::CharacterTable table = character_table(g);
  bicay::BIMode m =
      mode == "full" ? bicay::BIMode::full : bicay::BIMode::reduced;
  bicay::BIGroupReport rep = bi_check_group(g, table, m, budget, jobs);
  emit(bi_group_report_json(g, rep, label, seconds_since(start)));
  return rep.complete ? 0 : 2;
}

int cmd_ci_witness(const std::string& label, uint64_t budget) {
  auto start = Clock::now();
  bicay::Group g = resolve_group(label);
  bicay::CISearchReport rep = find_non_ci_witness(g, budget);
  emit(ci_search_json(g, rep, label, budget, seconds_since(start)));
  if (rep.witness) return 0;
  return rep.complete ? 0 : 2;
}

int cmd_nonbi_witness(const std::string& label, uint64_t budget,
                      unsigned jobs) {
  auto start = Clock::now();
  bicay::Group g = resolve_group(label);
  bicay::CharacterTable table = character_table(g);
  auto w = construct_non_bi_witness(g, table, budget, jobs);
  json j = non_bi_witness_json(g, w, label, seconds_since(start));

  bool abelian = true;
  for (unsigned x = 0; x < g.order() && abelian; ++x)
    for (unsigned y = x + 1; y < g.order(); ++y)
      if (g.op(x, y) != g.op(y, x)) {
        abelian = false;
        break;
      }
  if (!w && abelian) j["note"] = "abelian groups admit no such pair";
  emit(j);
  if (w) return 0;
  return abelian ? 0 : 2;
}

int cmd_classify(unsigned max_order, const std::string& out_path,
                 uint64_t budget, unsigned jobs, bool include_abelian) {
  json rows = json::array();
  bool all_complete = true;

  for (const auto& entry : bicay::catalog()) {
    if (entry.order > max_order) continue;
    if (entry.abelian && !include_abelian) continue;
    if (!entry.bi_recorded.has_value()) continue;

    auto start = Clock::now();
    bicay::Group g = entry.build();
    bicay::CharacterTable table = character_table(g);

    json row{{"label", entry.label},
             {"order", entry.order},
             {"bi_paper", *entry.bi_recorded ? "Y" : "N"}};

    if (!*entry.bi_recorded) {
      auto w = construct_non_bi_witness(g, table, budget, jobs);
      row["bi_computed"] = w ? "N" : "Y";
      row["method"] = "witness";
      row["witness"] =
          w ? non_bi_witness_json(g, w, entry.label, 0)["witness"]
            : json(nullptr);
      if (!w) all_complete = false;
    } else {
      bicay::BIMode mode =
          entry.order <= 22 ? bicay::BIMode::full : bicay::BIMode::reduced;
      bicay::BIGroupReport rep = bi_check_group(g, table, mode, budget, jobs);
      row["bi_computed"] = rep.violation ? "N" : "Y";
      if (!rep.complete) {
        row["method"] = "sampled";
        all_complete = false;
      } else {
        row["method"] = mode == bicay::BIMode::full ? "exhaustive"
                                                    : "exhaustive-reduced";
      }
      row["witness"] = rep.violation
                           ? bi_group_report_json(g, rep, entry.label,
                                                  0)["witness"]
                           : json(nullptr);
    }
    double secs = seconds_since(start);
    row["seconds"] = secs;
    rows.push_back(row);

    std::cout << entry.label << " " << entry.name << " order " << entry.order
              << ": BI recorded " << row["bi_paper"].get<std::string>()
              << ", computed " << row["bi_computed"].get<std::string>() << " ("
              << row["method"].get<std::string>() << ", " << secs << "s)\n";
  }

  json report{{"version", kVersion}, {"budget", budget}, {"rows", rows}};
  bicay::write_text_file(out_path, report.dump(2) + "\n");
  std::cout << "report written to " << out_path << "\n";
  return all_complete ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-graph character-sum invariants for small groups"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string label, mode = "reduced", s_path, t_path, set_path;
  std::string out_path = "report.json";
  uint64_t budget = uint64_t(1) << 20;
  uint64_t classify_budget = uint64_t(1) << 17;
  unsigned jobs = 1, max_order = 30;
  bool as_json = false, close_inverse = false, include_abelian = false;

  int rc = 0;
  auto run = [&rc](auto fn) {
    return [&rc, fn]() { rc = fn(); };
  };

  auto* grp = app.add_subcommand("group", "Inspect a group");
  grp->require_subcommand(1);
  auto* info = grp->add_subcommand("info", "Order, classes, degrees");
  info->add_option("label", label, "catalog label or spec file")->required();
  info->add_flag("--json", as_json, "emit JSON");
  info->callback(run([&] { return cmd_group_info(label, as_json); }));

  auto* chartable =
      app.add_subcommand("chartable", "Exact irreducible character table");
  chartable->add_option("label", label)->required();
  chartable->add_flag("--json", as_json, "emit JSON");
  chartable->callback(run([&] { return cmd_chartable(label, as_json); }));

  auto* spectrum =
      app.add_subcommand("spectrum", "Exact spectrum of one Cayley graph");
  spectrum->add_option("label", label)->required();
  spectrum->add_option("--set", set_path, "connection-set file")->required();
  spectrum->add_flag("--close-inverse", close_inverse,
                     "close the set under inversion");
  spectrum->callback(
      run([&] { return cmd_spectrum(label, set_path, close_inverse); }));

  auto* bi = app.add_subcommand("bi", "Character-sum invariance checks");
  bi->require_subcommand(1);
  auto* bi_pair = bi->add_subcommand(
      "pair", "Compare char-sum profiles and isomorphism of two sets");
  bi_pair->add_option("label", label)->required();
  bi_pair->add_option("--s", s_path, "first connection-set file")->required();
  bi_pair->add_option("--t", t_path, "second connection-set file")->required();
  bi_pair->add_flag("--close-inverse", close_inverse);
  bi_pair->callback(
      run([&] { return cmd_bi_pair(label, s_path, t_path, close_inverse); }));

  auto* bi_group = bi->add_subcommand(
      "group", "Scan all generating sets for an invariance violation");
  bi_group->add_option("label", label)->required();
  bi_group->add_option("--mode", mode, "reduced or full")
      ->check(CLI::IsMember({"reduced", "full"}));
  bi_group->add_option("--budget", budget, "max sets per size");
  bi_group->add_option("--jobs", jobs, "worker threads");
  bi_group->callback(
      run([&] { return cmd_bi_group(label, mode, budget, jobs); }));

  auto* ci = app.add_subcommand("ci", "Cayley isomorphism searches");
  ci->require_subcommand(1);
  auto* ci_witness = ci->add_subcommand(
      "witness", "Search for isomorphic graphs no automorphism relates");
  ci_witness->add_option("label", label)->required();
  ci_witness->add_option("--budget", budget, "max sets examined");
  ci_witness->callback(run([&] { return cmd_ci_witness(label, budget); }));

  auto* nonbi = app.add_subcommand("nonbi", "Invariance counterexamples");
  nonbi->require_subcommand(1);
  auto* nonbi_witness = nonbi->add_subcommand(
      "witness", "Construct a pair with equal graphs, different profiles");
  nonbi_witness->add_option("label", label)->required();
  nonbi_witness->add_option("--budget", budget, "fallback scan budget");
  nonbi_witness->add_option("--jobs", jobs, "worker threads");
  nonbi_witness->callback(
      run([&] { return cmd_nonbi_witness(label, budget, jobs); }));

  auto* classify =
      app.add_subcommand("classify", "Recompute the catalog verdict table");
  classify->add_option("--max-order", max_order, "largest group order");
  classify->add_option("--out", out_path, "report file");
  classify->add_option("--budget", classify_budget, "max sets per size");
  classify->add_option("--jobs", jobs, "worker threads");
  classify->add_flag("--include-abelian", include_abelian,
                     "also rerun the abelian control rows");
  classify->callback(run([&] {
    return cmd_classify(max_order, out_path, classify_budget, jobs,
                        include_abelian);
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const bicay::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
