// Command-line front end: sweeps, structural checks, embeddings, formula
// evaluation and the integer encoding.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "young/arithmetization.hpp"
#include "young/evaluator.hpp"
#include "young/harness.hpp"
#include "young/json_report.hpp"
#include "young/prenex.hpp"
#include "young/structure.hpp"

using namespace young;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int exit_for(Verdict v) { return v == Verdict::kPass ? kExitPass : kExitMismatch; }

void emit(const ordered_json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string summary_line(const PropositionReport& r) {
  std::ostringstream s;
  s << to_string(r.verdict) << "  " << r.name << "  [" << r.primary().range << "]  "
    << r.primary().tuples_checked << " tuples, " << r.primary().mismatch_count << " mismatches";
  if (r.primary().boundary_count > 0) s << ", " << r.primary().boundary_count << " boundary";
  return s.str();
}

std::string summary_line(const CheckReport& r) {
  std::ostringstream s;
  s << to_string(r.verdict) << "  " << r.name << "  [" << r.range << "]  " << r.mismatch_count << " mismatches";
  return s.str();
}

Assignment parse_assignments(const std::vector<std::string>& items) {
  Assignment out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected VAR=PARTITION, got '" + item + "'");
    out.insert_or_assign(item.substr(0, eq), parse_partition(item.substr(eq + 1)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Young's lattice: definable predicates, certification sweeps and bounded model checking"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string json_path;
  bool timings = false;
  unsigned threads = 0;
  app.add_option("--json", json_path, "Write the JSON report to this file instead of stdout");
  app.add_flag("--timings", timings, "Include wall-clock times in reports");
  app.add_option("--threads", threads, "Worker threads (0: all cores)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List level sizes of the truncated lattice");
  std::int64_t enum_max = 0;
  bool enum_list = false;
  enumerate->add_option("--max-card", enum_max, "Largest cardinality")->required();
  enumerate->add_flag("--list", enum_list, "Also list every partition");

  // list
  auto* list = app.add_subcommand("list", "Show registered propositions and profiles");

  // check-prop
  auto* check_prop = app.add_subcommand("check-prop", "Compare one characterization with its oracle");
  std::string prop_name;
  Bounds prop_bounds;
  std::int64_t aux = -1;
  bool no_stability = false;
  check_prop->add_option("name", prop_name, "Proposition identifier (see `list`)")->required();
  check_prop->add_option("--max-card", prop_bounds.max_card, "Bound on the main argument")->required();
  check_prop->add_option("--slack", prop_bounds.slack, "Extra search room for inner quantifiers");
  check_prop->add_option("--aux-card", aux, "Bound on secondary arguments (default: --max-card)");
  check_prop->add_flag("--no-stability", no_stability, "Skip the rerun at slack + 1");

  // check-all
  auto* check_all_cmd = app.add_subcommand("check-all", "Run every suite under a bound profile");
  std::string profile_name;
  check_all_cmd->add_option("--profile", profile_name, "quick, standard or thorough")->required();

  // reconstruct
  auto* reconstruct = app.add_subcommand("reconstruct", "Injectivity of lower-cover fingerprints per level");
  std::int64_t recon_max = 0;
  reconstruct->add_option("--max-card", recon_max, "Largest level (>= 4)")->required();

  // automorphisms
  auto* automorphisms = app.add_subcommand("automorphisms", "Graded automorphisms of a truncation");
  std::int64_t max_rank = 8;
  automorphisms->add_option("--max-rank", max_rank, "Top level of the truncation")->capture_default_str();

  // embed
  auto* embed = app.add_subcommand("embed", "Search for an order embedding of a finite poset");
  std::string poset_path;
  std::int64_t embed_max = 0;
  embed->add_option("--poset", poset_path, "Poset file (elem NAME / lt A B)")->required();
  embed->add_option("--max-card", embed_max, "Largest cardinality of an image")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a formula file under truncated quantifiers");
  std::string formula_path;
  std::vector<std::string> assigns;
  EvalConfig eval_config;
  std::vector<std::int64_t> stability_slacks;
  eval->add_option("--formula", formula_path, "Formula file")->required();
  eval->add_option("--assign", assigns, "VAR=PARTITION for each free variable");
  eval->add_option("--max-card", eval_config.max_card, "Bound on free variables for defined sets")->required();
  eval->add_option("--slack", eval_config.slack, "Extra levels for quantifiers");
  eval->add_option("--stability", stability_slacks, "Slack schedule for a stability check of the defined set");

  // encode / decode
  auto* encode_cmd = app.add_subcommand("encode", "Integer code of a partition");
  std::string encode_arg;
  encode_cmd->add_option("partition", encode_arg, "Partition, e.g. 2[3]+[1] or (3,3,1)")->required();
  auto* decode_cmd = app.add_subcommand("decode", "Partition with a given integer code");
  std::string decode_arg;
  decode_cmd->add_option("integer", decode_arg, "Non-negative decimal integer")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const JsonOptions jopt{timings};
  const SweepOptions sopt{threads, true};

  try {
    if (*enumerate) {
      const Universe u = Universe::enumerate(enum_max);
      ordered_json sizes = ordered_json::array();
      ordered_json levels = ordered_json::array();
      for (std::int64_t n = 0; n <= enum_max; ++n) {
        sizes.push_back(u.level(n).size());
        if (enum_list) {
          ordered_json level = ordered_json::array();
          for (const auto& p : u.level(n)) level.push_back(to_string(p));
          levels.push_back(std::move(level));
        }
      }
      ordered_json j{{"max_card", enum_max}, {"total", u.size()}, {"level_sizes", sizes}};
      if (enum_list) j["levels"] = std::move(levels);
      emit(envelope("enumerate", j), json_path);
      return kExitPass;
    }

    if (*list) {
      for (const auto& p : propositions()) {
        std::cout << p.name << "  (" << to_string(p.claimed_class) << ")  readings:";
        for (std::size_t i = 0; i < p.readings.size(); ++i)
          std::cout << ' ' << p.readings[i].name << (i == p.primary ? "*" : "");
        std::cout << "\n    " << p.claim << '\n';
      }
      std::cout << "profiles:";
      for (const auto& name : profile_names()) std::cout << ' ' << name;
      std::cout << '\n';
      return kExitPass;
    }

    if (*check_prop) {
      const Proposition& prop = find_proposition(prop_name);
      prop_bounds.aux_card = aux >= 0 ? aux : prop_bounds.max_card;
      SweepOptions opt = sopt;
      opt.check_stability = !no_stability;
      const PropositionReport r = check_proposition(prop, prop_bounds, opt);
      emit(envelope("check-prop", to_json(r, jopt)), json_path);
      std::cerr << summary_line(r) << '\n';
      for (const auto& note : r.notes) std::cerr << "  " << note << '\n';
      return exit_for(r.verdict);
    }

    if (*check_all_cmd) {
      const Profile& profile = find_profile(profile_name);
      const AggregateReport r = check_all(profile, sopt);
      emit(envelope("check-all", to_json(r, jopt)), json_path);
      for (const auto& p : r.propositions) std::cerr << summary_line(p) << '\n';
      for (const auto& s : r.structural) std::cerr << summary_line(s) << '\n';
      std::cerr << "overall: " << to_string(r.verdict) << '\n';
      return exit_for(r.verdict);
    }

    if (*reconstruct) {
      const CheckReport r = reconstruction_check(recon_max);
      emit(envelope("reconstruct", to_json(r, jopt)), json_path);
      std::cerr << summary_line(r) << '\n';
      return exit_for(r.verdict);
    }

    if (*automorphisms) {
      const CheckReport r = automorphism_check(max_rank);
      emit(envelope("automorphisms", to_json(r, jopt)), json_path);
      std::cerr << summary_line(r) << '\n';
      return exit_for(r.verdict);
    }

    if (*embed) {
      const FinitePoset poset = load_poset(poset_path);
      const EmbeddingResult r = embed_poset(poset, embed_max);
      emit(envelope("embed", to_json(r, poset)), json_path);
      // A found but unverified embedding would be a bug in the search.
      return r.images && !r.verified ? kExitMismatch : kExitPass;
    }

    if (*eval) {
      const FormulaFile file = load_formula_file(formula_path);
      const Formula& f = *file.formula;
      const Universe u = Universe::enumerate(
          std::max(eval_config.quantifier_bound(),
                   stability_slacks.empty()
                       ? std::int64_t{0}
                       : eval_config.max_card + *std::max_element(stability_slacks.begin(), stability_slacks.end())));
      ordered_json j;
      j["formula"] = to_string(f);
      j["prenex_class"] = to_string(prenex_classify(f));
      j["max_card"] = eval_config.max_card;
      j["slack"] = eval_config.slack;
      const auto free = free_variables(f);
      const std::vector<std::string> vars(free.begin(), free.end());
      j["free_variables"] = vars;

      if (!assigns.empty() || vars.empty()) {
        const Assignment a = parse_assignments(assigns);
        ordered_json aj;
        for (const auto& [k, v] : a) aj[k] = to_string(v);
        j["assignment"] = std::move(aj);
        j["value"] = evaluate(f, a, u, eval_config);
      } else {
        ordered_json rel = ordered_json::array();
        for (const auto& tuple : defined_relation(f, vars, u, eval_config)) {
          ordered_json t = ordered_json::array();
          for (const auto& p : tuple) t.push_back(to_string(p));
          rel.push_back(std::move(t));
        }
        j["defined_relation"] = std::move(rel);
      }
      if (!stability_slacks.empty()) {
        const StabilityReport s = stability_check(f, vars, u, eval_config, stability_slacks);
        ordered_json flips = ordered_json::array();
        for (const auto& fl : s.flips) {
          ordered_json t = ordered_json::array();
          for (const auto& p : fl.tuple) t.push_back(to_string(p));
          flips.push_back({{"tuple", t}, {"from_slack", fl.from_slack}, {"to_slack", fl.to_slack},
                           {"member_before", fl.member_before}});
        }
        j["stability"] = {{"slacks", s.slacks}, {"sizes", s.sizes}, {"flips", flips}, {"stable", s.stable()}};
      }
      emit(envelope("eval", j), json_path);
      return kExitPass;
    }

    if (*encode_cmd) {
      std::cout << encode(parse_partition(encode_arg)) << '\n';
      return kExitPass;
    }

    if (*decode_cmd) {
      if (decode_arg.empty() || decode_arg.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("expected a non-negative decimal integer, got '" + decode_arg + "'");
      std::cout << to_string(decode(BigInt(decode_arg))) << '\n';
      return kExitPass;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
