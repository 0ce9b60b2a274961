#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "monomial/census.hpp"
#include "monomial/classify.hpp"
#include "monomial/duality.hpp"
#include "monomial/errors.hpp"
#include "monomial/level_io.hpp"
#include "monomial/oracle.hpp"
#include "monomial/report.hpp"

#ifndef MONOMIAL_DATA_DIR
#define MONOMIAL_DATA_DIR "data"
#endif

namespace monomial::cli {

namespace {

using nlohmann::json;

enum class Format { text, json };

struct Config {
  std::vector<std::string> inputs;
  Format format = Format::text;
  std::size_t search_cap = kDefaultSearchCap;
  double budget = kDefaultOverorderBudget;
  std::size_t threads = 1;
  std::string config_file;
  // per-command
  bool oracle = false;
  bool dump = false;
  bool families = false;
  std::string families_file;
  std::string lattice_type;
  std::size_t census_n = 0;
  Entry bound = 1;
  std::vector<std::string> filters;
};

// Lowest to highest precedence: built-in, MONOMIAL_BUDGET, --config, flags.
void apply_environment(Config& cfg, const CLI::App& app) {
  if (app.count("--budget")) return;
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || v <= 0) {
      throw std::invalid_argument(std::string(kBudgetEnv) + " must be a positive number");
    }
    cfg.budget = v;
  }
}

void apply_config_file(Config& cfg, const CLI::App& app) {
  if (cfg.config_file.empty()) return;
  std::ifstream in(cfg.config_file);
  if (!in) throw std::invalid_argument("cannot open config file " + cfg.config_file);
  const auto doc = json::parse(in);
  if (doc.contains("budget") && app.count("--budget") == 0) cfg.budget = doc["budget"].get<double>();
  if (doc.contains("search_cap") && app.count("--search-cap") == 0) {
    cfg.search_cap = doc["search_cap"].get<std::size_t>();
  }
  if (doc.contains("threads") && app.count("--threads") == 0) {
    cfg.threads = doc["threads"].get<std::size_t>();
  }
  if (doc.contains("format") && app.count("--format") == 0) {
    cfg.format = doc["format"].get<std::string>() == "json" ? Format::json : Format::text;
  }
}

void validate(const Config& cfg) {
  if (cfg.search_cap == 0) throw std::invalid_argument("--search-cap must be positive");
  if (cfg.budget <= 0) throw std::invalid_argument("--budget must be positive");
  if (cfg.threads == 0) throw std::invalid_argument("--threads must be positive");
}

LevelMatrix load(const Config& cfg) { return read_level_file(cfg.inputs.at(0)); }

int cmd_check(const Config& cfg, std::ostream& out) {
  const auto m = load(cfg);
  const auto check = is_order(m);
  if (cfg.format == Format::json) {
    out << json{{"is_order", check.ok}, {"violation", to_json(check)}}.dump() << "\n";
  } else if (check) {
    out << "order: yes\n";
  } else {
    out << "order: no\nviolation: " << describe(*check.violation) << "\n";
  }
  return check ? kOk : kNegative;
}

int cmd_classify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto m = load(cfg);
  const auto report = classify(m, cfg.search_cap);
  json j = to_json(report);
  std::string text = render_text(report);
  bool disagree = false;
  if (cfg.oracle && report.is_order()) {
    const auto verdict = bass_oracle(m, cfg.budget);
    const bool duality = is_gorenstein_via_duality(m);
    const bool bass_ok = verdict.is_bass == report.is_bass();
    const bool gor_ok = duality == report.is_gorenstein();
    disagree = !bass_ok || !gor_ok;
    j["oracle"] = to_json(verdict);
    j["oracle"]["gorenstein_via_duality"] = duality;
    j["oracle"]["agrees"] = !disagree;
    std::ostringstream os;
    os << "oracle:      bass " << (verdict.is_bass ? "yes" : "no") << " over "
       << verdict.overorders_examined << " overorders; duality-route gorenstein "
       << (duality ? "yes" : "no") << "; " << (disagree ? "DISAGREES" : "agrees") << "\n";
    if (verdict.non_gorenstein_overorder) {
      os << "  oracle witness: " << *verdict.non_gorenstein_overorder << "\n";
    }
    text += os.str();
  }
  if (cfg.format == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
  if (disagree) {
    err << "error: classifier and oracle disagree on " << m << "\n";
    return kInconsistent;
  }
  return report.is_order() ? kOk : kNegative;
}

int cmd_dual(const Config& cfg, std::ostream& out) {
  const auto m = load(cfg);
  const auto dual = dual_level(m);
  if (cfg.format == Format::json) {
    out << json{{"raw", to_json(dual.raw)}, {"normalized", to_json(dual.normalized)}}.dump()
        << "\n";
  } else {
    out << "raw:        " << dual.raw << "\nnormalized: " << dual.normalized << "\n";
  }
  return kOk;
}

int cmd_projective(const Config& cfg, std::ostream& out) {
  const auto m = load(cfg);
  const auto l = parse_integer_list(cfg.lattice_type, "--type");
  if (l.size() != m.size()) {
    throw DimensionError("--type has " + std::to_string(l.size()) + " entries, level has n=" +
                         std::to_string(m.size()));
  }
  // Move both into the positive-type frame the criterion is stated in.
  const auto positive = normalize_positive(m);
  const LatticeType moved{act_on_lattice(l, positive.applied)};
  const auto lattice = is_lattice(positive.level, moved);
  if (!lattice) {
    if (cfg.format == Format::json) {
      out << json{{"is_lattice", false}, {"is_projective", nullptr}}.dump() << "\n";
    } else {
      out << "lattice:    no\n";
    }
    return kNegative;
  }
  const auto check = is_projective(positive.level, moved);
  if (cfg.format == Format::json) {
    json j{{"is_lattice", true}, {"is_projective", check.ok}};
    j["normalized_level"] = to_json(positive.level);
    j["normalized_type"] = moved.l;
    if (check.witness) {
      j["witness"] = {{"column", check.witness->column + 1}, {"shift", check.witness->shift}};
    }
    out << j.dump() << "\n";
  } else {
    out << "lattice:    yes\nprojective: " << (check ? "yes" : "no") << "\n";
    if (check.witness) {
      out << "  column " << check.witness->column + 1 << " of " << positive.level
          << " shifted by " << check.witness->shift << "\n";
    }
  }
  return check ? kOk : kNegative;
}

int cmd_overorders(const Config& cfg, std::ostream& out) {
  const auto m = load(cfg);
  const auto set = overorders(m, cfg.budget);
  std::size_t gorenstein = 0;
  for (const auto& s : set.members) gorenstein += is_gorenstein(s).ok;
  if (cfg.format == Format::json) {
    json j{{"base", to_json(m)},
           {"bound", overorder_bound(m)},
           {"count", set.members.size()},
           {"gorenstein", gorenstein}};
    if (cfg.dump) {
      j["members"] = json::array();
      for (const auto& s : set.members) j["members"].push_back(to_json(s));
    }
    out << j.dump() << "\n";
  } else {
    out << "overorders: " << set.members.size() << " (" << gorenstein << " gorenstein)\n";
    if (cfg.dump) {
      for (const auto& s : set.members) {
        out << "  " << s << (is_gorenstein(s) ? "" : "  not gorenstein") << "\n";
      }
    }
  }
  return kOk;
}

void print_family_table(const CensusResult& result, const std::string& path, Format format,
                        std::size_t search_cap, std::ostream& out) {
  const auto families = read_families_file(path);
  std::vector<std::vector<std::string>> matched(result.classes.size());
  json table = json::array();
  for (const auto& f : families) {
    json row{{"family", f.name}, {"matches", json::array()}};
    for (std::size_t c = 0; c < result.classes.size(); ++c) {
      const auto match = match_family(result.classes[c].canonical, f, search_cap);
      if (!match) continue;
      std::ostringstream label;
      label << f.name;
      if (match->a) label << " a=" << *match->a;
      if (match->b) label << " b=" << *match->b;
      matched[c].push_back(label.str());
      json entry{{"canonical", to_json(result.classes[c].canonical)}};
      entry["a"] = match->a ? json(*match->a) : json(nullptr);
      entry["b"] = match->b ? json(*match->b) : json(nullptr);
      row["matches"].push_back(entry);
    }
    table.push_back(row);
  }
  if (format == Format::json) {
    json unmatched = json::array();
    for (std::size_t c = 0; c < result.classes.size(); ++c) {
      if (matched[c].empty()) unmatched.push_back(to_json(result.classes[c].canonical));
    }
    out << json{{"families", table}, {"unmatched", unmatched}}.dump() << "\n";
    return;
  }
  out << "\nfamily matches:\n";
  for (const auto& row : table) {
    out << "  " << row["family"].get<std::string>() << ": " << row["matches"].size()
        << " class(es)\n";
  }
  for (std::size_t c = 0; c < result.classes.size(); ++c) {
    out << "  " << result.classes[c].canonical << "  <- ";
    if (matched[c].empty()) {
      out << "NO FAMILY";
    } else {
      for (std::size_t k = 0; k < matched[c].size(); ++k) out << (k ? "; " : "") << matched[c][k];
    }
    out << "\n";
  }
}

int cmd_census(const Config& cfg, std::ostream& out) {
  CensusQuery q{cfg.census_n, cfg.bound, {}};
  for (const auto& f : cfg.filters) q.filters.insert(parse_census_filter(f));
  const CensusOptions opts{cfg.budget, cfg.search_cap, cfg.threads};
  const auto start = std::chrono::steady_clock::now();
  const auto result = census(q, opts);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  const auto& t = result.totals;
  if (cfg.format == Format::json) {
    // JSON lines: one summary object, then one object per class with --dump.
    json summary{{"n", q.n},
                 {"bound", q.bound},
                 {"raw_candidates", result.raw_candidates},
                 {"raw_orders", result.raw_orders},
                 {"classes", t.classes},
                 {"gorenstein", t.gorenstein},
                 {"eichler", t.eichler},
                 {"hereditary", t.hereditary},
                 {"bass", t.bass},
                 {"upper_triangular", t.upper_triangular}};
    json filters = json::array();
    for (auto f : q.filters) filters.push_back(std::string(to_string(f)));
    summary["filters"] = filters;
    out << summary.dump() << "\n";
    if (cfg.dump) {
      for (const auto& c : result.classes) out << to_json(c).dump() << "\n";
    }
  } else {
    out << "census n=" << q.n << " bound=" << q.bound;
    for (auto f : q.filters) out << " filter=" << to_string(f);
    out << "\n  raw candidates " << result.raw_candidates << ", orders " << result.raw_orders
        << ", " << ms << " ms\n";
    out << "  classes           " << t.classes << "\n"
        << "  gorenstein        " << t.gorenstein << "\n"
        << "  eichler           " << t.eichler << "\n"
        << "  hereditary        " << t.hereditary << "\n"
        << "  bass              " << t.bass << "\n"
        << "  upper_triangular  " << t.upper_triangular << "\n";
    if (cfg.dump) {
      out << "\nclasses:\n";
      for (const auto& c : result.classes) {
        const auto& r = c.report;
        out << "  " << c.canonical << "  gor=" << r.is_gorenstein()
            << " eichler=" << (r.eichler ? describe(r.eichler->shape) : "no")
            << " her=" << r.is_hereditary() << " bass=" << r.is_bass() << " raw=" << c.raw_count
            << "\n";
      }
    }
  }
  if (cfg.families) {
    print_family_table(result, cfg.families_file.empty() ? default_families_path() : cfg.families_file,
                       cfg.format, cfg.search_cap, out);
  }
  return kOk;
}

}  // namespace

std::string default_families_path() {
  return std::string(MONOMIAL_DATA_DIR) + "/gorenstein_n4_families.txt";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact classification of monomial orders given by integer level matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--search-cap", cfg.search_cap, "Largest n for n! permutation searches")
      ->capture_default_str();
  app.add_option("--budget", cfg.budget,
                 std::string("Largest overorder/census search space (default from ") + kBudgetEnv +
                     ", else 1e7)");
  app.add_option("--threads", cfg.threads, "Worker threads for census")->capture_default_str();
  app.add_option("--config", cfg.config_file,
                 "JSON file with any of budget, search_cap, threads, format");

  auto* check = app.add_subcommand("check", "Test the order condition (exit 1 if violated)");
  check->add_option("file", cfg.inputs, "Level file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Full classification report");
  classify_cmd->add_option("file", cfg.inputs, "Level file")->required();
  classify_cmd->add_flag("--oracle", cfg.oracle,
                         "Cross-check with the overorder Bass oracle and the duality route; "
                         "exit 3 on disagreement");

  auto* dual = app.add_subcommand("dual", "Level of the O-linear dual module");
  dual->add_option("file", cfg.inputs, "Level file")->required();

  auto* projective = app.add_subcommand("projective", "Test whether a lattice type is projective");
  projective->add_option("file", cfg.inputs, "Level file")->required();
  projective->add_option("--type", cfg.lattice_type, "Lattice type l, e.g. 0,1,1")->required();

  auto* over = app.add_subcommand("overorders", "Enumerate all orders containing the level");
  over->add_option("file", cfg.inputs, "Level file")->required();
  over->add_flag("--dump", cfg.dump, "List every overorder");

  auto* census_cmd = app.add_subcommand("census", "Enumerate orders up to conjugacy");
  census_cmd->add_option("n", cfg.census_n, "Matrix size")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--bound", cfg.bound, "Entry bound B (entries in [0,B])")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--filter", cfg.filters,
                         "gorenstein, eichler, hereditary, bass or upper_triangular (repeatable)")
      ->check(CLI::IsMember({"gorenstein", "eichler", "hereditary", "bass", "upper_triangular"}));
  census_cmd->add_flag("--dump", cfg.dump, "List every class");
  census_cmd->add_flag("--families", cfg.families, "Match classes against the n=4 family table");
  census_cmd->add_option("--families-file", cfg.families_file, "Alternative family table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    apply_environment(cfg, app);
    apply_config_file(cfg, app);
    if (app.count("--format")) cfg.format = format == "json" ? Format::json : Format::text;
    validate(cfg);
    if (check->parsed()) return cmd_check(cfg, out);
    if (classify_cmd->parsed()) return cmd_classify(cfg, out, err);
    if (dual->parsed()) return cmd_dual(cfg, out);
    if (projective->parsed()) return cmd_projective(cfg, out);
    if (over->parsed()) return cmd_overorders(cfg, out);
    if (census_cmd->parsed()) return cmd_census(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "config error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kInconsistent;
  }
  return kInputError;
}

}  // namespace monomial::cli
