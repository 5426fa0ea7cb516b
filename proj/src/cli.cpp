#include "conductor/cli.hpp"

#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "conductor/errors.hpp"
#include "conductor/harness.hpp"
#include "conductor/json_io.hpp"

namespace conductor::cli {
namespace {

bool want_json(const std::string& format) { return format == "json"; }

void print_semigroup(std::ostream& out, const numerical_semigroup& s, const std::string& format) {
  if (want_json(format))
    out << to_json(s).dump() << '\n';
  else
    out << s.to_string() << '\n';
}

void print_ideal(std::ostream& out, const relative_ideal& e, const std::string& format) {
  if (want_json(format))
    out << to_json(e).dump() << '\n';
  else
    out << e.to_string() << '\n';
}

void print_flag(std::ostream& out, const char* key, bool value, const std::string& format) {
  if (want_json(format)) {
    ojson j;
    j[key] = value;
    out << j.dump() << '\n';
  } else {
    out << (value ? "" : "not ") << key << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ideal calculus over numerical semigroup rings", "conductor-lab"};
  app.require_subcommand(1);

  std::vector<std::int64_t> base_gens, over_gens, ideal_gens;
  std::string format = "text";
  std::string census_format = "csv";
  std::string out_path;
  std::int64_t genus = 0;
  oracle_config cfg;

  const auto format_opt = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  const auto gens_opt = [&base_gens](CLI::App* cmd) {
    cmd->add_option("--gens", base_gens, "Semigroup generators, comma separated")
        ->required()
        ->delimiter(',');
  };
  const auto ideal_opt = [&ideal_gens](CLI::App* cmd) {
    cmd->add_option("--ideal", ideal_gens, "Ideal generators, comma separated (use --ideal=..)")
        ->required()
        ->delimiter(',');
  };

  CLI::App* sgp = app.add_subcommand("sgp", "Numerical semigroup queries");
  sgp->require_subcommand(1);
  CLI::App* sgp_info = sgp->add_subcommand("info", "Generators, Frobenius number, genus, symmetry");
  gens_opt(sgp_info);
  format_opt(sgp_info);
  CLI::App* sgp_overs =
      sgp->add_subcommand("overs", "All oversemigroups, from the base up to the naturals");
  gens_opt(sgp_overs);
  format_opt(sgp_overs);
  CLI::App* sgp_enum = sgp->add_subcommand("enumerate", "All semigroups of a given genus");
  sgp_enum->add_option("--genus", genus, "Genus to enumerate")
      ->required()
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{16}));
  format_opt(sgp_enum);

  CLI::App* ideal = app.add_subcommand("ideal", "Relative ideal calculus");
  ideal->require_subcommand(1);
  CLI::App* ideal_dual = ideal->add_subcommand("dual", "Dual ideal (S - E)");
  CLI::App* ideal_hull = ideal->add_subcommand("hull", "Reflexive hull (double dual)");
  CLI::App* ideal_trace = ideal->add_subcommand("trace", "Trace ideal dual(E) + E");
  CLI::App* ideal_stable = ideal->add_subcommand("stable", "Test E = min(E) + (E - E)");
  CLI::App* ideal_ulrich = ideal->add_subcommand("ulrich", "Test the Ulrich property");
  for (CLI::App* cmd : {ideal_dual, ideal_hull, ideal_trace, ideal_stable, ideal_ulrich}) {
    gens_opt(cmd);
    ideal_opt(cmd);
    format_opt(cmd);
  }
  CLI::App* ideal_enum = ideal->add_subcommand("enumerate", "Normalized ideal classes");
  gens_opt(ideal_enum);
  format_opt(ideal_enum);

  CLI::App* ext = app.add_subcommand("ext", "Birational extension checks");
  ext->require_subcommand(1);
  CLI::App* ext_conductor = ext->add_subcommand("conductor", "Conductor ideal (S - T)");
  CLI::App* ext_verify = ext->add_subcommand("verify", "Four-way condition report");
  for (CLI::App* cmd : {ext_conductor, ext_verify}) {
    cmd->add_option("--base", base_gens, "Base semigroup generators")->required()->delimiter(',');
    cmd->add_option("--over", over_gens, "Oversemigroup generators")->required()->delimiter(',');
    format_opt(cmd);
  }
  CLI::App* ext_bijection =
      ext->add_subcommand("bijection", "Self-dual extensions vs stable trace classes");
  ext_bijection->add_option("--base", base_gens, "Base semigroup generators")
      ->required()
      ->delimiter(',');
  format_opt(ext_bijection);

  CLI::App* census = app.add_subcommand("census", "Exhaustive verification sweep");
  census->require_subcommand(1);
  CLI::App* census_run = census->add_subcommand("run", "Verify every base up to a genus bound");
  census_run->add_option("--genus", cfg.genus_bound, "Largest base genus")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{12}))
      ->capture_default_str();
  census_run->add_option("--threads", cfg.parallelism, "Worker threads (0 = automatic)")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  census_run->add_option("--format", census_format, "Output format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  census_run->add_option("--out", out_path, "Write the table to a file instead of stdout");

  CLI::App* oracle = app.add_subcommand("oracle", "Cross-check the set kernel");
  oracle->require_subcommand(1);
  CLI::App* oracle_run = oracle->add_subcommand("run", "Exhaustive plus randomized comparisons");
  oracle_run->add_option("--cases", cfg.random_cases, "Randomized comparison count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle_run->add_option("--window", cfg.window_extent, "Naive table half-width")
      ->check(CLI::Range(std::int64_t{16}, std::int64_t{4096}))
      ->capture_default_str();
  oracle_run->add_option("--tail-bound", cfg.frobenius_bound, "Largest accepted tail bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle_run->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  oracle_run->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("conductor-lab");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sgp_info->parsed()) {
      print_semigroup(out, numerical_semigroup::from_generators(base_gens), format);
    } else if (sgp_overs->parsed()) {
      const auto overs = oversemigroups(numerical_semigroup::from_generators(base_gens));
      if (want_json(format)) {
        ojson j = ojson::array();
        for (const auto& t : overs) j.push_back(to_json(t));
        out << j.dump() << '\n';
      } else {
        for (const auto& t : overs) out << t.to_string() << '\n';
      }
    } else if (sgp_enum->parsed()) {
      const auto all = enumerate_by_genus(genus);
      if (want_json(format)) {
        ojson j = ojson::array();
        for (const auto& s : all) j.push_back(to_json(s));
        out << j.dump() << '\n';
      } else {
        for (const auto& s : all) out << s.to_string() << '\n';
      }
    } else if (ideal->parsed()) {
      const auto s = numerical_semigroup::from_generators(base_gens);
      if (ideal_enum->parsed()) {
        const auto classes = enumerate_normalized_ideals(s);
        if (want_json(format)) {
          ojson j = ojson::array();
          for (const auto& e : classes) j.push_back(to_json(e));
          out << j.dump() << '\n';
        } else {
          for (const auto& e : classes) out << e.to_string() << '\n';
        }
      } else {
        const auto e = relative_ideal::from_generators(s, ideal_gens);
        if (ideal_dual->parsed()) print_ideal(out, dual(e), format);
        if (ideal_hull->parsed()) print_ideal(out, reflexive_hull(e), format);
        if (ideal_trace->parsed()) print_ideal(out, trace(e), format);
        if (ideal_stable->parsed()) print_flag(out, "stable", is_stable(e), format);
        if (ideal_ulrich->parsed()) print_flag(out, "ulrich", is_ulrich(e), format);
      }
    } else if (ext_conductor->parsed() || ext_verify->parsed()) {
      const birational_extension x(numerical_semigroup::from_generators(base_gens),
                                   numerical_semigroup::from_generators(over_gens));
      if (ext_conductor->parsed()) {
        print_ideal(out, conductor(x), format);
      } else {
        const theorem_report rep = verify_theorem(x);
        if (want_json(format)) {
          out << to_json(rep).dump() << '\n';
        } else {
          out << "cond1m=" << (rep.cond1m ? "true" : "false")
              << " cond2=" << (rep.cond2 ? "true" : "false")
              << " cond3=" << (rep.cond3 ? "true" : "false")
              << " cond4m=" << (rep.cond4m ? "true" : "false")
              << " all_agree=" << (rep.all_agree ? "true" : "false") << '\n';
          for (const auto& w : rep.witnesses) out << "witness: " << w.to_string() << '\n';
        }
        if (!rep.all_agree) return 1;
      }
    } else if (ext_bijection->parsed()) {
      const auto s = numerical_semigroup::from_generators(base_gens);
      const bool ok = verify_bijection(s);
      if (want_json(format)) {
        ojson j;
        j["holds"] = ok;
        out << j.dump() << '\n';
      } else {
        out << "bijection " << (ok ? "holds" : "FAILS") << " over " << s.label() << '\n';
      }
      if (!ok) return 1;
    } else if (census_run->parsed()) {
      const auto rows = run_census(cfg);
      const std::string table =
          census_format == "jsonl" ? census_to_jsonl(rows) : census_to_csv(rows);
      if (out_path.empty()) {
        out << table;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        file << table;
      }
    } else if (oracle_run->parsed()) {
      const oracle_report rep = run_oracle_suite(cfg);
      if (want_json(format)) {
        ojson j;
        j["cases"] = rep.cases;
        j["failures"] = rep.failures;
        j["first_failure"] = rep.first_failure;
        out << j.dump() << '\n';
      } else {
        out << "cases=" << rep.cases << " failures=" << rep.failures;
        if (!rep.first_failure.empty()) out << " first=" << rep.first_failure;
        out << '\n';
      }
      if (rep.failures != 0) return 1;
    }
  } catch (const verification_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const internal_check_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace conductor::cli
