#include "spectra/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spectra/counting.hpp"
#include "spectra/errors.hpp"
#include "spectra/family_io.hpp"
#include "spectra/matchings.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

namespace {

using nlohmann::json;

int resolve_cap(bool cap_given, int cap_flag) {
  if (cap_given) return cap_flag;
  if (const char* env = std::getenv("SPECTRA_ENUM_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw std::invalid_argument("SPECTRA_ENUM_CAP must be a positive integer, got \"" +
                                  std::string(env) + "\"");
    return static_cast<int>(v);
  }
  return kDefaultEnumCap;
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

int do_enumerate(int J, bool symmetric, const std::string& format, int cap, std::ostream& out,
                 std::ostream& err) {
  const auto patterns = symmetric ? enumerate_symmetric(J, cap) : enumerate_noncrossing(J, cap);
  if (format == "json") {
    json arr = json::array();
    for (const auto& p : patterns) {
      json pat = json::array();
      for (auto [a, b] : p.pairs()) pat.push_back({a, b});
      arr.push_back(std::move(pat));
    }
    out << arr.dump() << "\n";
  } else {
    for (const auto& p : patterns) out << format_symbol(p) << "\n";
  }
  err << "count: " << patterns.size() << "\n";
  return 0;
}

int do_count(int J_max, const std::string& which, const std::string& route, std::ostream& out,
             std::ostream& err) {
  const bool want_T = which == "T" || which == "both";
  const bool want_P = which == "P" || which == "both";

  int mismatch_J = -1;
  auto column = [&](bool is_T) {
    std::vector<BigCount> rec, closed, series;
    if (route == "recurrence" || route == "all")
      rec = is_T ? table_T_recurrence(J_max) : table_P_recurrence(J_max);
    if (route == "closed" || route == "all")
      for (int J = 0; J <= J_max; ++J)
        closed.push_back(is_T ? count_T_closed(J) : count_P_closed(J));
    if (route == "series" || route == "all")
      series = (is_T ? series_f(J_max + 1) : series_g(J_max + 1)).coefficients;
    if (route == "all") {
      for (int J = 0; J <= J_max && mismatch_J < 0; ++J)
        if (rec[J] != closed[J] || rec[J] != series[J]) mismatch_J = J;
      return closed;
    }
    if (route == "recurrence") return rec;
    if (route == "closed") return closed;
    return series;
  };

  const std::vector<BigCount> col_T = want_T ? column(true) : std::vector<BigCount>{};
  if (mismatch_J >= 0) {
    err << "error: cross-check mismatch for T at J = " << mismatch_J
        << " (recurrence, closed, and series routes disagree)\n";
    return 3;
  }
  const std::vector<BigCount> col_P = want_P ? column(false) : std::vector<BigCount>{};
  if (mismatch_J >= 0) {
    err << "error: cross-check mismatch for P at J = " << mismatch_J
        << " (recurrence, closed, and series routes disagree)\n";
    return 3;
  }

  out << "J";
  if (want_T) out << "\tT";
  if (want_P) out << "\tP";
  out << "\n";
  for (int J = 0; J <= J_max; ++J) {
    out << J;
    if (want_T) out << "\t" << col_T[J];
    if (want_P) out << "\t" << col_P[J];
    out << "\n";
  }
  return 0;
}

int do_verify(int J_enum, int series_order, std::ostream& out) {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    out << (ok ? "PASS" : "FAIL") << " " << name;
    if (!ok && !detail.empty()) out << ": " << detail;
    out << "\n";
    all_ok = all_ok && ok;
  };

  {
    bool ok = true;
    std::string detail;
    for (int J = 1; J <= J_enum && ok; ++J) {
      const auto all = enumerate_noncrossing(J, std::max(J, kDefaultEnumCap));
      if (BigCount(all.size()) != count_T_closed(J)) {
        ok = false;
        detail = "J = " + std::to_string(J);
      }
    }
    report("enumeration count matches closed-form T (J <= " + std::to_string(J_enum) + ")", ok,
           detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int J = 1; J <= J_enum && ok; ++J) {
      const int cap = std::max(J, kDefaultEnumCap);
      const auto sym = enumerate_symmetric(J, cap);
      if (BigCount(sym.size()) != count_P_closed(J)) {
        ok = false;
        detail = "count off at J = " + std::to_string(J);
        break;
      }
      std::vector<MergerPattern> filtered;
      for (const auto& p : enumerate_noncrossing(J, cap))
        if (is_centrally_symmetric(p)) filtered.push_back(p);
      if (sym != filtered) {
        ok = false;
        detail = "direct enumeration disagrees with the filter at J = " + std::to_string(J);
      }
    }
    report("symmetric enumeration matches closed-form P and the reflection filter (J <= " +
               std::to_string(J_enum) + ")",
           ok, detail);
  }
  {
    const int J_prop = std::min(J_enum, 8);
    bool ok = true;
    std::string detail;
    for (int J = 1; J <= J_prop && ok; ++J) {
      for (const auto& p : enumerate_noncrossing(J, std::max(J, kDefaultEnumCap))) {
        const MergerPattern r = reflect(p);
        if (!is_noncrossing(r) || reflect(r) != p) {
          ok = false;
          detail = "pattern " + format_symbol(p);
          break;
        }
      }
    }
    report("reflect is a non-crossing-preserving involution (J <= " + std::to_string(J_prop) +
               ")",
           ok, detail);
  }
  {
    const int J_prop = std::min(J_enum, 8);
    bool ok = true;
    std::string detail;
    for (int J = 1; J <= J_prop && ok; ++J) {
      for (const auto& p : enumerate_noncrossing(J, std::max(J, kDefaultEnumCap))) {
        if (parse_symbol(format_symbol(p)) != p) {
          ok = false;
          detail = "pattern " + format_symbol(p);
          break;
        }
      }
    }
    report("format/parse round trip (J <= " + std::to_string(J_prop) + ")", ok, detail);
  }
  {
    bool ok_f = true, ok_g = true;
    std::string detail_f, detail_g;
    const Series f = series_f(series_order);
    const Series g = series_g(series_order);
    for (int k = 0; k < series_order; ++k) {
      if (ok_f && f.coefficients[k] != count_T_closed(k)) {
        ok_f = false;
        detail_f = "coefficient " + std::to_string(k);
      }
      if (ok_g && g.coefficients[k] != count_P_closed(k)) {
        ok_g = false;
        detail_g = "coefficient " + std::to_string(k);
      }
    }
    report("series f coefficients match closed-form T (order " + std::to_string(series_order) +
               ")",
           ok_f, detail_f);
    report("series g coefficients match closed-form P (order " + std::to_string(series_order) +
               ")",
           ok_g, detail_g);
  }
  {
    const int J_top = std::max(J_enum, series_order - 1);
    bool ok = true;
    std::string detail;
    for (int J = 0; J <= J_top; ++J)
      if (count_P_recurrence(J) > count_T_recurrence(J)) {
        ok = false;
        detail = "J = " + std::to_string(J);
        break;
      }
    report("P <= T (J <= " + std::to_string(J_top) + ")", ok, detail);
  }

  return all_ok ? 0 : 3;
}

int do_classify(const std::string& config_path, double lambda_max, int steps,
                const Tolerances& tol, std::ostream& out) {
  const MatrixFamily fam = read_family_file(config_path);
  const ObservedPattern res = classify(fam, lambda_max, steps, tol);
  out << format_symbol(res.pattern) << "\n" << events_to_json(res.events);
  return 0;
}

int do_witness(const std::string& symbol, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  MatrixFamily fam;
  MergerPattern p = parse_symbol(symbol);
  try {
    fam = build_witness(p);
  } catch (const CrossingPattern& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotSymmetric& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const std::string text = family_to_json(fam);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    file << text;
    file.flush();
    if (!file) {
      err << "error: cannot write " << out_path << "\n";
      return 7;
    }
  }
  err << "suggested lambda_max: " << format_real(suggested_lambda_max(p)) << "\n";
  return 0;
}

int do_paths(const std::string& config_path, double lambda_max, int steps, const Tolerances& tol,
             const std::string& out_path, std::ostream& err) {
  const MatrixFamily fam = read_family_file(config_path);
  const auto paths = track_paths(fam, lambda_max, steps, tol);
  std::ofstream file(out_path);
  write_paths_csv(file, paths);
  file.flush();
  if (!file) {
    err << "error: cannot write " << out_path << "\n";
    return 7;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"merger-pattern toolkit: enumeration, counting, and spectral-flow analysis"};
  app.name("spectra");
  app.require_subcommand(1);

  int J = 0;
  bool symmetric = false;
  std::string format = "symbols";
  int cap_flag = kDefaultEnumCap;
  auto* sc_enum = app.add_subcommand("enumerate", "list merger patterns");
  sc_enum->add_option("-J,--J", J, "number of pairs (2J levels)")
      ->required()
      ->check(CLI::PositiveNumber);
  sc_enum->add_flag("--symmetric", symmetric, "centrally symmetric patterns only");
  sc_enum->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"symbols", "json"}));
  auto* cap_opt =
      sc_enum->add_option("--cap", cap_flag, "enumeration cap on J")->check(CLI::PositiveNumber);

  int J_max = 0;
  std::string which = "both";
  std::string route = "all";
  auto* sc_count = app.add_subcommand("count", "print T/P counting tables");
  sc_count->add_option("--J-max", J_max, "largest J in the table")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sc_count->add_option("--which", which, "which counts to print")
      ->check(CLI::IsMember({"T", "P", "both"}));
  sc_count->add_option("--route", route, "computation route; all cross-checks")
      ->check(CLI::IsMember({"recurrence", "closed", "series", "all"}));

  int verify_enum = 10;
  int verify_series = 100;
  auto* sc_verify = app.add_subcommand("verify", "run the invariant suite");
  sc_verify->add_option("--enum", verify_enum, "largest J for enumeration checks")
      ->check(CLI::NonNegativeNumber);
  sc_verify->add_option("--series", verify_series, "series order for coefficient checks")
      ->check(CLI::PositiveNumber);

  std::string config_path;
  double lambda_max = 10.0;
  int steps = 1000;
  Tolerances tol;
  auto add_sweep_options = [&](CLI::App* sc) {
    sc->add_option("config", config_path, "family config JSON file")->required();
    sc->add_option("--lambda-max", lambda_max, "sweep endpoint")->check(CLI::PositiveNumber);
    sc->add_option("--steps", steps, "uniform grid steps")->check(CLI::PositiveNumber);
    sc->add_option("--tol-im", tol.im_base, "reality tolerance base");
    sc->add_option("--tol-gap", tol.gap_base, "gap tolerance base");
    sc->add_option("--tol-lambda", tol.lambda, "merger localization tolerance");
  };
  auto* sc_classify = app.add_subcommand("classify", "detect the realized merger pattern");
  add_sweep_options(sc_classify);

  std::string symbol;
  std::string witness_out;
  auto* sc_witness = app.add_subcommand("witness", "build a family realizing a pattern");
  sc_witness->add_option("symbol", symbol, "pattern symbol, e.g. \"{[1,2]}\"")->required();
  sc_witness->add_option("-o,--out", witness_out, "write config here instead of stdout");

  std::string paths_out;
  auto* sc_paths = app.add_subcommand("paths", "export tracked eigenvalue paths as CSV");
  add_sweep_options(sc_paths);
  sc_paths->add_option("--out", paths_out, "output CSV file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(sc_enum))
      return do_enumerate(J, symmetric, format, resolve_cap(cap_opt->count() > 0, cap_flag), out,
                          err);
    if (app.got_subcommand(sc_count)) return do_count(J_max, which, route, out, err);
    if (app.got_subcommand(sc_verify)) return do_verify(verify_enum, verify_series, out);
    if (app.got_subcommand(sc_classify))
      return do_classify(config_path, lambda_max, steps, tol, out);
    if (app.got_subcommand(sc_witness)) return do_witness(symbol, witness_out, out, err);
    if (app.got_subcommand(sc_paths))
      return do_paths(config_path, lambda_max, steps, tol, paths_out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IncompleteSweep& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const DegenerateMerger& e) {
    err << "error: " << e.what() << "\n";
    return 5;
  } catch (const CrossingPattern& e) {
    err << "error: " << e.what() << "\n";
    return 6;
  } catch (const std::exception& e) {
    // ParseError, InvalidMatching, DegenerateStart, NumericalFailure,
    // NotSymmetric, and argument validation all land here.
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace spectra
