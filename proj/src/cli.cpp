#include "polyapprox/cli.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "polyapprox/analysis.hpp"
#include "polyapprox/error.hpp"
#include "polyapprox/io.hpp"
#include "polyapprox/measures.hpp"
#include "polyapprox/optimal.hpp"
#include "polyapprox/schemes.hpp"

namespace polyapprox {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string in;
  std::string corpus;
  std::string scheme = "elim";
  std::optional<long long> m;
  double target_cr = 15.0;
  std::string cost = "e2";
  std::string nise = "printed";
  std::string out;
  std::string threads = "auto";
  std::string format = "auto";
};

SchemeId scheme_from(const std::string& name) {
  const auto id = parse_scheme(name);
  if (!id) throw UsageError("unknown scheme '" + name + "' (expected split, elim or elim-stab)");
  return *id;
}

CostKind cost_from(const std::string& name) {
  if (name == "e2") return CostKind::SumSquared;
  if (name == "emax") return CostKind::MaxError;
  throw UsageError("unknown cost '" + name + "' (expected e2 or emax)");
}

NiseVariant nise_from(const std::string& name) {
  if (name == "printed") return NiseVariant::Printed;
  if (name == "unit") return NiseVariant::Unit;
  throw UsageError("unknown NISE variant '" + name + "' (expected printed or unit)");
}

CurveFormat format_from(const std::string& name) {
  if (name == "auto") return CurveFormat::Auto;
  if (name == "pts") return CurveFormat::PointList;
  if (name == "chn") return CurveFormat::ChainCode;
  throw UsageError("unknown format '" + name + "' (expected auto, pts or chn)");
}

void apply_threads(const std::string& threads) {
  if (threads == "auto") return;
  int count = 0;
  try {
    std::size_t used = 0;
    count = std::stoi(threads, &used);
    if (used != threads.size()) count = 0;
  } catch (const std::exception&) {
    count = 0;
  }
  if (count < 1) throw UsageError("threads must be a positive integer or 'auto'");
  omp_set_num_threads(count);
}

void require_in(const CliConfig& cfg) {
  if (cfg.in.empty()) throw UsageError("--in is required");
}

// Vertex count from --m or --target-cr; giving both is a usage error.
std::size_t resolve_m(const CliConfig& cfg, bool target_cr_given, std::size_t n) {
  if (cfg.m && target_cr_given) throw UsageError("give either --m or --target-cr, not both");
  if (cfg.m) {
    if (*cfg.m < 3) throw UsageError("m must be ≥ 3");
    return static_cast<std::size_t>(*cfg.m);
  }
  if (!(cfg.target_cr >= 1.0)) throw UsageError("target-cr must be ≥ 1");
  return auto_target_m(n, cfg.target_cr);
}

void validate_m_early(const CliConfig& cfg) {
  if (cfg.m && *cfg.m < 3) throw UsageError("m must be ≥ 3");
}

void emit(const CliConfig& cfg, std::ostream& out, const std::string& content) {
  if (cfg.out.empty()) {
    out << content;
  } else {
    write_file_atomic(cfg.out, content);
  }
}

int cmd_approx(const CliConfig& cfg, bool target_cr_given, std::ostream& out) {
  require_in(cfg);
  validate_m_early(cfg);
  const SchemeId scheme = scheme_from(cfg.scheme);
  const DigitalCurve curve = load_curve(cfg.in, format_from(cfg.format));
  const std::size_t m = resolve_m(cfg, target_cr_given, curve.size());
  const PolygonApprox poly = run_scheme(scheme, curve, m);
  const PolygonErrors err = polygon_errors(curve, poly);
  const std::vector<Point> pts = poly.points(curve);

  std::ostringstream summary;
  summary << "# n=" << curve.size() << " m=" << poly.size()
          << " cr=" << format_real(compression_ratio(curve.size(), poly.size()))
          << " e2=" << format_real(err.e2) << " emax=" << format_real(err.emax) << '\n';
  if (cfg.out.empty()) {
    out << format_point_list(pts) << summary.str();
  } else {
    write_file_atomic(cfg.out, format_point_list(pts));
    out << summary.str();
  }
  return kExitOk;
}

int cmd_profile(const CliConfig& cfg, bool target_cr_given, std::ostream& out) {
  require_in(cfg);
  validate_m_early(cfg);
  const CostKind kind = cost_from(cfg.cost);
  const DigitalCurve curve = load_curve(cfg.in, format_from(cfg.format));
  const std::size_t m_sub = resolve_m(cfg, target_cr_given, curve.size());
  if (m_sub > curve.size()) {
    throw Error(ErrorCode::InvalidCounts, "m=" + std::to_string(m_sub) + " exceeds n=" +
                                              std::to_string(curve.size()));
  }
  const std::size_t start = select_start_vertex(curve, m_sub, kind);
  const ErrorProfile profile =
      optimal_profile(curve, start, default_profile_m_max(curve.size(), m_sub), kind);
  std::ostringstream csv;
  csv << "m,error\n";
  for (std::size_t m = profile.m_min(); m <= profile.m_max(); ++m) {
    csv << m << ',' << format_real(profile.at(m)) << '\n';
  }
  emit(cfg, out, csv.str());
  return kExitOk;
}

int cmd_merit(const CliConfig& cfg, bool target_cr_given, std::ostream& out) {
  require_in(cfg);
  validate_m_early(cfg);
  const SchemeId scheme = scheme_from(cfg.scheme);
  const NiseVariant nise = nise_from(cfg.nise);
  const DigitalCurve curve = load_curve(cfg.in, format_from(cfg.format));
  const std::size_t m = resolve_m(cfg, target_cr_given, curve.size());
  const PolygonApprox poly = run_scheme(scheme, curve, m);
  BaselineEngine engine(curve);
  const MeasureRecord record = evaluate(curve, poly, engine, nise);
  const std::string id = fs::path(cfg.in).filename().string();
  emit(cfg, out,
       std::string(measure_csv_header()) + '\n' +
           measure_csv_row(id, scheme_name(scheme), record) + '\n');
  return kExitOk;
}

int cmd_study(const CliConfig& cfg, bool scheme_given, std::ostream& out, std::ostream& err) {
  if (cfg.corpus.empty()) throw UsageError("--corpus is required");
  if (cfg.m) throw UsageError("study derives m from --target-cr; --m is not accepted");
  if (!(cfg.target_cr >= 1.0)) throw UsageError("target-cr must be ≥ 1");
  StudyOptions options;
  options.target_cr = cfg.target_cr;
  options.nise = nise_from(cfg.nise);
  std::vector<SchemeId> schemes;
  if (scheme_given) {
    schemes.push_back(scheme_from(cfg.scheme));
  } else {
    schemes = {SchemeId::SplitToM, SchemeId::EliminateToM, SchemeId::EliminateStabilizedToM};
  }
  const fs::path out_dir = cfg.out.empty() ? fs::path("study-out") : fs::path(cfg.out);

  std::vector<CorpusEntry> corpus;
  std::vector<SkippedCurve> load_failures;
  for (const fs::path& path : list_corpus(cfg.corpus)) {
    const std::string id = path.filename().string();
    try {
      corpus.push_back({id, load_curve(path)});
    } catch (const Error& e) {
      err << "skipping " << path.string() << ": " << e.what() << '\n';
      load_failures.push_back({id, e.what()});
    }
  }

  std::vector<StudyReport> reports = run_study(corpus, schemes, options);
  for (StudyReport& report : reports) {
    report.skipped.insert(report.skipped.begin(), load_failures.begin(), load_failures.end());
  }
  if (!reports.empty()) {
    for (const SkippedCurve& s : reports.front().skipped) {
      if (std::find_if(load_failures.begin(), load_failures.end(),
                       [&](const SkippedCurve& f) { return f.id == s.id; }) == load_failures.end()) {
        err << "skipping " << s.id << ": " << s.reason << '\n';
      }
    }
  }

  fs::create_directories(out_dir);
  for (const StudyFile& file : render_study(reports)) {
    write_file_atomic(out_dir / file.name, file.content);
  }
  for (const StudyReport& report : reports) {
    for (const PairingResult& p : report.pairings) {
      out << scheme_name(report.scheme) << ' ' << pairing_name(p.pairing) << " r="
          << (p.r ? format_real(*p.r) : "NA (" + p.skip_reason + ")")
          << " curves=" << p.rosin.values.size() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polygonal approximation of closed digital curves and assessment measures",
               "polyapprox"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  CliConfig cfg;
  const auto add_common = [&](CLI::App* sub, bool with_m) {
    sub->add_option("--in", cfg.in, "Input curve file (.pts or .chn)");
    sub->add_option("--format", cfg.format, "Input format: auto|pts|chn")
        ->check(CLI::IsMember({"auto", "pts", "chn"}));
    if (with_m) sub->add_option("--m", cfg.m, "Vertex count of the approximation");
    sub->add_option("--target-cr", cfg.target_cr, "Target compression ratio when --m is absent");
    sub->add_option("--out", cfg.out, "Output path (stdout when absent)");
    sub->add_option("--threads", cfg.threads, "Worker threads: integer or auto");
  };

  CLI::App* approx = app.add_subcommand("approx", "Approximate one curve with a sub-optimal scheme");
  add_common(approx, true);
  approx->add_option("--scheme", cfg.scheme, "Scheme: split|elim|elim-stab");

  CLI::App* profile = app.add_subcommand("profile", "Emit the optimal error profile as CSV");
  add_common(profile, true);
  profile->add_option("--cost", cfg.cost, "Error kind: e2|emax");

  CLI::App* merit = app.add_subcommand("merit", "Evaluate one approximation against its baseline");
  add_common(merit, true);
  merit->add_option("--scheme", cfg.scheme, "Scheme: split|elim|elim-stab");
  merit->add_option("--nise-variant", cfg.nise, "NISE constant: printed|unit");

  CLI::App* study = app.add_subcommand("study", "Correlate measures over a corpus directory");
  study->add_option("--corpus", cfg.corpus, "Directory of .pts/.chn curves");
  study->add_option("--scheme", cfg.scheme, "Scheme: split|elim|elim-stab (all three when absent)");
  study->add_option("--m", cfg.m, "Not accepted: m follows from --target-cr");
  study->add_option("--target-cr", cfg.target_cr, "Target compression ratio");
  study->add_option("--nise-variant", cfg.nise, "NISE constant: printed|unit");
  study->add_option("--out", cfg.out, "Output directory")->default_str("study-out");
  study->add_option("--threads", cfg.threads, "Worker threads: integer or auto");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "polyapprox " << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    apply_threads(cfg.threads);
    if (approx->parsed()) return cmd_approx(cfg, approx->get_option("--target-cr")->count() > 0, out);
    if (profile->parsed()) {
      return cmd_profile(cfg, profile->get_option("--target-cr")->count() > 0, out);
    }
    if (merit->parsed()) return cmd_merit(cfg, merit->get_option("--target-cr")->count() > 0, out);
    return cmd_study(cfg, study->get_option("--scheme")->count() > 0, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    const std::string where = cfg.in.empty() ? cfg.corpus : cfg.in;
    err << "data error: " << where << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace polyapprox
