// critarrow: analyze simplicial cones, quotient singularities and cone families.
//
// Exit codes: 0 success, 2 parse or domain error, 3 resource limit.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "critarrow/error.hpp"
#include "critarrow/report.hpp"
#include "critarrow/scan.hpp"

using namespace critarrow;

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitResource = 3;

struct Common {
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t max_box = 100'000'000;
  std::uint64_t max_parallelepiped = 1'000'000;
  std::string kernel;
  std::optional<std::int64_t> d_prime;
  std::optional<std::int64_t> search_bound;
  bool no_sufficiency = false;

  AnalysisOptions analysis() const {
    AnalysisOptions o;
    o.limits.jobs = jobs;
    o.limits.max_box_points = max_box;
    o.limits.max_parallelepiped_points = max_parallelepiped;
    if (kernel == "scalar") o.limits.kernel = kernels::KernelKind::Scalar;
    if (kernel == "avx2") o.limits.kernel = kernels::KernelKind::Avx2;
    o.d_prime = d_prime;
    o.search_bound = search_bound;
    o.sufficiency = !no_sufficiency;
    return o;
  }
};

unsigned default_jobs() {
  if (const char* env = std::getenv("CRITARROW_JOBS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return 1;
}

void add_common(CLI::App* app, Common& c, bool analysis_flags) {
  app->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--jobs", c.jobs, "worker threads (default $CRITARROW_JOBS or 1)")->check(CLI::Range(1u, 1024u));
  app->add_option("--max-box-points", c.max_box, "cap on lattice points per box sweep");
  app->add_option("--max-parallelepiped", c.max_parallelepiped, "cap on |det| for Hilbert bases");
  app->add_option("--kernel", c.kernel, "force a sweep kernel")->check(CLI::IsMember({"scalar", "avx2"}));
  if (analysis_flags) {
    app->add_option("--d-prime", c.d_prime, "use this D' (must be at least the computed bound)");
    app->add_option("--search-bound", c.search_bound, "box bound for level-1 searches when w is not interior");
    app->add_flag("--no-sufficiency", c.no_sufficiency, "skip level-1 and polytope searches");
  }
}

void emit(const Common& c, const Json& j, const std::string& text) {
  if (c.format == "text")
    std::cout << text;
  else
    std::cout << dump(j) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical arrows and minimal cones for simplicial toric singularities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "critarrow 1.0.0");

  Common common;
  common.jobs = default_jobs();

  std::string cone_text, w_text;
  auto* analyze = app.add_subcommand("analyze", "dimension of the minimal cone containing w");
  analyze->add_option("--cone", cone_text, "generators as rows, e.g. \"1,0,0;0,1,0;1,1,2\"")->required();
  analyze->add_option("--w", w_text, "lattice point in the cone, e.g. \"1,1,1\"")->required();
  add_common(analyze, common, true);

  std::string group_text, qw_text;
  auto* quotient = app.add_subcommand("quotient", "quotient singularity A^d/G for diagonal abelian G");
  quotient->add_option("--group", group_text, "\"r:a1,...,ad\", several separated by ';'")->required();
  quotient->add_option("--w", qw_text, "point in original coordinates, e.g. \"7/14,7/14,7/14\"");
  add_common(quotient, common, true);

  std::size_t scan_dim = 3, scan_free = 0;
  std::string fixed_text, range_text, le_text, cones_file, out_path;
  auto* scan = app.add_subcommand("scan", "analyze every essential candidate over a family of cones");
  scan->add_option("--dim", scan_dim, "ambient dimension");
  scan->add_option("--fixed", fixed_text, "fixed generators, e.g. \"1,0,0\"");
  scan->add_option("--free", scan_free, "number of free generators");
  scan->add_option("--range", range_text, "entry range of free generators, e.g. 0..2");
  scan->add_option("--le", le_text, "coordinate pairs a,b (1-based) with x_a <= x_b; several separated by ';'");
  scan->add_option("--cones-file", cones_file, "lines \"g1;...;gd\" or \"g1;...;gd @ w\"");
  scan->add_option("--out", out_path, "write JSONL records here (default stdout)");
  add_common(scan, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  try {
    const AnalysisOptions options = common.analysis();
    if (analyze->parsed()) {
      const SimplicialCone cone(parse_rows(cone_text));
      const ExactVector w = parse_vector(w_text);
      const AnalysisReport report = dim_tau(cone, w, options);
      emit(common, analysis_json(report), analysis_text(report));
    } else if (quotient->parsed()) {
      const auto gens = parse_group_spec(group_text);
      std::optional<ExactVector> w;
      if (!qw_text.empty()) w = parse_vector(qw_text);
      const std::size_t dim = gens.front().weights.size();
      const QuotientReport report = analyze_quotient(gens, dim, w, options);
      emit(common, quotient_json(report), quotient_text(report));
    } else if (scan->parsed()) {
      ScanSummary summary;
      std::vector<ScanJob> jobs;
      if (!cones_file.empty()) {
        std::ifstream in(cones_file);
        if (!in) throw Error(Errc::ParseError, "cannot open " + cones_file);
        jobs = parse_cones_file(in);
      } else {
        ScanSpec spec;
        spec.dim = scan_dim;
        if (!fixed_text.empty()) spec.fixed = parse_rows(fixed_text);
        spec.free_count = scan_free;
        const auto dots = range_text.find("..");
        if (dots == std::string::npos) throw Error(Errc::ParseError, "--range must look like lo..hi");
        const ExactVector lohi = parse_vector(range_text.substr(0, dots) + "," + range_text.substr(dots + 2));
        spec.range_lo = detail::to_i64(lohi[0]);
        spec.range_hi = detail::to_i64(lohi[1]);
        if (!le_text.empty()) {
          for (const auto& pair : parse_rows(le_text)) {
            if (pair.dim() != 2) throw Error(Errc::ParseError, "--le expects pairs a,b");
            const auto a = detail::to_i64(pair[0]), b = detail::to_i64(pair[1]);
            if (a < 1 || b < 1) throw Error(Errc::ParseError, "--le coordinates are 1-based");
            spec.le_filters.emplace_back(a - 1, b - 1);
          }
        }
        jobs = expand_scan(spec, summary);
      }
      ScanRunOptions run{common.jobs, options};
      const auto records = run_scan(jobs, run, summary);
      std::unique_ptr<std::ofstream> file;
      if (!out_path.empty()) {
        file = std::make_unique<std::ofstream>(out_path);
        if (!*file) throw Error(Errc::ParseError, "cannot write " + out_path);
      }
      std::ostream& out = file ? *file : std::cout;
      for (const auto& r : records) out << dump(r) << '\n';
      std::cout << dump(summary.to_json()) << '\n';
    }
  } catch (const Error& e) {
    std::cerr << "critarrow: " << e.what() << '\n';
    return e.code() == Errc::ResourceLimit ? kExitResource : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "critarrow: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
