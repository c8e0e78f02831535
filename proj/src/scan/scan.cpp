#include "critarrow/scan.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <set>
#include <thread>

#include "critarrow/error.hpp"

namespace critarrow {

namespace {

std::uint64_t upow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) r = (r > UINT64_MAX / std::max<std::uint64_t>(base, 1)) ? UINT64_MAX : r * base;
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view overall(const AnalysisReport& r) {
  bool unknown = false;
  for (const auto& [i, p] : r.polytope) {
    if (p.status == SearchStatus::Found) return "yes";
    unknown = unknown || p.status == SearchStatus::Unknown;
  }
  return unknown ? "unknown" : "no";
}

Json record_for(const std::vector<ExactVector>& gens, const ExactVector& w, const AnalysisReport& r) {
  Json j;
  j["cone"] = vectors_json(gens);
  j["w"] = vector_json(w);
  j["dim_tau"] = r.dim_tau;
  j["center_dim"] = r.center_dim;
  j["dim_mu"] = r.dim_mu;
  j["dim_Vw"] = r.dim_vw;
  j["d_prime"] = r.d_prime;
  j["discrepancy"] = to_string(r.discrepancy);
  j["crit_nonempty"] = r.any_crit();
  j["level_one_found"] = r.level_one_found ? Json(search_status_name(*r.level_one_found)) : Json(nullptr);
  j["polytope"] = r.polytope.empty() ? Json(nullptr) : Json(overall(r));
  return j;
}

Json error_record(const std::vector<ExactVector>& gens, const std::optional<ExactVector>& w, const Error& e) {
  Json j;
  j["cone"] = vectors_json(gens);
  j["w"] = w ? vector_json(*w) : Json(nullptr);
  j["error"] = e.what();
  j["error_code"] = errc_name(e.code());
  return j;
}

void run_one(const ScanJob& job, const AnalysisOptions& options, std::vector<Json>& out) {
  std::vector<ExactVector> ws;
  std::optional<SimplicialCone> cone;
  try {
    cone.emplace(job.generators);
    if (job.w)
      ws.push_back(*job.w);
    else
      ws = essential_candidates(*cone, options.limits);
  } catch (const Error& e) {
    out.push_back(error_record(job.generators, job.w, e));
    return;
  }
  for (const auto& w : ws) {
    try {
      out.push_back(record_for(job.generators, w, dim_tau(*cone, w, options)));
    } catch (const Error& e) {
      out.push_back(error_record(job.generators, w, e));
    }
  }
}

}  // namespace

Json ScanSummary::to_json() const {
  Json j;
  j["total_tuples"] = total_tuples;
  j["filtered"] = filtered;
  j["skipped_degenerate"] = skipped_degenerate;
  j["skipped_duplicate"] = skipped_duplicate;
  j["cones"] = cones;
  j["records"] = records;
  j["errors"] = errors;
  j["dim_tau_counts"] = Json::object();
  for (const auto& [k, v] : dim_tau_counts) j["dim_tau_counts"][std::to_string(k)] = v;
  j["max_dim_tau"] = max_dim_tau;
  return j;
}

std::vector<ScanJob> expand_scan(const ScanSpec& spec, ScanSummary& summary) {
  const std::size_t d = spec.dim;
  if (d == 0 || spec.fixed.size() + spec.free_count != d)
    throw Error(Errc::BadParameters, "fixed plus free generators must equal the dimension");
  if (spec.range_lo > spec.range_hi) throw Error(Errc::BadParameters, "empty range");
  for (const auto& f : spec.fixed)
    if (f.dim() != d) throw Error(Errc::DimensionMismatch, "fixed generator has wrong dimension");
  for (const auto& [a, b] : spec.le_filters)
    if (a >= d || b >= d) throw Error(Errc::BadParameters, "filter coordinate out of range");

  const std::uint64_t width = static_cast<std::uint64_t>(spec.range_hi - spec.range_lo + 1);
  if (upow(width, d * spec.free_count) > 100'000'000)
    throw Error(Errc::ResourceLimit, "scan template expands to too many tuples");

  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> x(d, spec.range_lo);
  while (true) {
    bool ok = true;
    for (const auto& [a, b] : spec.le_filters) ok = ok && x[a] <= x[b];
    if (ok) rows.push_back(x);
    std::size_t k = d;
    while (k > 0 && x[k - 1] == spec.range_hi) x[--k] = spec.range_lo;
    if (k == 0) break;
    ++x[k - 1];
  }
  summary.total_tuples = upow(width, d * spec.free_count);
  const std::uint64_t candidates = upow(rows.size(), spec.free_count);
  summary.filtered = summary.total_tuples - candidates;

  std::set<std::vector<ExactVector>> keys;
  std::vector<std::size_t> pick(spec.free_count, 0);
  for (std::uint64_t n = 0; n < candidates; ++n) {
    std::vector<ExactVector> gens = spec.fixed;
    for (std::size_t f = 0; f < spec.free_count; ++f) gens.push_back(ExactVector::from_ints(rows[pick[f]]));
    bool degenerate = std::any_of(gens.begin(), gens.end(), [](const ExactVector& g) { return g.is_zero(); });
    if (!degenerate) degenerate = determinant(ExactMatrix::from_columns(gens)) == 0;
    if (degenerate) {
      ++summary.skipped_degenerate;
    } else {
      for (auto& g : gens) g = primitive(g);
      std::sort(gens.begin(), gens.end());
      if (!keys.insert(std::move(gens)).second) ++summary.skipped_duplicate;
    }
    for (std::size_t f = spec.free_count; f-- > 0;) {
      if (++pick[f] < rows.size()) break;
      pick[f] = 0;
    }
  }

  std::vector<ScanJob> jobs;
  for (const auto& k : keys) jobs.push_back({k, std::nullopt});
  return jobs;
}

std::vector<ScanJob> parse_cones_file(std::istream& in) {
  std::vector<ScanJob> jobs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    try {
      ScanJob job;
      const auto at = s.find('@');
      job.generators = parse_rows(trim(s.substr(0, at)));
      if (at != std::string_view::npos) job.w = parse_vector(trim(s.substr(at + 1)));
      jobs.push_back(std::move(job));
    } catch (const Error& e) {
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return jobs;
}

std::vector<Json> run_scan(const std::vector<ScanJob>& input, const ScanRunOptions& options, ScanSummary& summary) {
  std::vector<std::size_t> order(input.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (input[a].generators != input[b].generators) return input[a].generators < input[b].generators;
    if (input[a].w.has_value() != input[b].w.has_value()) return !input[a].w.has_value();
    return input[a].w && *input[a].w < *input[b].w;
  });

  AnalysisOptions analysis = options.analysis;
  analysis.limits.jobs = 1;
  const std::size_t n = order.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, n));
  std::vector<std::vector<Json>> parts(workers);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < workers; ++t) {
      threads.emplace_back([&, t] {
        for (std::size_t k = n * t / workers; k < n * (t + 1) / workers; ++k) run_one(input[order[k]], analysis, parts[t]);
      });
    }
  }

  std::vector<Json> records;
  for (auto& p : parts) records.insert(records.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  summary.cones = n;
  for (const auto& r : records) {
    ++summary.records;
    if (r.contains("error")) {
      ++summary.errors;
      continue;
    }
    const std::size_t dt = r["dim_tau"].get<std::size_t>();
    ++summary.dim_tau_counts[dt];
    summary.max_dim_tau = std::max(summary.max_dim_tau, dt);
  }
  return records;
}

}  // namespace critarrow
