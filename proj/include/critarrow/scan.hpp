#pragma once

// Batch analysis over families of cones. Either a template with some fixed
// generators and some free generators whose entries range over an interval,
// or an explicit list of (cone, optional w). For every cone without a given
// w, each essential candidate (non-generator Hilbert basis element) is analyzed.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critarrow/crit.hpp"
#include "critarrow/report.hpp"

namespace critarrow {

struct ScanSpec {
  std::size_t dim = 3;
  std::vector<ExactVector> fixed;  // generators present in every cone
  std::size_t free_count = 0;      // free generators per cone
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  // (a, b): coordinate a <= coordinate b in every free generator (0-based)
  std::vector<std::pair<std::size_t, std::size_t>> le_filters;
};

struct ScanJob {
  std::vector<ExactVector> generators;
  std::optional<ExactVector> w;
};

struct ScanSummary {
  std::uint64_t total_tuples = 0;
  std::uint64_t filtered = 0;
  std::uint64_t skipped_degenerate = 0;
  std::uint64_t skipped_duplicate = 0;
  std::uint64_t cones = 0;
  std::uint64_t records = 0;
  std::uint64_t errors = 0;
  std::map<std::size_t, std::uint64_t> dim_tau_counts;
  std::size_t max_dim_tau = 0;

  Json to_json() const;
};

/// Expands a template into unique cones (sorted primitive generator sets,
/// in sorted order) and fills the tuple counters of the summary.
std::vector<ScanJob> expand_scan(const ScanSpec& spec, ScanSummary& summary);

/// Parses lines "g1;g2;...;gd" or "g1;...;gd @ w"; '#' starts a comment.
std::vector<ScanJob> parse_cones_file(std::istream& in);

struct ScanRunOptions {
  unsigned jobs = 1;
  AnalysisOptions analysis;
};

/// Analyzes every job and returns one JSON record per (cone, w), ordered by
/// cone key and w. Failures become records with an "error" field. Output is
/// independent of the job count.
std::vector<Json> run_scan(const std::vector<ScanJob>& jobs, const ScanRunOptions& options, ScanSummary& summary);

}  // namespace critarrow
