#pragma once

// Text input syntax and JSON / text rendering. JSON objects use sorted keys
// and every rational is a "num/den" string, so output is byte-stable.
// Ray indices are 1-based in everything this header produces or reads.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "critarrow/crit.hpp"
#include "critarrow/quotient.hpp"

namespace critarrow {

using Json = nlohmann::json;

/// "1,2,-3" or "1/2,0,3/4". Throws ParseError.
ExactVector parse_vector(std::string_view text);

/// Rows "1,0,0;0,1,0;1,1,2", one generator per row. Throws ParseError.
std::vector<ExactVector> parse_rows(std::string_view text);

/// Integral entries become JSON numbers, anything else "num/den" strings.
Json vector_json(const ExactVector& v);
Json vectors_json(const std::vector<ExactVector>& vs);

Json analysis_json(const AnalysisReport& report);
std::string analysis_text(const AnalysisReport& report);

struct QuotientReport {
  QuotientDatum datum;
  std::optional<CyclicClassification> classification;
  SingularityClass singularity = SingularityClass::Smooth;
  std::optional<ExactVector> w_original;
  std::optional<ExactVector> w;
  std::optional<VolumeResult> volume;
  std::optional<AnalysisReport> analysis;
};

/// Builds the quotient, classifies it, and analyzes w (original coordinates)
/// when given. Throws NotALatticePoint when w is not in N.
QuotientReport analyze_quotient(const std::vector<CyclicGenerator>& generators, std::size_t dim,
                                const std::optional<ExactVector>& w_original, const AnalysisOptions& options = {});

Json quotient_json(const QuotientReport& report);
std::string quotient_text(const QuotientReport& report);

/// Canonical single-line serialization (sorted keys, no spaces).
std::string dump(const Json& j);

}  // namespace critarrow
