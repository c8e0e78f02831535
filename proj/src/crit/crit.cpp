#include <algorithm>

#include "critarrow/crit.hpp"
#include "critarrow/error.hpp"

namespace critarrow {

bool AnalysisReport::any_crit() const {
  return std::any_of(profiles.begin(), profiles.end(), [](const CritProfile& p) { return !p.vectors.empty(); });
}

AnalysisReport dim_tau(const SimplicialCone& cone, const ExactVector& w, const AnalysisOptions& options) {
  const FaceSelector face = minimal_face(cone, w);
  if (!w.is_integral()) throw Error(Errc::NotALatticePoint, to_string(w) + " is not a lattice point");
  const std::size_t d = cone.dim();

  AnalysisReport report{cone, w};
  report.mu_indices = face.indices;
  report.dim_mu = face.indices.size();
  report.d_prime = diameter_bound(cone);
  if (options.d_prime) {
    if (*options.d_prime < report.d_prime)
      throw Error(Errc::BadParameters, "D' override " + std::to_string(*options.d_prime) + " is below the bound " +
                                           std::to_string(report.d_prime));
    report.d_prime = *options.d_prime;
  }

  std::vector<ExactVector> vw;
  for (std::size_t i : face.indices) {
    const DeltaCone dc = delta_cone(cone, w, i);
    report.profiles.push_back(crit_vectors(dc, report.d_prime, options.limits));
    const auto& vecs = report.profiles.back().vectors;
    vw.insert(vw.end(), vecs.begin(), vecs.end());
  }

  std::vector<ExactVector> mu_perp;
  for (std::size_t j = 0; j < d; ++j)
    if (!face.contains(j)) mu_perp.push_back(cone.dual_basis()[j]);
  const SpanDims dims = span_dims(mu_perp, vw);
  report.dim_vw = dims.dim_w;
  report.dim_mu_perp_cap_vw = dims.dim_intersection;
  const std::size_t drop = report.dim_vw - report.dim_mu_perp_cap_vw;
  if (drop >= report.dim_mu)
    throw Error(Errc::InternalInconsistency, "dim tau would be below 1 for w = " + to_string(w));
  report.dim_tau = report.dim_mu - drop;
  report.center_dim = d - report.dim_tau;
  report.discrepancy = discrepancy(cone, w);

  if (options.essential) {
    const auto hb = hilbert_basis(cone, options.limits);
    const bool in_basis = std::binary_search(hb.begin(), hb.end(), w);
    const bool is_gen = std::find(cone.generators().begin(), cone.generators().end(), w) != cone.generators().end();
    report.is_essential_candidate = in_basis && !is_gen;
  }

  if (options.sufficiency) {
    const std::int64_t bound = options.search_bound.value_or(report.d_prime);
    const LevelOneResult level = level_one_lattice_points(cone, w, bound, options.limits);
    const SearchStatus miss = level.complete ? SearchStatus::None : SearchStatus::Unknown;
    report.level_one_found = level.points.empty() ? miss : SearchStatus::Found;
    for (std::size_t i : face.indices) {
      PolytopeResult pr;
      pr.status = miss;
      for (const auto& u : level.points) {
        if (dot(u, cone.generator(i)) >= 1) {
          pr.status = SearchStatus::Found;
          pr.witness = u;
          break;
        }
      }
      report.polytope[i] = pr;
    }
  }
  return report;
}

}  // namespace critarrow
