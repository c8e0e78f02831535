#include "critarrow/report.hpp"

#include <numeric>
#include <sstream>

#include "critarrow/error.hpp"

namespace critarrow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    parts.push_back(trim(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

std::string key(std::size_t index) { return std::to_string(index + 1); }

Json polytope_json(const PolytopeResult& p) {
  Json j;
  j["status"] = search_status_name(p.status);
  j["witness"] = p.witness ? vector_json(*p.witness) : Json(nullptr);
  return j;
}

Json volume_json(const VolumeResult& v) {
  return Json{{"H", v.h}, {"guarantee", v.guarantee}, {"vol", to_string(v.vol)}};
}

std::string join(const std::vector<ExactVector>& vs) {
  if (vs.empty()) return "-";
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : " ") + to_string(v);
  return s;
}

void row(std::ostringstream& out, std::string_view label, const std::string& value) {
  out << label;
  for (std::size_t k = label.size(); k < 22; ++k) out << ' ';
  out << value << '\n';
}

}  // namespace

ExactVector parse_vector(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(Errc::ParseError, "empty vector");
  std::vector<Rational> entries;
  for (auto part : split(text, ',')) {
    if (part.empty()) throw Error(Errc::ParseError, "empty entry in '" + std::string(text) + "'");
    entries.push_back(parse_rational(part));
  }
  return ExactVector(std::move(entries));
}

std::vector<ExactVector> parse_rows(std::string_view text) {
  std::vector<ExactVector> rows;
  for (auto part : split(text, ';')) {
    rows.push_back(parse_vector(part));
    if (rows.back().dim() != rows.front().dim())
      throw Error(Errc::DimensionMismatch, "rows of different lengths in '" + std::string(text) + "'");
  }
  return rows;
}

Json vector_json(const ExactVector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(is_integer(q) ? integer_json(q.get_num()) : Json(to_string(q)));
  return j;
}

Json vectors_json(const std::vector<ExactVector>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(vector_json(v));
  return j;
}

Json analysis_json(const AnalysisReport& r) {
  Json j;
  j["cone"] = vectors_json(r.cone.generators());
  j["w"] = vector_json(r.w);
  j["dim"] = r.cone.dim();
  j["mu_indices"] = Json::array();
  for (std::size_t i : r.mu_indices) j["mu_indices"].push_back(i + 1);
  j["dim_mu"] = r.dim_mu;
  j["d_prime"] = r.d_prime;
  j["crit"] = Json::object();
  j["c_min"] = Json::object();
  for (const auto& p : r.profiles) {
    j["crit"][key(p.index)] = vectors_json(p.vectors);
    j["c_min"][key(p.index)] = to_string(p.c_min);
  }
  j["dim_Vw"] = r.dim_vw;
  j["dim_mu_perp_cap_Vw"] = r.dim_mu_perp_cap_vw;
  j["dim_tau"] = r.dim_tau;
  j["center_dim"] = r.center_dim;
  j["discrepancy"] = to_string(r.discrepancy);
  j["is_essential_candidate"] = r.is_essential_candidate ? Json(*r.is_essential_candidate) : Json(nullptr);
  j["level_one_found"] = r.level_one_found ? Json(search_status_name(*r.level_one_found)) : Json(nullptr);
  j["polytope"] = Json::object();
  for (const auto& [i, p] : r.polytope) j["polytope"][key(i)] = polytope_json(p);
  if (r.volume) j["volume"] = volume_json(*r.volume);
  return j;
}

std::string analysis_text(const AnalysisReport& r) {
  std::ostringstream out;
  row(out, "cone", join(r.cone.generators()));
  row(out, "w", to_string(r.w));
  std::string mu;
  for (std::size_t i : r.mu_indices) mu += (mu.empty() ? "" : ",") + key(i);
  row(out, "minimal face", "{" + mu + "}  dim " + std::to_string(r.dim_mu));
  row(out, "D'", std::to_string(r.d_prime));
  for (const auto& p : r.profiles) {
    row(out, "c_min[" + key(p.index) + "]", to_string(p.c_min));
    row(out, "Crit[" + key(p.index) + "]", join(p.vectors));
  }
  row(out, "dim V_w", std::to_string(r.dim_vw));
  row(out, "dim mu^perp & V_w", std::to_string(r.dim_mu_perp_cap_vw));
  row(out, "dim tau", std::to_string(r.dim_tau));
  row(out, "center dim", std::to_string(r.center_dim));
  row(out, "discrepancy", to_string(r.discrepancy));
  if (r.is_essential_candidate) row(out, "essential candidate", *r.is_essential_candidate ? "yes" : "no");
  if (r.level_one_found) row(out, "level-1 point", std::string(search_status_name(*r.level_one_found)));
  for (const auto& [i, p] : r.polytope)
    row(out, "polytope[" + key(i) + "]",
        std::string(search_status_name(p.status)) + (p.witness ? " " + to_string(*p.witness) : ""));
  if (r.volume) row(out, "volume", to_string(r.volume->vol) + "  H " + r.volume->h +
                                       (r.volume->guarantee ? "  guarantee" : "  no guarantee"));
  return out.str();
}

QuotientReport analyze_quotient(const std::vector<CyclicGenerator>& generators, std::size_t dim,
                                const std::optional<ExactVector>& w_original, const AnalysisOptions& options) {
  QuotientDatum datum = build_quotient(generators, dim);
  QuotientReport rep{datum};
  if (dim == 3 && generators.size() == 1) {
    const auto& g = generators.front();
    rep.classification = classify_cyclic_3d(g.r, g.weights[0], g.weights[1], g.weights[2]);
  }
  rep.singularity = classify_singularity(rep.datum.normalized_cone, options.limits);
  if (w_original) {
    rep.w_original = *w_original;
    rep.w = to_lattice_coords(rep.datum, *w_original);
    Integer l = 1;
    for (const auto& q : *w_original) l = lcm(l, q.get_den());
    std::vector<Integer> a;
    bool interior = true;
    for (const auto& q : *w_original) {
      a.push_back(Rational(q * l).get_num());
      interior = interior && q > 0;
    }
    if (interior) rep.volume = volume_criterion(l, a, rep.datum.group_order);
    rep.analysis = dim_tau(rep.datum.normalized_cone, *rep.w, options);
    rep.analysis->volume = rep.volume;
  }
  return rep;
}

Json quotient_json(const QuotientReport& r) {
  Json j;
  j["dim"] = r.datum.dim;
  j["generators"] = Json::array();
  for (const auto& g : r.datum.generators) {
    std::string s = std::to_string(g.r) + ":";
    for (std::size_t k = 0; k < g.weights.size(); ++k) s += (k ? "," : "") + std::to_string(g.weights[k]);
    j["generators"].push_back(s);
  }
  j["group_order"] = integer_json(r.datum.group_order);
  std::vector<ExactVector> basis;
  for (std::size_t c = 0; c < r.datum.dim; ++c) basis.push_back(r.datum.basis_change.column(c));
  j["basis_change"] = vectors_json(basis);
  j["normalized_cone"] = vectors_json(r.datum.normalized_cone.generators());
  j["singularity"] = singularity_name(r.singularity);
  if (r.classification) {
    const auto& c = *r.classification;
    Json cj;
    cj["label"] = canonical_case_name(c.label);
    cj["r"] = c.r;
    cj["weights"] = c.weights;
    if (c.label != CanonicalCase::NotCanonical) {
      cj["power"] = c.power;
      cj["permutation"] = Json::array({c.permutation[0] + 1, c.permutation[1] + 1, c.permutation[2] + 1});
      cj["via_symmetry"] = c.via_symmetry;
    }
    j["classification"] = cj;
  } else {
    j["classification"] = nullptr;
  }
  if (r.w_original) j["w_original"] = vector_json(*r.w_original);
  if (r.w) j["w"] = vector_json(*r.w);
  if (r.w_original) j["volume"] = r.volume ? volume_json(*r.volume) : Json(nullptr);
  if (r.analysis) j["analysis"] = analysis_json(*r.analysis);
  return j;
}

std::string quotient_text(const QuotientReport& r) {
  std::ostringstream out;
  std::string gens;
  for (const auto& g : r.datum.generators) {
    std::string s = "1/" + std::to_string(g.r) + "(";
    for (std::size_t k = 0; k < g.weights.size(); ++k) s += (k ? "," : "") + std::to_string(g.weights[k]);
    gens += (gens.empty() ? "" : " ") + s + ")";
  }
  row(out, "group", gens.empty() ? "trivial" : gens);
  row(out, "|G|", r.datum.group_order.get_str());
  std::vector<ExactVector> basis;
  for (std::size_t c = 0; c < r.datum.dim; ++c) basis.push_back(r.datum.basis_change.column(c));
  row(out, "basis of N", join(basis));
  row(out, "normalized cone", join(r.datum.normalized_cone.generators()));
  row(out, "singularity", std::string(singularity_name(r.singularity)));
  if (r.classification) {
    std::string s(canonical_case_name(r.classification->label));
    if (r.classification->via_symmetry) s += " (after power/permutation)";
    row(out, "classification", s);
  }
  if (r.w_original) row(out, "w (original)", to_string(*r.w_original));
  if (r.w) row(out, "w (N-coordinates)", to_string(*r.w));
  if (r.analysis) out << analysis_text(*r.analysis);
  return out.str();
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace critarrow
