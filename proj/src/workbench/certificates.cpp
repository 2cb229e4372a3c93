#include "coarse/certificates.hpp"

#include <algorithm>

namespace coarse {

namespace {

using Ints = std::vector<std::int64_t>;

template <class T>
Ints optional_ints(const std::optional<T>& v) {
  return v ? Ints{static_cast<std::int64_t>(*v)} : Ints{};
}

Ints pair_ints(const std::optional<std::pair<PointId, PointId>>& p) {
  return p ? Ints{p->first, p->second} : Ints{};
}

template <class Range>
Ints all_ints(const Range& r) {
  Ints out;
  for (const auto& x : r) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

Rational from_size(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

}  // namespace

CertificateDocument to_document(const PUCertificate& cert, const std::string& construction) {
  CertificateDocument doc;
  doc.construction = construction;
  doc.param("measure", cert.diameter_measure.empty() ? std::string("none") : cert.diameter_measure)
      .verdict("variation", cert.variation_ok)
      .verdict("coarsening", cert.coarsening_ok)
      .verdict("bounded", cert.bounded_ok)
      .measure("epsilon", cert.epsilon)
      .measure("variation", cert.variation.value)
      .measure("diameter_budget", cert.diameter_budget)
      .measure("max_star_diameter", cert.max_star_diameter)
      .witness("variation_pair", pair_ints(cert.variation.pair))
      .witness("coarsening_counterexample", optional_ints(cert.coarsening_counterexample))
      .witness("coarsening_vertices", all_ints(cert.coarsening_witness))
      .witness("widest_vertex", optional_ints(cert.widest_vertex));
  return doc;
}

CertificateDocument to_document(const AsdimPairCertificate& cert) {
  CertificateDocument doc;
  doc.construction = "check_asdim_pair";
  const std::size_t max_count = cert.worst ? cert.counts[*cert.worst] : 0;
  doc.param("n", cert.n)
      .verdict("asdim", cert.passed)
      .measure("max_count", from_size(max_count))
      .witness("worst_element", optional_ints(cert.worst))
      .witness("counts", all_ints(cert.counts));
  return doc;
}

CertificateDocument to_document(const DeltaPUCertificate& cert) {
  CertificateDocument doc;
  doc.construction = "certify_delta_pu";
  doc.verdict("lipschitz", cert.lipschitz_ok)
      .verdict("lebesgue", cert.lebesgue_ok)
      .verdict("bounded", cert.bounded_ok)
      .measure("delta", cert.delta)
      .measure("worst_excess", cert.worst_excess)
      .measure("diameter_budget", cert.diameter_budget)
      .measure("max_star_diameter", cert.max_star_diameter)
      .witness("lipschitz_worst", pair_ints(cert.lipschitz_worst))
      .witness("lebesgue_failure", pair_ints(cert.lebesgue_failure))
      .witness("widest_vertex", optional_ints(cert.widest_vertex));
  return doc;
}

CertificateDocument to_document(const SkeletonPU& result) {
  CertificateDocument doc;
  doc.construction = "build_skeleton_pu";
  doc.param("budget", result.declared_budget)
      .param("vertices", result.f.vertex_count())
      .measure("multiplicity", from_size(max_multiplicity(result.v)))
      .measure("max_carrier", from_size(result.f.max_carrier_size()))
      .child(to_document(result.hypothesis))
      .child(to_document(result.certificate));
  return doc;
}

CertificateDocument to_document(const TrimResult& result) {
  CertificateDocument doc;
  doc.construction = "trim_to_cover";
  std::size_t empty = 0;
  for (const auto& e : result.v.elements()) empty += e.empty() ? 1 : 0;
  doc.param("elements", result.v.size())
      .measure("multiplicity", from_size(max_multiplicity(result.v)))
      .measure("empty_elements", from_size(empty))
      .child(to_document(result.hypothesis, "certify_pu_st2"))
      .child(to_document(result.check));
  return doc;
}

CertificateDocument to_document(const FillerParams& params) {
  CertificateDocument doc;
  doc.construction = "filler_params";
  doc.param("epsilon", params.epsilon.str())
      .param("n", params.n)
      .param("k", params.k)
      .param("m", params.m)
      .param("delta", params.delta.str())
      .measure("term_budget", params.term_budget())
      .measure("total_budget", params.total_budget());
  return doc;
}

CertificateDocument to_document(const FillerResult& result) {
  CertificateDocument doc;
  doc.construction = "filler";
  std::size_t cases[4] = {0, 0, 0, 0};
  for (BlendCase c : result.blend.cases) ++cases[static_cast<int>(c)];
  const std::size_t max_carrier =
      result.carrier_sizes.empty() ? 0 : *std::max_element(result.carrier_sizes.begin(), result.carrier_sizes.end());
  doc.verdict("within_budget", result.within_budget)
      .measure("variation_budget", result.variation_budget)
      .measure("retraction_shift", result.retraction.max_shift)
      .measure("shift_on_a", result.max_shift_on_a)
      .measure("max_carrier", from_size(max_carrier))
      .measure("skeletal_points", from_size(result.skeletal_points))
      .measure("heavy_points", from_size(result.heavy_points))
      .witness("blend_cases", Ints{static_cast<std::int64_t>(cases[0]), static_cast<std::int64_t>(cases[1]),
                                   static_cast<std::int64_t>(cases[2]), static_cast<std::int64_t>(cases[3])})
      .witness("empty_shrunk", all_ints(result.w.empty_elements))
      .child(to_document(result.params))
      .child(to_document(result.input_certificate, "certify_pu_input"))
      .child(to_document(result.certificate));
  return doc;
}

CertificateDocument to_document(const ForwardComparison& result) {
  CertificateDocument doc;
  doc.construction = "comparison_forward";
  doc.param("balls", result.u.size()).child(to_document(result.hypothesis)).child(to_document(result.certificate));
  return doc;
}

CertificateDocument to_document(const BackwardComparison& result) {
  CertificateDocument doc;
  doc.construction = "comparison_backward";
  doc.param("elements", result.u.size())
      .child(to_document(result.hypothesis))
      .child(to_document(result.certificate));
  return doc;
}

}  // namespace coarse
