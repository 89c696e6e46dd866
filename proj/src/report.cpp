#include "tricusp/report.hpp"

namespace tricusp {

using nlohmann::json;

namespace {

json polys_to_json(const std::vector<PolyP>& polys) {
  json a = json::array();
  for (const auto& p : polys) a.push_back(format_poly(p));
  return a;
}

std::vector<PolyP> polys_from_json(const json& a, const PrimeField& f) {
  std::vector<PolyP> out;
  for (const auto& t : a) out.push_back(parse_poly(t.get<std::string>(), f, 4));
  return out;
}

json timings_to_json(const Timings& t) {
  return {{"singular_ms", t.singular_ms}, {"certificate_ms", t.certificate_ms}, {"total_ms", t.total_ms}};
}

Classification parse_classification(const std::string& s) {
  if (s == "A1") return Classification::A1;
  if (s == "A2") return Classification::A2;
  if (s.size() > 1 && s[0] == 'A' && std::isdigit(static_cast<unsigned char>(s[1]))) return Classification::Ak;
  return Classification::NonADE;
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) && !j.at(key).is_null() ? j.at(key).get<T>() : fallback;
}

}  // namespace

const char* tool_version() { return TRICUSP_VERSION; }

std::string point_text(const ProjectivePoint& p) {
  return "[" + std::to_string(p[0]) + ":" + std::to_string(p[1]) + ":" + std::to_string(p[2]) + ":" +
         std::to_string(p[3]) + "]";
}

json instance_to_json(const SurfaceInstance& inst) {
  json cert = json::array();
  for (const auto& np : inst.certificate) cert.push_back({{"name", np.name}, {"poly", format_poly(np.poly)}});
  json loci = json::array();
  for (const auto& l : inst.predicted.loci) {
    loci.push_back({{"description", l.description},
                    {"vanishing", polys_to_json(l.vanishing)},
                    {"nonvanishing", polys_to_json(l.nonvanishing)},
                    {"expected", l.expected ? json(*l.expected) : json(nullptr)}});
  }
  json rej = json::array();
  for (const auto& r : inst.rejections) rej.push_back({{"draw_seed", r.draw_seed}, {"reason", r.reason}});
  return {{"family", family_name(inst.tag)},
          {"prime", inst.field().prime()},
          {"seed", inst.seed},
          {"draw_seed", inst.draw_seed},
          {"t", inst.t ? json(inst.t->value()) : json(nullptr)},
          {"degree", inst.degree()},
          {"phi", format_poly(inst.phi)},
          {"certificate", {{"kind", certificate_kind_name(inst.kind)}, {"polynomials", cert}}},
          {"predicted", {{"cusps", inst.predicted.cusps}, {"loci", loci}}},
          {"rejections", rej}};
}

SurfaceInstance instance_from_json(const json& j) {
  try {
    const PrimeField f(j.at("prime").get<std::uint32_t>());
    SurfaceInstance inst(parse_poly(j.at("phi").get<std::string>(), f, 4));
    inst.tag = parse_family(j.at("family").get<std::string>());
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.draw_seed = j.at("draw_seed").get<std::uint64_t>();
    if (j.contains("t") && !j.at("t").is_null()) inst.t = f.from_int(j.at("t").get<std::int64_t>());
    const json& cert = j.at("certificate");
    const std::string kind = cert.at("kind").get<std::string>();
    if (kind == "contactCubics")
      inst.kind = CertificateKind::ContactCubics;
    else if (kind == "sexticB")
      inst.kind = CertificateKind::SexticB;
    else if (kind == "none")
      inst.kind = CertificateKind::None;
    else
      throw Error(ErrorCode::InvalidArgument, "unknown certificate kind '" + kind + "'");
    for (const auto& np : cert.at("polynomials"))
      inst.certificate.push_back({np.at("name").get<std::string>(), parse_poly(np.at("poly").get<std::string>(), f, 4)});
    const json& pred = j.at("predicted");
    inst.predicted.cusps = pred.at("cusps").get<int>();
    for (const auto& l : pred.at("loci")) {
      Locus locus{l.at("description").get<std::string>(), polys_from_json(l.at("vanishing"), f),
                  polys_from_json(l.at("nonvanishing"), f), std::nullopt};
      if (!l.at("expected").is_null()) locus.expected = l.at("expected").get<int>();
      inst.predicted.loci.push_back(std::move(locus));
    }
    for (const auto& r : j.at("rejections"))
      inst.rejections.push_back({r.at("draw_seed").get<std::uint64_t>(), r.at("reason").get<std::string>()});
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed instance JSON: ") + e.what());
  }
}

json scheme_to_json(const SingularScheme& scheme) {
  json points = json::array();
  for (const auto& p : scheme.points) {
    json coords = json::array();
    for (const auto& c : p.affine) coords.push_back(c.coeffs());
    points.push_back({{"chart", p.chart},
                      {"extension_degree", p.extension_degree()},
                      {"modulus", p.affine.at(0).field().modulus().coeffs()},
                      {"coords", coords},
                      {"projective", p.projective_text()},
                      {"tjurina", p.tjurina},
                      {"hessian_corank", p.hessian_corank},
                      {"classification", classification_name(p.classification, p.tjurina)}});
  }
  json by_degree = json::object();
  for (const auto& [k, n] : scheme.by_extension_degree()) by_degree[std::to_string(k)] = n;
  return {{"chart_length", scheme.chart_length},
          {"total_length", scheme.total_length},
          {"geometric_points", scheme.points.size()},
          {"rational_points", rational_points(scheme).size()},
          {"by_extension_degree", by_degree},
          {"points", points}};
}

SingularScheme scheme_from_json(const json& j, std::uint32_t p) {
  try {
    SingularScheme s;
    s.chart_length = j.at("chart_length").get<std::array<std::size_t, 4>>();
    s.total_length = j.at("total_length").get<std::size_t>();
    for (const auto& pj : j.at("points")) {
      const ExtensionField k(UPoly(p, pj.at("modulus").get<std::vector<std::uint32_t>>()));
      SingularPoint pt;
      pt.chart = pj.at("chart").get<int>();
      for (const auto& c : pj.at("coords")) pt.affine.push_back(k.from_coeffs(c.get<std::vector<std::uint32_t>>()));
      pt.tjurina = pj.at("tjurina").get<int>();
      pt.hessian_corank = pj.at("hessian_corank").get<int>();
      pt.classification = parse_classification(pj.at("classification").get<std::string>());
      s.points.push_back(std::move(pt));
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed census JSON: ") + e.what());
  }
}

json report_to_json(const VerificationReport& r, bool include_timings) {
  json cert = {{"kind", certificate_kind_name(r.certificate.kind)},
               {"identity_ok", r.certificate.identity_ok},
               {"identically_zero", r.certificate.identically_zero},
               {"residual_degree", r.certificate.residual_degree},
               {"residual", r.certificate.residual ? json(format_poly(*r.certificate.residual)) : json(nullptr)},
               {"self_certifying", r.self_certifying},
               {"note", r.certificate.note}};
  json out = {{"schema_version", kSchemaVersion},
              {"tool", {{"name", "tricusp"}, {"version", tool_version()}}},
              {"instance", instance_to_json(r.instance)},
              {"census", r.scheme ? scheme_to_json(*r.scheme) : json(nullptr)},
              {"certificate", cert},
              {"incidence", {{"per_cusp", r.incidence.per_cusp}, {"locus_counts", r.incidence.locus_counts}}},
              {"line_cusps",
               r.line_cusps_sqh ? json{{"count", r.line_cusps}, {"sqh", *r.line_cusps_sqh}} : json(nullptr)},
              {"expected", {{"minimal_cusps", r.expected_cusps}, {"predicted_cusps", r.instance.predicted.cusps}}},
              {"singular_points", r.singular_points},
              {"cusps", r.cusps},
              {"all_a2", r.all_a2},
              {"verdict", r.pass ? "PASS" : "FAIL"},
              {"failures", r.failures}};
  if (include_timings) out["timings"] = timings_to_json(r.timings);
  return out;
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r(instance_from_json(j.at("instance")));
    if (!j.at("census").is_null()) r.scheme = scheme_from_json(j.at("census"), r.instance.field().prime());
    const json& c = j.at("certificate");
    const std::string kind = c.at("kind").get<std::string>();
    r.certificate.kind = kind == "contactCubics" ? CertificateKind::ContactCubics
                         : kind == "sexticB"     ? CertificateKind::SexticB
                                                 : CertificateKind::None;
    r.certificate.identity_ok = c.at("identity_ok").get<bool>();
    r.certificate.identically_zero = c.at("identically_zero").get<bool>();
    r.certificate.residual_degree = c.at("residual_degree").get<int>();
    if (!c.at("residual").is_null()) r.certificate.residual = parse_poly(c.at("residual").get<std::string>(), r.instance.field(), 4);
    r.certificate.note = c.at("note").get<std::string>();
    r.self_certifying = c.at("self_certifying").get<bool>();
    r.incidence.per_cusp = j.at("incidence").at("per_cusp").get<std::vector<bool>>();
    r.incidence.locus_counts = j.at("incidence").at("locus_counts").get<std::vector<std::size_t>>();
    if (!j.at("line_cusps").is_null()) {
      r.line_cusps = j.at("line_cusps").at("count").get<std::size_t>();
      r.line_cusps_sqh = j.at("line_cusps").at("sqh").get<bool>();
    }
    r.expected_cusps = j.at("expected").at("minimal_cusps").get<int>();
    r.singular_points = j.at("singular_points").get<std::size_t>();
    r.cusps = j.at("cusps").get<std::size_t>();
    r.all_a2 = j.at("all_a2").get<bool>();
    r.pass = j.at("verdict").get<std::string>() == "PASS";
    r.failures = j.at("failures").get<std::vector<std::string>>();
    if (j.contains("timings")) {
      const json& t = j.at("timings");
      r.timings = {field_or(t, "singular_ms", 0.0), field_or(t, "certificate_ms", 0.0), field_or(t, "total_ms", 0.0)};
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed report JSON: ") + e.what());
  }
}

json scan_to_json(const ScanResult& scan) {
  json pts = json::array();
  for (const auto& p : scan.points) pts.push_back(p);
  return {{"q", scan.q}, {"scanned", scan.scanned}, {"count", scan.points.size()}, {"points", pts},
          {"evaluations", scan.evaluations}};
}

json cross_check_to_json(const CrossCheck& cc) {
  json scan_only = json::array(), solver_only = json::array();
  for (const auto& p : cc.scan_only) scan_only.push_back(point_text(p));
  for (const auto& p : cc.solver_only) solver_only.push_back(point_text(p));
  return {{"agree", cc.agree},
          {"scan_count", cc.scan_count},
          {"solver_rational", cc.solver_rational},
          {"solver_geometric", cc.solver_geometric},
          {"scan_only", scan_only},
          {"solver_only", solver_only}};
}

}  // namespace tricusp
