#include "tricusp/families.hpp"

#include "tricusp/certify.hpp"

namespace tricusp {

namespace {

PolyP var(const PrimeField& f, int i) { return PolyP::variable(f, 4, i); }

PolyP draw(int degree, std::uint64_t draw_seed, std::uint64_t role, const PrimeField& f) {
  return random_homogeneous(degree, derive_seed(draw_seed, role), f);
}

PolyP residual_of(const PolyP& s1, const PolyP& s2, const PolyP& s, const PolyP& phi) {
  return exact_div(s1 * s2 - s.pow(3), phi).quotient;
}

void contact(SurfaceInstance& inst, const PolyP& s1, const PolyP& s2, const PolyP& s, const PolyP& residual) {
  inst.kind = CertificateKind::ContactCubics;
  inst.certificate = {{"s'", s1}, {"s''", s2}, {"s", s}, {"residual", residual}};
}

Locus contact_locus(const PolyP& s1, const PolyP& s2, const PolyP& s, std::optional<int> expected) {
  return {"s = s' = s'' = 0", {s, s1, s2}, {}, expected};
}

// 12 cusps off the plane x0 = 0 (2a type).
void predict_off_plane(SurfaceInstance& inst, const PolyP& s1, const PolyP& s2, const PolyP& s) {
  const PolyP x0 = var(inst.field(), 0);
  inst.predicted.cusps = 12;
  inst.predicted.loci = {{"s = s' = s'' = 0, x0 != 0", {s, s1, s2}, {x0}, 12},
                         {"x0 = 0", {x0}, {}, 0}};
}

// 8 cusps off x0 = 0 and 4 on the line x0 = x1 = 0 (case 3).
void predict_line(SurfaceInstance& inst, const PolyP& s1, const PolyP& s2, const PolyP& s, const PolyP& q1,
                  const PolyP& q2) {
  const PolyP x0 = var(inst.field(), 0), x1 = var(inst.field(), 1);
  inst.predicted.cusps = 12;
  inst.predicted.loci = {{"s = s' = s'' = 0, x0 != 0", {s, s1, s2}, {x0}, 8},
                         {"x0 = x1 = 0, q'q'' = 0", {x0, x1, q1 * q2}, {}, 4}};
}

SurfaceInstance cubic(const PrimeField& f) {
  SurfaceInstance inst(PolyP(f, 4));
  inst.tag = FamilyTag::Cubic3;
  const PolyP x0 = var(f, 0), x1 = var(f, 1), x2 = var(f, 2), x3 = var(f, 3);
  inst.phi = x1 * x2 * x3 - x0.pow(3);
  inst.predicted.cusps = 3;
  inst.predicted.loci = {{"coordinate points [0:1:0:0], [0:0:1:0], [0:0:0:1]", {x0, x1 * x2, x1 * x3, x2 * x3}, {}, 3}};
  return inst;
}

// s = ab + c rho, s' = a^3 + rho m', s'' = b^3 + rho m''.
SurfaceInstance quartic(std::uint64_t ds, const PrimeField& f) {
  SurfaceInstance inst(PolyP(f, 4));
  inst.tag = FamilyTag::Quartic6;
  const PolyP a = draw(1, ds, 1, f), b = draw(1, ds, 2, f), m1 = draw(1, ds, 3, f), m2 = draw(1, ds, 4, f);
  const PolyP rho = draw(2, ds, 5, f);
  Rng rng(derive_seed(ds, 6));
  const Fp c = f.random(rng);
  const PolyP s = a * b + rho.scaled(c), s1 = a.pow(3) + rho * m1, s2 = b.pow(3) + rho * m2;
  inst.phi = residual_of(s1, s2, s, rho);
  contact(inst, s1, s2, s, rho);
  inst.predicted.cusps = 6;
  inst.predicted.loci = {contact_locus(s1, s2, s, std::nullopt), {"rho = 0", {rho}, {}, std::nullopt}};
  return inst;
}

SurfaceInstance quintic2a(std::uint64_t ds, const PrimeField& f) {
  SurfaceInstance inst(PolyP(f, 4));
  inst.tag = FamilyTag::Quintic2a;
  const PolyP x0 = var(f, 0), x1 = var(f, 1), x2 = var(f, 2);
  const PolyP l = draw(1, ds, 1, f), q1 = draw(2, ds, 2, f), q2 = draw(2, ds, 3, f);
  const PolyP s = x1 * x2 + x0 * l, s1 = x1.pow(3) + x0 * q1, s2 = x2.pow(3) + x0 * q2;
  inst.phi = residual_of(s1, s2, s, x0);
  contact(inst, s1, s2, s, x0);
  predict_off_plane(inst, s1, s2, s);
  return inst;
}

SurfaceInstance quintic3(std::uint64_t ds, const PrimeField& f) {
  SurfaceInstance inst(PolyP(f, 4));
  inst.tag = FamilyTag::QuinticCase3;
  const PolyP x0 = var(f, 0), x1 = var(f, 1);
  const PolyP l = draw(1, ds, 1, f), q1 = draw(2, ds, 2, f), q2 = draw(2, ds, 3, f);
  const PolyP three = PolyP::constant(f, 4, f.from_int(3));
  inst.phi = x1.pow(3) * (q1 + q2) + x0 * q1 * q2 - three * x1.pow(4) * l - three * x0 * x1.pow(2) * l.pow(2) -
             x0.pow(2) * l.pow(3);
  const PolyP s = x1.pow(2) + x0 * l, s1 = x1.pow(3) + x0 * q1, s2 = x1.pow(3) + x0 * q2;
  contact(inst, s1, s2, s, x0);
  inst.certificate.push_back({"q'", q1});
  inst.certificate.push_back({"q''", q2});
  predict_line(inst, s1, s2, s, q1, q2);
  return inst;
}

SurfaceInstance degeneration(std::uint64_t ds, Fp t, const PrimeField& f) {
  SurfaceInstance inst(PolyP(f, 4));
  inst.tag = FamilyTag::QuinticDegeneration;
  inst.t = t;
  const PolyP x0 = var(f, 0), x1 = var(f, 1), x2 = var(f, 2);
  const PolyP l = draw(1, ds, 1, f), q1 = draw(2, ds, 2, f), q2 = draw(2, ds, 3, f);
  const PolyP y = x1 + x2.scaled(t);
  const PolyP s = x1 * y + x0 * l, s1 = x1.pow(3) + x0 * q1, s2 = y.pow(3) + x0 * q2;
  inst.phi = residual_of(s1, s2, s, x0);
  contact(inst, s1, s2, s, x0);
  inst.certificate.push_back({"q'", q1});
  inst.certificate.push_back({"q''", q2});
  if (t.is_zero())
    predict_line(inst, s1, s2, s, q1, q2);
  else
    predict_off_plane(inst, s1, s2, s);
  return inst;
}

SurfaceInstance sexticA(std::uint64_t ds, const PrimeField& f) {
  SurfaceInstance inst(PolyP(f, 4));
  inst.tag = FamilyTag::SexticA;
  const PolyP s1 = draw(3, ds, 1, f), s2 = draw(3, ds, 2, f), s = draw(2, ds, 3, f);
  inst.phi = s1 * s2 - s.pow(3);
  contact(inst, s1, s2, s, PolyP::constant(f, 4, f.one()));
  inst.predicted.cusps = 18;
  inst.predicted.loci = {contact_locus(s1, s2, s, 18)};
  return inst;
}

SurfaceInstance sexticB(std::uint64_t ds, const PrimeField& f) {
  SurfaceInstance inst(PolyP(f, 4));
  inst.tag = FamilyTag::SexticB;
  const PolyP l1 = draw(1, ds, 1, f), l2 = draw(1, ds, 2, f), g = draw(2, ds, 3, f), q = draw(4, ds, 4, f);
  inst.phi = l1 * l2 * q - g.pow(3);
  inst.kind = CertificateKind::SexticB;
  inst.certificate = {{"l'", l1}, {"l''", l2}, {"g", g}, {"f", q}};
  inst.predicted.cusps = 18;
  inst.predicted.loci = {{"l' = l'' = g = 0", {l1, l2, g}, {}, 2},
                         {"l' = f = g = 0", {l1, q, g}, {}, 8},
                         {"l'' = f = g = 0", {l2, q, g}, {}, 8}};
  return inst;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Cubic3: return "cubic3";
    case FamilyTag::Quartic6: return "quartic6";
    case FamilyTag::Quintic2a: return "quintic2a";
    case FamilyTag::QuinticCase3: return "quintic_case3";
    case FamilyTag::QuinticDegeneration: return "quintic_degeneration";
    case FamilyTag::SexticA: return "sexticA";
    case FamilyTag::SexticB: return "sexticB";
    case FamilyTag::Custom: return "custom";
  }
  return "custom";
}

FamilyTag parse_family(std::string_view name) {
  for (auto tag : {FamilyTag::Cubic3, FamilyTag::Quartic6, FamilyTag::Quintic2a, FamilyTag::QuinticCase3,
                   FamilyTag::QuinticDegeneration, FamilyTag::SexticA, FamilyTag::SexticB, FamilyTag::Custom})
    if (family_name(tag) == name) return tag;
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

const std::vector<FamilyTag>& standard_families() {
  static const std::vector<FamilyTag> tags{FamilyTag::Cubic3,       FamilyTag::Quartic6, FamilyTag::Quintic2a,
                                           FamilyTag::QuinticCase3, FamilyTag::SexticA,  FamilyTag::SexticB};
  return tags;
}

std::string certificate_kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::None: return "none";
    case CertificateKind::ContactCubics: return "contactCubics";
    case CertificateKind::SexticB: return "sexticB";
  }
  return "none";
}

const PolyP* SurfaceInstance::find(std::string_view name) const {
  for (const auto& np : certificate)
    if (np.name == name) return &np.poly;
  return nullptr;
}

const std::map<int, int>& minimal_table() {
  static const std::map<int, int> table{{3, 3}, {4, 6}, {5, 12}, {6, 18}};
  return table;
}

SurfaceInstance draw_candidate(FamilyTag tag, std::uint64_t draw_seed, const PrimeField& field, std::optional<Fp> t) {
  SurfaceInstance inst(PolyP(field, 4));
  switch (tag) {
    case FamilyTag::Cubic3: inst = cubic(field); break;
    case FamilyTag::Quartic6: inst = quartic(draw_seed, field); break;
    case FamilyTag::Quintic2a: inst = quintic2a(draw_seed, field); break;
    case FamilyTag::QuinticCase3: inst = quintic3(draw_seed, field); break;
    case FamilyTag::QuinticDegeneration:
      if (!t) throw Error(ErrorCode::InvalidArgument, "quintic_degeneration needs a parameter t");
      if (t->modulus() != field.prime()) throw Error(ErrorCode::IncompatibleFields, "t lies in another field");
      inst = degeneration(draw_seed, *t, field);
      break;
    case FamilyTag::SexticA: inst = sexticA(draw_seed, field); break;
    case FamilyTag::SexticB: inst = sexticB(draw_seed, field); break;
    case FamilyTag::Custom: throw Error(ErrorCode::InvalidArgument, "custom surfaces are not drawn");
  }
  inst.seed = draw_seed;
  inst.draw_seed = draw_seed;
  return inst;
}

SurfaceInstance construct(FamilyTag tag, std::uint64_t seed, const PrimeField& field, std::optional<Fp> t) {
  std::vector<Rejection> rejections;
  for (int attempt = 0; attempt <= kMaxReseeds; ++attempt) {
    const std::uint64_t ds = attempt == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(attempt));
    SurfaceInstance inst = draw_candidate(tag, ds, field, t);
    inst.seed = seed;
    const VerificationReport report = verify_family(inst);
    if (report.pass) {
      inst.rejections = std::move(rejections);
      return inst;
    }
    rejections.push_back({ds, join(report.failures)});
    // The cubic has nothing to reseed.
    if (tag == FamilyTag::Cubic3) break;
  }
  std::string msg = family_name(tag) + ": no accepted draw for seed " + std::to_string(seed);
  if (!rejections.empty()) msg += " (last rejection: " + rejections.back().reason + ")";
  throw Error(tag == FamilyTag::Quartic6 ? ErrorCode::ConstructionFailed : ErrorCode::DegenerateInstance, msg);
}

SurfaceInstance cubic_three_cusps(const PrimeField& field) { return construct(FamilyTag::Cubic3, 0, field); }
SurfaceInstance quartic_six_cusps(std::uint64_t seed, const PrimeField& field) {
  return construct(FamilyTag::Quartic6, seed, field);
}
SurfaceInstance quintic_2a(std::uint64_t seed, const PrimeField& field) {
  return construct(FamilyTag::Quintic2a, seed, field);
}
SurfaceInstance quintic_case3(std::uint64_t seed, const PrimeField& field) {
  return construct(FamilyTag::QuinticCase3, seed, field);
}
SurfaceInstance quintic_degeneration(std::uint64_t seed, Fp t, const PrimeField& field) {
  return construct(FamilyTag::QuinticDegeneration, seed, field, t);
}
SurfaceInstance sextic_A(std::uint64_t seed, const PrimeField& field) { return construct(FamilyTag::SexticA, seed, field); }
SurfaceInstance sextic_B(std::uint64_t seed, const PrimeField& field) { return construct(FamilyTag::SexticB, seed, field); }

SurfaceInstance quartic_product_ansatz(std::uint64_t seed, const PrimeField& field) {
  SurfaceInstance inst(PolyP(field, 4));
  inst.tag = FamilyTag::Quartic6;
  const PolyP a = draw(1, seed, 1, field), b = draw(1, seed, 2, field), m1 = draw(1, seed, 3, field),
              m2 = draw(1, seed, 4, field), rho = draw(2, seed, 5, field);
  const PolyP s = a * b, s1 = a * a * b + rho * m1, s2 = a * b * b + rho * m2;
  inst.phi = a * a * b * m2 + a * b * b * m1 + rho * m1 * m2;
  contact(inst, s1, s2, s, rho);
  inst.seed = inst.draw_seed = seed;
  inst.predicted.cusps = 6;
  inst.predicted.loci = {contact_locus(s1, s2, s, std::nullopt)};
  return inst;
}

SurfaceInstance custom_instance(PolyP phi) {
  const int d = phi.total_degree();
  SurfaceInstance inst(std::move(phi));
  if (auto it = minimal_table().find(d); it != minimal_table().end()) inst.predicted.cusps = it->second;
  return inst;
}

}  // namespace tricusp
