// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "tricusp/crosscheck.hpp"
#include "tricusp/certify.hpp"

using namespace tricusp;

namespace {

using Clock = std::chrono::steady_clock;

const PrimeField kField(10007);
const PrimeField kOracleField(101);
constexpr std::uint64_t kSeeds[] = {1, 2, 3, 4, 5};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << what;
      ok = false;
    }
  }
};

std::size_t on_plane_x0(const SingularScheme& s) {
  const PolyP x0 = PolyP::variable(kField, 4, 0);
  std::size_t n = 0;
  for (const auto& p : s.points) n += vanishes_at(x0, p);
  return n;
}

void cubic(Outcome& o) {
  const auto t = Clock::now();
  const VerificationReport r = verify_family(cubic_three_cusps(kField));
  const double secs = seconds_since(t);
  o.require(r.pass, "verdict FAIL");
  o.require(r.singular_points == 3 && r.cusps == 3, "census is not 3 A2");
  for (const auto& p : r.scheme->points) o.require(p.tjurina == 2 && p.hessian_corank == 1, "tau/corank");
  o.require(secs < 1.0, "slower than 1 s");
  o.detail << (o.ok ? "" : "; ") << "3 A2 in " << secs << " s";
}

void quintic2a(Outcome& o) {
  double worst = 0;
  for (std::uint64_t seed : kSeeds) {
    const auto t = Clock::now();
    const SurfaceInstance inst = quintic_2a(seed, kField);
    const VerificationReport r = verify_family(inst);
    worst = std::max(worst, seconds_since(t));
    o.require(r.pass, "seed " + std::to_string(seed) + " FAIL");
    o.require(r.cusps == 12 && r.all_a2, "seed " + std::to_string(seed) + " census");
    o.require(r.scheme && on_plane_x0(*r.scheme) == 0, "cusp on x0 = 0");
    o.require(r.certificate.residual && *r.certificate.residual == PolyP::variable(kField, 4, 0), "residual != x0");
  }
  o.require(worst < 60, "slower than 60 s");
  o.detail << (o.ok ? "" : "; ") << "5 seeds, 12 A2 off x0 = 0, residual x0, worst " << worst << " s";
}

void quintic3(Outcome& o) {
  for (std::uint64_t seed : kSeeds) {
    const VerificationReport r = verify_family(quintic_case3(seed, kField));
    const std::string tag = "seed " + std::to_string(seed);
    o.require(r.pass, tag + " FAIL");
    o.require(r.cusps == 12 && r.all_a2, tag + " census");
    o.require(r.incidence.locus_counts == std::vector<std::size_t>{8, 4}, tag + " split is not 8 + 4");
    o.require(r.line_cusps == 4 && r.line_cusps_sqh.value_or(false), tag + " principal-part check");
  }
  o.detail << (o.ok ? "" : "; ") << "5 seeds, 8 + 4 A2, line cusps semi-quasihomogeneous";
}

void degeneration(Outcome& o) {
  Rng rng(2718);
  std::vector<Fp> ts{kField.zero()};
  while (ts.size() < 5) {
    const Fp t = kField.random(rng);
    if (!t.is_zero()) ts.push_back(t);
  }
  std::string values;
  for (const Fp& t : ts) {
    const VerificationReport r = verify_family(quintic_degeneration(1, t, kField));
    const std::string tag = "t = " + t.to_string();
    values += (values.empty() ? "" : ",") + t.to_string();
    o.require(r.pass, tag + " FAIL");
    o.require(r.cusps == 12 && r.all_a2, tag + " census");
    o.require(r.scheme && r.scheme->total_length == 24, tag + " total length");
  }
  o.detail << (o.ok ? "" : "; ") << "t in {" << values << "}: 12 A2, length 24";
}

void sexticA(Outcome& o) {
  double worst = 0;
  for (std::uint64_t seed : kSeeds) {
    const auto t = Clock::now();
    const VerificationReport r = verify_family(sextic_A(seed, kField));
    worst = std::max(worst, seconds_since(t));
    const std::string tag = "seed " + std::to_string(seed);
    o.require(r.pass, tag + " FAIL");
    o.require(r.cusps == 18 && r.all_a2, tag + " census");
    o.require(r.incidence.all(), tag + " cusp off s = s' = s'' = 0");
    o.require(r.scheme && r.scheme->total_length == 36, tag + " total length");
  }
  o.require(worst < 300, "slower than 5 min");
  o.detail << (o.ok ? "" : "; ") << "5 seeds, 18 A2 on the contact locus, length 36, worst " << worst << " s";
}

void sexticB(Outcome& o) {
  for (std::uint64_t seed : kSeeds) {
    const VerificationReport r = verify_family(sextic_B(seed, kField));
    const std::string tag = "seed " + std::to_string(seed);
    o.require(r.pass, tag + " FAIL");
    o.require(r.cusps == 18 && r.all_a2, tag + " census");
    o.require(r.incidence.locus_counts == std::vector<std::size_t>{2, 8, 8}, tag + " split is not 2/8/8");
  }
  o.detail << (o.ok ? "" : "; ") << "5 seeds, 18 A2 split 2 + 8 + 8";
}

void quartic(Outcome& o) {
  try {
    const SurfaceInstance inst = quartic_six_cusps(1, kField);
    const VerificationReport r = verify_family(inst);
    o.require(r.pass, "verdict FAIL");
    o.require(r.cusps == 6 && r.all_a2, "census");
    o.require(r.certificate.identity_ok && r.certificate.residual_degree == 2, "identity or residual degree");
    o.detail << (o.ok ? "" : "; ") << "6 A2, residual quadric, " << inst.rejections.size() << " rejected draws";
  } catch (const Error& e) {
    o.require(false, e.what());
  }
}

void oracle(Outcome& o) {
  std::vector<std::future<std::pair<std::string, CrossCheck>>> jobs;
  for (FamilyTag tag : standard_families())
    for (std::uint64_t seed : kSeeds)
      jobs.push_back(std::async(std::launch::async, [tag, seed] {
        const SurfaceInstance inst = construct(tag, seed, kOracleField);
        return std::make_pair(family_name(tag) + "/" + std::to_string(seed), cross_check(inst, 101));
      }));
  std::size_t n = 0, rational = 0;
  const auto t = Clock::now();
  for (auto& j : jobs) {
    const auto [name, cc] = j.get();
    o.require(cc.agree, name + " disagrees");
    ++n;
    rational += cc.scan_count;
  }
  o.require(seconds_since(t) < 120.0 * static_cast<double>(n), "too slow");
  o.detail << (o.ok ? "" : "; ") << n << " instances over F_101 agree (" << rational << " rational singular points)";
}

PolyP random_affine(Rng& rng, const PrimeField& f) {
  std::vector<PolyP::Term> t;
  const int terms = 2 + static_cast<int>(rng.below(4));
  const int maxdeg = 2 + static_cast<int>(rng.below(2));
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    const int d = static_cast<int>(rng.below(maxdeg + 1));
    for (int k = 0; k < d; ++k) ++m.e[rng.below(3)];
    t.push_back({m, f.random(rng)});
  }
  return PolyP::from_terms(f, 3, MonomialOrder::grevlex(), std::move(t));
}

void engine(Outcome& o) {
  const auto t0 = Clock::now();
  const PrimeField f(10007);
  Rng rng(9001);
  int ideals = 0, zero_dim = 0, solved = 0;
  while (ideals < 1000) {
    std::vector<PolyP> gens;
    const int ngens = 2 + static_cast<int>(rng.below(3));
    for (int i = 0; i < ngens; ++i) gens.push_back(random_affine(rng, f));
    std::erase_if(gens, [](const PolyP& g) { return g.is_zero(); });
    if (gens.empty()) continue;
    ++ideals;
    const IdealP id(gens);
    const BasisP gb = buchberger(id);
    o.require(s_polynomials_reduce(gb), "S-polynomial did not reduce (ideal " + std::to_string(ideals) + ")");
    for (const auto& g : gens) o.require(ideal_membership(g, gb), "generator not in ideal");
    const auto dim = quotient_dimension(gb);
    if (!dim || *dim > 12) continue;
    ++zero_dim;
    o.require(quotient_dimension(buchberger(id, MonomialOrder::lex())) == dim, "dimension depends on order");
    if (*dim == 0) continue;
    try {
      int total = 0;
      for (const auto& p : solve_points(id, {static_cast<std::uint64_t>(ideals)})) total += p.multiplicity;
      o.require(total == static_cast<int>(*dim), "multiplicities do not sum to the dimension");
      ++solved;
    } catch (const Error& e) {
      o.require(false, e.what());
    }
  }
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int d = 1 + static_cast<int>(seed % 6);
    const PolyP phi = random_homogeneous(d, seed, f);
    PolyP sum(f, 4);
    for (int v = 0; v < 4; ++v) sum += PolyP::variable(f, 4, v) * partial_derivative(phi, v);
    o.require(sum == phi.scaled(f.from_int(d)), "Euler identity fails");
  }
  const double secs = seconds_since(t0);
  o.require(secs < 300, "slower than 5 min");
  o.detail << (o.ok ? "" : "; ") << ideals << " ideals (" << zero_dim << " zero-dimensional, " << solved
           << " solved), 1000 Euler checks, " << secs << " s";
}

void lower_bound(Outcome& o) {
  std::size_t passes = 0;
  for (FamilyTag tag : {FamilyTag::SexticA, FamilyTag::SexticB})
    for (std::uint64_t seed : kSeeds) {
      const VerificationReport r = verify_family(construct(tag, seed, kField));
      if (!r.pass) continue;
      ++passes;
      o.require(r.cusps >= 18, family_name(tag) + " PASS with fewer than 18 cusps");
    }
  // A sextic with fewer cusps must not pass.
  const SurfaceInstance few = custom_instance(parse_poly("x1*x2*x3^4 - x0^6", kField, 4));
  o.require(!verify_family(few).pass, "an uncertified sextic passed");
  o.require(minimal_table().at(6) == 18, "table entry");
  o.detail << (o.ok ? "" : "; ") << passes << " passing sextic reports, all with 18 cusps";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"cubic3: 3 A2 cusps, exact, < 1 s", cubic},
      {"quintic2a: 12 A2 off x0 = 0, residual x0, 5 seeds", quintic2a},
      {"quintic case 3: 8 + 4 A2, line cusps SQH, 5 seeds", quintic3},
      {"quintic degeneration: 12 cusps, length 24, 5 values of t", degeneration},
      {"sexticA: 18 A2 on s = s' = s'' = 0, length 36, 5 seeds", sexticA},
      {"sexticB: 18 A2 split 2/8/8, 5 seeds", sexticB},
      {"quartic6: 6 A2 with residual quadric", quartic},
      {"oracle: scan equals solver on F_101, 6 families x 5 seeds", oracle},
      {"engine: 1000 ideals, order invariance, multiplicities, Euler", engine},
      {"sextic reports never claim fewer than 18 cusps", lower_bound},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::printf("[%s] %2d %s -- %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
