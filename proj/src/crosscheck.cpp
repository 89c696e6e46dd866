#include "tricusp/crosscheck.hpp"

#include <algorithm>
#include <iterator>

namespace tricusp {

std::vector<ProjectivePoint> rational_points(const SingularScheme& scheme) {
  std::vector<ProjectivePoint> out;
  for (const auto& p : scheme.points) {
    if (!p.is_rational()) continue;
    const auto pr = p.projective();
    ProjectivePoint x{};
    for (int i = 0; i < 4; ++i) x[i] = pr[i].coeffs()[0];
    out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CrossCheck cross_check(const SurfaceInstance& inst, std::uint32_t q, const ScanOptions& options) {
  const ScanResult scan = scan_projective(inst.phi, q, options);
  const SingularScheme scheme = find_singular_points(inst.phi);
  const auto solved = rational_points(scheme);
  CrossCheck cc;
  cc.scan_count = scan.points.size();
  cc.solver_rational = solved.size();
  cc.solver_geometric = scheme.points.size();
  std::set_difference(scan.points.begin(), scan.points.end(), solved.begin(), solved.end(),
                      std::back_inserter(cc.scan_only));
  std::set_difference(solved.begin(), solved.end(), scan.points.begin(), scan.points.end(),
                      std::back_inserter(cc.solver_only));
  cc.agree = cc.scan_only.empty() && cc.solver_only.empty() && cc.scan_count <= cc.solver_geometric;
  return cc;
}

}  // namespace tricusp
