#include "tricusp/oracle.hpp"

#include <algorithm>
#include <thread>

namespace tricusp {

namespace {

struct FlatTerm {
  std::array<std::uint8_t, 4> e;
  std::uint32_t c;
};

using Flat = std::vector<FlatTerm>;

Flat flatten(const Poly<PrimeField>& f) {
  Flat out;
  for (const auto& t : f.terms())
    out.push_back({{static_cast<std::uint8_t>(t.m.e[0]), static_cast<std::uint8_t>(t.m.e[1]),
                    static_cast<std::uint8_t>(t.m.e[2]), static_cast<std::uint8_t>(t.m.e[3])},
                   t.c.value()});
  return out;
}

struct Evaluator {
  std::uint32_t q;
  int maxdeg;
  std::vector<Flat> polys;  // partials first, phi last

  // powers[v * (maxdeg + 1) + e] = x_v^e mod q
  std::uint32_t eval(const Flat& f, const std::vector<std::uint64_t>& powers) const {
    std::uint64_t acc = 0;
    const int stride = maxdeg + 1;
    for (const auto& t : f) {
      std::uint64_t v = t.c;
      v = v * powers[t.e[0]] % q;
      v = v * powers[stride + t.e[1]] % q;
      v = v * powers[2 * stride + t.e[2]] % q;
      v = v * powers[3 * stride + t.e[3]] % q;
      acc += v;
    }
    return static_cast<std::uint32_t>(acc % q);
  }

  // Early exit on the first nonvanishing polynomial.
  bool singular(const ProjectivePoint& x, std::vector<std::uint64_t>& powers, std::array<std::uint32_t, 5>& vals) const {
    const int stride = maxdeg + 1;
    for (int v = 0; v < 4; ++v) {
      powers[v * stride] = 1;
      for (int e = 1; e <= maxdeg; ++e) powers[v * stride + e] = powers[v * stride + e - 1] * x[v] % q;
    }
    vals.fill(0);
    for (std::size_t i = 0; i < polys.size(); ++i) {
      vals[i] = eval(polys[i], powers);
      if (vals[i] != 0) return false;
    }
    return true;
  }
};

Evaluator make_evaluator(const Poly<PrimeField>& phi) {
  Evaluator ev{phi.field().prime(), std::max(phi.total_degree(), 1), {}};
  for (int v = 0; v < 4; ++v) ev.polys.push_back(flatten(partial_derivative(phi, v)));
  ev.polys.push_back(flatten(phi));
  return ev;
}

// Points whose first nonzero coordinate is `lead`, with the coordinate right
// after it restricted to [lo, hi) (the whole range when lead == 3).
void scan_stratum(const Evaluator& ev, int lead, std::uint32_t lo, std::uint32_t hi, ScanResult& out) {
  const std::uint32_t q = ev.q;
  std::vector<std::uint64_t> powers(4 * (ev.maxdeg + 1));
  std::array<std::uint32_t, 5> vals{};
  ProjectivePoint x{};
  x[lead] = 1;
  const int free = 3 - lead;
  std::array<std::uint32_t, 3> counter{};
  std::uint64_t total = 1;
  for (int i = 1; i < free; ++i) total *= q;
  if (free == 0) {
    ++out.scanned;
    if (ev.singular(x, powers, vals)) {
      out.points.push_back(x);
      out.evaluations.push_back(vals);
    }
    return;
  }
  for (std::uint32_t first = lo; first < hi; ++first) {
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t r = k;
      counter[0] = first;
      for (int i = free - 1; i >= 1; --i) {
        counter[i] = static_cast<std::uint32_t>(r % q);
        r /= q;
      }
      for (int i = 0; i < free; ++i) x[lead + 1 + i] = counter[i];
      ++out.scanned;
      if (ev.singular(x, powers, vals)) {
        out.points.push_back(x);
        out.evaluations.push_back(vals);
      }
    }
  }
}

}  // namespace

ScanResult scan_projective(const Poly<PrimeField>& phi, std::uint32_t q, const ScanOptions& options) {
  if (q > kMaxOraclePrime)
    throw Error(ErrorCode::FieldTooLarge, "oracle scans need q <= " + std::to_string(kMaxOraclePrime));
  if (q <= 3 || !is_prime(q)) throw Error(ErrorCode::InvalidField, "oracle prime must be a prime > 3");
  if (phi.field().prime() != q) throw Error(ErrorCode::FieldMismatch, "surface coefficients are not in F_q");
  if (phi.nvars() != 4 || !phi.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "expected a quaternary form");

  const Evaluator ev = make_evaluator(phi);
  // Work items: (lead, lo, hi); the big x0 = 1 stratum is split by x1.
  struct Item {
    int lead;
    std::uint32_t lo, hi;
  };
  std::vector<Item> items;
  const unsigned jobs = std::max(1u, options.jobs);
  const std::uint32_t chunk = std::max<std::uint32_t>(1, q / (4 * jobs));
  for (std::uint32_t lo = 0; lo < q; lo += chunk) items.push_back({0, lo, std::min(q, lo + chunk)});
  items.push_back({1, 0, q});
  items.push_back({2, 0, q});
  items.push_back({3, 0, 1});

  std::vector<ScanResult> parts(items.size());
  auto run = [&](unsigned worker) {
    for (std::size_t i = worker; i < items.size(); i += jobs) scan_stratum(ev, items[i].lead, items[i].lo, items[i].hi, parts[i]);
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  ScanResult out;
  out.q = q;
  std::vector<std::pair<ProjectivePoint, std::array<std::uint32_t, 5>>> found;
  for (auto& part : parts) {
    out.scanned += part.scanned;
    for (std::size_t i = 0; i < part.points.size(); ++i) found.emplace_back(part.points[i], part.evaluations[i]);
  }
  // Leading-zero strata sort first in array order; order by ascending point.
  std::sort(found.begin(), found.end());
  for (auto& [pt, vals] : found) {
    out.points.push_back(pt);
    out.evaluations.push_back(vals);
  }
  return out;
}

bool is_singular_at(const Poly<PrimeField>& phi, const ProjectivePoint& point) {
  const Evaluator ev = make_evaluator(phi);
  std::vector<std::uint64_t> powers(4 * (ev.maxdeg + 1));
  std::array<std::uint32_t, 5> vals{};
  ProjectivePoint x = point;
  for (auto& c : x) c %= ev.q;
  return ev.singular(x, powers, vals);
}

}  // namespace tricusp
