#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pg/amplituhedron/boundary.hpp"
#include "pg/amplituhedron/curve.hpp"
#include "pg/amplituhedron/genus.hpp"
#include "pg/amplituhedron/matroid.hpp"
#include "pg/cli/cache.hpp"
#include "pg/cli/report.hpp"
#include "pg/delpezzo/pipeline.hpp"
#include "pg/grassmann/twistor.hpp"

namespace pg {

/// Settings shared by all commands.
struct CommandOptions {
  std::string order = "grevlex";
  std::vector<std::uint64_t> primes{32003, 65537};
  bool heavy = false;
  std::optional<std::vector<Rational>> nodes;
  std::optional<json> z;  // Z-matrix JSON, overrides nodes
};

namespace detail {

inline json primes_json(const std::vector<std::uint64_t>& ps) {
  json out = json::array();
  for (auto p : ps) out.push_back(p);
  return out;
}

inline json nodes_json(const std::vector<Rational>& nodes) {
  json out = json::array();
  for (const auto& x : nodes) out.push_back(x.str());
  return out;
}

inline std::vector<Rational> default_nodes(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(static_cast<long>(i));
  return out;
}

/// The Z matrix from JSON if given, else Vandermonde at the nodes (0..n-1 by default).
inline ZMatrix z_for(const CommandOptions& opt, std::size_t n, std::size_t k, int m, json& inputs) {
  ZMatrix z;
  if (opt.z) {
    z = zmatrix_from_json(*opt.z);
    inputs["z"] = to_json(z);
  } else {
    auto nodes = opt.nodes ? *opt.nodes : default_nodes(n);
    z = vandermonde_Z(nodes, k + static_cast<std::size_t>(m), m);
    inputs["nodes"] = nodes_json(nodes);
  }
  if (z.m != m) throw InputError("Z matrix is for m=" + std::to_string(z.m) + ", requested m=" + std::to_string(m));
  if (z.n() != n) throw InputError("Z matrix has " + std::to_string(z.n()) + " rows, expected n=" + std::to_string(n));
  if (z.width() != k + static_cast<std::size_t>(m))
    throw InputError("Z matrix has " + std::to_string(z.width()) + " columns, expected k+m=" + std::to_string(k + m));
  return z;
}

inline json verdicts_json(const std::vector<SmoothnessVerdict>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json j{{"prime", v.prime}, {"verdict", to_string(v.verdict)}};
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (!v.witness.empty()) j["witness"] = v.witness;
    out.push_back(j);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> labels_for(int m, const std::vector<std::size_t>& indices, std::size_t n) {
  if (m == 2) return m2_labels(indices, n);
  if (indices.size() % 2) throw InputError("m=4 indices come in pairs i,j");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < indices.size(); i += 2) pairs.push_back({indices[i], indices[i + 1]});
  return m4_labels(pairs, n);
}

/// Curve invariants, smoothness probes and the genus comparison.
inline void curve_results(Report& r, const CurveSpec& spec, std::size_t k, const std::vector<std::uint64_t>& primes) {
  const auto& h = spec.hilbert;
  std::vector<SmoothnessVerdict> vs;
  if (h.dimension == 1) vs = smoothness_probes(*spec.ideal, h, primes);
  json smooth = json::array();
  for (const auto& v : vs)
    if (v.verdict == Smoothness::kSmooth) smooth.push_back(v.prime);
  auto expected = expected_genus(k, spec.m);
  auto want_degree = grassmannian_degree(k, k + static_cast<std::size_t>(spec.m));
  r.results = {{"ideal", to_json(*spec.ideal)},
               {"dim", h.dimension},
               {"degree", integer_json(h.degree)},
               {"genus", h.genus ? integer_json(*h.genus) : json(nullptr)},
               {"expected_degree", integer_json(want_degree)},
               {"expected_genus", expected.str()},
               {"smooth_mod", smooth},
               {"probes", verdicts_json(vs)},
               {"dimension_chain", spec.dimension_chain},
               {"generic", spec.generic}};
  if (!spec.generic) r.results["note"] = spec.note;
  if (h.dimension != 1) r.witness.push_back("dimension " + std::to_string(h.dimension) + ", expected 1");
  if (h.degree != want_degree) r.witness.push_back("degree " + h.degree.get_str() + ", expected " + want_degree.get_str());
  if (!h.genus || Rational(*h.genus) != expected)
    r.witness.push_back("arithmetic genus differs from the expected " + expected.str());
  if (!spec.generic) r.witness.push_back(spec.note);
  auto merged = merge_verdicts(vs);
  if (merged == Smoothness::kSingular) r.witness.push_back("curve is singular modulo a probe prime");
  if (!r.witness.empty()) {
    r.status = "fail";
  } else if (merged != Smoothness::kSmooth) {
    r.status = "partial";
    r.results["genus_verdict"] = "arithmetic genus certified; smoothness undecided";
  } else {
    r.results["genus_verdict"] = "arithmetic genus certified; geometric genus equal assuming irreducibility";
  }
}

}  // namespace detail

inline Report grass_degree(std::size_t k, std::size_t n) {
  return timed_report("grass degree", {{"k", k}, {"n", n}}, [&](Report& r) {
    if (k < 1 || k > n) throw InputError("need 1 <= k <= n");
    r.results = {{"k", k}, {"n", n}, {"degree", grassmannian_degree(k, n).get_str()}};
  });
}

inline Report amp_boundary(int m, std::size_t k, std::size_t n, const CommandOptions& opt) {
  json inputs{{"m", m}, {"k", k}, {"n", n}};
  return timed_report("amp boundary", inputs, [&](Report& r) {
    if (m != 2 && m != 4) throw InputError("m must be 2 or 4");
    if (n < k + static_cast<std::size_t>(m)) throw InputError("n must be at least k+m");
    auto z = detail::z_for(opt, n, k, m, r.inputs);
    auto ctx = plucker_ideal(k, k + static_cast<std::size_t>(m));
    auto b = boundary_divisors(*ctx, z, m);
    json forms = json::array();
    for (const auto& f : b.forms) forms.push_back({{"indices", f.indices}, {"form", to_json(f.form)}});
    auto expected = m == 2 ? n : n * (n - 3) / 2;
    r.results = {{"count", b.forms.size()}, {"expected_count", expected}, {"forms", forms}};
    if (b.forms.size() != expected) {
      r.status = "fail";
      r.witness.push_back("boundary count " + std::to_string(b.forms.size()));
    }
  });
}

inline Report amp_curve(int m, std::size_t k, std::size_t n, const std::vector<std::size_t>& indices,
                        const CommandOptions& opt) {
  json inputs{{"m", m}, {"k", k}, {"n", n}, {"indices", indices}, {"primes", detail::primes_json(opt.primes)}};
  return timed_report("amp curve", inputs, [&](Report& r) {
    if (m != 2 && m != 4) throw InputError("m must be 2 or 4");
    if (m == 4 && !opt.heavy) throw InputError("m=4 curves need --heavy");
    auto z = detail::z_for(opt, n, k, m, r.inputs);
    auto ctx = plucker_ideal(k, k + static_cast<std::size_t>(m));
    auto spec = build_curve(ctx, z, detail::labels_for(m, indices, n));
    detail::curve_results(r, spec, k, opt.primes);
  });
}

inline Report amp_matroid(std::size_t k, std::size_t n, const std::vector<std::size_t>& indices) {
  return timed_report("amp matroid", {{"k", k}, {"n", n}, {"indices", indices}}, [&](Report& r) {
    auto nm = curve_matroid(indices, n);
    auto inv = matroid_invariants(nm, static_cast<long>(k));
    json intervals = json::array();
    for (const auto& [a, b] : nm.intervals) intervals.push_back({a, b});
    r.results = {{"intervals", intervals}, {"r", inv.r},    {"S", inv.s}, {"L", inv.l},
                 {"d", inv.d},             {"c", inv.c},    {"e", inv.e}, {"in_P", inv.in_p}};
  });
}

inline Report amp_genus(std::size_t k, int m) {
  return timed_report("amp genus", {{"k", k}, {"m", m}}, [&](Report& r) {
    auto g = expected_genus(k, m);
    auto b = genus_bound(k, m);
    r.results = {{"expected_genus", g.str()}, {"integral", g.is_integer() && g.sign() >= 0}, {"genus_bound", b.value.str()}};
    if (!b.note.empty()) r.results["note"] = b.note;
    if (!g.is_integer() || g.sign() < 0) {
      r.status = "fail";
      r.witness.push_back("expected genus " + g.str() + " is not a nonnegative integer");
    }
  });
}

inline Report gb_command(const json& ideal_json, const CommandOptions& opt, Cache& cache) {
  auto ideal = ideal_from_json(ideal_json);
  auto ord = MonomialOrder::parse(opt.order);
  return timed_report("gb", {{"ideal", to_json(ideal)}, {"order", ord.name()}}, [&](Report& r) {
    if (ideal.generators().empty()) throw InputError("ideal has no generators");
    auto computed_before = cache.computations();
    auto basis = cached_basis(cache, ideal, ord);
    r.results = {{"basis", basis}};
    if (ideal.is_homogeneous()) {
      QIdeal seeded(ideal.vars(), basis_from_json(basis).polys);
      r.results["hilbert"] = to_json(seeded.hilbert());
    }
    r.timings["cache"] = cache.computations() > computed_before ? "miss" : "hit";
  });
}

inline Report example5_verify(const CommandOptions& opt) {
  const std::size_t k = 3, n = 10;
  const std::vector<std::size_t> indices{1, 3, 5, 7, 9};
  json inputs{{"k", k}, {"n", n}, {"m", 2}, {"indices", indices}, {"primes", detail::primes_json(opt.primes)}};
  return timed_report("example5 verify", inputs, [&](Report& r) {
    auto z = detail::z_for(opt, n, k, 2, r.inputs);
    auto pos = check_positive_minors(z);
    auto ctx = plucker_ideal(k, k + 2);
    auto spec = build_curve_m2(ctx, z, indices);
    detail::curve_results(r, spec, k, opt.primes);
    r.results["positive_minors"] = pos.positive;
    if (!pos.positive) {
      r.status = "fail";
      r.witness.push_back("Z has a nonpositive maximal minor");
    }
  });
}

inline Report region_report(const std::string& command, const RegionSpec& region, const RegionOptions& ropt,
                            json inputs) {
  return timed_report(command, std::move(inputs), [&](Report& r) {
    auto rep = verify_region(region, ropt);
    r.results = to_json(rep);
    r.timings = rep.timings;
    for (const auto& c : rep.checks)
      if (!c.pass) r.witness.push_back(c.name + ": " + c.witness);
    r.status = rep.pass ? "pass" : "fail";
  });
}

inline Report delpezzo_verify(const std::optional<json>& region_json, const std::vector<Rational>& lambdas,
                              const CommandOptions& opt) {
  auto region = region_json ? region_from_json(*region_json) : builtin_region();
  RegionOptions ropt;
  if (!lambdas.empty()) ropt.lambdas = lambdas;
  ropt.primes = opt.primes;
  json lj = json::array();
  for (const auto& l : ropt.lambdas) lj.push_back(l.str());
  return region_report("delpezzo verify", region, ropt,
                       {{"region", to_json(region)}, {"lambdas", lj}, {"primes", detail::primes_json(opt.primes)}});
}

inline Report cube_demo(const CommandOptions& opt) {
  auto region = plain_cube_region();
  RegionOptions ropt;
  ropt.primes = opt.primes;
  return region_report("cube demo", region, ropt, {{"region", to_json(region)}});
}

}  // namespace pg
