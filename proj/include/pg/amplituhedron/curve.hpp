#pragma once

#include <future>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pg/amplituhedron/boundary.hpp"
#include "pg/amplituhedron/matroid.hpp"
#include "pg/exactalg/poly_matrix.hpp"
#include "pg/groebner/ideal.hpp"

namespace pg {

/// Result of solving a system of linear forms for pivot variables.
struct LinearElimination {
  Vars reduced;                             // the free variables
  std::map<std::string, QPoly> substitution;  // every original variable, over `reduced`
  std::size_t rank = 0;
};

/// Row-reduces the linear forms and expresses each pivot variable through the
/// free ones. Pivots are the leftmost available columns.
inline LinearElimination eliminate_linear(const Vars& vars, const std::vector<QPoly>& forms) {
  const std::size_t nv = vars->size();
  Matrix<Rational> a(forms.size(), nv);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (!same_vars(forms[i].vars(), vars)) throw InputError("linear form over a different variable list");
    for (const auto& t : forms[i].terms()) {
      if (t.mono.degree() != 1) throw InputError("eliminate_linear needs homogeneous linear forms");
      for (std::size_t v = 0; v < nv; ++v)
        if (t.mono[v]) a(i, v) = t.coeff;
    }
  }
  auto pivots = rref(a);
  std::vector<bool> is_pivot(nv, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::string> free_names;
  for (std::size_t v = 0; v < nv; ++v)
    if (!is_pivot[v]) free_names.push_back((*vars)[v]);
  LinearElimination out;
  out.reduced = make_vars(free_names);
  out.rank = pivots.size();
  for (std::size_t v = 0; v < nv; ++v)
    if (!is_pivot[v]) out.substitution.insert_or_assign((*vars)[v], QPoly::variable(out.reduced, (*vars)[v]));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    QPoly x(out.reduced);
    for (std::size_t v = 0; v < nv; ++v)
      if (!is_pivot[v] && !a(r, v).is_zero()) x -= QPoly::variable(out.reduced, (*vars)[v]) * a(r, v);
    out.substitution.insert_or_assign((*vars)[pivots[r]], x);
  }
  return out;
}

/// Intersection of the Grassmannian with a selection of boundary divisors.
struct CurveSpec {
  std::shared_ptr<const GrassmannContext> ctx;
  int m = 2;
  std::vector<std::vector<std::size_t>> labels;
  std::vector<QPoly> forms;       // twistor forms in the Plücker ring
  LinearElimination elimination;  // forms solved for pivot Plücker variables
  std::shared_ptr<QIdeal> ideal;  // Plücker relations restricted to the free variables
  std::vector<int> dimension_chain;  // projective dimension after 0, 1, ... forms
  HilbertData hilbert;
  bool generic = true;
  std::string note;
};

/// Labels (i, i+1) of an m = 2 selection, after validation.
inline std::vector<std::vector<std::size_t>> m2_labels(const std::vector<std::size_t>& idx, std::size_t n) {
  validate_m2_selection(idx, n);
  std::vector<std::vector<std::size_t>> out;
  for (auto i : idx) out.push_back({i, cyclic_next(i, n)});
  return out;
}

/// Labels (i, i+1, j, j+1) of an m = 4 selection given as pairs (i, j);
/// the quadruples must be pairwise disjoint.
inline std::vector<std::vector<std::size_t>> m4_labels(const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                                       std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (auto [i, j] : pairs) {
    if (i < 1 || i > n || j < 1 || j > n) throw InputError("index out of range");
    std::vector<std::size_t> q{i, cyclic_next(i, n), j, cyclic_next(j, n)};
    std::set<std::size_t> distinct(q.begin(), q.end());
    if (distinct.size() != 4) throw InputError("intervals [" + std::to_string(i) + "," + std::to_string(q[1]) + "] and [" +
                                               std::to_string(j) + "," + std::to_string(q[3]) + "] are not disjoint");
    for (const auto& prev : out)
      for (auto x : q)
        if (std::find(prev.begin(), prev.end(), x) != prev.end())
          throw InputError("quadruples (" + std::to_string(prev[0]) + "," + std::to_string(prev[2]) + ") and (" +
                           std::to_string(i) + "," + std::to_string(j) + ") overlap");
    out.push_back(q);
  }
  return out;
}

namespace detail {

inline QIdeal restricted_relations(const GrassmannContext& ctx, const LinearElimination& e) {
  std::vector<QPoly> gens;
  for (const auto& r : ctx.relations().generators()) {
    auto g = substitute(r, e.substitution, e.reduced);
    if (!g.is_zero()) gens.push_back(primitive_integer(g));
  }
  return QIdeal(e.reduced, std::move(gens));
}

}  // namespace detail

/// Builds E = Gr(k, k+m) cut by the selected boundary forms. The forms are
/// eliminated by linear substitution; transversality is checked by requiring
/// each form to drop the dimension by exactly one.
inline CurveSpec build_curve(std::shared_ptr<const GrassmannContext> ctx, const ZMatrix& z,
                             std::vector<std::vector<std::size_t>> labels) {
  const std::size_t k = ctx->k();
  const int m = static_cast<int>(ctx->n() - k);
  if (m != 2 && m != 4) throw InputError("curves are built on Gr(k,k+2) or Gr(k,k+4)");
  const std::size_t want = static_cast<std::size_t>(m) * k - 1;
  if (labels.size() != want)
    throw InputError("need " + std::to_string(want) + " boundary divisors for a curve, got " + std::to_string(labels.size()));
  CurveSpec spec;
  spec.ctx = ctx;
  spec.m = m;
  spec.labels = std::move(labels);
  for (const auto& l : spec.labels) spec.forms.push_back(twistor_form(*ctx, z, l).form);

  const int ambient = static_cast<int>(k) * m;
  spec.dimension_chain.push_back(ambient);
  for (std::size_t j = 1; j <= spec.forms.size(); ++j) {
    std::vector<QPoly> head(spec.forms.begin(), spec.forms.begin() + static_cast<long>(j));
    auto e = eliminate_linear(ctx->vars(), head);
    if (e.rank < j) {
      spec.generic = false;
      spec.note = "Z insufficiently generic: boundary form " + std::to_string(j) + " is linearly dependent on the previous ones";
      spec.dimension_chain.push_back(spec.dimension_chain.back());
      continue;
    }
    auto ideal = detail::restricted_relations(*ctx, e);
    int dim = ideal.hilbert().dimension;
    spec.dimension_chain.push_back(dim);
    if (dim != ambient - static_cast<int>(j) && spec.generic) {
      spec.generic = false;
      spec.note = "Z insufficiently generic: form " + std::to_string(j) + " gives dimension " + std::to_string(dim) +
                  ", expected " + std::to_string(ambient - static_cast<int>(j));
    }
    if (j == spec.forms.size()) {
      spec.elimination = e;
      spec.ideal = std::make_shared<QIdeal>(ideal);
      spec.hilbert = ideal.hilbert();
    }
  }
  if (!spec.ideal) {
    spec.elimination = eliminate_linear(ctx->vars(), spec.forms);
    spec.ideal = std::make_shared<QIdeal>(detail::restricted_relations(*ctx, spec.elimination));
    spec.hilbert = spec.ideal->hilbert();
  }
  return spec;
}

inline CurveSpec build_curve_m2(std::shared_ptr<const GrassmannContext> ctx, const ZMatrix& z,
                                const std::vector<std::size_t>& idx) {
  return build_curve(std::move(ctx), z, m2_labels(idx, z.n()));
}

enum class Smoothness { kSmooth, kSingular, kIndeterminate };

inline std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::kSmooth: return "smooth_mod_p";
    case Smoothness::kSingular: return "singular_mod_p";
    case Smoothness::kIndeterminate: return "indeterminate";
  }
  return "?";
}

struct SmoothnessVerdict {
  Smoothness verdict = Smoothness::kIndeterminate;
  std::uint64_t prime = 0;
  std::string detail;                // reason for indeterminate
  std::vector<std::string> witness;  // singular-locus basis when singular
};

/// Jacobian criterion over F_p for a homogeneous ideal whose projective
/// scheme is equidimensional of the dimension recorded in `h`.
inline SmoothnessVerdict smoothness_probe(const QIdeal& ideal, const HilbertData& h, std::uint64_t p,
                                          std::size_t max_minors = 20000) {
  SmoothnessVerdict out;
  out.prime = p;
  PrimeFieldScope scope(p);
  std::vector<FpPoly> gens;
  try {
    for (const auto& g : ideal.generators()) gens.push_back(reduce_mod_p(g));
  } catch (const InputError&) {
    out.detail = "p divides a coefficient denominator";
    return out;
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].is_zero() || !(gens[i].leading_monomial() == ideal.generators()[i].leading_monomial())) {
      out.detail = "p divides a leading coefficient";
      return out;
    }
  FpIdeal modp(ideal.vars(), gens);
  const auto& hp = modp.hilbert();
  if (hp.dimension != h.dimension || hp.degree != h.degree || hp.genus != h.genus) {
    out.detail = "Hilbert data mod p differs from characteristic 0";
    return out;
  }
  const std::size_t nv = ideal.vars()->size();
  if (h.dimension < 0) {
    out.verdict = Smoothness::kSmooth;
    return out;
  }
  const std::size_t c = nv - 1 - static_cast<std::size_t>(h.dimension);
  std::vector<FpPoly> sing = gens;
  if (c == 0) {
    sing.push_back(FpPoly::constant(ideal.vars(), Fp(1)));  // the empty minor
  } else {
    if (c > gens.size()) {
      out.detail = "fewer generators than the codimension";
      return out;
    }
    if (binomial(gens.size(), c) * binomial(nv, c) > max_minors) {
      out.detail = "too many Jacobian minors";
      return out;
    }
    auto jac = jacobian(gens, ideal.vars()->names());
    for (auto& mnr : minors(jac, c))
      if (!mnr.is_zero()) sing.push_back(std::move(mnr));
  }
  FpIdeal singular(ideal.vars(), std::move(sing));
  if (singular.is_projectively_empty()) {
    out.verdict = Smoothness::kSmooth;
  } else {
    out.verdict = Smoothness::kSingular;
    for (const auto& g : singular.basis().polys) out.witness.push_back(g.str());
  }
  return out;
}

/// Probes run concurrently; results come back in the order of `primes`.
inline std::vector<SmoothnessVerdict> smoothness_probes(const QIdeal& ideal, const HilbertData& h,
                                                        const std::vector<std::uint64_t>& primes) {
  std::vector<std::future<SmoothnessVerdict>> futs;
  for (auto p : primes) futs.push_back(std::async(std::launch::async, [&ideal, &h, p] { return smoothness_probe(ideal, h, p); }));
  std::vector<SmoothnessVerdict> out;
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

/// Smooth only if every probe agrees.
inline Smoothness merge_verdicts(const std::vector<SmoothnessVerdict>& vs) {
  if (vs.empty()) return Smoothness::kIndeterminate;
  bool all_smooth = true;
  for (const auto& v : vs) {
    if (v.verdict == Smoothness::kSingular) return Smoothness::kSingular;
    if (v.verdict != Smoothness::kSmooth) all_smooth = false;
  }
  return all_smooth ? Smoothness::kSmooth : Smoothness::kIndeterminate;
}

inline SmoothnessVerdict smoothness_probe(const CurveSpec& spec, std::uint64_t p) {
  if (spec.hilbert.dimension != 1) throw InputError("smoothness_probe expects a curve");
  return smoothness_probe(*spec.ideal, spec.hilbert, p);
}

}  // namespace pg
