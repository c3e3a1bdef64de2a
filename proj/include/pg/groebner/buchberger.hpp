#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pg/exactalg/polynomial.hpp"

namespace pg {

/// A reduced Groebner basis together with the order it is reduced for.
template <Field S>
struct GroebnerBasis {
  MonomialOrder order;
  Vars vars;
  std::vector<Polynomial<S>> polys;

  bool is_unit() const { return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero(); }
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order == b.order && same_vars(a.vars, b.vars) && a.polys == b.polys;
  }
};

/// Full reduction of f modulo the polynomials in `by` (all in f's order).
/// With a Groebner basis this is the unique normal form.
template <Field S>
Polynomial<S> reduce_full(const Polynomial<S>& f, const std::vector<Polynomial<S>>& by) {
  std::vector<Term<S>> rem;
  Polynomial<S> p = f;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    const Polynomial<S>* div = nullptr;
    for (const auto& g : by)
      if (g.leading_monomial().divides(lt.mono)) {
        div = &g;
        break;
      }
    if (div) {
      auto m = div->leading_monomial().quotient_of(lt.mono);
      S c = lt.coeff / div->leading_coeff();
      p -= div->mul_term(m, c);
    } else {
      rem.push_back(lt);
      p -= Polynomial<S>::monomial(p.vars(), lt.mono, lt.coeff, p.order());
    }
  }
  // rem is already in decreasing order
  return Polynomial<S>(f.vars(), std::move(rem), f.order());
}

template <Field S>
Polynomial<S> s_polynomial(const Polynomial<S>& f, const Polynomial<S>& g) {
  auto l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  auto a = f.mul_term(f.leading_monomial().quotient_of(l), f.leading_coeff().inverse());
  auto b = g.mul_term(g.leading_monomial().quotient_of(l), g.leading_coeff().inverse());
  return a - b;
}

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

template <Field S>
class Buchberger {
 public:
  Buchberger(const std::vector<Polynomial<S>>& gens, MonomialOrder ord) : ord_(ord) {
    for (const auto& g : gens) {
      auto p = g.with_order(ord);
      if (!p.is_zero()) input_.push_back(p.monic());
    }
    // low-degree generators first makes the run (and thus the result) deterministic
    std::stable_sort(input_.begin(), input_.end(), [&](const auto& a, const auto& b) {
      return ord_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
  }

  std::vector<Polynomial<S>> run() {
    for (const auto& g : input_) {
      auto h = reduce_full(g, active_polys());
      if (!h.is_zero()) add(h.monic(), static_cast<unsigned>(h.degree()));
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const CriticalPair& a, const CriticalPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ord_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      CriticalPair cp = *it;
      pairs_.erase(it);
      auto h = reduce_full(s_polynomial(store_[cp.i], store_[cp.j]), active_polys());
      if (h.is_zero()) continue;
      if (h.is_constant()) {
        return {Polynomial<S>::constant(h.vars(), S(1), ord_)};
      }
      add(h.monic(), cp.sugar);
    }
    return finish();
  }

 private:
  std::vector<Polynomial<S>> active_polys() const {
    std::vector<Polynomial<S>> out;
    for (std::size_t i = 0; i < store_.size(); ++i)
      if (active_[i]) out.push_back(store_[i]);
    return out;
  }

  // Gebauer-Moeller update.
  void add(Polynomial<S> h, unsigned sugar) {
    if (h.is_constant()) {
      store_.clear();
      active_.clear();
      pairs_.clear();
      store_.push_back(Polynomial<S>::constant(h.vars(), S(1), ord_));
      active_.push_back(true);
      sugar_.push_back(0);
      return;
    }
    const std::size_t hi = store_.size();
    const auto& lh = h.leading_monomial();

    std::vector<CriticalPair> c;
    for (std::size_t g = 0; g < store_.size(); ++g) {
      if (!active_[g]) continue;
      const auto& lg = store_[g].leading_monomial();
      auto l = Monomial::lcm(lh, lg);
      unsigned s = std::max(sugar + l.degree() - lh.degree(), sugar_[g] + l.degree() - lg.degree());
      c.push_back({g, hi, l, s});
    }

    // Chain criterion among new pairs (processed sequentially, so of several
    // pairs with equal lcm exactly one survives).
    std::vector<CriticalPair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool coprime = lh.coprime(store_[c[a].i].leading_monomial());
      bool dominated = false;
      for (std::size_t b = a + 1; b < c.size() && !dominated; ++b) dominated = c[b].lcm.divides(c[a].lcm);
      for (std::size_t q = 0; q < d.size() && !dominated; ++q) dominated = d[q].lcm.divides(c[a].lcm);
      if (coprime || !dominated) d.push_back(c[a]);
    }
    // Product criterion.
    std::vector<CriticalPair> e;
    for (auto& p : d)
      if (!lh.coprime(store_[p.i].leading_monomial())) e.push_back(p);

    // Old pairs made redundant by h.
    std::vector<CriticalPair> kept;
    for (auto& p : pairs_) {
      const auto& l = p.lcm;
      bool drop = lh.divides(l) && !(Monomial::lcm(store_[p.i].leading_monomial(), lh) == l) &&
                  !(Monomial::lcm(store_[p.j].leading_monomial(), lh) == l);
      if (!drop) kept.push_back(std::move(p));
    }
    pairs_ = std::move(kept);
    for (auto& p : e) pairs_.push_back(std::move(p));

    for (std::size_t g = 0; g < store_.size(); ++g)
      if (active_[g] && lh.divides(store_[g].leading_monomial())) active_[g] = false;
    store_.push_back(std::move(h));
    active_.push_back(true);
    sugar_.push_back(sugar);
  }

  std::vector<Polynomial<S>> finish() {
    auto g = active_polys();
    std::sort(g.begin(), g.end(), [&](const auto& a, const auto& b) {
      return ord_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    std::vector<Polynomial<S>> reduced;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<Polynomial<S>> others;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      auto r = reduce_full(g[i], others);
      reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& a, const auto& b) {
      return ord_.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
  }

  MonomialOrder ord_;
  std::vector<Polynomial<S>> input_;
  std::vector<Polynomial<S>> store_;
  std::vector<bool> active_;
  std::vector<unsigned> sugar_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// Reduced, monic Groebner basis of the ideal generated by `gens`, sorted by
/// decreasing leading monomial. The zero ideal gives an empty basis and the
/// unit ideal gives [1].
template <Field S>
GroebnerBasis<S> groebner_basis(const std::vector<Polynomial<S>>& gens, MonomialOrder ord = MonomialOrder::grevlex()) {
  if (gens.empty()) throw InputError("groebner_basis needs at least one generator");
  const auto& vars = gens.front().vars();
  for (const auto& g : gens)
    if (!same_vars(g.vars(), vars)) throw InputError("generators over different variable lists");
  detail::Buchberger<S> alg(gens, ord);
  return {ord, vars, alg.run()};
}

template <Field S>
Polynomial<S> normal_form(const Polynomial<S>& f, const GroebnerBasis<S>& gb) {
  if (!same_vars(f.vars(), gb.vars)) throw InputError("normal_form: variable lists differ");
  return reduce_full(f.with_order(gb.order), gb.polys).with_order(f.order());
}

/// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
template <Field S>
bool satisfies_buchberger_criterion(const GroebnerBasis<S>& gb) {
  for (std::size_t i = 0; i < gb.polys.size(); ++i)
    for (std::size_t j = i + 1; j < gb.polys.size(); ++j)
      if (!reduce_full(s_polynomial(gb.polys[i], gb.polys[j]), gb.polys).is_zero()) return false;
  return true;
}

}  // namespace pg
