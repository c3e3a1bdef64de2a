#pragma once

#include <set>
#include <string>
#include <vector>

#include "pg/groebner/ideal.hpp"

namespace pg {

namespace detail {

inline std::string fresh_name(const VarList& v, const std::string& base) {
  std::string name = base;
  while (v.find(name) >= 0) name += "_";
  return name;
}

// Ring with one new variable prepended.
inline Vars prepend_var(const Vars& vars, const std::string& base) {
  std::vector<std::string> names{fresh_name(*vars, base)};
  names.insert(names.end(), vars->names().begin(), vars->names().end());
  return make_vars(std::move(names));
}

// Elements of a block-order basis that do not involve the first block,
// moved back into `target`.
template <Field S>
std::vector<Polynomial<S>> drop_first_block(const GroebnerBasis<S>& gb, std::size_t block, const Vars& target) {
  std::vector<Polynomial<S>> out;
  for (const auto& g : gb.polys) {
    bool free_of_block = true;
    for (std::size_t i = 0; i < block && free_of_block; ++i) free_of_block = !g.uses_variable(i);
    if (free_of_block) out.push_back(g.with_order(MonomialOrder::grevlex()).embed(target));
  }
  return out;
}

}  // namespace detail

/// I ∩ (subring without the named variables), via a block elimination order.
/// The result stays in I's ring.
template <Field S>
Ideal<S> eliminate(const Ideal<S>& ideal, const std::vector<std::string>& block) {
  const auto& vars = ideal.vars();
  std::vector<std::string> names = block;
  for (const auto& b : block) vars->index(b);
  for (const auto& v : vars->names())
    if (std::find(block.begin(), block.end(), v) == block.end()) names.push_back(v);
  if (block.empty()) return ideal;
  auto ring = make_vars(std::move(names));
  std::vector<Polynomial<S>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.embed(ring));
  if (gens.empty()) return Ideal<S>::zero(vars);
  auto gb = groebner_basis(gens, MonomialOrder::block(block.size()));
  return Ideal<S>(vars, detail::drop_first_block(gb, block.size(), vars));
}

/// I ∩ J via t*I + (1 - t)*J, eliminating t.
template <Field S>
Ideal<S> intersect(const Ideal<S>& a, const Ideal<S>& b) {
  if (!same_vars(a.vars(), b.vars())) throw InputError("intersect: variable lists differ");
  if (a.generators().empty() || b.generators().empty()) return Ideal<S>::zero(a.vars());
  auto ring = detail::prepend_var(a.vars(), "t");
  auto t = Polynomial<S>::variable(ring, 0);
  auto one_minus_t = Polynomial<S>::constant(ring, S(1)) - t;
  std::vector<Polynomial<S>> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.embed(ring));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embed(ring));
  auto gb = groebner_basis(gens, MonomialOrder::block(1));
  return Ideal<S>(a.vars(), detail::drop_first_block(gb, 1, a.vars()));
}

/// I : g = (I ∩ <g>) / g.
template <Field S>
Ideal<S> quotient(const Ideal<S>& ideal, const Polynomial<S>& g) {
  if (g.is_zero()) return Ideal<S>::unit(ideal.vars());
  auto inter = intersect(ideal, Ideal<S>(ideal.vars(), {g}));
  std::vector<Polynomial<S>> gens;
  for (const auto& h : inter.generators()) {
    auto q = h.divide_exact(g.with_order(h.order()));
    if (!q) throw std::logic_error("ideal quotient: intersection element not divisible");
    gens.push_back(*q);
  }
  return Ideal<S>(ideal.vars(), std::move(gens));
}

/// I : J = ∩_{g in J} (I : g).
template <Field S>
Ideal<S> quotient(const Ideal<S>& ideal, const Ideal<S>& j) {
  if (!same_vars(ideal.vars(), j.vars())) throw InputError("quotient: variable lists differ");
  if (j.generators().empty()) return Ideal<S>::unit(ideal.vars());
  std::optional<Ideal<S>> acc;
  for (const auto& g : j.generators()) {
    auto q = quotient(ideal, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  return Ideal<S>(ideal.vars(), acc->basis().polys);
}

/// I : J^∞ by iterating ideal quotients until the reduced basis stabilizes.
template <Field S>
Ideal<S> saturate(const Ideal<S>& ideal, const Ideal<S>& j) {
  Ideal<S> cur(ideal.vars(), ideal.basis().polys);
  for (;;) {
    auto next = quotient(cur, j);
    if (next.basis().polys == cur.basis().polys) return cur;
    cur = Ideal<S>(ideal.vars(), next.basis().polys);
  }
}

/// I : g^∞ through I + <1 - y g>, eliminating y. Independent cross-check of saturate.
template <Field S>
Ideal<S> saturate_aux(const Ideal<S>& ideal, const Polynomial<S>& g) {
  auto ring = detail::prepend_var(ideal.vars(), "y");
  auto y = Polynomial<S>::variable(ring, 0);
  std::vector<Polynomial<S>> gens;
  for (const auto& f : ideal.generators()) gens.push_back(f.embed(ring));
  gens.push_back(Polynomial<S>::constant(ring, S(1)) - y * g.embed(ring));
  auto gb = groebner_basis(gens, MonomialOrder::block(1));
  return Ideal<S>(ideal.vars(), detail::drop_first_block(gb, 1, ideal.vars()));
}

/// I : J^∞ = ∩_{g in J} I : g^∞ using saturate_aux.
template <Field S>
Ideal<S> saturate_aux(const Ideal<S>& ideal, const Ideal<S>& j) {
  std::optional<Ideal<S>> acc;
  for (const auto& g : j.generators()) {
    auto q = saturate_aux(ideal, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  if (!acc) return Ideal<S>::unit(ideal.vars());
  return Ideal<S>(ideal.vars(), acc->basis().polys);
}

/// The ideal generated by all variables.
template <Field S>
Ideal<S> irrelevant_ideal(const Vars& vars) {
  std::vector<Polynomial<S>> g;
  for (std::size_t i = 0; i < vars->size(); ++i) g.push_back(Polynomial<S>::variable(vars, i));
  return Ideal<S>(vars, std::move(g));
}

/// Projective emptiness through saturation by the irrelevant ideal. Slower
/// than Ideal::is_projectively_empty, which reads the Hilbert polynomial.
template <Field S>
bool is_projectively_empty_by_saturation(const Ideal<S>& ideal) {
  return saturate(ideal, irrelevant_ideal<S>(ideal.vars())).is_unit();
}

}  // namespace pg
