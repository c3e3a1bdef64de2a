#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pg/groebner/buchberger.hpp"
#include "pg/groebner/hilbert.hpp"

namespace pg {

/// Polynomial ideal given by generators, with reduced Groebner bases cached
/// per monomial order. Copies share the cache; the generators are immutable.
/// Concurrent requests for the same order compute the basis once.
template <Field S>
class Ideal {
 public:
  using Poly = Polynomial<S>;

  Ideal(Vars vars, std::vector<Poly> gens) : state_(std::make_shared<State>()) {
    state_->vars = std::move(vars);
    for (auto& g : gens) {
      if (!same_vars(g.vars(), state_->vars)) throw InputError("ideal generators over different variable lists");
      if (!g.is_zero()) state_->gens.push_back(std::move(g));
    }
  }
  static Ideal of(std::vector<Poly> gens) {
    if (gens.empty()) throw InputError("ideal needs a variable list");
    Vars v = gens.front().vars();
    return Ideal(std::move(v), std::move(gens));
  }

  static Ideal zero(Vars vars) { return Ideal(std::move(vars), {}); }
  static Ideal unit(Vars vars) {
    auto one = Poly::constant(vars, S(1));
    return Ideal(vars, {one});
  }

  const Vars& vars() const { return state_->vars; }
  const std::vector<Poly>& generators() const { return state_->gens; }

  const GroebnerBasis<S>& basis(MonomialOrder ord = MonomialOrder::grevlex()) const {
    std::shared_future<std::shared_ptr<const GroebnerBasis<S>>> fut;
    std::promise<std::shared_ptr<const GroebnerBasis<S>>> promise;
    bool compute = false;
    {
      std::lock_guard lock(state_->mu);
      auto it = state_->cache.find(ord);
      if (it == state_->cache.end()) {
        fut = promise.get_future().share();
        state_->cache.emplace(ord, fut);
        compute = true;
      } else {
        fut = it->second;
      }
    }
    if (compute) {
      try {
        std::shared_ptr<const GroebnerBasis<S>> gb;
        if (state_->gens.empty()) {
          gb = std::make_shared<const GroebnerBasis<S>>(GroebnerBasis<S>{ord, state_->vars, {}});
        } else {
          gb = std::make_shared<const GroebnerBasis<S>>(groebner_basis(state_->gens, ord));
        }
        ++state_->computations;
        promise.set_value(std::move(gb));
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return *fut.get();
  }

  /// Number of basis computations actually performed on this ideal.
  int computations() const { return state_->computations.load(); }

  bool is_homogeneous() const {
    return std::all_of(state_->gens.begin(), state_->gens.end(), [](const Poly& g) { return g.is_homogeneous(); });
  }

  bool contains(const Poly& f) const { return normal_form(f, basis()).is_zero(); }
  bool is_unit() const { return basis().is_unit(); }

  /// Hilbert data of the projective scheme; requires homogeneous generators.
  const HilbertData& hilbert() const {
    std::call_once(state_->hilbert_once, [this] {
      if (!is_homogeneous()) throw InputError("hilbert data needs a homogeneous ideal");
      std::vector<Monomial> lead;
      for (const auto& g : basis().polys) lead.push_back(g.leading_monomial());
      state_->hilbert = hilbert_from_lead_terms(lead, state_->vars->size());
    });
    return state_->hilbert;
  }

  bool is_projectively_empty() const { return hilbert().empty(); }

  /// Same ideal with extra generators.
  Ideal plus(const std::vector<Poly>& more) const {
    auto g = state_->gens;
    g.insert(g.end(), more.begin(), more.end());
    return Ideal(state_->vars, std::move(g));
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return same_vars(a.vars(), b.vars()) && a.basis().polys == b.basis().polys;
  }

 private:
  struct State {
    Vars vars;
    std::vector<Poly> gens;
    std::mutex mu;
    std::map<MonomialOrder, std::shared_future<std::shared_ptr<const GroebnerBasis<S>>>> cache;
    std::atomic<int> computations{0};
    std::once_flag hilbert_once;
    HilbertData hilbert;
  };
  std::shared_ptr<State> state_;
};

using QIdeal = Ideal<Rational>;
using FpIdeal = Ideal<Fp>;

}  // namespace pg
