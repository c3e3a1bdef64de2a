#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pg/exactalg/monomial.hpp"
#include "pg/exactalg/scalar.hpp"

namespace pg {

template <Field S>
struct Term {
  Monomial mono;
  S coeff;
};

/// Sparse multivariate polynomial over a field. Terms are kept sorted in
/// decreasing order for the polynomial's monomial order, with no zero
/// coefficients, so iteration, printing and equality are canonical.
template <Field S>
class Polynomial {
 public:
  using Scalar = S;

  explicit Polynomial(Vars vars, MonomialOrder order = MonomialOrder::grevlex())
      : vars_(std::move(vars)), order_(order) {}

  Polynomial(Vars vars, std::vector<Term<S>> terms, MonomialOrder order = MonomialOrder::grevlex())
      : vars_(std::move(vars)), order_(order), terms_(std::move(terms)) {
    for (const auto& t : terms_)
      if (t.mono.size() != vars_->size()) throw InputError("exponent vector length does not match variable count");
    normalize();
  }

  static Polynomial constant(Vars vars, const S& c, MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(vars, order);
    if (!c.is_zero()) p.terms_.push_back({Monomial(vars->size()), c});
    return p;
  }

  static Polynomial variable(Vars vars, std::size_t i, MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(vars, order);
    p.terms_.push_back({Monomial::unit(vars->size(), i), S(1)});
    return p;
  }

  static Polynomial variable(Vars vars, const std::string& name, MonomialOrder order = MonomialOrder::grevlex()) {
    auto i = vars->index(name);
    return variable(std::move(vars), i, order);
  }

  static Polynomial monomial(Vars vars, Monomial m, const S& c, MonomialOrder order = MonomialOrder::grevlex()) {
    Polynomial p(vars, order);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
  }

  const Vars& vars() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term<S>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term<S>& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const S& leading_coeff() const { return terms_.front().coeff; }

  /// Constant term (zero if absent).
  S constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return S(0);
  }

  /// Coefficient of a monomial (zero if absent).
  S coeff(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return S(0);
  }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.mono.degree() == d; });
  }

  /// Degree in variable i.
  unsigned degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[i]);
    return d;
  }

  bool uses_variable(std::size_t i) const {
    return std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.mono[i] > 0; });
  }

  Polynomial with_order(MonomialOrder order) const {
    Polynomial p(*this);
    p.order_ = order;
    p.sort_terms();
    return p;
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().inverse();
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const S& c) {
    if (c.is_zero()) return Polynomial(a.vars_, a.order_);
    Polynomial r(a);
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }
  friend Polynomial operator*(const S& c, const Polynomial& a) { return a * c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.vars_, a.order_);
    if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff).with_order(a.order_);
    std::unordered_map<Monomial, S, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        auto m = x.mono * y.mono;
        auto prod = x.coeff * y.coeff;
        auto [it, inserted] = acc.try_emplace(std::move(m), prod);
        if (!inserted) it->second = it->second + prod;
      }
    }
    Polynomial r(a.vars_, a.order_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.terms_.push_back({m, c});
    r.sort_terms();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// this * c * m.
  Polynomial mul_term(const Monomial& m, const S& c) const {
    Polynomial r(vars_, order_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;  // multiplication by a monomial preserves any monomial order
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(vars_, S(1), order_);
    Polynomial base = *this;
    while (e) {
      if (e & 1U) r *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return r;
  }

  /// Formal partial derivative with respect to variable i.
  Polynomial derivative(std::size_t i) const {
    Polynomial r(vars_, order_);
    for (const auto& t : terms_) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(i, e - 1);
      S c = t.coeff * S(static_cast<long>(e));
      if (!c.is_zero()) r.terms_.push_back({std::move(m), c});
    }
    r.sort_terms();
    return r;
  }

  S evaluate(const std::vector<S>& point) const {
    if (point.size() != nvars()) throw InputError("evaluation point has wrong length");
    std::vector<std::vector<S>> powers(nvars());
    S total(0);
    for (const auto& t : terms_) {
      S v = t.coeff;
      for (std::size_t i = 0; i < nvars(); ++i) {
        unsigned e = t.mono[i];
        if (!e) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(S(1));
        while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
        v = v * pw[e];
      }
      total = total + v;
    }
    return total;
  }

  /// Same polynomial expressed over another variable list containing every
  /// variable this polynomial actually uses (matched by name).
  Polynomial embed(const Vars& target) const {
    if (same_vars(vars_, target)) {
      Polynomial r(*this);
      r.vars_ = target;
      return r;
    }
    std::vector<std::ptrdiff_t> map(nvars(), -1);
    for (std::size_t i = 0; i < nvars(); ++i) map[i] = target->find((*vars_)[i]);
    std::vector<Term<S>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->size());
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (!t.mono[i]) continue;
        if (map[i] < 0) throw InputError("variable '" + (*vars_)[i] + "' missing from target ring");
        m.set(static_cast<std::size_t>(map[i]), t.mono[i]);
      }
      out.push_back({std::move(m), t.coeff});
    }
    return Polynomial(target, std::move(out), order_);
  }

  /// Remainder of division by the single polynomial g, together with the quotient.
  std::pair<Polynomial, Polynomial> divide(const Polynomial& g) const {
    check_compatible(*this, g);
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial gg = g.with_order(order_);
    Polynomial q(vars_, order_), rem(vars_, order_), p(*this);
    const auto& lm = gg.leading_monomial();
    S inv = gg.leading_coeff().inverse();
    while (!p.is_zero()) {
      const auto& lt = p.leading_term();
      if (lm.divides(lt.mono)) {
        auto m = lm.quotient_of(lt.mono);
        S c = lt.coeff * inv;
        q.terms_.push_back({m, c});
        p -= gg.mul_term(m, c);
      } else {
        rem.terms_.push_back(lt);
        p.terms_.erase(p.terms_.begin());
      }
    }
    q.sort_terms();
    return {q, rem};
  }

  /// f / g if g divides f exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const {
    auto [q, r] = divide(g);
    if (!r.is_zero()) return std::nullopt;
    return q;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
      std::string c = t.coeff.str();
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c.erase(0, 1);
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = (c == "1");
      bool wrote = false;
      if (!unit || t.mono.is_one()) {
        os << c;
        wrote = true;
      }
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (!t.mono[i]) continue;
        if (wrote) os << '*';
        os << (*vars_)[i];
        if (t.mono[i] > 1) os << '^' << t.mono[i];
        wrote = true;
      }
    }
    return os.str();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_vars(a.vars_, b.vars_)) return false;
    if (a.size() != b.size()) return false;
    if (a.order_ != b.order_) return a == b.with_order(a.order_);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  static void check_compatible(const Polynomial& a, const Polynomial& b) {
    if (!same_vars(a.vars_, b.vars_)) throw InputError("polynomials over different variable lists");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_compatible(a, b);
    if (a.order_ != b.order_) return merge(a, b.with_order(a.order_), subtract);
    Polynomial r(a.vars_, a.order_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const auto& ord = a.order_;
    while (i < a.size() || j < b.size()) {
      int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        S s = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].mono, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [this](const Term<S>& x, const Term<S>& y) { return order_.compare(x.mono, y.mono) > 0; });
  }

  // Sort and combine like terms.
  void normalize() {
    sort_terms();
    std::vector<Term<S>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff = out.back().coeff + t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term<S>& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
  }

  Vars vars_;
  MonomialOrder order_;
  std::vector<Term<S>> terms_;
};

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<Fp>;

/// Substitutes polynomials for variables. Unassigned variables are carried
/// over by name into the target ring and must exist there.
template <Field S>
Polynomial<S> substitute(const Polynomial<S>& f, const std::map<std::string, Polynomial<S>>& assignment,
                         const Vars& target) {
  const auto n = f.nvars();
  std::vector<std::optional<Polynomial<S>>> image(n);
  for (const auto& [name, value] : assignment) {
    auto i = f.vars()->find(name);
    if (i < 0) throw InputError("substitution for unknown variable '" + name + "'");
    if (!same_vars(value.vars(), target)) throw InputError("substitution values live in a different ring");
    image[static_cast<std::size_t>(i)] = value;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] || !f.uses_variable(i)) continue;
    auto j = target->find((*f.vars())[i]);
    if (j < 0) throw InputError("variable '" + (*f.vars())[i] + "' has no image in target ring");
    image[i] = Polynomial<S>::variable(target, static_cast<std::size_t>(j));
  }
  std::vector<std::vector<Polynomial<S>>> powers(n);
  Polynomial<S> total(target, f.order());
  for (const auto& t : f.terms()) {
    auto v = Polynomial<S>::constant(target, t.coeff, f.order());
    for (std::size_t i = 0; i < n; ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial<S>::constant(target, S(1), f.order()));
      while (pw.size() <= e) pw.push_back(pw.back() * *image[i]);
      v = v * pw[e];
    }
    total += v;
  }
  return total;
}

/// Substitutes scalars for some variables; the result stays in f's ring.
template <Field S>
Polynomial<S> substitute(const Polynomial<S>& f, const std::map<std::string, S>& assignment) {
  std::map<std::string, Polynomial<S>> poly_assign;
  for (const auto& [name, value] : assignment) {
    if (f.vars()->find(name) < 0) throw InputError("substitution for unknown variable '" + name + "'");
    poly_assign.emplace(name, Polynomial<S>::constant(f.vars(), value, f.order()));
  }
  return substitute(f, poly_assign, f.vars());
}

/// Applies fn to every coefficient, e.g. reduction modulo p.
template <Field T, Field S, typename Fn>
Polynomial<T> map_coefficients(const Polynomial<S>& f, Fn fn) {
  std::vector<Term<T>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({t.mono, fn(t.coeff)});
  return Polynomial<T>(f.vars(), std::move(out), f.order());
}

inline FpPoly reduce_mod_p(const QPoly& f) {
  return map_coefficients<Fp>(f, [](const Rational& c) { return Fp::from_rational(c); });
}

/// Scales a rational polynomial to coprime integer coefficients with a
/// positive leading coefficient.
inline QPoly primitive_integer(const QPoly& f) {
  if (f.is_zero()) return f;
  Integer l = 1, g = 0;
  for (const auto& t : f.terms()) l = lcm(l, t.coeff.den());
  for (const auto& t : f.terms()) g = gcd(g, Integer(t.coeff.num() * (l / t.coeff.den())));
  Rational scale(l, g);
  if (f.leading_coeff().sign() < 0) scale = -scale;
  return f * scale;
}

}  // namespace pg
