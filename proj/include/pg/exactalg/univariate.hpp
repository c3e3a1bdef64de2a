#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pg/exactalg/polynomial.hpp"

namespace pg {

/// Dense univariate polynomial, coefficients in ascending degree.
template <Field S>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<S> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const S& c) { return UPoly(std::vector<S>{c}); }
  static UPoly x() { return UPoly(std::vector<S>{S(0), S(1)}); }

  /// Views f, which may only involve variable `var`, as a univariate polynomial.
  static UPoly from_poly(const Polynomial<S>& f, std::size_t var) {
    std::vector<S> c;
    for (const auto& t : f.terms()) {
      if (t.mono.degree() != t.mono[var]) throw InputError("polynomial is not univariate in the given variable");
      unsigned e = t.mono[var];
      if (c.size() <= e) c.resize(e + 1, S(0));
      c[e] = c[e] + t.coeff;
    }
    return UPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  S operator[](std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
  S leading() const { return c_.empty() ? S(0) : c_.back(); }

  S operator()(const S& x) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly derivative() const {
    std::vector<S> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * S(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = r[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  UPoly operator-() const {
    UPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const S& s) { return a * constant(s); }

  /// Euclidean division: (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("univariate division by zero");
    std::vector<S> rem = c_;
    std::vector<S> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0, S(0));
    S inv = d.leading().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
      S coef = rem[k + d.c_.size() - 1] * inv;
      q[k] = coef;
      if (coef.is_zero()) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = rem[k + j] - coef * d.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
  }

  UPoly monic() const { return is_zero() ? *this : *this * leading().inverse(); }

  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Composition with an affine map: p(a + b t).
  UPoly compose_affine(const S& a, const S& b) const {
    UPoly lin(std::vector<S>{a, b});
    UPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + constant(c_[i]);
    return acc;
  }

  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string str(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].str() + ")";
      if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<S> c_;
};

using QUPoly = UPoly<Rational>;

}  // namespace pg
