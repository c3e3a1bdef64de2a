#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pg/exactalg/univariate.hpp"

namespace pg {

/// Closed interval with exact rational endpoints.
struct Interval {
  Rational lo, hi;

  static Interval point(const Rational& x) { return {x, x}; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) * Rational(1, 2); }
  bool contains(const Rational& x) const { return !(x < lo) && !(hi < x); }
  /// +1 or -1 when the interval lies strictly on one side of 0, else 0.
  int sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }
  Interval abs() const {
    if (lo.sign() >= 0) return *this;
    if (hi.sign() <= 0) return {-hi, -lo};
    return {Rational(0), std::max(-lo, hi)};
  }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rational lo = p[0], hi = p[0];
    for (const auto& x : p) {
      if (x < lo) lo = x;
      if (hi < x) hi = x;
    }
    return {lo, hi};
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.sign() == 0) throw std::domain_error("interval division by an interval containing 0");
    return a * Interval{b.hi.inverse(), b.lo.inverse()};
  }
};

inline Interval evaluate(const QUPoly& f, const Interval& x) {
  Interval acc = Interval::point(Rational(0));
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + Interval::point(f.coeffs()[i]);
  return acc;
}

inline Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

/// The rational of smallest denominator in [lo, hi].
inline Rational simplest_between(Rational lo, Rational hi) {
  if (hi < lo) std::swap(lo, hi);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  Rational fl(floor(lo));
  if (fl == lo) return lo;
  if (!(hi < fl + Rational(1))) return fl + Rational(1);
  return fl + simplest_between((hi - fl).inverse(), (lo - fl).inverse()).inverse();
}

/// f / gcd(f, f'), monic.
inline QUPoly squarefree_part(const QUPoly& f) {
  if (f.degree() < 1) return f.monic();
  auto g = gcd(f, f.derivative());
  return f.divmod(g).first.monic();
}

inline std::vector<QUPoly> sturm_sequence(const QUPoly& f) {
  std::vector<QUPoly> s{f, f.derivative()};
  while (!s.back().is_zero()) {
    auto r = s[s.size() - 2].divmod(s.back()).second;
    if (r.is_zero()) break;
    s.push_back(-r);
  }
  return s;
}

inline int sign_variations(const std::vector<QUPoly>& seq, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Number of distinct real roots in (a, b].
inline int count_roots(const std::vector<QUPoly>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

/// Cauchy bound: every root has |x| < bound.
inline Rational root_bound(const QUPoly& f) {
  Rational m(0);
  for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i) {
    auto r = (f.coeffs()[i] / f.leading()).abs();
    if (m < r) m = r;
  }
  return m + Rational(1);
}

/// A real root of a squarefree polynomial: exact, or alone in the open
/// interval (lo, hi) where f changes sign.
struct IsolatedRoot {
  std::optional<Rational> exact;
  Interval box;
};

/// Halves the isolating interval until its width is below `width`.
inline void refine(const QUPoly& f, IsolatedRoot& r, const Rational& width) {
  if (r.exact) return;
  int slo = f(r.box.lo).sign();
  while (!(r.box.width() < width)) {
    auto m = r.box.mid();
    int sm = f(m).sign();
    if (sm == 0) {
      r.exact = m;
      r.box = Interval::point(m);
      return;
    }
    if (sm == slo) r.box.lo = m;
    else r.box.hi = m;
  }
}

/// Isolates every real root of f (any multiplicity), sorted ascending.
inline std::vector<IsolatedRoot> isolate_real_roots(const QUPoly& f) {
  if (f.is_zero()) throw InputError("root isolation of the zero polynomial");
  std::vector<IsolatedRoot> out;
  if (f.degree() < 1) return out;
  auto g = squarefree_part(f);
  auto seq = sturm_sequence(g);
  auto b = root_bound(g);
  struct Job { Rational a, b; int n; };
  std::vector<Job> stack{{-b, b, count_roots(seq, -b, b)}};
  while (!stack.empty()) {
    auto job = stack.back();
    stack.pop_back();
    if (job.n == 0) continue;
    if (job.n == 1) {
      out.push_back({std::nullopt, {job.a, job.b}});
      continue;
    }
    auto m = (job.a + job.b) * Rational(1, 2);
    if (!g(m).is_zero()) {
      stack.push_back({job.a, m, count_roots(seq, job.a, m)});
      stack.push_back({m, job.b, count_roots(seq, m, job.b)});
      continue;
    }
    out.push_back({m, Interval::point(m)});
    auto d = (job.b - job.a) * Rational(1, 4);
    while (g(m - d).is_zero() || g(m + d).is_zero() || count_roots(seq, m - d, m + d) != 1) d = d * Rational(1, 2);
    stack.push_back({job.a, m - d, count_roots(seq, job.a, m - d)});
    stack.push_back({m + d, job.b, count_roots(seq, m + d, job.b)});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.box.lo < y.box.lo; });
  for (auto& r : out)
    if (!r.exact && g(r.box.hi).is_zero()) r = {r.box.hi, Interval::point(r.box.hi)};
  return out;
}

/// Scales f to coprime integer coefficients.
inline QUPoly integer_primitive(const QUPoly& f) {
  if (f.is_zero()) return f;
  Integer l = 1, g = 0;
  for (const auto& c : f.coeffs()) l = lcm(l, c.den());
  for (const auto& c : f.coeffs()) g = gcd(g, Integer(c.num() * (l / c.den())));
  return f * Rational(l, g);
}

/// Every rational root of f, ascending. A root p/q of the primitive integer
/// polynomial has q dividing the leading coefficient a, so once an isolating
/// interval is narrower than 1/a^2 its simplest rational is the only candidate.
inline std::vector<Rational> rational_roots(const QUPoly& f) {
  std::vector<Rational> out;
  if (f.degree() < 1) return out;
  auto g = integer_primitive(squarefree_part(f));
  Rational a = g.leading().abs();
  Rational tol = (a * a).inverse();
  for (auto r : isolate_real_roots(g)) {
    refine(g, r, tol);
    if (r.exact) {
      out.push_back(*r.exact);
      continue;
    }
    auto s = simplest_between(r.box.lo, r.box.hi);
    if (g(s).is_zero()) out.push_back(s);
  }
  return out;
}

/// Real root with the factor of f it belongs to: (t - r) for rational roots,
/// otherwise the cofactor left after removing all rational roots.
struct RealRoot {
  std::optional<Rational> exact;
  Interval box;
  QUPoly factor;
};

inline std::vector<RealRoot> real_roots(const QUPoly& f) {
  auto g = squarefree_part(f);
  auto rat = rational_roots(g);
  QUPoly rest = g;
  for (const auto& r : rat) rest = rest.divmod(QUPoly(std::vector<Rational>{-r, Rational(1)})).first;
  std::vector<RealRoot> out;
  for (const auto& r : rat) out.push_back({r, Interval::point(r), QUPoly(std::vector<Rational>{-r, Rational(1)})});
  if (rest.degree() >= 1)
    for (auto& r : isolate_real_roots(rest)) out.push_back({std::nullopt, r.box, rest});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.box.lo < y.box.lo; });
  return out;
}

}  // namespace pg
