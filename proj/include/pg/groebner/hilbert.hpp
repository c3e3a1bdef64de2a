#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pg/exactalg/rational.hpp"
#include "pg/exactalg/univariate.hpp"

namespace pg {

/// Hilbert polynomial and the invariants read off from it.
struct HilbertData {
  QUPoly polynomial;       // P(t), exact rational coefficients
  int dimension = -1;      // projective dimension, -1 iff empty
  Integer degree = 0;      // 0 for the empty variety
  std::optional<Integer> genus;  // arithmetic genus, only for curves

  bool empty() const { return dimension < 0; }
};

namespace detail {

// Integer polynomial in t, ascending coefficients.
using IPoly = std::vector<Integer>;

inline void ipoly_trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ipoly_trim(r);
  return r;
}

inline IPoly one_minus_t_pow(unsigned d) {
  IPoly r(d + 1, 0);
  r[0] += 1;
  r[d] -= 1;
  ipoly_trim(r);
  return r;
}

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/I for a monomial
// ideal I, by the pivot recursion N(I) = N(I + p) + t^deg(p) N(I : p).
inline IPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return IPoly{1};
  const std::size_t n = gens.front().size();

  // Base case: pairwise coprime generators.
  std::vector<unsigned> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ++count[i];
  auto best = std::max_element(count.begin(), count.end());
  if (*best <= 1) {
    IPoly r{1};
    for (const auto& g : gens) r = ipoly_mul(r, one_minus_t_pow(g.degree()));
    return r;
  }
  const auto x = static_cast<std::size_t>(best - count.begin());
  unsigned e = ~0U;
  for (const auto& g : gens)
    if (g[x]) e = std::min(e, g[x]);
  const Monomial pivot = Monomial::unit(n, x, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(Monomial::gcd(g, pivot).quotient_of(g));

  IPoly a = hilbert_numerator(std::move(plus));
  IPoly b = hilbert_numerator(std::move(colon));
  IPoly shifted(e, 0);
  shifted.insert(shifted.end(), b.begin(), b.end());
  IPoly r(std::max(a.size(), shifted.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < shifted.size(); ++i) r[i] += shifted[i];
  ipoly_trim(r);
  return r;
}

}  // namespace detail

/// Hilbert data of S/I, with S a polynomial ring in `nvars` variables and I
/// given by the generators of its lead-term ideal.
inline HilbertData hilbert_from_lead_terms(const std::vector<Monomial>& lead, std::size_t nvars) {
  using detail::IPoly;
  IPoly num = detail::hilbert_numerator(lead);
  HilbertData h;
  if (num.empty()) return h;  // unit ideal

  // Divide by (1 - t) while t = 1 is a root.
  std::size_t divisions = 0;
  auto at_one = [](const IPoly& p) {
    Integer s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  while (divisions < nvars && at_one(num) == 0) {
    // synthetic division by (1 - t) = -(t - 1)
    IPoly q(num.size() - 1, 0);
    Integer carry = 0;
    for (std::size_t i = num.size(); i-- > 1;) {
      carry += num[i];
      q[i - 1] = carry;
    }
    for (auto& c : q) c = -c;
    num = std::move(q);
    detail::ipoly_trim(num);
    ++divisions;
  }
  const int d = static_cast<int>(nvars) - static_cast<int>(divisions) - 1;
  h.dimension = d;
  if (d < 0) return h;
  h.degree = at_one(num);

  // P(t) = sum_i h_i * binom(t - i + d, d)
  QUPoly p;
  Integer dfact = 1;
  for (int j = 2; j <= d; ++j) dfact *= j;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    QUPoly term = QUPoly::constant(Rational(num[i], dfact));
    for (int j = 1; j <= d; ++j)
      term = term * QUPoly(std::vector<Rational>{Rational(j - static_cast<long>(i)), Rational(1)});
    p = p + term;
  }
  h.polynomial = p;
  if (d == 1) h.genus = (Rational(1) - p[0]).num();
  return h;
}

}  // namespace pg
