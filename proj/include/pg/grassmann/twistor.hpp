#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pg/exactalg/json_io.hpp"
#include "pg/grassmann/grassmannian.hpp"

namespace pg {

/// n x (k+m) matrix Z; rows are the external data Z_1..Z_n.
struct ZMatrix {
  int m = 2;
  Matrix<Rational> entries;
  bool positive = false;  // set once check_positive_minors has passed

  std::size_t n() const { return entries.rows(); }
  std::size_t width() const { return entries.cols(); }
};

/// Rows (1, t, t^2, ..., t^{width-1}) at strictly increasing nodes.
inline ZMatrix vandermonde_Z(const std::vector<Rational>& nodes, std::size_t width, int m = 2) {
  if (nodes.empty()) throw InputError("vandermonde_Z needs at least one node");
  for (std::size_t i = 1; i < nodes.size(); ++i)
    if (!(nodes[i - 1] < nodes[i])) throw InputError("Vandermonde nodes must be strictly increasing");
  Matrix<Rational> z(nodes.size(), width);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) z(i, j) = pow(nodes[i], static_cast<unsigned>(j));
  return {m, std::move(z), false};
}

struct MinorCheck {
  bool positive = false;
  std::vector<std::size_t> witness_rows;  // 1-based, empty when positive
  Rational witness_value;
};

/// Every maximal minor of the row-ordered matrix is > 0. On failure reports
/// the first non-positive minor in lexicographic row order.
inline MinorCheck check_positive_minors(const ZMatrix& z) {
  const std::size_t w = z.width();
  if (z.n() < w) return {false, {}, Rational(0)};
  std::vector<std::size_t> cols(w);
  for (std::size_t j = 0; j < w; ++j) cols[j] = j;
  for (const auto& rs : subsets(z.n(), w)) {
    Rational d = determinant(z.entries.submatrix(rs, cols));
    if (d.sign() <= 0) {
      std::vector<std::size_t> one_based;
      for (auto r : rs) one_based.push_back(r + 1);
      return {false, one_based, d};
    }
  }
  return {true, {}, Rational(0)};
}

/// Linear form <Y Z_{i1} ... Z_{im}> in the Plücker coordinates of Y in Gr(k, k+m).
struct TwistorForm {
  std::vector<std::size_t> indices;  // 1-based rows of Z
  QPoly form;
};

/// Coefficient of p_J is eps(J) * det(Z rows idx, columns [k+m] \ J) with
/// eps(J) = (-1)^{sum J - k(k+1)/2}: Laplace expansion of the stacked matrix
/// with Y on top.
inline TwistorForm twistor_form(const GrassmannContext& ctx, const ZMatrix& z, const std::vector<std::size_t>& idx) {
  const std::size_t k = ctx.k();
  const std::size_t w = ctx.n();
  if (z.width() != w) throw DimensionError("Z has " + std::to_string(z.width()) + " columns, Gr(k,k+m) needs " + std::to_string(w));
  if (idx.size() != w - k) throw InputError("twistor form needs exactly m row indices");
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 1 || idx[a] > z.n()) throw InputError("row index " + std::to_string(idx[a]) + " out of range");
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] == idx[b]) throw InputError("repeated row index " + std::to_string(idx[a]));
  }
  std::vector<std::size_t> rows;
  for (auto i : idx) rows.push_back(i - 1);
  const long base = static_cast<long>(k * (k + 1) / 2);
  std::vector<Term<Rational>> terms;
  for (std::size_t v = 0; v < ctx.size(); ++v) {
    const auto& J = ctx.subsets()[v];
    std::vector<std::size_t> comp;
    long sum = 0;
    for (std::size_t c = 1; c <= w; ++c) {
      if (std::find(J.begin(), J.end(), c) == J.end()) comp.push_back(c - 1);
      else sum += static_cast<long>(c);
    }
    Rational d = determinant(z.entries.submatrix(rows, comp));
    if (d.is_zero()) continue;
    if ((sum - base) % 2 != 0) d = -d;
    std::vector<unsigned> e(ctx.size(), 0);
    e[v] = 1;
    terms.push_back({Monomial(e), d});
  }
  return {idx, QPoly(ctx.vars(), std::move(terms))};
}

/// Sets of Plücker variables whose sign flip p_J -> -p_J makes the span of
/// `ours` equal to the span of `reference`. Flipping every variable is
/// equivalent to flipping none, so the first variable is never flipped.
/// Returns all solutions, smallest first.
inline std::vector<std::vector<std::string>> sign_flip_diagnostic(const std::vector<QPoly>& ours,
                                                                   const std::vector<QPoly>& reference) {
  if (ours.empty() || reference.empty()) throw InputError("sign_flip_diagnostic needs nonempty form lists");
  const auto& vars = ours.front().vars();
  const std::size_t nv = vars->size();
  if (nv > 20) throw InputError("sign_flip_diagnostic supports at most 20 variables");
  auto coeff_matrix = [&](const std::vector<QPoly>& fs, unsigned long flips) {
    Matrix<Rational> m(fs.size(), nv);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto f = fs[i].embed(vars);
      if (f.degree() > 1 || !f.constant_term().is_zero()) throw InputError("sign_flip_diagnostic needs linear forms");
      for (const auto& t : f.terms())
        for (std::size_t v = 0; v < nv; ++v)
          if (t.mono[v]) m(i, v) = (flips >> v) & 1UL ? -t.coeff : t.coeff;
    }
    return m;
  };
  auto stack = [](const Matrix<Rational>& a, const Matrix<Rational>& b) {
    Matrix<Rational> s(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, j) = b(i, j);
    return s;
  };
  auto a = coeff_matrix(ours, 0);
  const std::size_t ra = rank(a);
  std::vector<unsigned long> hits;
  for (unsigned long flips = 0; flips < (1UL << nv); flips += 2) {
    auto b = coeff_matrix(reference, flips);
    if (rank(b) == ra && rank(stack(a, b)) == ra) hits.push_back(flips);
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](unsigned long x, unsigned long y) { return __builtin_popcountl(x) < __builtin_popcountl(y); });
  std::vector<std::vector<std::string>> out;
  for (auto h : hits) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nv; ++v)
      if ((h >> v) & 1UL) names.push_back((*vars)[v]);
    out.push_back(std::move(names));
  }
  return out;
}

/// {"m":2|4, "rows":[["1","0",...],...]}
inline json to_json(const ZMatrix& z) {
  json rows = json::array();
  for (std::size_t i = 0; i < z.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < z.width(); ++j) row.push_back(z.entries(i, j).str());
    rows.push_back(row);
  }
  return json{{"m", z.m}, {"rows", rows}};
}

inline ZMatrix zmatrix_from_json(const json& j) {
  if (!j.contains("m") || !j.contains("rows")) throw InputError("Z-matrix JSON needs 'm' and 'rows'");
  int m = j.at("m").get<int>();
  if (m != 2 && m != 4) throw InputError("Z-matrix m must be 2 or 4");
  return {m, constant_matrix_from_json(j.at("rows")), false};
}

}  // namespace pg
