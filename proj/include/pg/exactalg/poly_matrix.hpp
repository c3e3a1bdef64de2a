#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "pg/exactalg/linalg.hpp"
#include "pg/exactalg/polynomial.hpp"

namespace pg {

/// Rectangular matrix of polynomials over one shared variable list.
template <Field S>
class PolyMatrix {
 public:
  using Poly = Polynomial<S>;

  PolyMatrix(Vars vars, std::size_t rows, std::size_t cols)
      : vars_(std::move(vars)), rows_(rows), cols_(cols), a_(rows * cols, Poly(vars_)) {}

  static PolyMatrix from_rows(Vars vars, const std::vector<std::vector<Poly>>& rows) {
    PolyMatrix m(vars, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionError("ragged polynomial matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) {
        if (!same_vars(rows[i][j].vars(), vars)) throw InputError("matrix entry over a different variable list");
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  static PolyMatrix from_constants(Vars vars, const Matrix<S>& c) {
    PolyMatrix m(vars, c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = Poly::constant(vars, c(i, j));
    return m;
  }

  const Vars& vars() const { return vars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_constant() const {
    return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_constant(); });
  }

  Matrix<S> constants() const {
    Matrix<S> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).constant_term();
    return m;
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    PolyMatrix m(vars_, rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

 private:
  Vars vars_;
  std::size_t rows_, cols_;
  std::vector<Poly> a_;
};

namespace detail {

// Laplace expansion along successive rows, memoized on the set of columns
// still available. Row r is expanded when popcount(mask) == n - r.
template <Field S>
Polynomial<S> laplace(const PolyMatrix<S>& m, std::uint64_t mask, std::size_t row,
                      std::unordered_map<std::uint64_t, Polynomial<S>>& memo) {
  const std::size_t n = m.rows();
  if (row == n) return Polynomial<S>::constant(m.vars(), S(1));
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  Polynomial<S> acc(m.vars());
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (!(mask & (1ULL << c))) continue;
    const auto& e = m(row, c);
    if (!e.is_zero()) {
      auto sub = laplace(m, mask & ~(1ULL << c), row + 1, memo);
      if (!sub.is_zero()) {
        auto prod = e * sub;
        if (sign > 0) acc += prod;
        else acc -= prod;
      }
    }
    sign = -sign;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace detail

/// Exact determinant: Bareiss for constant matrices, memoized cofactor
/// expansion otherwise.
template <Field S>
Polynomial<S> determinant(const PolyMatrix<S>& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  if (m.is_constant()) return Polynomial<S>::constant(m.vars(), determinant(m.constants()));
  if (m.rows() > 63) throw DimensionError("symbolic determinant too large");
  std::unordered_map<std::uint64_t, Polynomial<S>> memo;
  std::uint64_t full = m.rows() == 64 ? ~0ULL : ((1ULL << m.rows()) - 1);
  return detail::laplace(m, full, 0, memo);
}

/// Entry (i, j) is d fs[i] / d vars[j].
template <Field S>
PolyMatrix<S> jacobian(const std::vector<Polynomial<S>>& fs, const std::vector<std::string>& vars) {
  if (fs.empty()) throw InputError("jacobian of an empty list");
  const auto& ring = fs.front().vars();
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(ring->index(v));
  PolyMatrix<S> j(ring, fs.size(), vars.size());
  for (std::size_t r = 0; r < fs.size(); ++r) {
    if (!same_vars(fs[r].vars(), ring)) throw InputError("jacobian inputs over different variable lists");
    for (std::size_t c = 0; c < idx.size(); ++c) j(r, c) = fs[r].derivative(idx[c]);
  }
  return j;
}

/// All size x size minors, ordered lexicographically by (row set, column set).
template <Field S>
std::vector<Polynomial<S>> minors(const PolyMatrix<S>& m, std::size_t size) {
  if (size == 0 || size > std::min(m.rows(), m.cols()))
    throw InputError("minor size " + std::to_string(size) + " out of range");
  std::vector<Polynomial<S>> out;
  auto rsets = subsets(m.rows(), size);
  auto csets = subsets(m.cols(), size);
  out.reserve(rsets.size() * csets.size());
  for (const auto& rs : rsets)
    for (const auto& cs : csets) out.push_back(determinant(m.submatrix(rs, cs)));
  return out;
}

}  // namespace pg
