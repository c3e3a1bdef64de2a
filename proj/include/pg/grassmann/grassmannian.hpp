#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pg/exactalg/linalg.hpp"
#include "pg/exactalg/poly_matrix.hpp"
#include "pg/groebner/ideal.hpp"

namespace pg {

/// Name of the Plücker variable for a 1-based increasing index set.
inline std::string plucker_name(const std::vector<std::size_t>& set, std::size_t n) {
  std::string s = "p";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (n > 9 && i > 0) s += "_";
    s += std::to_string(set[i]);
  }
  return s;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// C(2j, j) / (j + 1).
inline Integer catalan(unsigned long j) { return binomial(2 * j, j) / (j + 1); }

/// (k(n-k))! * prod_{i<k} i! / prod_{n-k <= i < n} i!
inline Integer grassmannian_degree(unsigned long k, unsigned long n) {
  if (k < 1 || k > n) throw InputError("grassmannian_degree needs 1 <= k <= n");
  Integer num = factorial(k * (n - k));
  Integer den = 1;
  for (unsigned long i = 0; i < k; ++i) num *= factorial(i);
  for (unsigned long i = n - k; i < n; ++i) den *= factorial(i);
  if (num % den != 0) throw std::logic_error("grassmannian degree is not integral");
  return num / den;
}

/// Gr(k, n) in its Plücker embedding.
class GrassmannContext {
 public:
  GrassmannContext(std::size_t k, std::size_t n) : k_(k), n_(n) {
    if (k < 1 || k > n) throw InputError("Gr(k,n) needs 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    if (binomial(n, k) > 4096) throw InputError("Gr(k,n) too large for an explicit Plücker ring");
    std::vector<std::string> names;
    for (auto s : pg::subsets(n, k)) {
      for (auto& i : s) ++i;
      names.push_back(plucker_name(s, n));
      index_[s] = sets_.size();
      sets_.push_back(std::move(s));
    }
    vars_ = make_vars(std::move(names));
  }

  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  const Vars& vars() const { return vars_; }
  std::size_t size() const { return sets_.size(); }
  /// 1-based k-subsets in lexicographic order, aligned with vars().
  const std::vector<std::vector<std::size_t>>& subsets() const { return sets_; }

  /// Position of a 1-based increasing set, or -1.
  long index_of(const std::vector<std::size_t>& set) const {
    auto it = index_.find(set);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
  }

  QPoly variable(const std::vector<std::size_t>& set) const {
    long i = index_of(set);
    if (i < 0) throw InputError("not a Plücker index set");
    return QPoly::variable(vars_, static_cast<std::size_t>(i));
  }

  /// Quadratic Plücker relations, lazily generated.
  const QIdeal& relations() const {
    std::call_once(rel_once_, [this] { relations_ = std::make_shared<QIdeal>(vars_, shuffle_relations()); });
    return *relations_;
  }

  /// Plücker coordinates of the row span of a k x n matrix.
  std::vector<Rational> point(const Matrix<Rational>& m) const {
    if (m.rows() != k_ || m.cols() != n_) throw DimensionError("point needs a k x n matrix");
    std::vector<Rational> out;
    std::vector<std::size_t> rows(k_);
    for (std::size_t i = 0; i < k_; ++i) rows[i] = i;
    for (const auto& s : sets_) {
      std::vector<std::size_t> cols;
      for (auto c : s) cols.push_back(c - 1);
      out.push_back(determinant(m.submatrix(rows, cols)));
    }
    return out;
  }

 private:
  // sum_l (-1)^l p_{I + j_l} p_{J - j_l} over (k-1)-sets I and (k+1)-sets J,
  // keeping a linearly independent subset.
  std::vector<QPoly> shuffle_relations() const {
    std::vector<QPoly> out;
    if (k_ < 2 || k_ + 2 > n_) return out;
    auto signed_var = [&](std::vector<std::size_t> s, Rational& sign) -> long {
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
          if (s[a] == s[b]) return -1;
          if (s[a] > s[b]) {
            std::swap(s[a], s[b]);
            sign = -sign;
          }
        }
      return index_of(s);
    };
    auto lower = pg::subsets(n_, k_ - 1);
    auto upper = pg::subsets(n_, k_ + 1);
    for (auto i : lower) {
      for (auto& x : i) ++x;
      for (auto j : upper) {
        for (auto& x : j) ++x;
        QPoly rel(vars_);
        for (std::size_t l = 0; l < j.size(); ++l) {
          auto a = i;
          a.push_back(j[l]);
          auto b = j;
          b.erase(b.begin() + static_cast<long>(l));
          Rational sign(l % 2 == 0 ? 1 : -1);
          long ia = signed_var(a, sign);
          long ib = signed_var(b, sign);
          if (ia < 0 || ib < 0) continue;
          rel += QPoly::variable(vars_, static_cast<std::size_t>(ia)) * QPoly::variable(vars_, static_cast<std::size_t>(ib)) * sign;
        }
        if (rel.is_zero()) continue;
        if (independent(rel)) out.push_back(primitive_integer(rel));
      }
    }
    return out;
  }

  // Linear independence from the relations kept so far, via an incremental
  // echelon form on coefficient rows.
  bool independent(const QPoly& f) const {
    QPoly r = f;
    for (const auto& [lead, row] : echelon_) {
      Rational c = r.coeff(lead);
      if (!c.is_zero()) r -= row * c;
    }
    if (r.is_zero()) return false;
    r = r.monic();
    for (auto& [lead, row] : echelon_) {
      Rational c = row.coeff(r.leading_monomial());
      if (!c.is_zero()) row -= r * c;
    }
    echelon_.emplace_back(r.leading_monomial(), r);
    return true;
  }

  std::size_t k_, n_;
  Vars vars_;
  std::vector<std::vector<std::size_t>> sets_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
  mutable std::vector<std::pair<Monomial, QPoly>> echelon_;
  mutable std::once_flag rel_once_;
  mutable std::shared_ptr<QIdeal> relations_;
};

/// Gr(k, n) with its Plücker relations.
inline std::shared_ptr<const GrassmannContext> plucker_ideal(std::size_t k, std::size_t n) {
  return std::make_shared<const GrassmannContext>(k, n);
}

}  // namespace pg
