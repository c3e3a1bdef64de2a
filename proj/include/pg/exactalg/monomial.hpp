#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "pg/errors.hpp"

namespace pg {

/// Exponent vector, one entry per variable of the owning ring.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::uint16_t, 12>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps) {
    for (auto x : exps) e_.push_back(static_cast<std::uint16_t>(x));
    recompute_degree();
  }
  explicit Monomial(const std::vector<unsigned>& exps) {
    for (auto x : exps) e_.push_back(static_cast<std::uint16_t>(x));
    recompute_degree();
  }

  static Monomial unit(std::size_t nvars, std::size_t var, unsigned power = 1) {
    Monomial m(nvars);
    m.e_[var] = static_cast<std::uint16_t>(power);
    m.deg_ = power;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, unsigned v) {
    deg_ = deg_ - e_[i] + v;
    e_[i] = static_cast<std::uint16_t>(v);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] + b.e_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// True iff this divides other.
  bool divides(const Monomial& other) const {
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial r(other);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] - e_[i]);
    r.deg_ = other.deg_ - deg_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      r.e_[i] = std::min(a.e_[i], b.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }

  bool coprime(const Monomial& b) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && b.e_[i]) return false;
    return true;
  }

  std::vector<unsigned> exponents() const { return {e_.begin(), e_.end()}; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : e_) h = (h ^ x) * 1099511628211ULL;
    return h;
  }

 private:
  void recompute_degree() { deg_ = std::accumulate(e_.begin(), e_.end(), 0U); }

  Storage e_;
  unsigned deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Total monomial order. Block orders compare the first `block` variables by
/// grevlex, then the rest by grevlex, so they eliminate the first block.
class MonomialOrder {
 public:
  enum class Kind { kGrevlex, kLex, kBlock };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder grevlex() { return {}; }
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::kLex, 0); }
  static constexpr MonomialOrder block(std::size_t first_block) { return MonomialOrder(Kind::kBlock, first_block); }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return block_; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::kLex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::kGrevlex:
        return grevlex_range(a, b, 0, a.size(), a.degree(), b.degree());
      case Kind::kBlock: {
        unsigned da = 0, db = 0;
        for (std::size_t i = 0; i < block_; ++i) {
          da += a[i];
          db += b[i];
        }
        if (int c = grevlex_range(a, b, 0, block_, da, db)) return c;
        return grevlex_range(a, b, block_, a.size(), a.degree() - da, b.degree() - db);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const {
    switch (kind_) {
      case Kind::kLex: return "lex";
      case Kind::kGrevlex: return "grevlex";
      case Kind::kBlock: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
  }

  static MonomialOrder parse(const std::string& s) {
    if (s == "grevlex") return grevlex();
    if (s == "lex") return lex();
    if (s.rfind("block(", 0) == 0 && s.size() > 7 && s.back() == ')') {
      try {
        return block(std::stoul(s.substr(6, s.size() - 7)));
      } catch (const std::logic_error&) {
      }
    }
    throw InputError("unknown monomial order '" + s + "'");
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi,
                           unsigned da, unsigned db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_ = Kind::kGrevlex;
  std::size_t block_ = 0;
};

/// Ordered, immutable list of variable names shared by polynomials of one ring.
class VarList {
 public:
  explicit VarList(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw InputError("duplicate variable name '" + names_[i] + "'");
  }

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::ptrdiff_t find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : it - names_.begin();
  }
  std::size_t index(const std::string& name) const {
    auto i = find(name);
    if (i < 0) throw InputError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(i);
  }

  friend bool operator==(const VarList& a, const VarList& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using Vars = std::shared_ptr<const VarList>;

inline Vars make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarList>(std::move(names));
}

/// Names prefix0 .. prefix{n-1}.
inline Vars indexed_vars(const std::string& prefix, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
  return make_vars(std::move(v));
}

inline bool same_vars(const Vars& a, const Vars& b) { return a == b || *a == *b; }

}  // namespace pg
