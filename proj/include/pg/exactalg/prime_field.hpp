#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <ostream>
#include <string>

#include "pg/exactalg/rational.hpp"

namespace pg {

inline constexpr std::uint64_t kDefaultPrimes[] = {32003, 65537};

namespace detail {
inline std::uint64_t& active_modulus() {
  thread_local std::uint64_t p = 0;
  return p;
}
}  // namespace detail

/// Scopes the modulus used to construct `Fp` values on the current thread.
class PrimeFieldScope {
 public:
  explicit PrimeFieldScope(std::uint64_t p) : saved_(detail::active_modulus()) {
    if (p < 2 || p >= (1ULL << 31)) throw InputError("prime out of range: " + std::to_string(p));
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InputError(std::to_string(p) + " is not prime");
    detail::active_modulus() = p;
  }
  ~PrimeFieldScope() { detail::active_modulus() = saved_; }
  PrimeFieldScope(const PrimeFieldScope&) = delete;
  PrimeFieldScope& operator=(const PrimeFieldScope&) = delete;

 private:
  std::uint64_t saved_;
};

/// Element of Z/pZ, stored in [0, p). The modulus comes from the enclosing
/// PrimeFieldScope at construction time and travels with the value.
class Fp {
 public:
  Fp() : v_(0), p_(modulus_or_throw()) {}
  Fp(long v) : p_(modulus_or_throw()) { v_ = reduce(v); }  // NOLINT
  Fp(int v) : Fp(static_cast<long>(v)) {}                  // NOLINT

  /// Image of a rational; throws InputError if p divides the denominator.
  static Fp from_rational(const Rational& r) {
    Fp out;
    const Integer p(static_cast<unsigned long>(out.p_));
    Integer den = r.den() % p;
    if (den == 0) throw InputError("prime divides a denominator");
    Integer num = r.num() % p;
    if (num < 0) num += p;
    out.v_ = num.get_ui();
    return out * Fp::raw(den.get_ui(), out.p_).inverse();
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    // Fermat
    return pow_mod(p_ - 2);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }
  std::string str() const { return std::to_string(v_); }

  Fp& operator+=(const Fp& o) { check(o); v_ += o.v_; if (v_ >= p_) v_ -= p_; return *this; }
  Fp& operator-=(const Fp& o) { check(o); v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_; return *this; }
  Fp& operator*=(const Fp& o) { check(o); v_ = (v_ * o.v_) % p_; return *this; }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) { return a.v_ <=> b.v_; }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }
  static std::uint64_t modulus_or_throw() {
    auto p = detail::active_modulus();
    if (p == 0) throw std::logic_error("Fp used outside a PrimeFieldScope");
    return p;
  }
  std::uint64_t reduce(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  void check(const Fp& o) const {
    if (o.p_ != p_) throw std::logic_error("mixed prime fields");
  }
  Fp pow_mod(std::uint64_t e) const {
    std::uint64_t base = v_, r = 1;
    while (e) {
      if (e & 1U) r = (r * base) % p_;
      base = (base * base) % p_;
      e >>= 1U;
    }
    return raw(r, p_);
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

}  // namespace pg
