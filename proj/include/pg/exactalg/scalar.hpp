#pragma once

#include <concepts>
#include <string>

#include "pg/exactalg/prime_field.hpp"
#include "pg/exactalg/rational.hpp"

namespace pg {

/// Exact field scalar: Rational or Fp.
template <typename S>
concept Field = requires(S a, S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<S>;
  { a.str() } -> std::convertible_to<std::string>;
  S(1);
};

/// Maps a rational constant into S.
template <Field S>
S scalar_from_rational(const Rational& r) {
  if constexpr (std::same_as<S, Rational>) {
    return r;
  } else {
    return S::from_rational(r);
  }
}

}  // namespace pg
