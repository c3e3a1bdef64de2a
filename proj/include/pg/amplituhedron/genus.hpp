#pragma once

#include <string>

#include "pg/grassmann/grassmannian.hpp"

namespace pg {

/// Arithmetic genus of the residual curve predicted by the closed formulas:
/// m = 2: 1 + (k-3)/2 * C_k for k >= 3, m = 4: 1 + (3k-5)/2 * deg Gr(k, k+4)
/// for k >= 2, and 0 below those ranges.
inline Rational expected_genus(unsigned long k, int m) {
  if (k < 1) throw InputError("expected_genus needs k >= 1");
  if (m == 2) {
    if (k < 3) return Rational(0);
    return Rational(1) + Rational(static_cast<long>(k) - 3, 2) * Rational(catalan(k));
  }
  if (m == 4) {
    if (k < 2) return Rational(0);
    return Rational(1) + Rational(3 * static_cast<long>(k) - 5, 2) * Rational(grassmannian_degree(k, k + 4));
  }
  throw InputError("m must be 2 or 4");
}

struct GenusBound {
  Rational value;
  std::string note;
};

/// Lower bound on the genus of the pair; only meaningful for k >= 3.
inline GenusBound genus_bound(unsigned long k, int m) {
  if (m != 2 && m != 4) throw InputError("m must be 2 or 4");
  if (k < 3) return {Rational(0), "bound applies for k >= 3; reported as 0"};
  return {expected_genus(k, m), ""};
}

}  // namespace pg
