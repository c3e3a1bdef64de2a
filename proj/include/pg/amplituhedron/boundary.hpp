#pragma once

#include <string>
#include <vector>

#include "pg/grassmann/twistor.hpp"

namespace pg {

/// Boundary divisors of the amplituhedron A_{n,k,m}(Z): one twistor form per label.
struct BoundarySet {
  int m = 2;
  std::vector<TwistorForm> forms;  // labels are the index tuples
};

inline std::size_t cyclic_next(std::size_t i, std::size_t n) { return i % n + 1; }

/// Labels (i, i+1) for m = 2 and (i, i+1, j, j+1) with the two cyclic
/// intervals disjoint for m = 4, in lexicographic order of (i, j).
inline std::vector<std::vector<std::size_t>> boundary_labels(std::size_t n, int m) {
  std::vector<std::vector<std::size_t>> out;
  if (m == 2) {
    for (std::size_t i = 1; i <= n; ++i) out.push_back({i, cyclic_next(i, n)});
  } else if (m == 4) {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 2; j <= n; ++j) {
        if (cyclic_next(j, n) == i) continue;
        out.push_back({i, cyclic_next(i, n), j, cyclic_next(j, n)});
      }
  } else {
    throw InputError("m must be 2 or 4");
  }
  return out;
}

inline BoundarySet boundary_divisors(const GrassmannContext& ctx, const ZMatrix& z, int m) {
  if (m != 2 && m != 4) throw InputError("m must be 2 or 4");
  if (z.m != m) throw InputError("Z matrix is for m=" + std::to_string(z.m) + ", requested m=" + std::to_string(m));
  if (ctx.n() != ctx.k() + static_cast<std::size_t>(m))
    throw InputError("boundary forms live on Gr(k,k+m); context is Gr(" + std::to_string(ctx.k()) + "," + std::to_string(ctx.n()) + ")");
  if (z.n() < ctx.n()) throw InputError("n=" + std::to_string(z.n()) + " is smaller than k+m=" + std::to_string(ctx.n()));
  BoundarySet b{m, {}};
  for (const auto& label : boundary_labels(z.n(), m)) b.forms.push_back(twistor_form(ctx, z, label));
  return b;
}

}  // namespace pg
