#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pg/errors.hpp"

namespace pg {

/// Rank-2 matroid data on [n]: loops and disjoint cyclic intervals [a, b]
/// (1-based, read cyclically, so [n, 1] wraps).
struct MatroidRank2 {
  std::size_t n = 0;
  std::set<std::size_t> loops;
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
};

inline std::vector<std::size_t> interval_elements(std::pair<std::size_t, std::size_t> iv, std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t i = iv.first;
  for (;;) {
    out.push_back(i);
    if (i == iv.second) break;
    i = i % n + 1;
    if (out.size() > n) break;
  }
  return out;
}

struct MatroidInvariants {
  long r = 0, s = 0, l = 0, d = 0, c = 0, e = 0;
  bool in_p = false;
};

inline MatroidInvariants matroid_invariants(const MatroidRank2& nm, long k) {
  if (nm.n == 0) throw InputError("matroid needs n >= 1");
  std::set<std::size_t> s;
  for (const auto& iv : nm.intervals) {
    if (iv.first < 1 || iv.first > nm.n || iv.second < 1 || iv.second > nm.n)
      throw InputError("interval endpoint out of range");
    for (auto x : interval_elements(iv, nm.n)) {
      if (!s.insert(x).second)
        throw InputError("intervals overlap at element " + std::to_string(x));
    }
  }
  for (auto x : nm.loops)
    if (x < 1 || x > nm.n) throw InputError("loop out of range");
  std::set<std::size_t> s_minus_l, s_or_l = nm.loops;
  for (auto x : s) {
    if (!nm.loops.count(x)) s_minus_l.insert(x);
    s_or_l.insert(x);
  }
  MatroidInvariants out;
  out.r = static_cast<long>(nm.intervals.size());
  out.s = static_cast<long>(s.size());
  out.l = static_cast<long>(nm.loops.size());
  out.d = 2 * k + out.r - static_cast<long>(s_minus_l.size()) - 2 * out.l;
  out.c = 2 * k - out.d;
  out.e = out.r + k - static_cast<long>(s_or_l.size());
  out.in_p = out.e >= 0;
  return out;
}

/// Checks an m = 2 index selection: entries in [n], distinct, and no two
/// cyclically adjacent. Throws InputError naming the offending pair.
inline void validate_m2_selection(const std::vector<std::size_t>& idx, std::size_t n) {
  for (auto i : idx)
    if (i < 1 || i > n) throw InputError("index " + std::to_string(i) + " out of range [1," + std::to_string(n) + "]");
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      auto i = idx[a], j = idx[b];
      if (i == j) throw InputError("repeated index " + std::to_string(i));
      if (i % n + 1 == j || j % n + 1 == i)
        throw InputError("adjacent indices " + std::to_string(i) + " and " + std::to_string(j));
    }
}

inline MatroidRank2 curve_matroid(const std::vector<std::size_t>& idx, std::size_t n) {
  validate_m2_selection(idx, n);
  MatroidRank2 m;
  m.n = n;
  for (auto i : idx) m.intervals.push_back({i, i % n + 1});
  return m;
}

}  // namespace pg
