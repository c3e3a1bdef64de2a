#pragma once

// Randomized property checks shared by test_properties and the acceptance
// binary. Each property runs a fixed number of seeded cases and reports the
// first counterexample.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "pg/cli/commands.hpp"

namespace pgprop {

using namespace pg;

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long bound = 5) {
    long num = integer(-bound, bound);
    long den = coin() ? 1 : integer(1, 3);
    return Rational(num, den);
  }

  Rational nonzero(long bound = 5) {
    for (;;) {
      auto r = rational(bound);
      if (!r.is_zero()) return r;
    }
  }

  Monomial monomial(std::size_t nvars, unsigned max_degree) {
    std::vector<unsigned> e(nvars, 0);
    unsigned d = static_cast<unsigned>(integer(0, max_degree));
    for (unsigned i = 0; i < d; ++i) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
    return Monomial(e);
  }

  QPoly poly(const Vars& v, std::size_t max_terms, unsigned max_degree) {
    std::vector<Term<Rational>> ts;
    auto n = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
    for (std::size_t i = 0; i < n; ++i) ts.push_back({monomial(v->size(), max_degree), nonzero()});
    return QPoly(v, std::move(ts));
  }

  QPoly nonzero_poly(const Vars& v, std::size_t max_terms, unsigned max_degree) {
    for (;;) {
      auto p = poly(v, max_terms, max_degree);
      if (!p.is_zero()) return p;
    }
  }

  QUPoly upoly(int max_degree) {
    std::vector<Rational> c;
    int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) c.push_back(rational());
    if (c.back().is_zero()) c.back() = Rational(1);
    return QUPoly(c);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<QPoly> random_generators(Gen& g, const Vars& v) {
  std::vector<QPoly> gens;
  auto n = g.integer(1, 3);
  for (long i = 0; i < n; ++i) gens.push_back(g.nonzero_poly(v, 3, 2));
  return gens;
}

inline QPoly univariate_to_poly(const QUPoly& f, const Vars& v) {
  QPoly out(v);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (!f.coeffs()[i].is_zero()) out += QPoly::monomial(v, Monomial(std::vector<unsigned>{static_cast<unsigned>(i)}), f.coeffs()[i]);
  return out;
}

/// NF(NF(f)) = NF(f) and f - NF(f) lies in the ideal.
inline PropertyResult normal_form_idempotence(std::uint64_t seed, int cases = 100) {
  PropertyResult r{"normal_form_idempotence", 0, 0, ""};
  Gen g(seed);
  auto v = make_vars({"x", "y", "z"});
  for (int c = 0; c < cases; ++c) {
    auto ord = g.coin() ? MonomialOrder::grevlex() : MonomialOrder::lex();
    auto gens = random_generators(g, v);
    auto gb = groebner_basis(gens, ord);
    auto f = g.poly(v, 6, 3);
    auto nf = normal_form(f, gb);
    bool ok = normal_form(nf, gb) == nf && normal_form(f - nf, gb).is_zero();
    r.record(ok, "f = " + f.str() + " against " + std::to_string(gens.size()) + " generators, order " + ord.name());
  }
  return r;
}

/// Membership in <f, g> of Q[x] agrees with divisibility by gcd(f, g); in a
/// principal ideal <f> of Q[x, y] with exact division by f.
inline PropertyResult membership_gcd_oracle(std::uint64_t seed, int cases = 100) {
  PropertyResult r{"membership_vs_gcd_oracle", 0, 0, ""};
  Gen g(seed);
  auto x = make_vars({"x"});
  auto xy = make_vars({"x", "y"});
  for (int c = 0; c < cases; ++c) {
    if (c % 2 == 0) {
      auto common = g.upoly(2);
      auto f = common * g.upoly(2), h = common * g.upoly(2);
      auto d = gcd(f, h);
      auto cand = g.coin() ? f * g.upoly(2) + h * g.upoly(2) : g.upoly(4);
      bool oracle = d.is_zero() ? cand.is_zero() : cand.divmod(d).second.is_zero();
      auto ideal = QIdeal::of({univariate_to_poly(f, x), univariate_to_poly(h, x)});
      bool ok = ideal.contains(univariate_to_poly(cand, x)) == oracle;
      r.record(ok, "univariate f = " + f.str() + ", g = " + h.str() + ", candidate " + cand.str());
    } else {
      auto f = g.nonzero_poly(xy, 3, 2);
      auto q = g.poly(xy, 3, 2);
      auto cand = g.coin() ? f * q : f * q + g.poly(xy, 2, 2);
      bool oracle = cand.divide_exact(f).has_value();
      bool ok = QIdeal::of({f}).contains(cand) == oracle;
      r.record(ok, "principal f = " + f.str() + ", candidate " + cand.str());
    }
  }
  return r;
}

/// Swapping two indices negates a twistor form.
inline PropertyResult twistor_alternation(std::uint64_t seed, int cases = 100) {
  PropertyResult r{"twistor_alternation", 0, 0, ""};
  Gen g(seed);
  for (int c = 0; c < cases; ++c) {
    std::size_t k = static_cast<std::size_t>(g.integer(1, 2));
    int m = g.coin() ? 2 : 4;
    std::size_t width = k + static_cast<std::size_t>(m);
    std::size_t n = width + static_cast<std::size_t>(g.integer(0, 3));
    Matrix<Rational> entries(n, width);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < width; ++j) entries(i, j) = g.rational(4);
    ZMatrix z{m, entries, false};
    auto ctx = plucker_ideal(k, width);
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i + 1;
    g.shuffle(rows);
    std::vector<std::size_t> idx(rows.begin(), rows.begin() + m);
    auto swapped = idx;
    auto a = static_cast<std::size_t>(g.integer(0, m - 1));
    auto b = (a + static_cast<std::size_t>(g.integer(1, m - 1))) % static_cast<std::size_t>(m);
    std::swap(swapped[a], swapped[b]);
    auto f1 = twistor_form(*ctx, z, idx).form;
    auto f2 = twistor_form(*ctx, z, swapped).form;
    r.record(f1 == -f2, "k=" + std::to_string(k) + ", m=" + std::to_string(m) + ", form " + f1.str());
  }
  return r;
}

/// Substitution is a ring homomorphism and commutes with evaluation.
inline PropertyResult substitution_homomorphism(std::uint64_t seed, int cases = 100) {
  PropertyResult r{"substitution_homomorphism", 0, 0, ""};
  Gen g(seed);
  auto src = make_vars({"x", "y", "z"});
  auto dst = make_vars({"a", "b"});
  for (int c = 0; c < cases; ++c) {
    auto f = g.poly(src, 4, 3), h = g.poly(src, 4, 3);
    std::map<std::string, QPoly> m{{"x", g.poly(dst, 3, 2)}, {"y", g.poly(dst, 3, 2)}, {"z", g.poly(dst, 3, 2)}};
    auto s = [&](const QPoly& p) { return substitute(p, m, dst); };
    std::vector<Rational> pt{g.rational(), g.rational()};
    std::vector<Rational> img{m.at("x").evaluate(pt), m.at("y").evaluate(pt), m.at("z").evaluate(pt)};
    bool ok = s(f + h) == s(f) + s(h) && s(f * h) == s(f) * s(h) && s(f).evaluate(pt) == f.evaluate(img);
    r.record(ok, "f = " + f.str() + ", g = " + h.str());
  }
  return r;
}

/// The reduced basis does not depend on generator order, scaling or the
/// handle it was computed through.
inline PropertyResult basis_determinism(std::uint64_t seed, int cases = 100) {
  PropertyResult r{"reduced_basis_determinism", 0, 0, ""};
  Gen g(seed);
  auto v = make_vars({"x", "y", "z"});
  for (int c = 0; c < cases; ++c) {
    auto ord = g.coin() ? MonomialOrder::grevlex() : MonomialOrder::lex();
    auto gens = random_generators(g, v);
    auto other = gens;
    g.shuffle(other);
    for (auto& p : other) p = p * g.nonzero();
    auto b1 = basis_to_json(QIdeal::of(gens).basis(ord)).dump();
    auto b2 = basis_to_json(QIdeal::of(other).basis(ord)).dump();
    auto b3 = basis_to_json(groebner_basis(gens, ord)).dump();
    r.record(b1 == b2 && b1 == b3, "generators " + std::to_string(gens.size()) + ", order " + ord.name());
  }
  return r;
}

/// Re-running a command on the same inputs gives a byte-identical results
/// payload, including through the basis cache.
inline PropertyResult report_determinism(std::uint64_t seed, int cases = 100) {
  PropertyResult r{"report_determinism", 0, 0, ""};
  Gen g(seed);
  auto dir = std::filesystem::temp_directory_path() / ("pg-prop-" + std::to_string(::getpid()) + "-" + std::to_string(seed));
  std::filesystem::remove_all(dir);
  Cache cache(dir);
  auto v = make_vars({"x", "y", "z"});
  for (int c = 0; c < cases; ++c) {
    std::string a, b, what;
    switch (c % 3) {
      case 0: {
        auto k = static_cast<std::size_t>(g.integer(1, 5));
        auto n = k + static_cast<std::size_t>(g.integer(0, 6));
        a = grass_degree(k, n).results.dump();
        b = grass_degree(k, n).results.dump();
        what = "grass degree " + std::to_string(k) + " " + std::to_string(n);
        break;
      }
      case 1: {
        auto n = static_cast<std::size_t>(g.integer(4, 12));
        std::vector<std::size_t> idx;
        for (std::size_t i = 1; i <= n; ++i)
          if (g.coin() && (idx.empty() || idx.back() + 1 < i) && !(i == n && !idx.empty() && idx.front() == 1))
            idx.push_back(i);
        if (idx.empty()) idx.push_back(1);
        auto k = static_cast<std::size_t>(g.integer(1, 4));
        a = amp_matroid(k, n, idx).results.dump();
        b = amp_matroid(k, n, idx).results.dump();
        what = "amp matroid n=" + std::to_string(n);
        break;
      }
      default: {
        QIdeal ideal(v, random_generators(g, v));
        CommandOptions opt;
        opt.order = g.coin() ? "grevlex" : "lex";
        auto j = to_json(ideal);
        a = gb_command(j, opt, cache).results.dump();
        b = gb_command(j, opt, cache).results.dump();
        Cache fresh(dir / "fresh");
        auto c2 = gb_command(j, opt, fresh).results.dump();
        std::filesystem::remove_all(dir / "fresh");
        if (c2 != a) b = "";
        what = "gb " + j.dump();
        break;
      }
    }
    r.record(!a.empty() && a == b, what);
  }
  std::filesystem::remove_all(dir);
  return r;
}

/// c + d = 2k for every rank-2 matroid, and in_P agrees with e >= 0.
inline PropertyResult matroid_consistency(std::uint64_t seed, int cases = 100) {
  PropertyResult r{"matroid_c_plus_d", 0, 0, ""};
  Gen g(seed);
  for (int c = 0; c < cases; ++c) {
    MatroidRank2 nm;
    nm.n = static_cast<std::size_t>(g.integer(3, 12));
    std::size_t i = 1;
    while (i <= nm.n) {
      auto len = static_cast<std::size_t>(g.integer(0, 3));
      if (g.coin() && i + len <= nm.n) {
        nm.intervals.push_back({i, i + len});
        i += len + 2;
      } else {
        if (g.integer(0, 3) == 0) nm.loops.insert(i);
        ++i;
      }
    }
    long k = g.integer(1, 6);
    auto inv = matroid_invariants(nm, k);
    r.record(inv.c + inv.d == 2 * k && inv.in_p == (inv.e >= 0), "n=" + std::to_string(nm.n) + ", k=" + std::to_string(k));
  }
  return r;
}

inline std::vector<PropertyResult> run_all(std::uint64_t seed = 20240611, int cases = 100) {
  return {normal_form_idempotence(seed, cases), membership_gcd_oracle(seed + 1, cases),
          twistor_alternation(seed + 2, cases),  substitution_homomorphism(seed + 3, cases),
          basis_determinism(seed + 4, cases),    report_determinism(seed + 5, cases),
          matroid_consistency(seed + 6, cases)};
}

}  // namespace pgprop
