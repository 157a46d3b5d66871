#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bqinv/bqinv.hpp"

namespace bqinv::testing {

// Z9 quandle table exactly as printed (row = first argument).
inline RawTable z9_rows() {
  return {
      {0, 6, 3, 0, 6, 3, 0, 6, 3}, {4, 1, 7, 4, 1, 7, 4, 1, 7}, {8, 5, 2, 8, 5, 2, 8, 5, 2},
      {3, 0, 6, 3, 0, 6, 3, 0, 6}, {7, 4, 1, 7, 4, 1, 7, 4, 1}, {2, 8, 5, 2, 8, 5, 2, 8, 5},
      {6, 3, 0, 6, 3, 0, 6, 3, 0}, {1, 7, 4, 1, 7, 4, 1, 7, 4}, {5, 2, 8, 5, 2, 8, 5, 2, 8},
  };
}

inline FiniteBiquandle z9() { return FiniteBiquandle::from_quandle(z9_rows()); }

inline std::vector<Triple> theta_s_support() {
  return {{0, 1, 4}, {3, 1, 4}, {6, 1, 4}, {0, 4, 7}, {3, 4, 7}, {6, 4, 7}, {0, 7, 1}, {3, 7, 1}, {6, 7, 1}};
}

inline Cocycle3 theta_s() {
  Cocycle3 th(3, 9);
  for (const auto& t : theta_s_support()) th.set_exponent(t, 1);
  return th;
}

inline TriplePointTerm term(int sign, const char* bottom, const char* middle, const char* top) {
  return {sign, parse_word(bottom), parse_word(middle), parse_word(top)};
}

// The eight signed Boltzmann factors of the FR movie, with no relations.
inline DiagramData fr_statesum() {
  DiagramData d;
  d.name = "FR";
  d.generators = {"c", "d"};
  d.triple_points = {
      term(+1, "c", "d", "(ub d c)"),          term(-1, "(ub c d)", "c", "(ub d c)"),
      term(-1, "d", "c", "(ub d c)"),          term(+1, "(ub c d)", "d", "(ub c d)"),
      term(-1, "(ubi c d)", "(ub d c)", "d"),  term(+1, "(ubi c d)", "c", "d"),
      term(+1, "d", "c", "d"),                 term(-1, "(ubi c d)", "d", "c"),
  };
  d.census = {4, 4, 0, 0, 0, 0};
  return d;
}

inline DiagramData fr_presented() {
  DiagramData d;
  d.name = "FR (printed presentation)";
  d.generators = {"c", "d"};
  auto rel = [](const char* l, const char* r) { return Relation{parse_word(l), parse_word(r)}; };
  d.relations = {rel("(ub c d)", "(ub c (ub c d))"), rel("(ub d c)", "(ub d (ub c d))"),
                 rel("(ub c (ub c d))", "c"), rel("(ub d (ub d c))", "c")};
  return d;
}

// ------------------------------------------------------------------ oracles

struct PlainBiquandle {
  std::size_t n;
  std::vector<std::vector<Element>> U, O;
};

inline PlainBiquandle plain(const FiniteBiquandle& bq) {
  PlainBiquandle p{bq.size(), {}, {}};
  p.U.assign(p.n, std::vector<Element>(p.n));
  p.O = p.U;
  for (Element x = 0; x < p.n; ++x)
    for (Element y = 0; y < p.n; ++y) {
      p.U[x][y] = bq.under()(x, y);
      p.O[x][y] = bq.over()(x, y);
    }
  return p;
}

inline std::vector<std::vector<Element>> plain_rows(const Table& t) {
  std::vector<std::vector<Element>> rows(t.size(), std::vector<Element>(t.size()));
  for (Element x = 0; x < t.size(); ++x)
    for (Element y = 0; y < t.size(); ++y) rows[x][y] = t(x, y);
  return rows;
}

// Straight transcription of the definition, returning only a verdict.
inline bool oracle_is_biquandle(const std::vector<std::vector<Element>>& U, const std::vector<std::vector<Element>>& O) {
  const std::size_t n = U.size();
  for (std::size_t x = 0; x < n; ++x)
    if (U[x][x] != O[x][x]) return false;
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<Element> cu, co;
    for (std::size_t x = 0; x < n; ++x) {
      cu.push_back(U[x][y]);
      co.push_back(O[x][y]);
    }
    std::sort(cu.begin(), cu.end());
    std::sort(co.begin(), co.end());
    if (std::adjacent_find(cu.begin(), cu.end()) != cu.end()) return false;
    if (std::adjacent_find(co.begin(), co.end()) != co.end()) return false;
  }
  // pairwise collision scan for S
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t y1 = 0; y1 < n; ++y1)
      for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t y2 = 0; y2 < n; ++y2)
          if ((x1 != x2 || y1 != y2) && O[y1][x1] == O[y2][x2] && U[x1][y1] == U[x2][y2]) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (U[U[x][y]][U[z][y]] != U[U[x][z]][O[y][z]]) return false;
        if (U[O[x][y]][O[z][y]] != O[U[x][z]][U[y][z]]) return false;
        if (O[O[x][y]][O[z][y]] != O[O[x][z]][U[y][z]]) return false;
      }
  return true;
}

// Pairwise-collision test of S alone.
inline bool oracle_switch_bijective(const std::vector<std::vector<Element>>& U,
                                    const std::vector<std::vector<Element>>& O) {
  const std::size_t n = U.size();
  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t y1 = 0; y1 < n; ++y1)
      for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t y2 = 0; y2 < n; ++y2)
          if ((x1 != x2 || y1 != y2) && O[y1][x1] == O[y2][x2] && U[x1][y1] == U[x2][y2]) return false;
  return true;
}

// --------------------------------------------------------- random instances

using Rng = std::mt19937_64;

inline std::vector<Element> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::size_t gcd(std::size_t a, std::size_t b) { return b == 0 ? a : gcd(b, a % b); }

inline std::size_t random_unit(std::size_t n, Rng& rng) {
  if (n == 1) return 0;
  std::uniform_int_distribution<std::size_t> d(1, n - 1);
  while (true) {
    const std::size_t u = d(rng);
    if (gcd(u, n) == 1) return u;
  }
}

// Biquandle tables drawn from known families, then relabelled by a random
// permutation so the tables do not look structured:
//   0 trivial (both projections)
//   1 constant action x⊔y = x⊗y = σ(x)
//   2 dihedral quandle x⊔y = 2y - x
//   3 Alexander quandle x⊔y = tx + (1-t)y
//   4 Alexander biquandle x⊔y = tx + (s-t)y, x⊗y = sx
inline std::pair<Table, Table> random_biquandle_tables(Rng& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> pick_n(1, max_n);
  std::uniform_int_distribution<int> pick_family(0, 4);
  const std::size_t n = pick_n(rng);
  const int family = pick_family(rng);
  Table U(n), O(n);
  const auto sigma = random_permutation(n, rng);
  const std::size_t t = random_unit(n, rng), s = random_unit(n, rng);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t u = x, o = x;
      switch (family) {
        case 1: u = o = sigma[x]; break;
        case 2: u = (2 * y + n - x) % n; break;
        case 3: u = (t * x + (n + 1 - t) * y) % n; break;
        case 4: u = (t * x + (n + s - t) * y) % n; o = (s * x) % n; break;
        default: break;
      }
      U(static_cast<Element>(x), static_cast<Element>(y)) = static_cast<Element>(u);
      O(static_cast<Element>(x), static_cast<Element>(y)) = static_cast<Element>(o);
    }
  // relabel: U'(πx, πy) = π(U(x, y))
  const auto pi = random_permutation(n, rng);
  Table U2(n), O2(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      U2(pi[x], pi[y]) = pi[U(x, y)];
      O2(pi[x], pi[y]) = pi[O(x, y)];
    }
  return {U2, O2};
}

inline FiniteBiquandle random_biquandle(Rng& rng, std::size_t max_n) {
  auto [U, O] = random_biquandle_tables(rng, max_n);
  return FiniteBiquandle::from_tables(std::move(U), std::move(O));
}

inline Word random_word(Rng& rng, const std::vector<std::string>& gens, int max_depth) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1);
  if (max_depth == 0 || coin(rng) == 0) return Word::generator(gens[pick_gen(rng)]);
  std::uniform_int_distribution<int> pick_op(0, 3);
  const Op op = static_cast<Op>(pick_op(rng));
  Word l = random_word(rng, gens, max_depth - 1);
  Word r = random_word(rng, gens, max_depth - 1);
  return Word::apply(op, std::move(l), std::move(r));
}

// Random presentation: g generators, a few relations, a few triple points.
inline DiagramData random_diagram(Rng& rng, std::size_t g, std::size_t relations, std::size_t triple_points) {
  DiagramData d;
  d.name = "random";
  for (std::size_t i = 0; i < g; ++i) d.generators.push_back("g" + std::to_string(i));
  for (std::size_t i = 0; i < relations; ++i)
    d.relations.push_back({random_word(rng, d.generators, 2), random_word(rng, d.generators, 2)});
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t i = 0; i < triple_points; ++i)
    d.triple_points.push_back({coin(rng) ? 1 : -1, random_word(rng, d.generators, 2),
                               random_word(rng, d.generators, 2), random_word(rng, d.generators, 2)});
  return d;
}

// Naive coloring oracle: every n^g assignment, filtered with eval_word.
inline std::vector<std::vector<Element>> oracle_colorings(const DiagramData& d, const FiniteBiquandle& bq) {
  std::vector<std::vector<Element>> out;
  const std::size_t g = d.generators.size();
  std::vector<Element> v(g, 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < g; ++i) a[d.generators[i]] = v[i];
    bool ok = true;
    for (const auto& r : d.relations)
      if (eval_word(r.lhs, bq, a) != eval_word(r.rhs, bq, a)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
    std::size_t k = g;
    while (k > 0 && ++v[k - 1] == bq.size()) v[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

inline Cocycle3 random_cocycle(Rng& rng, std::size_t n, std::uint32_t m, std::size_t entries) {
  Cocycle3 th(m, n);
  std::uniform_int_distribution<Element> e(0, static_cast<Element>(n - 1));
  std::uniform_int_distribution<std::int64_t> x(0, m - 1);
  for (std::size_t i = 0; i < entries; ++i) th.set_exponent({e(rng), e(rng), e(rng)}, x(rng));
  return th;
}

}  // namespace bqinv::testing
