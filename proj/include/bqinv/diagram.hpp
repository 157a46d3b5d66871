#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bqinv/algebra.hpp"
#include "bqinv/terms.hpp"

namespace bqinv {

// Colors of the bottom, middle and top sheets bounding the source region,
// as words in the generators, with the triple point's sign.
struct TriplePointTerm {
  int sign = 1;
  Word bottom, middle, top;
};

// Signed counts of triple points (T), white branch points (W) and black
// branch points (B).
struct PointCensus {
  std::int64_t t_plus = 0, t_minus = 0;
  std::int64_t w_plus = 0, w_minus = 0;
  std::int64_t b_plus = 0, b_minus = 0;

  friend bool operator==(const PointCensus&, const PointCensus&) = default;
  friend PointCensus operator+(const PointCensus& a, const PointCensus& b);
};

struct Relation {
  Word lhs, rhs;
};

struct DiagramData {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  std::vector<TriplePointTerm> triple_points;
  PointCensus census;

  // Throws UnboundGenerator for undeclared symbols, InvalidInput for
  // duplicate generators, bad signs or negative census counts.
  void validate() const;
};

// Values in generator declaration order.
struct Coloring {
  std::vector<Element> values;

  Assignment to_assignment(const std::vector<std::string>& generators) const;
  friend auto operator<=>(const Coloring&, const Coloring&) = default;
};

struct SolveOptions {
  unsigned workers = 1;
};

// All generator assignments satisfying every relation, in lexicographic order
// of the value tuples. Relations are tested as soon as every generator they
// mention has a value.
std::vector<Coloring> solve_colorings(const DiagramData& d, const FiniteBiquandle& bq, const SolveOptions& opts = {});

std::uint64_t coloring_count(const DiagramData& d, const FiniteBiquandle& bq, const SolveOptions& opts = {});

// 2(T+ - T-) - (W+ - W-) + (B+ - B-). Throws Overflow.
std::int64_t f_star(const PointCensus& c);

// direction -1 turns one positive triple point negative, +1 the reverse.
// Branch point counts are untouched. Throws EmptyBucket.
PointCensus apply_h_move_census(PointCensus c, int direction);

}  // namespace bqinv
