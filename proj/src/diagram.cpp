#include "bqinv/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bqinv/parallel.hpp"

namespace bqinv {

PointCensus operator+(const PointCensus& a, const PointCensus& b) {
  return {a.t_plus + b.t_plus, a.t_minus + b.t_minus, a.w_plus + b.w_plus,
          a.w_minus + b.w_minus, a.b_plus + b.b_plus, a.b_minus + b.b_minus};
}

void DiagramData::validate() const {
  std::set<std::string> declared;
  for (const auto& g : generators)
    if (!declared.insert(g).second) throw Error(ErrorKind::InvalidInput, "generator '" + g + "' declared twice");

  auto check = [&](const Word& w, const std::string& where) {
    std::set<std::string> used;
    collect_generators(w, used);
    for (const auto& s : used)
      if (!declared.contains(s))
        throw Error(ErrorKind::UnboundGenerator, "'" + s + "' in " + where + " is not a declared generator");
  };
  for (std::size_t i = 0; i < relations.size(); ++i) {
    check(relations[i].lhs, "relation " + std::to_string(i));
    check(relations[i].rhs, "relation " + std::to_string(i));
  }
  for (std::size_t i = 0; i < triple_points.size(); ++i) {
    const auto& tp = triple_points[i];
    if (tp.sign != 1 && tp.sign != -1)
      throw Error(ErrorKind::InvalidInput, "triple point " + std::to_string(i) + " has sign other than +1/-1");
    const std::string where = "triple point " + std::to_string(i);
    check(tp.bottom, where);
    check(tp.middle, where);
    check(tp.top, where);
  }
  for (auto v : {census.t_plus, census.t_minus, census.w_plus, census.w_minus, census.b_plus, census.b_minus})
    if (v < 0) throw Error(ErrorKind::InvalidInput, "census counts must be non-negative");
}

Assignment Coloring::to_assignment(const std::vector<std::string>& generators) const {
  Assignment a;
  for (std::size_t i = 0; i < generators.size() && i < values.size(); ++i) a.emplace(generators[i], values[i]);
  return a;
}

namespace {

struct CompiledRelation {
  CompiledWord lhs, rhs;
};

class Solver {
 public:
  Solver(const DiagramData& d, const FiniteBiquandle& bq) : bq_(bq), g_(d.generators.size()) {
    d.validate();
    by_slot_.resize(std::max<std::size_t>(g_, 1));
    for (const auto& r : d.relations) {
      CompiledRelation cr{CompiledWord(r.lhs, d.generators), CompiledWord(r.rhs, d.generators)};
      const std::size_t ready = std::max(cr.lhs.max_slot(), cr.rhs.max_slot());
      by_slot_[ready].push_back(std::move(cr));
    }
  }

  std::size_t generator_count() const { return g_; }

  // Visits every satisfying assignment whose first value lies in [first_begin, first_end).
  template <class Visit>
  void run(std::size_t first_begin, std::size_t first_end, Visit&& visit) const {
    std::vector<Element> values(g_, 0);
    if (g_ == 0) {
      visit(values);
      return;
    }
    for (auto v = static_cast<Element>(first_begin); v < first_end; ++v) {
      values[0] = v;
      if (satisfied(0, values)) descend(1, values, visit);
    }
  }

 private:
  bool satisfied(std::size_t slot, std::span<const Element> values) const {
    for (const auto& r : by_slot_[slot])
      if (r.lhs.eval(bq_, values) != r.rhs.eval(bq_, values)) return false;
    return true;
  }

  template <class Visit>
  void descend(std::size_t slot, std::vector<Element>& values, Visit& visit) const {
    if (slot == g_) {
      visit(values);
      return;
    }
    for (Element v = 0; v < bq_.size(); ++v) {
      values[slot] = v;
      if (satisfied(slot, values)) descend(slot + 1, values, visit);
    }
  }

  const FiniteBiquandle& bq_;
  std::size_t g_;
  std::vector<std::vector<CompiledRelation>> by_slot_;  // relations keyed by last generator they need
};

std::size_t first_range(const Solver& s, const FiniteBiquandle& bq) {
  return s.generator_count() == 0 ? 1 : bq.size();
}

}  // namespace

std::vector<Coloring> solve_colorings(const DiagramData& d, const FiniteBiquandle& bq, const SolveOptions& opts) {
  const Solver solver(d, bq);
  auto parts = parallel_chunks(first_range(solver, bq), opts.workers, [&](std::size_t begin, std::size_t end) {
    std::vector<Coloring> found;
    solver.run(begin, end, [&](const std::vector<Element>& values) { found.push_back({values}); });
    return found;
  });
  std::vector<Coloring> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

std::uint64_t coloring_count(const DiagramData& d, const FiniteBiquandle& bq, const SolveOptions& opts) {
  const Solver solver(d, bq);
  auto parts = parallel_chunks(first_range(solver, bq), opts.workers, [&](std::size_t begin, std::size_t end) {
    std::uint64_t count = 0;
    solver.run(begin, end, [&](const std::vector<Element>&) { ++count; });
    return count;
  });
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

namespace {

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "f* overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "f* overflow");
  return r;
}

}  // namespace

std::int64_t f_star(const PointCensus& c) {
  const std::int64_t t = checked_sub(c.t_plus, c.t_minus);
  const std::int64_t twice_t = checked_add(t, t);
  const std::int64_t w = checked_sub(c.w_plus, c.w_minus);
  const std::int64_t b = checked_sub(c.b_plus, c.b_minus);
  return checked_add(checked_sub(twice_t, w), b);
}

PointCensus apply_h_move_census(PointCensus c, int direction) {
  if (direction == -1) {
    if (c.t_plus < 1) throw Error(ErrorKind::EmptyBucket, "no positive triple point to flip");
    --c.t_plus;
    ++c.t_minus;
  } else if (direction == 1) {
    if (c.t_minus < 1) throw Error(ErrorKind::EmptyBucket, "no negative triple point to flip");
    --c.t_minus;
    ++c.t_plus;
  } else {
    throw Error(ErrorKind::InvalidInput, "h-move direction must be +1 or -1");
  }
  return c;
}

}  // namespace bqinv
