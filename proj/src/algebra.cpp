#include "bqinv/algebra.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "bqinv/parallel.hpp"

namespace bqinv {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::NotABiquandle: return "NotABiquandle";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownOperator: return "UnknownOperator";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::UnboundGenerator: return "UnboundGenerator";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::EmptyBucket: return "EmptyBucket";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

Table Table::from_rows(const RawTable& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "table has no rows");
  Table t(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (rows[x].size() != n) {
      std::ostringstream msg;
      msg << "row " << x << " has " << rows[x].size() << " entries, expected " << n;
      throw Error(ErrorKind::DimensionMismatch, msg.str());
    }
    for (std::size_t y = 0; y < n; ++y) {
      const auto v = rows[x][y];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n) {
        std::ostringstream msg;
        msg << "entry [" << x << "][" << y << "] = " << v << " not in 0.." << n - 1;
        throw Error(ErrorKind::EntryOutOfRange, msg.str());
      }
      t(static_cast<Element>(x), static_cast<Element>(y)) = static_cast<Element>(v);
    }
  }
  return t;
}

Table Table::projection(std::size_t n) {
  Table t(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t(x, y) = x;
  return t;
}

RawTable Table::to_rows() const {
  RawTable rows(n_, std::vector<std::int64_t>(n_));
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) rows[x][y] = (*this)(x, y);
  return rows;
}

std::string_view to_string(Op op) {
  switch (op) {
    case Op::UB: return "ub";
    case Op::OB: return "ob";
    case Op::UBI: return "ubi";
    case Op::OBI: return "obi";
  }
  return "?";
}

std::optional<Op> parse_op(std::string_view token) {
  if (token == "ub") return Op::UB;
  if (token == "ob") return Op::OB;
  if (token == "ubi") return Op::UBI;
  if (token == "obi") return Op::OBI;
  return std::nullopt;
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Diagonal: return "diagonal";
    case Axiom::UnderInvertible: return "under-invertible";
    case Axiom::OverInvertible: return "over-invertible";
    case Axiom::SwitchInvertible: return "switch-invertible";
    case Axiom::Exchange1: return "exchange-1";
    case Axiom::Exchange2: return "exchange-2";
    case Axiom::Exchange3: return "exchange-3";
  }
  return "?";
}

namespace {

constexpr std::size_t kAxiomCount = 7;

class Collector {
 public:
  explicit Collector(std::size_t cap) : cap_(cap) {}

  void add(Axiom a, std::vector<Element> witness) {
    auto& bucket = buckets_[static_cast<std::size_t>(a)];
    if (bucket.size() < cap_) bucket.push_back({a, std::move(witness)});
  }

  bool full(Axiom a) const { return buckets_[static_cast<std::size_t>(a)].size() >= cap_; }

  void merge(Collector&& other) {
    for (std::size_t i = 0; i < kAxiomCount; ++i) {
      auto& dst = buckets_[i];
      for (auto& v : other.buckets_[i]) dst.push_back(std::move(v));
    }
  }

  std::vector<Violation> finish() && {
    std::vector<Violation> out;
    for (auto& bucket : buckets_) {
      std::sort(bucket.begin(), bucket.end());
      if (bucket.size() > cap_) bucket.resize(cap_);
      for (auto& v : bucket) out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t cap_;
  std::array<std::vector<Violation>, kAxiomCount> buckets_;
};

void check_column_bijective(const Table& t, Axiom axiom, Collector& out) {
  const std::size_t n = t.size();
  std::vector<std::int64_t> first_hit(n);
  for (Element y = 0; y < n && !out.full(axiom); ++y) {
    std::fill(first_hit.begin(), first_hit.end(), -1);
    for (Element x = 0; x < n; ++x) {
      const Element v = t(x, y);
      if (first_hit[v] >= 0) {
        out.add(axiom, {y, static_cast<Element>(first_hit[v]), x});
        if (out.full(axiom)) break;
      } else {
        first_hit[v] = x;
      }
    }
  }
}

void check_switch(const Table& under, const Table& over, Collector& out) {
  const std::size_t n = under.size();
  std::vector<std::int64_t> first_hit(n * n, -1);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::size_t image = std::size_t{over(y, x)} * n + under(x, y);
      const auto here = static_cast<std::int64_t>(std::size_t{x} * n + y);
      if (first_hit[image] >= 0) {
        const auto prev = static_cast<std::size_t>(first_hit[image]);
        out.add(Axiom::SwitchInvertible,
                {static_cast<Element>(prev / n), static_cast<Element>(prev % n), x, y});
        if (out.full(Axiom::SwitchInvertible)) return;
      } else {
        first_hit[image] = here;
      }
    }
  }
}

bool exchange_holds(const Table& U, const Table& O, Axiom law, Element x, Element y, Element z) {
  switch (law) {
    case Axiom::Exchange1: return U(U(x, y), U(z, y)) == U(U(x, z), O(y, z));
    case Axiom::Exchange2: return U(O(x, y), O(z, y)) == O(U(x, z), U(y, z));
    case Axiom::Exchange3: return O(O(x, y), O(z, y)) == O(O(x, z), U(y, z));
    default: return true;
  }
}

}  // namespace

AxiomReport verify_biquandle(const Table& under, const Table& over, const VerifyOptions& opts) {
  const std::size_t n = under.size();
  if (n == 0 || over.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "under and over tables must be non-empty and the same size");

  Collector collector(opts.cap_per_axiom);
  for (Element x = 0; x < n; ++x)
    if (under(x, x) != over(x, x)) collector.add(Axiom::Diagonal, {x});
  check_column_bijective(under, Axiom::UnderInvertible, collector);
  check_column_bijective(over, Axiom::OverInvertible, collector);
  check_switch(under, over, collector);

  // n^3 triples, partitioned on x.
  auto chunks = parallel_chunks(n, opts.workers, [&](std::size_t begin, std::size_t end) {
    Collector local(opts.cap_per_axiom);
    for (auto x = static_cast<Element>(begin); x < end; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          for (Axiom law : {Axiom::Exchange1, Axiom::Exchange2, Axiom::Exchange3})
            if (!local.full(law) && !exchange_holds(under, over, law, x, y, z)) local.add(law, {x, y, z});
    return local;
  });
  for (auto& c : chunks) collector.merge(std::move(c));

  AxiomReport report;
  report.violations = std::move(collector).finish();
  report.passed = report.violations.empty();
  return report;
}

AxiomReport verify_biquandle(const RawTable& under, const RawTable& over, const VerifyOptions& opts) {
  Table u = Table::from_rows(under);
  Table o = Table::from_rows(over);
  if (u.size() != o.size())
    throw Error(ErrorKind::DimensionMismatch, "under and over tables differ in size");
  return verify_biquandle(u, o, opts);
}

bool witness_reproduces(const Table& under, const Table& over, const Violation& v) {
  const auto& w = v.witness;
  switch (v.axiom) {
    case Axiom::Diagonal:
      return w.size() == 1 && under(w[0], w[0]) != over(w[0], w[0]);
    case Axiom::UnderInvertible:
      return w.size() == 3 && w[1] != w[2] && under(w[1], w[0]) == under(w[2], w[0]);
    case Axiom::OverInvertible:
      return w.size() == 3 && w[1] != w[2] && over(w[1], w[0]) == over(w[2], w[0]);
    case Axiom::SwitchInvertible:
      return w.size() == 4 && (w[0] != w[2] || w[1] != w[3]) &&
             over(w[1], w[0]) == over(w[3], w[2]) && under(w[0], w[1]) == under(w[2], w[3]);
    case Axiom::Exchange1:
    case Axiom::Exchange2:
    case Axiom::Exchange3:
      return w.size() == 3 && !exchange_holds(under, over, v.axiom, w[0], w[1], w[2]);
  }
  return false;
}

namespace {

Table invert_columns(const Table& t) {
  Table inv(t.size());
  for (Element y = 0; y < t.size(); ++y)
    for (Element z = 0; z < t.size(); ++z) inv(t(z, y), y) = z;
  return inv;
}

}  // namespace

FiniteBiquandle::FiniteBiquandle(Table under, Table over)
    : under_(std::move(under)),
      over_(std::move(over)),
      under_inv_(invert_columns(under_)),
      over_inv_(invert_columns(over_)) {}

FiniteBiquandle FiniteBiquandle::from_tables(Table under, Table over, unsigned workers) {
  VerifyOptions opts;
  opts.workers = workers;
  const AxiomReport report = verify_biquandle(under, over, opts);
  if (!report.passed) {
    std::ostringstream msg;
    const auto& v = report.violations.front();
    msg << report.violations.size() << " violation(s), first: " << to_string(v.axiom) << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) msg << (i ? "," : "") << v.witness[i];
    msg << ")";
    throw Error(ErrorKind::NotABiquandle, msg.str());
  }
  return FiniteBiquandle(std::move(under), std::move(over));
}

FiniteBiquandle FiniteBiquandle::from_quandle(Table table, unsigned workers) {
  const std::size_t n = table.size();
  return from_tables(std::move(table), Table::projection(n), workers);
}

FiniteBiquandle FiniteBiquandle::from_quandle(const RawTable& table, unsigned workers) {
  return from_quandle(Table::from_rows(table), workers);
}

Element FiniteBiquandle::apply(Op op, Element x, Element y) const {
  if (x >= size() || y >= size()) {
    std::ostringstream msg;
    msg << "(" << x << ", " << y << ") outside carrier of size " << size();
    throw Error(ErrorKind::ElementOutOfRange, msg.str());
  }
  return apply_unchecked(op, x, y);
}

bool is_homomorphism(const FiniteBiquandle& src, const FiniteBiquandle& dst, std::span<const Element> map) {
  const std::size_t n = src.size();
  if (map.size() != n) return false;
  for (Element v : map)
    if (v >= dst.size()) return false;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (map[src.under()(x, y)] != dst.under()(map[x], map[y])) return false;
      if (map[src.over()(x, y)] != dst.over()(map[x], map[y])) return false;
    }
  return true;
}

namespace {

bool is_bijective(const Homomorphism& f, std::size_t dst_size) {
  if (f.size() != dst_size) return false;
  std::vector<bool> hit(dst_size, false);
  for (Element v : f) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

// Backtracking over f(0), f(1), ... in lexicographic order. After fixing f(i),
// every operation instance whose three points are all assigned and that
// involves i is checked, so partial maps are pruned as early as possible.
class HomSearch {
 public:
  HomSearch(const FiniteBiquandle& src, const FiniteBiquandle& dst, const HomomorphismOptions& opts,
            HomomorphismList& out)
      : src_(src), dst_(dst), opts_(opts), out_(out), image_(src.size(), 0) {}

  void run() { descend(0); }

 private:
  bool consistent(Element i) const {
    for (Element x = 0; x <= i; ++x)
      for (Element y = 0; y <= i; ++y)
        for (Op op : {Op::UB, Op::OB}) {
          const Element z = src_.apply_unchecked(op, x, y);
          if (z > i || std::max({x, y, z}) != i) continue;
          if (image_[z] != dst_.apply_unchecked(op, image_[x], image_[y])) return false;
        }
    return true;
  }

  // Returns false once the cap is exceeded.
  bool descend(Element i) {
    if (i == src_.size()) {
      if (opts_.isomorphisms_only && !is_bijective(image_, dst_.size())) return true;
      if (out_.maps.size() >= opts_.cap) {
        out_.truncated = true;
        return false;
      }
      out_.maps.push_back(image_);
      return true;
    }
    for (Element v = 0; v < dst_.size(); ++v) {
      image_[i] = v;
      if (consistent(i) && !descend(i + 1)) return false;
    }
    return true;
  }

  const FiniteBiquandle& src_;
  const FiniteBiquandle& dst_;
  const HomomorphismOptions& opts_;
  HomomorphismList& out_;
  Homomorphism image_;
};

// Extends generator images to all of src by closing under ⊔ and ⊗.
// Returns nullopt on a conflict; throws if the generators do not generate.
std::optional<Homomorphism> extend_from_generators(const FiniteBiquandle& src, const FiniteBiquandle& dst,
                                                   const std::vector<Element>& gens,
                                                   const std::vector<Element>& images) {
  const std::size_t n = src.size();
  constexpr Element kUnset = ~Element{0};
  Homomorphism f(n, kUnset);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (f[gens[i]] != kUnset && f[gens[i]] != images[i]) return std::nullopt;
    f[gens[i]] = images[i];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      if (f[x] == kUnset) continue;
      for (Element y = 0; y < n; ++y) {
        if (f[y] == kUnset) continue;
        for (Op op : {Op::UB, Op::OB}) {
          const Element z = src.apply_unchecked(op, x, y);
          const Element want = dst.apply_unchecked(op, f[x], f[y]);
          if (f[z] == kUnset) {
            f[z] = want;
            changed = true;
          } else if (f[z] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  if (std::find(f.begin(), f.end(), kUnset) != f.end())
    throw Error(ErrorKind::InvalidInput, "supplied generators do not generate the source biquandle");
  return f;
}

}  // namespace

HomomorphismList enumerate_homomorphisms(const FiniteBiquandle& src, const FiniteBiquandle& dst,
                                         const HomomorphismOptions& opts) {
  HomomorphismList out;
  if (!opts.generators) {
    HomSearch(src, dst, opts, out).run();
    return out;
  }

  const auto& gens = *opts.generators;
  for (Element g : gens)
    if (g >= src.size()) throw Error(ErrorKind::ElementOutOfRange, "generator outside source carrier");

  std::vector<Homomorphism> found;
  std::vector<Element> images(gens.size(), 0);
  while (true) {
    if (auto f = extend_from_generators(src, dst, gens, images);
        f && is_homomorphism(src, dst, *f) && (!opts.isomorphisms_only || is_bijective(*f, dst.size())))
      found.push_back(std::move(*f));
    // odometer over generator images
    std::size_t k = images.size();
    while (k > 0 && ++images[k - 1] == dst.size()) images[--k] = 0;
    if (k == 0) break;
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (found.size() > opts.cap) {
    found.resize(opts.cap);
    out.truncated = true;
  }
  out.maps = std::move(found);
  return out;
}

}  // namespace bqinv
