#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bqinv/error.hpp"

namespace bqinv {

using Element = std::uint32_t;

// Rows as read from a file, before any shape or range validation.
using RawTable = std::vector<std::vector<std::int64_t>>;

// Square operation table over 0..n-1, row index = first argument.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n) : n_(n), cells_(n * n, 0) {}

  // Validates shape and entry range; throws DimensionMismatch / EntryOutOfRange.
  static Table from_rows(const RawTable& rows);
  static Table projection(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Element operator()(Element x, Element y) const noexcept { return cells_[x * n_ + y]; }
  Element& operator()(Element x, Element y) noexcept { return cells_[x * n_ + y]; }
  std::span<const Element> cells() const noexcept { return cells_; }

  RawTable to_rows() const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

// UB: x⊔y, OB: x⊗y, UBI: z with z⊔y = x, OBI: z with z⊗y = x.
enum class Op { UB, OB, UBI, OBI };

std::string_view to_string(Op op);
std::optional<Op> parse_op(std::string_view token);

enum class Axiom {
  Diagonal,          // x⊔x = x⊗x
  UnderInvertible,   // x ↦ x⊔y bijective for every y
  OverInvertible,    // x ↦ x⊗y bijective for every y
  SwitchInvertible,  // S(x,y) = (y⊗x, x⊔y) bijective on pairs
  Exchange1,         // (x⊔y)⊔(z⊔y) = (x⊔z)⊔(y⊗z)
  Exchange2,         // (x⊗y)⊔(z⊗y) = (x⊔z)⊗(y⊔z)
  Exchange3,         // (x⊗y)⊗(z⊗y) = (x⊗z)⊗(y⊔z)
};

std::string_view to_string(Axiom axiom);

// Witness layout per axiom:
//   Diagonal              (x)
//   Under/OverInvertible  (y, x1, x2)   two distinct x hitting the same value in column y
//   SwitchInvertible      (x1, y1, x2, y2)  two distinct pairs with the same image under S
//   Exchange1..3          (x, y, z)
struct Violation {
  Axiom axiom;
  std::vector<Element> witness;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct AxiomReport {
  bool passed = true;
  std::vector<Violation> violations;
};

struct VerifyOptions {
  std::size_t cap_per_axiom = 32;
  unsigned workers = 1;
};

// Exhaustive check of the biquandle axioms. Shape/range problems throw;
// axiom failures are reported, never thrown.
AxiomReport verify_biquandle(const Table& under, const Table& over, const VerifyOptions& opts = {});
AxiomReport verify_biquandle(const RawTable& under, const RawTable& over, const VerifyOptions& opts = {});

// Re-evaluates a witness against the tables; true if it still exhibits the violation.
bool witness_reproduces(const Table& under, const Table& over, const Violation& v);

class FiniteBiquandle {
 public:
  // Throws NotABiquandle (with the report summary) when verification fails.
  static FiniteBiquandle from_tables(Table under, Table over, unsigned workers = 1);
  // Quandle embedding: ⊔ = table, ⊗ = projection onto the first argument.
  static FiniteBiquandle from_quandle(Table table, unsigned workers = 1);
  static FiniteBiquandle from_quandle(const RawTable& table, unsigned workers = 1);

  std::size_t size() const noexcept { return under_.size(); }

  // Throws ElementOutOfRange.
  Element apply(Op op, Element x, Element y) const;
  // Unchecked variant for hot loops.
  Element apply_unchecked(Op op, Element x, Element y) const noexcept {
    switch (op) {
      case Op::UB: return under_(x, y);
      case Op::OB: return over_(x, y);
      case Op::UBI: return under_inv_(x, y);
      case Op::OBI: return over_inv_(x, y);
    }
    return 0;
  }

  const Table& under() const noexcept { return under_; }
  const Table& over() const noexcept { return over_; }
  const Table& under_inv() const noexcept { return under_inv_; }
  const Table& over_inv() const noexcept { return over_inv_; }

  bool is_quandle_embedding() const noexcept { return over_ == Table::projection(size()); }

  friend bool operator==(const FiniteBiquandle& a, const FiniteBiquandle& b) {
    return a.under_ == b.under_ && a.over_ == b.over_;
  }

 private:
  FiniteBiquandle(Table under, Table over);

  Table under_, over_, under_inv_, over_inv_;
};

// A map src -> dst, image[i] = f(i).
using Homomorphism = std::vector<Element>;

struct HomomorphismOptions {
  std::size_t cap = 1'000'000;
  bool isomorphisms_only = false;
  // Optional generating set of src; when given, maps are determined by the
  // images of the generators and extended by closure.
  std::optional<std::vector<Element>> generators;
};

struct HomomorphismList {
  std::vector<Homomorphism> maps;
  bool truncated = false;  // CapExceeded: more maps exist than `cap`
};

// Exhaustive, lexicographic in (f(0), f(1), ...).
HomomorphismList enumerate_homomorphisms(const FiniteBiquandle& src, const FiniteBiquandle& dst,
                                         const HomomorphismOptions& opts = {});

bool is_homomorphism(const FiniteBiquandle& src, const FiniteBiquandle& dst, std::span<const Element> map);

}  // namespace bqinv
