#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bqinv/cohomology.hpp"
#include "bqinv/diagram.hpp"

namespace bqinv {

// Element of ℤ[⟨t | t^m = 1⟩]; coeffs[k] is the coefficient of t^k.
// Arithmetic is overflow-checked (throws Overflow).
class GroupRingElement {
 public:
  explicit GroupRingElement(std::uint32_t modulus);
  GroupRingElement(std::uint32_t modulus, std::vector<std::int64_t> coeffs);

  static GroupRingElement monomial(std::uint32_t modulus, std::int64_t power, std::int64_t coeff = 1);

  std::uint32_t modulus() const noexcept { return static_cast<std::uint32_t>(coeffs_.size()); }
  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  std::int64_t coeff(std::int64_t power) const;

  // Sum of all coefficients (the augmentation).
  std::int64_t augmentation() const;
  // t^k ↦ t^{-k}
  GroupRingElement conjugate() const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  // Cyclic convolution.
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  void add_monomial(std::uint32_t power, std::int64_t coeff);

 private:
  std::vector<std::int64_t> coeffs_;
};

// Ascending powers, zero terms omitted: "72 + 9t", "1 - t^2", "0".
std::string to_string(const GroupRingElement& x);

struct ColoringMonomial {
  Coloring coloring;
  std::uint32_t exponent = 0;
};

struct StateSumResult {
  GroupRingElement value{1};
  std::uint64_t coloring_count = 0;
  std::vector<ColoringMonomial> per_coloring;  // filled when auditing
};

struct StateSumOptions {
  unsigned workers = 1;
  bool audit = false;
};

// sign · θ(bottom, middle, top) as an exponent mod m, the three words
// evaluated under `assignment`. Throws UnboundGenerator, SizeMismatch.
std::uint32_t boltzmann_exponent(const TriplePointTerm& term, const Assignment& assignment, const FiniteBiquandle& bq,
                                 const Cocycle3& theta);

// Σ over colorings of Π over triple points of the Boltzmann weights. The
// product for one coloring is always a monomial, so exponents are summed
// mod m and one t^k is added per coloring.
StateSumResult state_sum(const DiagramData& d, const FiniteBiquandle& bq, const Cocycle3& theta,
                         const StateSumOptions& opts = {});

// Colorings whose total exponent is non-zero mod m, lexicographic.
std::vector<Coloring> nontrivial_colorings(const DiagramData& d, const FiniteBiquandle& bq, const Cocycle3& theta,
                                           const StateSumOptions& opts = {});

}  // namespace bqinv
