#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bqinv/algebra.hpp"

namespace bqinv {

using Triple = std::array<Element, 3>;

// θ : X³ → ⟨t | t^m = 1⟩, stored as exponents mod m. Only non-zero exponents
// are kept, so two cocycles compare equal iff they agree entrywise mod m.
class Cocycle3 {
 public:
  explicit Cocycle3(std::uint32_t modulus, std::optional<std::size_t> carrier = std::nullopt);

  std::uint32_t modulus() const noexcept { return modulus_; }
  // Carrier size if the cocycle was declared against one.
  std::optional<std::size_t> carrier() const noexcept { return carrier_; }

  std::uint32_t exponent(const Triple& t) const;
  std::uint32_t exponent(Element a, Element b, Element c) const { return exponent(Triple{a, b, c}); }
  void set_exponent(const Triple& t, std::int64_t exp);

  const std::map<Triple, std::uint32_t>& support() const noexcept { return support_; }
  Element max_element() const noexcept;

  // Dense exponent table for a carrier of size n; throws SizeMismatch if the
  // cocycle does not fit.
  std::vector<std::uint32_t> dense(std::size_t n) const;

  friend bool operator==(const Cocycle3& a, const Cocycle3& b) {
    return a.modulus_ == b.modulus_ && a.support_ == b.support_;
  }

 private:
  std::uint32_t modulus_;
  std::optional<std::size_t> carrier_;
  std::map<Triple, std::uint32_t> support_;
};

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t m);

struct SupportEntry {
  Triple triple;
  std::int64_t exponent = 1;
};

struct CharacteristicBuild {
  Cocycle3 cocycle;
  std::vector<Triple> duplicates;  // triples listed more than once (their exponents were summed)
};

// Product of characteristic functions χ_triple^exponent.
CharacteristicBuild make_characteristic_cocycle(std::uint32_t modulus, std::span<const SupportEntry> support,
                                                std::optional<std::size_t> carrier = std::nullopt);

// Ordered pairs (b, c) with b⊗c = b⊔c and c⊗b = c⊔b, lexicographic. The
// relation is symmetric, so (b, c) is listed iff (c, b) is.
std::vector<std::pair<Element, Element>> singular_pairs(const FiniteBiquandle& bq);

enum class ConditionStatus { Pass, Fail, NotChecked };
std::string_view to_string(ConditionStatus s);

enum class ConditionIIVariant {
  Printed,    // last right-hand term θ(a⊔c, b⊔c, d⊗c)
  Symmetric,  // last right-hand term θ(a⊔c, b⊔c, d⊔c)
};
std::string_view to_string(ConditionIIVariant v);
std::optional<ConditionIIVariant> parse_variant(std::string_view s);

struct ConditionWitness {
  std::vector<Element> args;
  // Non-zero residues mod m that make this a violation:
  //   (i)   {θ(a,a,b), θ(a,b,b)}
  //   (ii)  {lhs - rhs}
  //   (iii) {θ(a,b,c)+θ(a,c,b), θ(b,c,a)+θ(c,b,a)}
  std::vector<std::uint32_t> residues;

  friend auto operator<=>(const ConditionWitness&, const ConditionWitness&) = default;
};

struct ConditionResult {
  ConditionStatus status = ConditionStatus::NotChecked;
  std::uint64_t checked = 0;     // tuples examined
  std::uint64_t violations = 0;  // exact count
  std::vector<ConditionWitness> witnesses;  // lexicographic, first `cap`
};

struct CheckOptions {
  std::size_t cap = 32;
  unsigned workers = 1;
};

// θ(a,a,b) = 0 and θ(a,b,b) = 0 for all (a, b).
ConditionResult check_condition_i(const Cocycle3& theta, const FiniteBiquandle& bq, const CheckOptions& opts = {});

// The eight-term identity over all quadruples (a, b, c, d).
ConditionResult check_condition_ii(const Cocycle3& theta, const FiniteBiquandle& bq, ConditionIIVariant variant,
                                   const CheckOptions& opts = {});

// Antisymmetry on singular pairs: for every singular (b, c) and every a,
// θ(a,b,c) + θ(a,c,b) ≡ 0 and θ(b,c,a) + θ(c,b,a) ≡ 0 (mod m).
ConditionResult check_condition_iii(const Cocycle3& theta, const FiniteBiquandle& bq, const CheckOptions& opts = {});

// lhs - rhs (mod m) of condition (ii) at one quadruple.
std::uint32_t condition_ii_imbalance(const Cocycle3& theta, const FiniteBiquandle& bq, ConditionIIVariant variant,
                                     Element a, Element b, Element c, Element d);

struct CocycleReport {
  ConditionResult condition_i;
  ConditionResult condition_ii;
  ConditionIIVariant variant = ConditionIIVariant::Printed;
  ConditionResult condition_iii;  // NotChecked unless requested
};

CocycleReport check_cocycle(const Cocycle3& theta, const FiniteBiquandle& bq, ConditionIIVariant variant,
                            bool singular, const CheckOptions& opts = {});

}  // namespace bqinv
