#include "bqinv/statesum.hpp"

#include "bqinv/parallel.hpp"

namespace bqinv {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "group ring coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "group ring coefficient overflow");
  return r;
}

}  // namespace

GroupRingElement::GroupRingElement(std::uint32_t modulus) {
  if (modulus == 0) throw Error(ErrorKind::InvalidInput, "group ring modulus must be positive");
  coeffs_.assign(modulus, 0);
}

GroupRingElement::GroupRingElement(std::uint32_t modulus, std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (modulus == 0) throw Error(ErrorKind::InvalidInput, "group ring modulus must be positive");
  if (coeffs_.size() != modulus)
    throw Error(ErrorKind::ModulusMismatch, "coefficient vector length " + std::to_string(coeffs_.size()) +
                                                " does not match modulus " + std::to_string(modulus));
}

GroupRingElement GroupRingElement::monomial(std::uint32_t modulus, std::int64_t power, std::int64_t coeff) {
  GroupRingElement x(modulus);
  x.add_monomial(reduce_mod(power, modulus), coeff);
  return x;
}

std::int64_t GroupRingElement::coeff(std::int64_t power) const { return coeffs_[reduce_mod(power, modulus())]; }

std::int64_t GroupRingElement::augmentation() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = add_checked(s, c);
  return s;
}

GroupRingElement GroupRingElement::conjugate() const {
  GroupRingElement out(modulus());
  for (std::uint32_t k = 0; k < modulus(); ++k) out.coeffs_[(modulus() - k) % modulus()] = coeffs_[k];
  return out;
}

void GroupRingElement::add_monomial(std::uint32_t power, std::int64_t coeff) {
  auto& slot = coeffs_[power % modulus()];
  slot = add_checked(slot, coeff);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  if (other.modulus() != modulus()) throw Error(ErrorKind::ModulusMismatch, "adding elements of different group rings");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = add_checked(coeffs_[k], other.coeffs_[k]);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.modulus() != b.modulus())
    throw Error(ErrorKind::ModulusMismatch, "multiplying elements of different group rings");
  const std::uint32_t m = a.modulus();
  GroupRingElement out(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j)
      if (b.coeffs_[j] != 0) out.add_monomial((i + j) % m, mul_checked(a.coeffs_[i], b.coeffs_[j]));
  }
  return out;
}

std::string to_string(const GroupRingElement& x) {
  std::string out;
  for (std::uint32_t k = 0; k < x.modulus(); ++k) {
    const std::int64_t c = x.coeffs()[k];
    if (c == 0) continue;
    // magnitude as unsigned so INT64_MIN prints correctly
    const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::uint32_t boltzmann_exponent(const TriplePointTerm& term, const Assignment& assignment, const FiniteBiquandle& bq,
                                 const Cocycle3& theta) {
  const Element a = eval_word(term.bottom, bq, assignment);
  const Element b = eval_word(term.middle, bq, assignment);
  const Element c = eval_word(term.top, bq, assignment);
  if (theta.carrier() && *theta.carrier() != bq.size())
    throw Error(ErrorKind::SizeMismatch, "cocycle and biquandle carriers differ");
  if (!theta.support().empty() && theta.max_element() >= bq.size())
    throw Error(ErrorKind::SizeMismatch, "cocycle support exceeds biquandle carrier");
  return reduce_mod(static_cast<std::int64_t>(term.sign) * theta.exponent(a, b, c), theta.modulus());
}

namespace {

struct CompiledTerm {
  std::int64_t sign;
  CompiledWord bottom, middle, top;
};

std::vector<CompiledTerm> compile_terms(const DiagramData& d) {
  std::vector<CompiledTerm> out;
  for (const auto& tp : d.triple_points)
    out.push_back({tp.sign, CompiledWord(tp.bottom, d.generators), CompiledWord(tp.middle, d.generators),
                   CompiledWord(tp.top, d.generators)});
  return out;
}

std::uint32_t total_exponent(const std::vector<CompiledTerm>& terms, const FiniteBiquandle& bq,
                             const std::vector<std::uint32_t>& dense, std::uint32_t m,
                             std::span<const Element> values) {
  const std::size_t n = bq.size();
  std::int64_t total = 0;
  for (const auto& t : terms) {
    const Element a = t.bottom.eval(bq, values), b = t.middle.eval(bq, values), c = t.top.eval(bq, values);
    total += t.sign * static_cast<std::int64_t>(dense[(a * n + b) * n + c]);
    total %= m;
  }
  return reduce_mod(total, m);
}

}  // namespace

StateSumResult state_sum(const DiagramData& d, const FiniteBiquandle& bq, const Cocycle3& theta,
                         const StateSumOptions& opts) {
  const std::uint32_t m = theta.modulus();
  const auto dense = theta.dense(bq.size());
  const auto terms = compile_terms(d);
  const auto colorings = solve_colorings(d, bq, {opts.workers});

  struct Part {
    std::vector<std::uint64_t> counts;
    std::vector<ColoringMonomial> audit;
  };
  auto parts = parallel_chunks(colorings.size(), opts.workers, [&](std::size_t begin, std::size_t end) {
    Part p{std::vector<std::uint64_t>(m, 0), {}};
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint32_t e = total_exponent(terms, bq, dense, m, colorings[i].values);
      ++p.counts[e];
      if (opts.audit) p.audit.push_back({colorings[i], e});
    }
    return p;
  });

  StateSumResult result{GroupRingElement(m), colorings.size(), {}};
  for (auto& p : parts) {
    for (std::uint32_t k = 0; k < m; ++k) {
      if (p.counts[k] > static_cast<std::uint64_t>(INT64_MAX))
        throw Error(ErrorKind::Overflow, "coloring count exceeds coefficient range");
      result.value.add_monomial(k, static_cast<std::int64_t>(p.counts[k]));
    }
    for (auto& a : p.audit) result.per_coloring.push_back(std::move(a));
  }
  return result;
}

std::vector<Coloring> nontrivial_colorings(const DiagramData& d, const FiniteBiquandle& bq, const Cocycle3& theta,
                                           const StateSumOptions& opts) {
  StateSumOptions audit = opts;
  audit.audit = true;
  std::vector<Coloring> out;
  for (auto& cm : state_sum(d, bq, theta, audit).per_coloring)
    if (cm.exponent != 0) out.push_back(std::move(cm.coloring));
  return out;
}

}  // namespace bqinv
