#include "bqinv/cohomology.hpp"

#include <algorithm>

#include "bqinv/parallel.hpp"

namespace bqinv {

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t m) {
  const std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

Cocycle3::Cocycle3(std::uint32_t modulus, std::optional<std::size_t> carrier)
    : modulus_(modulus), carrier_(carrier) {
  if (modulus == 0) throw Error(ErrorKind::InvalidInput, "cocycle modulus must be positive");
  if (carrier && *carrier == 0) throw Error(ErrorKind::InvalidInput, "carrier size must be positive");
}

std::uint32_t Cocycle3::exponent(const Triple& t) const {
  const auto it = support_.find(t);
  return it == support_.end() ? 0 : it->second;
}

void Cocycle3::set_exponent(const Triple& t, std::int64_t exp) {
  if (carrier_)
    for (Element e : t)
      if (e >= *carrier_) throw Error(ErrorKind::ElementOutOfRange, "cocycle triple outside carrier");
  const std::uint32_t r = reduce_mod(exp, modulus_);
  if (r == 0)
    support_.erase(t);
  else
    support_[t] = r;
}

Element Cocycle3::max_element() const noexcept {
  Element m = 0;
  for (const auto& [t, _] : support_) m = std::max({m, t[0], t[1], t[2]});
  return m;
}

std::vector<std::uint32_t> Cocycle3::dense(std::size_t n) const {
  if (carrier_ && *carrier_ != n)
    throw Error(ErrorKind::SizeMismatch, "cocycle declared for carrier " + std::to_string(*carrier_) +
                                             ", biquandle has " + std::to_string(n));
  if (!support_.empty() && max_element() >= n)
    throw Error(ErrorKind::SizeMismatch, "cocycle support exceeds biquandle carrier of size " + std::to_string(n));
  std::vector<std::uint32_t> table(n * n * n, 0);
  for (const auto& [t, e] : support_) table[(t[0] * n + t[1]) * n + t[2]] = e;
  return table;
}

CharacteristicBuild make_characteristic_cocycle(std::uint32_t modulus, std::span<const SupportEntry> support,
                                                std::optional<std::size_t> carrier) {
  CharacteristicBuild out{Cocycle3(modulus, carrier), {}};
  std::map<Triple, std::int64_t> sums;
  for (const auto& entry : support) {
    auto [it, fresh] = sums.emplace(entry.triple, 0);
    if (!fresh) out.duplicates.push_back(entry.triple);
    // reduce as we go so long supports cannot overflow
    it->second = reduce_mod(it->second + reduce_mod(entry.exponent, modulus), modulus);
  }
  for (const auto& [t, e] : sums) out.cocycle.set_exponent(t, e);
  std::sort(out.duplicates.begin(), out.duplicates.end());
  out.duplicates.erase(std::unique(out.duplicates.begin(), out.duplicates.end()), out.duplicates.end());
  return out;
}

std::vector<std::pair<Element, Element>> singular_pairs(const FiniteBiquandle& bq) {
  std::vector<std::pair<Element, Element>> out;
  const auto& U = bq.under();
  const auto& O = bq.over();
  for (Element b = 0; b < bq.size(); ++b)
    for (Element c = 0; c < bq.size(); ++c)
      if (O(b, c) == U(b, c) && O(c, b) == U(c, b)) out.emplace_back(b, c);
  return out;
}

std::string_view to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Pass: return "pass";
    case ConditionStatus::Fail: return "fail";
    case ConditionStatus::NotChecked: return "not-checked";
  }
  return "?";
}

std::string_view to_string(ConditionIIVariant v) {
  return v == ConditionIIVariant::Printed ? "printed" : "symmetric";
}

std::optional<ConditionIIVariant> parse_variant(std::string_view s) {
  if (s == "printed") return ConditionIIVariant::Printed;
  if (s == "symmetric") return ConditionIIVariant::Symmetric;
  return std::nullopt;
}

namespace {

class Dense {
 public:
  Dense(const Cocycle3& theta, std::size_t n) : n_(n), m_(theta.modulus()), table_(theta.dense(n)) {}
  std::uint32_t operator()(Element a, Element b, Element c) const { return table_[(a * n_ + b) * n_ + c]; }
  std::uint32_t modulus() const { return m_; }

 private:
  std::size_t n_;
  std::uint32_t m_;
  std::vector<std::uint32_t> table_;
};

struct Partial {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<ConditionWitness> witnesses;
};

ConditionResult finish(std::vector<Partial> parts, std::size_t cap) {
  ConditionResult r;
  for (auto& p : parts) {
    r.checked += p.checked;
    r.violations += p.violations;
    for (auto& w : p.witnesses) r.witnesses.push_back(std::move(w));
  }
  std::sort(r.witnesses.begin(), r.witnesses.end());
  if (r.witnesses.size() > cap) r.witnesses.resize(cap);
  r.status = r.violations == 0 ? ConditionStatus::Pass : ConditionStatus::Fail;
  return r;
}

std::uint32_t imbalance(const Dense& th, const FiniteBiquandle& bq, ConditionIIVariant variant, Element a, Element b,
                        Element c, Element d) {
  const auto& U = bq.under();
  const auto& O = bq.over();
  const std::uint64_t lhs = std::uint64_t{th(b, c, d)} + th(a, b, d) + th(U(a, b), O(c, b), O(d, b)) +
                            th(U(a, d), U(b, d), U(c, d));
  const Element last = variant == ConditionIIVariant::Printed ? O(d, c) : U(d, c);
  const std::uint64_t rhs = std::uint64_t{th(a, c, d)} + th(a, b, c) + th(O(b, a), O(c, a), O(d, a)) +
                            th(U(a, c), U(b, c), last);
  const std::uint32_t m = th.modulus();
  return static_cast<std::uint32_t>((lhs % m + m - rhs % m) % m);
}

}  // namespace

ConditionResult check_condition_i(const Cocycle3& theta, const FiniteBiquandle& bq, const CheckOptions& opts) {
  const std::size_t n = bq.size();
  const Dense th(theta, n);
  auto parts = parallel_chunks(n, opts.workers, [&](std::size_t begin, std::size_t end) {
    Partial p;
    for (auto a = static_cast<Element>(begin); a < end; ++a)
      for (Element b = 0; b < n; ++b) {
        ++p.checked;
        const std::uint32_t first = th(a, a, b), second = th(a, b, b);
        if (first == 0 && second == 0) continue;
        ++p.violations;
        if (p.witnesses.size() < opts.cap) p.witnesses.push_back({{a, b}, {first, second}});
      }
    return p;
  });
  return finish(std::move(parts), opts.cap);
}

std::uint32_t condition_ii_imbalance(const Cocycle3& theta, const FiniteBiquandle& bq, ConditionIIVariant variant,
                                     Element a, Element b, Element c, Element d) {
  for (Element e : {a, b, c, d})
    if (e >= bq.size()) throw Error(ErrorKind::ElementOutOfRange, "quadruple outside carrier");
  return imbalance(Dense(theta, bq.size()), bq, variant, a, b, c, d);
}

ConditionResult check_condition_ii(const Cocycle3& theta, const FiniteBiquandle& bq, ConditionIIVariant variant,
                                   const CheckOptions& opts) {
  const std::size_t n = bq.size();
  const Dense th(theta, n);
  auto parts = parallel_chunks(n, opts.workers, [&](std::size_t begin, std::size_t end) {
    Partial p;
    for (auto a = static_cast<Element>(begin); a < end; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          for (Element d = 0; d < n; ++d) {
            ++p.checked;
            const std::uint32_t diff = imbalance(th, bq, variant, a, b, c, d);
            if (diff == 0) continue;
            ++p.violations;
            if (p.witnesses.size() < opts.cap) p.witnesses.push_back({{a, b, c, d}, {diff}});
          }
    return p;
  });
  return finish(std::move(parts), opts.cap);
}

ConditionResult check_condition_iii(const Cocycle3& theta, const FiniteBiquandle& bq, const CheckOptions& opts) {
  const std::size_t n = bq.size();
  const Dense th(theta, n);
  const std::uint32_t m = theta.modulus();
  const auto pairs = singular_pairs(bq);
  // Witnesses are (a, b, c); scanning a in the outer loop keeps them sorted per chunk.
  auto parts = parallel_chunks(n, opts.workers, [&](std::size_t begin, std::size_t end) {
    Partial p;
    for (auto a = static_cast<Element>(begin); a < end; ++a)
      for (const auto& [b, c] : pairs) {
        ++p.checked;
        const std::uint32_t first = (th(a, b, c) + th(a, c, b)) % m;
        const std::uint32_t second = (th(b, c, a) + th(c, b, a)) % m;
        if (first == 0 && second == 0) continue;
        ++p.violations;
        if (p.witnesses.size() < opts.cap) p.witnesses.push_back({{a, b, c}, {first, second}});
      }
    return p;
  });
  return finish(std::move(parts), opts.cap);
}

CocycleReport check_cocycle(const Cocycle3& theta, const FiniteBiquandle& bq, ConditionIIVariant variant,
                            bool singular, const CheckOptions& opts) {
  CocycleReport r;
  r.variant = variant;
  r.condition_i = check_condition_i(theta, bq, opts);
  r.condition_ii = check_condition_ii(theta, bq, variant, opts);
  if (singular) r.condition_iii = check_condition_iii(theta, bq, opts);
  return r;
}

}  // namespace bqinv
