#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bqinv/algebra.hpp"

namespace bqinv {

inline constexpr std::size_t kMaxWordDepth = 256;

// Immutable free-biquandle term. Leaves are generator symbols; internal nodes
// apply one of the four operations. Copies share structure.
class Word {
 public:
  static Word generator(std::string name);
  static Word apply(Op op, Word left, Word right);

  bool is_generator() const noexcept;
  const std::string& name() const;  // generator leaves only
  Op op() const;                    // internal nodes only
  const Word& left() const;
  const Word& right() const;

  // Operator nesting depth; a bare generator has depth 0.
  std::size_t depth() const noexcept;

  friend bool operator==(const Word& a, const Word& b);

 private:
  struct Node;
  explicit Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& what)
      : Error(kind, what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// word := IDENT | "(" ("ub"|"ob"|"ubi"|"obi") word word ")"
// Throws ParseError (SyntaxError, UnknownOperator, DepthExceeded).
Word parse_word(std::string_view text);

// Canonical form: single spaces, no outer whitespace. parse_word(to_string(w)) == w.
std::string to_string(const Word& w);

void collect_generators(const Word& w, std::set<std::string>& out);

using Assignment = std::map<std::string, Element, std::less<>>;

// Throws UnboundGenerator, ElementOutOfRange.
Element eval_word(const Word& w, const FiniteBiquandle& bq, const Assignment& assignment);

// Postfix form with generators resolved to slot indices in a fixed generator
// list; used by the solver and the state-sum inner loops.
class CompiledWord {
 public:
  // Throws UnboundGenerator if w mentions a symbol outside `generators`.
  CompiledWord(const Word& w, std::span<const std::string> generators);

  // values[i] is the element assigned to generators[i]; no range checks.
  Element eval(const FiniteBiquandle& bq, std::span<const Element> values) const;

  // Largest generator slot referenced (used for early filtering).
  std::size_t max_slot() const noexcept { return max_slot_; }

 private:
  struct Instr {
    bool is_load;
    Op op;
    std::size_t slot;
  };
  std::vector<Instr> code_;
  std::size_t max_slot_ = 0;
  std::size_t stack_depth_ = 0;
};

}  // namespace bqinv
