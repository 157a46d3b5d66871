#include "bqinv/terms.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace bqinv {

struct Word::Node {
  std::string name;  // non-empty for leaves
  Op op = Op::UB;
  std::vector<Word> children;  // empty for leaves, {left, right} otherwise
  std::size_t depth = 0;
};

Word Word::generator(std::string name) {
  auto node = std::make_shared<Node>();
  node->name = std::move(name);
  return Word(std::move(node));
}

Word Word::apply(Op op, Word left, Word right) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->depth = 1 + std::max(left.depth(), right.depth());
  if (node->depth > kMaxWordDepth)
    throw Error(ErrorKind::DepthExceeded, "word deeper than " + std::to_string(kMaxWordDepth));
  node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return Word(std::move(node));
}

bool Word::is_generator() const noexcept { return node_->children.empty(); }

const std::string& Word::name() const {
  if (!is_generator()) throw Error(ErrorKind::InvalidInput, "name() on an operation node");
  return node_->name;
}

Op Word::op() const {
  if (is_generator()) throw Error(ErrorKind::InvalidInput, "op() on a generator leaf");
  return node_->op;
}

const Word& Word::left() const {
  if (is_generator()) throw Error(ErrorKind::InvalidInput, "left() on a generator leaf");
  return node_->children[0];
}

const Word& Word::right() const {
  if (is_generator()) throw Error(ErrorKind::InvalidInput, "right() on a generator leaf");
  return node_->children[1];
}

std::size_t Word::depth() const noexcept { return node_->depth; }

bool operator==(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_generator() || b.is_generator())
    return a.is_generator() && b.is_generator() && a.node_->name == b.node_->name;
  return a.node_->op == b.node_->op && a.left() == b.left() && a.right() == b.right();
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = word(0);
    skip_ws();
    if (pos_ != text_.size()) fail(ErrorKind::SyntaxError, "trailing input");
    return w;
  }

 private:
  [[noreturn]] void fail(ErrorKind kind, const std::string& what) const { throw ParseError(kind, pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view ident() {
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail(ErrorKind::SyntaxError, "expected identifier");
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Word word(std::size_t depth) {
    skip_ws();
    if (pos_ >= text_.size()) fail(ErrorKind::SyntaxError, "unexpected end of input");
    if (text_[pos_] != '(') return Word::generator(std::string(ident()));

    if (depth >= kMaxWordDepth)
      fail(ErrorKind::DepthExceeded, "word deeper than " + std::to_string(kMaxWordDepth));
    ++pos_;
    skip_ws();
    const std::size_t op_pos = pos_;
    const std::string_view token = ident();
    const auto op = parse_op(token);
    if (!op) throw ParseError(ErrorKind::UnknownOperator, op_pos, "unknown operator '" + std::string(token) + "'");
    if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(')
      fail(ErrorKind::SyntaxError, "expected whitespace after operator");
    Word lhs = word(depth + 1);
    Word rhs = word(depth + 1);
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != ')') fail(ErrorKind::SyntaxError, "expected ')'");
    ++pos_;
    return Word::apply(*op, std::move(lhs), std::move(rhs));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void write(const Word& w, std::string& out) {
  if (w.is_generator()) {
    out += w.name();
    return;
  }
  out += '(';
  out += to_string(w.op());
  out += ' ';
  write(w.left(), out);
  out += ' ';
  write(w.right(), out);
  out += ')';
}

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Word& w) {
  std::string out;
  write(w, out);
  return out;
}

void collect_generators(const Word& w, std::set<std::string>& out) {
  if (w.is_generator()) {
    out.insert(w.name());
    return;
  }
  collect_generators(w.left(), out);
  collect_generators(w.right(), out);
}

Element eval_word(const Word& w, const FiniteBiquandle& bq, const Assignment& assignment) {
  if (w.is_generator()) {
    const auto it = assignment.find(w.name());
    if (it == assignment.end()) throw Error(ErrorKind::UnboundGenerator, "no value for generator '" + w.name() + "'");
    if (it->second >= bq.size())
      throw Error(ErrorKind::ElementOutOfRange, "value of '" + w.name() + "' outside carrier");
    return it->second;
  }
  return bq.apply_unchecked(w.op(), eval_word(w.left(), bq, assignment), eval_word(w.right(), bq, assignment));
}

CompiledWord::CompiledWord(const Word& w, std::span<const std::string> generators) {
  std::size_t height = 0;
  auto emit = [&](auto&& self, const Word& node) -> void {
    if (node.is_generator()) {
      const auto it = std::find(generators.begin(), generators.end(), node.name());
      if (it == generators.end())
        throw Error(ErrorKind::UnboundGenerator, "generator '" + node.name() + "' is not declared");
      const auto slot = static_cast<std::size_t>(it - generators.begin());
      max_slot_ = std::max(max_slot_, slot);
      code_.push_back({true, Op::UB, slot});
      stack_depth_ = std::max(stack_depth_, ++height);
      return;
    }
    self(self, node.left());
    self(self, node.right());
    code_.push_back({false, node.op(), 0});
    --height;
  };
  emit(emit, w);
}

Element CompiledWord::eval(const FiniteBiquandle& bq, std::span<const Element> values) const {
  std::array<Element, kMaxWordDepth + 2> stack;
  std::size_t top = 0;
  for (const Instr& ins : code_) {
    if (ins.is_load) {
      stack[top++] = values[ins.slot];
    } else {
      const Element rhs = stack[--top];
      stack[top - 1] = bq.apply_unchecked(ins.op, stack[top - 1], rhs);
    }
  }
  return stack[0];
}

}  // namespace bqinv
