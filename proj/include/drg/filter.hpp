#pragma once

// A tiny comparison language over array parameters, e.g. "3*c2>k" or
// "c_2 >= 2 && a1 == 0". Integers only: + - * unary minus, parentheses,
// comparisons < <= > >= == !=, conjunction with && or `and`.
//
// Variables: k, D, a_i, b_i, c_i (the underscore is optional). Each conjunct
// is tagged with the search depth at which all its variables are known, so
// the enumerator can test it as early as possible.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace drg {

class FilterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Values of a (possibly partial) array during the search. b[0] = k,
/// c[0] = 0; entries beyond the current depth are meaningless.
struct ArrayState {
  int D = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> b;  // size D + 1, b[D] = 0
  std::vector<std::int64_t> c;  // size D + 1

  std::int64_t a(int i) const { return k - b[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)]; }
};

/// Search depth at which a variable becomes known. Assignment order is
/// k, c_1, b_1, c_2, b_2, ..., c_{D-1}, b_{D-1}, c_D.
inline int position_of_c(int i) { return 2 * i - 1; }
inline int position_of_b(int i, int D) { return i == 0 ? 0 : (i >= D ? 2 * D - 1 : 2 * i); }

class Filter {
 public:
  Filter() = default;

  /// Parses `text` for diameter D. Throws FilterError on syntax errors and
  /// on indices outside b_0..b_{D-1}, c_1..c_D, a_0..a_D.
  static Filter parse(std::string_view text, int D) {
    Filter f;
    f.text_ = std::string(text);
    Parser p{text, 0, D};
    p.skip();
    if (p.at_end()) return f;  // empty filter accepts everything
    while (true) {
      Conjunct cj;
      cj.lhs = p.sum(cj.position);
      cj.op = p.relop();
      cj.rhs = p.sum(cj.position);
      f.conjuncts_.push_back(std::move(cj));
      p.skip();
      if (p.at_end()) break;
      if (!p.consume("&&") && !p.consume_word("and")) p.fail("expected '&&' or end of filter");
    }
    return f;
  }

  const std::string& text() const noexcept { return text_; }
  bool empty() const noexcept { return conjuncts_.empty(); }

  /// Checks the conjuncts that become decidable exactly at `position`.
  bool accepts_at(const ArrayState& s, int position) const {
    for (const auto& cj : conjuncts_)
      if (cj.position == position && !cj.holds(s)) return false;
    return true;
  }

  /// Checks every conjunct; the state must be complete.
  bool accepts(const ArrayState& s) const {
    for (const auto& cj : conjuncts_)
      if (!cj.holds(s)) return false;
    return true;
  }

 private:
  enum class Kind { Num, K, D, A, B, C, Add, Sub, Mul, Neg };
  enum class Rel { Lt, Le, Gt, Ge, Eq, Ne };

  struct Node {
    Kind kind;
    std::int64_t value = 0;  // literal or index
    std::shared_ptr<const Node> l, r;

    std::int64_t eval(const ArrayState& s) const {
      std::int64_t out = 0;
      switch (kind) {
        case Kind::Num: return value;
        case Kind::K: return s.k;
        case Kind::D: return s.D;
        case Kind::A: return s.a(static_cast<int>(value));
        case Kind::B: return s.b[static_cast<std::size_t>(value)];
        case Kind::C: return s.c[static_cast<std::size_t>(value)];
        case Kind::Neg:
          if (__builtin_sub_overflow(std::int64_t{0}, l->eval(s), &out)) throw FilterError("filter: integer overflow");
          return out;
        case Kind::Add:
          if (__builtin_add_overflow(l->eval(s), r->eval(s), &out)) throw FilterError("filter: integer overflow");
          return out;
        case Kind::Sub:
          if (__builtin_sub_overflow(l->eval(s), r->eval(s), &out)) throw FilterError("filter: integer overflow");
          return out;
        case Kind::Mul:
          if (__builtin_mul_overflow(l->eval(s), r->eval(s), &out)) throw FilterError("filter: integer overflow");
          return out;
      }
      return 0;
    }
  };
  using NodePtr = std::shared_ptr<const Node>;

  struct Conjunct {
    NodePtr lhs, rhs;
    Rel op = Rel::Eq;
    int position = 0;

    bool holds(const ArrayState& s) const {
      const auto x = lhs->eval(s), y = rhs->eval(s);
      switch (op) {
        case Rel::Lt: return x < y;
        case Rel::Le: return x <= y;
        case Rel::Gt: return x > y;
        case Rel::Ge: return x >= y;
        case Rel::Eq: return x == y;
        case Rel::Ne: return x != y;
      }
      return false;
    }
  };

  struct Parser {
    std::string_view s;
    std::size_t i;
    int D;

    [[noreturn]] void fail(const std::string& msg) const {
      throw FilterError("malformed filter at column " + std::to_string(i + 1) + ": " + msg);
    }
    void skip() {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() const { return i >= s.size(); }
    bool consume(std::string_view tok) {
      skip();
      if (s.substr(i, tok.size()) == tok) {
        i += tok.size();
        return true;
      }
      return false;
    }
    bool consume_word(std::string_view w) {
      skip();
      if (s.substr(i, w.size()) != w) return false;
      const std::size_t end = i + w.size();
      if (end < s.size() && (std::isalnum(static_cast<unsigned char>(s[end])) || s[end] == '_')) return false;
      i = end;
      return true;
    }

    Rel relop() {
      if (consume("<=")) return Rel::Le;
      if (consume(">=")) return Rel::Ge;
      if (consume("==")) return Rel::Eq;
      if (consume("!=")) return Rel::Ne;
      if (consume("<")) return Rel::Lt;
      if (consume(">")) return Rel::Gt;
      fail("expected a comparison operator");
    }

    NodePtr sum(int& pos) {
      NodePtr acc = term(pos);
      while (true) {
        if (consume("+")) acc = std::make_shared<Node>(Node{Kind::Add, 0, acc, term(pos)});
        else if (consume("-")) acc = std::make_shared<Node>(Node{Kind::Sub, 0, acc, term(pos)});
        else return acc;
      }
    }
    NodePtr term(int& pos) {
      NodePtr acc = unary(pos);
      while (consume("*")) acc = std::make_shared<Node>(Node{Kind::Mul, 0, acc, unary(pos)});
      return acc;
    }
    NodePtr unary(int& pos) {
      if (consume("-")) return std::make_shared<Node>(Node{Kind::Neg, 0, unary(pos), nullptr});
      return primary(pos);
    }
    NodePtr primary(int& pos) {
      skip();
      if (at_end()) fail("unexpected end of filter");
      if (consume("(")) {
        NodePtr inner = sum(pos);
        if (!consume(")")) fail("expected ')'");
        return inner;
      }
      const char ch = s[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::int64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, s[i] - '0', &v)) fail("integer literal too large");
          ++i;
        }
        return std::make_shared<Node>(Node{Kind::Num, v, nullptr, nullptr});
      }
      if (!std::isalpha(static_cast<unsigned char>(ch))) fail(std::string("unexpected character '") + ch + "'");
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      const std::string word(s.substr(start, i - start));
      if (word == "k") return std::make_shared<Node>(Node{Kind::K, 0, nullptr, nullptr});
      if (word == "D") return std::make_shared<Node>(Node{Kind::D, 0, nullptr, nullptr});
      if (word.size() >= 2 && (word[0] == 'a' || word[0] == 'b' || word[0] == 'c')) {
        std::string digits = word.substr(word[1] == '_' ? 2 : 1);
        if (!digits.empty() && digits.size() <= 3 &&
            digits.find_first_not_of("0123456789") == std::string::npos) {
          const int idx = std::stoi(digits);
          return indexed(word[0], idx, pos, start);
        }
      }
      i = start;
      fail("unknown variable '" + word + "'");
    }

    NodePtr indexed(char which, int idx, int& pos, std::size_t start) {
      auto out_of_range = [&](const char* range) {
        i = start;
        fail(std::string(1, which) + "_" + std::to_string(idx) + " out of range " + range + " for D=" + std::to_string(D));
      };
      int p = 0;
      Kind kind = Kind::A;
      if (which == 'b') {
        if (idx > D - 1) out_of_range("b_0..b_{D-1}");
        kind = Kind::B;
        p = position_of_b(idx, D);
      } else if (which == 'c') {
        if (idx < 1 || idx > D) out_of_range("c_1..c_D");
        kind = Kind::C;
        p = position_of_c(idx);
      } else {
        if (idx > D) out_of_range("a_0..a_D");
        p = idx == 0 ? 0 : std::max(position_of_c(idx), position_of_b(idx, D));
      }
      pos = std::max(pos, p);
      return std::make_shared<Node>(Node{kind, idx, nullptr, nullptr});
    }
  };

  std::string text_;
  std::vector<Conjunct> conjuncts_;
};

}  // namespace drg
