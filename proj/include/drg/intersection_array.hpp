#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace drg {

/// Entries above this bound are rejected so that the integer rule
/// predicates (degree-4 products of entries) cannot overflow 64 bits.
inline constexpr std::int64_t kMaxEntry = 10000;

/// Thrown by parse_array; token() is the piece of input that was rejected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// The sequences {b_0,...,b_{D-1}; c_1,...,c_D} of a distance-regular graph.
///
/// Accessors extend the stored sequences with the usual conventions
/// b_D = c_0 = 0, so b(i), c(i) and a(i) are defined for 0 <= i <= D.
/// Construction enforces only the well-formedness invariants (lengths, positive
/// entries, c_1 = 1, k >= 2); every combinatorial condition is judged by the
/// rule engine.
class IntersectionArray {
 public:
  IntersectionArray(std::vector<std::int64_t> b, std::vector<std::int64_t> c)
      : b_(std::move(b)), c_(std::move(c)) {
    if (b_.empty() || b_.size() != c_.size())
      throw std::invalid_argument("intersection array: b and c must have equal nonzero length");
    for (const auto* seq : {&b_, &c_})
      for (auto v : *seq) {
        if (v <= 0) throw std::invalid_argument("intersection array: entries must be positive");
        if (v > kMaxEntry) throw std::invalid_argument("intersection array: entries must not exceed " + std::to_string(kMaxEntry));
      }
    if (c_.front() != 1) throw std::invalid_argument("intersection array: c_1 must be 1");
    if (b_.front() < 2) throw std::invalid_argument("intersection array: valency k must be at least 2");
  }

  int diameter() const noexcept { return static_cast<int>(b_.size()); }
  std::int64_t k() const noexcept { return b_.front(); }

  std::int64_t b(int i) const { return i == diameter() ? 0 : b_.at(static_cast<std::size_t>(i)); }
  std::int64_t c(int i) const { return i == 0 ? 0 : c_.at(static_cast<std::size_t>(i - 1)); }
  std::int64_t a(int i) const { return k() - b(i) - c(i); }

  const std::vector<std::int64_t>& b_seq() const noexcept { return b_; }
  const std::vector<std::int64_t>& c_seq() const noexcept { return c_; }

  bool operator==(const IntersectionArray&) const = default;

  /// Canonical order: diameter, then b-sequence, then c-sequence.
  std::strong_ordering operator<=>(const IntersectionArray& o) const {
    if (auto r = diameter() <=> o.diameter(); r != 0) return r;
    if (auto r = b_ <=> o.b_; r != 0) return r;
    return c_ <=> o.c_;
  }

 private:
  std::vector<std::int64_t> b_;
  std::vector<std::int64_t> c_;
};

/// "{b0,...,bD-1;c1,...,cD}" with no spaces.
inline std::string render_array(const IntersectionArray& arr) {
  std::string out = "{";
  auto append = [&out](const std::vector<std::int64_t>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(seq[i]);
    }
  };
  append(arr.b_seq());
  out += ';';
  append(arr.c_seq());
  out += '}';
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::int64_t> parse_entries(std::string_view part, const char* side) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = part.find(',', pos);
    auto tok = trim(part.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    std::string token(tok);
    if (token.empty())
      throw ParseError(std::string("empty entry in ") + side + "-sequence", token);
    std::size_t i = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (i == token.size()) throw ParseError("not an integer: '" + token + "'", token);
    for (std::size_t j = i; j < token.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(token[j])))
        throw ParseError("not an integer: '" + token + "'", token);
    std::int64_t v = 0;
    try {
      v = std::stoll(token);
    } catch (const std::out_of_range&) {
      throw ParseError("entry exceeds " + std::to_string(kMaxEntry) + ": '" + token + "'", token);
    }
    if (v <= 0) throw ParseError("entry must be positive: '" + token + "'", token);
    if (v > kMaxEntry) throw ParseError("entry exceeds " + std::to_string(kMaxEntry) + ": '" + token + "'", token);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Parses the brace notation; whitespace around tokens is ignored.
inline IntersectionArray parse_array(std::string_view text) {
  auto body = detail::trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw ParseError("intersection array must be enclosed in braces", std::string(body));
  body = body.substr(1, body.size() - 2);
  auto semi = body.find(';');
  if (semi == std::string_view::npos) throw ParseError("missing ';' between b- and c-sequences", std::string(body));
  if (body.find(';', semi + 1) != std::string_view::npos)
    throw ParseError("more than one ';'", std::string(body.substr(semi)));
  auto b = detail::parse_entries(body.substr(0, semi), "b");
  auto c = detail::parse_entries(body.substr(semi + 1), "c");
  if (b.size() != c.size())
    throw ParseError("length mismatch: " + std::to_string(b.size()) + " b-entries vs " +
                         std::to_string(c.size()) + " c-entries",
                     std::string(body));
  if (c.front() != 1) throw ParseError("c_1 must be 1, got " + std::to_string(c.front()), std::to_string(c.front()));
  if (b.front() < 2) throw ParseError("valency b_0 must be at least 2", std::to_string(b.front()));
  return IntersectionArray(std::move(b), std::move(c));
}

}  // namespace drg
