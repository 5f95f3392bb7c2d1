#pragma once

// Text form of space and action expressions: a whitespace-insensitive
// keyword grammar with one token per construction, a recursive-descent
// parser with line/column diagnostics, and the matching printer. Wedge
// actions print without their basepoint selectors (the text form always
// selects component 0), so printing is canonical rather than lossless.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toda/equivariant.hpp"
#include "toda/space.hpp"

namespace toda::dsl {

struct ParseError : std::runtime_error {
  int line;
  int col;
  std::string token;
  bool semantic;  // true: a validated invariant failed; false: syntax

  ParseError(const std::string& message, int line_, int col_, std::string token_,
             bool semantic_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                           ": " + message +
                           (token_.empty() ? std::string{} : " (at '" + token_ + "')")),
        line(line_),
        col(col_),
        token(std::move(token_)),
        semantic(semantic_) {}
};

namespace detail {

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  int line() const { return line_; }
  int col() const { return col_; }

  [[noreturn]] void fail(const std::string& message, const std::string& token,
                         bool semantic = false) const {
    throw ParseError(message, line_, col_, token, semantic);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      advance();
    if (start == pos_) fail("expected a keyword", current_char_token());
    return text_.substr(start, pos_ - start);
  }

  std::string peek_ident() {
    skip_ws();
    std::size_t p = pos_;
    while (p < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_'))
      ++p;
    return text_.substr(pos_, p - pos_);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      advance();
    std::string tok = text_.substr(start, pos_ - start);
    if (tok.empty() || tok == "-" || tok == "+")
      fail("expected an integer", current_char_token());
    try {
      return std::stoll(tok);
    } catch (const std::out_of_range&) {
      fail("integer out of range", tok);
    }
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'", current_char_token());
    advance();
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect_end() {
    skip_ws();
    if (pos_ < text_.size()) fail("trailing input after expression", current_char_token());
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string current_char_token() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string(1, text_[pos_]);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

template <typename Fn>
auto guard(Lexer& lex, int line, int col, const std::string& token, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what(), line, col, token, true);
  } catch (const std::domain_error& ex) {
    throw ParseError(ex.what(), line, col, token, true);
  }
}

inline space::SpaceExpr parse_space_node(Lexer& lex);

inline std::vector<space::SpaceExpr> parse_space_list(Lexer& lex, std::size_t min_count) {
  std::vector<space::SpaceExpr> parts;
  lex.expect('(');
  parts.push_back(parse_space_node(lex));
  while (lex.try_consume(',')) parts.push_back(parse_space_node(lex));
  lex.expect(')');
  if (parts.size() < min_count)
    lex.fail("expected at least " + std::to_string(min_count) + " arguments", "", false);
  return parts;
}

inline space::SpaceExpr parse_space_node(Lexer& lex) {
  lex.skip_ws();
  int line = lex.line(), col = lex.col();
  std::string kw = lex.ident();
  auto run = [&](auto&& fn) { return guard(lex, line, col, kw, fn); };
  if (kw == "pt") return space::point();
  if (kw == "empty") return space::empty_space();
  if (kw == "S") {
    lex.expect('(');
    long long k = lex.integer();
    lex.expect(')');
    return run([&] { return space::sphere(k); });
  }
  if (kw == "P") {
    lex.expect('(');
    long long h = lex.integer();
    lex.expect(',');
    long long n = lex.integer();
    lex.expect(')');
    return run([&] { return space::ptrunc(h, n); });
  }
  if (kw == "toda") {
    lex.expect('(');
    long long n = lex.integer();
    lex.expect(',');
    long long a = lex.integer();
    lex.expect(',');
    long long b = lex.integer();
    lex.expect(')');
    return run([&] { return space::toda_space(n, a, b); });
  }
  if (kw == "cone") {
    lex.expect('(');
    long long n = lex.integer();
    lex.expect(',');
    long long h = lex.integer();
    lex.expect(')');
    return run([&] { return space::mapping_cone(n, h); });
  }
  if (kw == "wedge") {
    auto parts = parse_space_list(lex, 2);
    return run([&] { return space::wedge(std::move(parts)); });
  }
  if (kw == "join") {
    lex.expect('(');
    space::SpaceExpr l = parse_space_node(lex);
    lex.expect(',');
    space::SpaceExpr r = parse_space_node(lex);
    lex.expect(')');
    return space::join(std::move(l), std::move(r));
  }
  if (kw == "susp") {
    lex.expect('(');
    space::SpaceExpr c = parse_space_node(lex);
    lex.expect(')');
    return space::susp(std::move(c));
  }
  if (kw == "prod") {
    lex.expect('(');
    space::SpaceExpr l = parse_space_node(lex);
    lex.expect(',');
    space::SpaceExpr r = parse_space_node(lex);
    lex.expect(')');
    return space::product(std::move(l), std::move(r));
  }
  if (kw == "punct") {
    lex.expect('(');
    space::SpaceExpr c = parse_space_node(lex);
    lex.expect(')');
    return run([&] { return space::punctured(std::move(c)); });
  }
  if (kw == "disj") {
    auto parts = parse_space_list(lex, 2);
    return run([&] { return space::disjoint_union(std::move(parts)); });
  }
  lex.fail("unknown space constructor", kw);
}

inline equivariant::ActionExpr parse_action_node(Lexer& lex) {
  using equivariant::ActionExpr;
  lex.skip_ws();
  int line = lex.line(), col = lex.col();
  std::string kw = lex.ident();
  auto run = [&](auto&& fn) { return guard(lex, line, col, kw, fn); };
  if (kw == "trivial") {
    lex.expect('(');
    space::SpaceExpr x = parse_space_node(lex);
    lex.expect(')');
    return equivariant::act_trivial(std::move(x));
  }
  if (kw == "rotfree") {
    lex.expect('(');
    long long k = lex.integer();
    lex.expect(')');
    return run([&] { return equivariant::act_rotation(k); });
  }
  if (kw == "suspA") {
    lex.expect('(');
    ActionExpr c = parse_action_node(lex);
    lex.expect(')');
    return equivariant::act_susp(std::move(c));
  }
  if (kw == "joinA") {
    lex.expect('(');
    ActionExpr l = parse_action_node(lex);
    lex.expect(',');
    ActionExpr r = parse_action_node(lex);
    lex.expect(')');
    return equivariant::act_join(std::move(l), std::move(r));
  }
  if (kw == "wedgeA") {
    lex.expect('(');
    std::vector<ActionExpr> parts;
    parts.push_back(parse_action_node(lex));
    while (lex.try_consume(',')) parts.push_back(parse_action_node(lex));
    lex.expect(')');
    return run([&] { return equivariant::act_wedge(std::move(parts)); });
  }
  if (kw == "coneA") {
    lex.expect('(');
    long long n = lex.integer();
    lex.expect(',');
    long long k = lex.integer();
    lex.expect(')');
    return run([&] { return equivariant::act_cone(n, k); });
  }
  if (kw == "multA") {
    lex.expect('(');
    long long n = lex.integer();
    lex.expect(')');
    return run([&] { return equivariant::act_mult_cone(n); });
  }
  if (kw == "bundleA") {
    lex.expect('(');
    long long n = lex.integer();
    lex.expect(')');
    return run([&] { return equivariant::act_bundle(n); });
  }
  if (kw == "punctA") {
    lex.expect('(');
    ActionExpr c = parse_action_node(lex);
    lex.expect(')');
    return run([&] { return equivariant::act_puncture(std::move(c)); });
  }
  lex.fail("unknown action constructor", kw);
}

}  // namespace detail

inline const std::vector<std::string>& action_keywords() {
  static const std::vector<std::string> kws = {"trivial", "rotfree", "suspA",
                                               "joinA",   "wedgeA",  "coneA",
                                               "multA",   "bundleA", "punctA"};
  return kws;
}

inline space::SpaceExpr parse_space(const std::string& text) {
  detail::Lexer lex(text);
  if (lex.at_end()) lex.fail("empty input", "");
  space::SpaceExpr e = detail::parse_space_node(lex);
  lex.expect_end();
  return e;
}

inline equivariant::ActionExpr parse_action(const std::string& text) {
  detail::Lexer lex(text);
  if (lex.at_end()) lex.fail("empty input", "");
  equivariant::ActionExpr a = detail::parse_action_node(lex);
  lex.expect_end();
  return a;
}

/// Either a space or an action, decided by the leading keyword.
struct Parsed {
  std::optional<space::SpaceExpr> space_expr;
  std::optional<equivariant::ActionExpr> action_expr;
};

inline Parsed parse_any(const std::string& text) {
  detail::Lexer probe(text);
  if (probe.at_end()) probe.fail("empty input", "");
  std::string head = probe.peek_ident();
  Parsed out;
  for (const auto& kw : action_keywords())
    if (kw == head) {
      out.action_expr = parse_action(text);
      return out;
    }
  out.space_expr = parse_space(text);
  return out;
}

// --- printer ------------------------------------------------------------------

inline std::string to_dsl(const space::SpaceExpr& e) {
  using space::SpaceKind;
  auto list = [](const std::vector<space::SpaceExpr>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ",";
      out += to_dsl(parts[i]);
    }
    return out;
  };
  switch (e.kind) {
    case SpaceKind::Empty: return "empty";
    case SpaceKind::Point: return "pt";
    case SpaceKind::Sphere: return "S(" + std::to_string(e.p1) + ")";
    case SpaceKind::PTrunc:
      return "P(" + std::to_string(e.p1) + "," + std::to_string(e.p2) + ")";
    case SpaceKind::Toda:
      return "toda(" + std::to_string(e.p1) + "," + std::to_string(e.p2) + "," +
             std::to_string(e.p3) + ")";
    case SpaceKind::MappingCone:
      return "cone(" + std::to_string(e.p1) + "," + std::to_string(e.p2) + ")";
    case SpaceKind::Wedge: return "wedge(" + list(e.children) + ")";
    case SpaceKind::Join:
      return "join(" + to_dsl(e.children[0]) + "," + to_dsl(e.children[1]) + ")";
    case SpaceKind::Susp: return "susp(" + to_dsl(e.children[0]) + ")";
    case SpaceKind::Product:
      return "prod(" + to_dsl(e.children[0]) + "," + to_dsl(e.children[1]) + ")";
    case SpaceKind::Punctured: return "punct(" + to_dsl(e.children[0]) + ")";
    case SpaceKind::DisjointUnion: return "disj(" + list(e.children) + ")";
  }
  throw std::logic_error("to_dsl: unhandled space node");
}

inline std::string to_dsl(const equivariant::ActionExpr& a) {
  using equivariant::ActionKind;
  switch (a.kind) {
    case ActionKind::Trivial: return "trivial(" + to_dsl(a.payload) + ")";
    case ActionKind::FreeRotation: return "rotfree(" + std::to_string(a.p1) + ")";
    case ActionKind::SuspA: return "suspA(" + to_dsl(a.children[0]) + ")";
    case ActionKind::JoinA:
      return "joinA(" + to_dsl(a.children[0]) + "," + to_dsl(a.children[1]) + ")";
    case ActionKind::WedgeA: {
      std::string out = "wedgeA(";
      for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (i) out += ",";
        out += to_dsl(a.children[i]);
      }
      return out + ")";
    }
    case ActionKind::ConeA:
      return "coneA(" + std::to_string(a.p1) + "," + std::to_string(a.p2) + ")";
    case ActionKind::MultConeA: return "multA(" + std::to_string(a.p1) + ")";
    case ActionKind::BundleA: return "bundleA(" + std::to_string(a.p1) + ")";
    case ActionKind::Puncture: return "punctA(" + to_dsl(a.children[0]) + ")";
  }
  throw std::logic_error("to_dsl: unhandled action node");
}

}  // namespace toda::dsl
