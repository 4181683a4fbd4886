#include <cctype>
#include <string>

#include "icis/errors.hpp"
#include "icis/polynomial.hpp"

namespace icis {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::NotIsolated: return "NotIsolated";
    case ErrorKind::NotCompleteIntersection: return "NotCompleteIntersection";
    case ErrorKind::Hypersurface: return "Hypersurface";
    case ErrorKind::UnsupportedTwoJet: return "UnsupportedTwoJet";
    case ErrorKind::PositiveDimensionalSingularLocus: return "PositiveDimensionalSingularLocus";
    case ErrorKind::IrrationalSingularPoint: return "IrrationalSingularPoint";
    case ErrorKind::ReductionFailed: return "ReductionFailed";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ExcludedModulus: return "ExcludedModulus";
    case ErrorKind::UnknownNormalForm: return "UnknownNormalForm";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor | implicit factor)*
// factor := atom ['^' integer]
// atom   := integer ['/' integer] | variable | '(' expr ')'
//
// Juxtaposition is accepted only after a numeric literal ("2x", "3(x+y)").
class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(ErrorKind::Syntax, msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc;
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = neg ? -t : t;
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial u = term();
      if (c == '+')
        acc += u;
      else
        acc -= u;
    }
    return acc;
  }

  Polynomial term() {
    bool numeric = false;
    Polynomial acc = factor(numeric);
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        bool dummy = false;
        acc = acc * factor(dummy);
        numeric = false;
      } else if (numeric && (std::isalpha(static_cast<unsigned char>(c)) || c == '(')) {
        bool dummy = false;
        acc = acc * factor(dummy);
        numeric = false;
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor(bool& numeric) {
    Polynomial base = atom(numeric);
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      Integer e = integer();
      if (e > 1000) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<int>(e.get_si()));
      numeric = false;
    }
    return base;
  }

  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial atom(bool& numeric) {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        skip();
        std::size_t at = pos_;
        den = integer();
        if (den == 0) {
          pos_ = at;
          fail("division by zero");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      numeric = true;
      return Polynomial(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      int var = -1;
      if (name == "x") var = 0;
      else if (name == "y") var = 1;
      else if (name == "z") var = 2;
      else if (name == "w") var = 3;
      if (var < 0) throw ParseError(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(var);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::vector<Polynomial> parse_generators(std::string_view text) {
  // Strip comments, then split at top-level commas and newlines.
  std::vector<std::string> pieces;
  std::vector<std::size_t> offsets;
  std::string cur;
  std::size_t cur_start = 0;
  int depth = 0;
  bool in_comment = false;
  auto flush = [&](std::size_t next) {
    bool blank = true;
    for (char ch : cur)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) {
      pieces.push_back(cur);
      offsets.push_back(cur_start);
    }
    cur.clear();
    cur_start = next;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (in_comment) {
      if (ch == '\n') {
        in_comment = false;
        if (depth == 0) flush(i + 1);
      }
      continue;
    }
    if (ch == '#') {
      in_comment = true;
      continue;
    }
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if ((ch == ',' || ch == '\n' || ch == ';') && depth == 0) {
      flush(i + 1);
      continue;
    }
    if (cur.empty()) cur_start = i;
    cur.push_back(ch);
  }
  flush(text.size());

  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    try {
      out.push_back(parse_polynomial(pieces[k]));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at position"));
      throw ParseError(e.kind(), msg, offsets[k] + e.position());
    }
  }
  return out;
}

}  // namespace icis
