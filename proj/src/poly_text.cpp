#include "curvesos/poly_text.hpp"

#include <cctype>
#include <climits>

#include "curvesos/error.hpp"

namespace curvesos {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::vector<TextTerm> parse() {
    std::vector<TextTerm> out;
    skip_ws();
    if (pos_ == s_.size()) error("empty polynomial");
    bool neg = false;
    if (peek() == '+' || peek() == '-') {
      neg = peek() == '-';
      ++pos_;
    }
    for (;;) {
      TextTerm t = term();
      if (neg) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') error("expected '+' or '-'");
      neg = c == '-';
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::ParseError,
         msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::string digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  int small_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::string d = digits();
    if (d.size() > 6) error("exponent too large");
    int v = std::stoi(d);
    return neg ? -v : v;
  }

  TextTerm term() {
    TextTerm t{Rational(1), {}};
    factor(t);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(TextTerm& t) {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      skip_ws();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        den = digits();
      }
      Integer d(den, 10);
      if (d == 0) error("zero denominator");
      Rational q(Integer(num, 10), d);
      q.canonicalize();
      t.coeff *= q;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      skip_ws();
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = small_int();
      }
      t.powers[name] += e;
      if (t.powers[name] == 0) t.powers.erase(name);
      return;
    }
    error("expected number or variable");
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

std::vector<TextTerm> parse_terms(std::string_view s) { return Parser(s).parse(); }

BiPoly parse_bipoly(std::string_view s, const std::string& xv, const std::string& yv) {
  BiPoly out;
  for (const auto& t : parse_terms(s)) {
    int i = 0, j = 0;
    for (const auto& [name, e] : t.powers) {
      if (e < 0) fail(ErrorCode::ParseError, "negative exponent in plane polynomial '" + std::string(s) + "'");
      if (name == xv) i = e;
      else if (name == yv) j = e;
      else fail(ErrorCode::ParseError, "unknown variable '" + name + "' in '" + std::string(s) + "'");
    }
    out += BiPoly::monomial(t.coeff, i, j);
  }
  return out;
}

LaurentText parse_laurent(std::string_view s) {
  std::string var;
  std::vector<std::pair<int, Rational>> items;
  int low = INT_MAX;
  for (const auto& t : parse_terms(s)) {
    int e = 0;
    for (const auto& [name, k] : t.powers) {
      if (!var.empty() && name != var)
        fail(ErrorCode::ParseError, "more than one variable in '" + std::string(s) + "'");
      var = name;
      e = k;
    }
    items.emplace_back(e, t.coeff);
    low = std::min(low, e);
  }
  LaurentText out;
  out.low = std::min(low, 0);
  std::vector<Rational> cs;
  for (const auto& [e, c] : items) {
    size_t k = static_cast<size_t>(e - out.low);
    if (cs.size() <= k) cs.resize(k + 1, Rational(0));
    cs[k] += c;
  }
  out.p = UniPoly(std::move(cs));
  return out;
}

UniPoly parse_unipoly(std::string_view s) {
  LaurentText l = parse_laurent(s);
  if (l.low < 0) fail(ErrorCode::ParseError, "negative exponent in '" + std::string(s) + "'");
  return l.p;
}

}  // namespace curvesos
