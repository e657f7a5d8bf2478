#include "rankcert/polytext.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace rankcert {

namespace {

constexpr unsigned kMaxExponent = 100000;

BiPoly add(BiPoly a, const BiPoly& b, int sign) {
  for (const auto& [k, c] : b.terms) {
    BigRat& slot = a.terms[k];
    slot += sign > 0 ? c : BigRat(-c);
    if (slot == 0) a.terms.erase(k);
  }
  return a;
}

BiPoly mul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      const std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      BigRat& slot = r.terms[k];
      slot += ca * cb;
      if (slot == 0) r.terms.erase(k);
    }
  return r;
}

BiPoly constant(const BigRat& c) {
  BiPoly p;
  if (c != 0) p.terms[{0, 0}] = c;
  return p;
}

class Parser {
 public:
  Parser(std::string_view s, bool allow_t) : s_(s), allow_t_(allow_t) {}

  BiPoly parse() {
    BiPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { throw ParseError("syntax error: " + what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expr() {
    skip();
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    BiPoly r = add(BiPoly{}, term(), sign);
    for (;;) {
      if (accept('+')) r = add(std::move(r), term(), 1);
      else if (accept('-')) r = add(std::move(r), term(), -1);
      else return r;
    }
  }

  BiPoly term() {
    BiPoly r = factor();
    while (accept('*')) r = mul(r, factor());
    return r;
  }

  BiPoly factor() {
    BiPoly b = base();
    if (!accept('^')) return b;
    skip();
    const BigInt e = digits("exponent");
    if (e > kMaxExponent) fail("exponent too large");
    BiPoly r = constant(1);
    for (unsigned long k = e.get_ui(); k > 0; --k) r = mul(r, b);
    return r;
  }

  BigInt digits(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  BiPoly base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = digits("integer");
      BigInt den = 1;
      if (accept('/')) {
        skip();
        den = digits("denominator");
        if (den == 0) fail("zero denominator");
      }
      return constant(make_rat(num, den));
    }
    if (c == '(') {
      ++pos_;
      BiPoly r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      BiPoly r;
      if (name == "x") r.terms[{1, 0}] = 1;
      else if (name == "t" && allow_t_) r.terms[{0, 1}] = 1;
      else throw ParseError("unknown variable '" + name + "'", start);
      return r;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  bool allow_t_;
  std::size_t pos_ = 0;
};

// "c*t^j*x^k" body without the sign.
std::string monomial(const BigRat& abs_c, int xe, int te) {
  std::vector<std::string> parts;
  if (abs_c != 1 || (xe == 0 && te == 0)) parts.push_back(abs_c.get_str());
  auto var = [&](char v, int e) {
    if (e == 0) return;
    parts.push_back(e == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(e));
  };
  var('t', te);
  var('x', xe);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

std::string format_terms(const std::vector<std::tuple<int, int, BigRat>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [xe, te, c] = terms[i];
    const bool neg = c < 0;
    if (i == 0) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += monomial(neg ? BigRat(-c) : c, xe, te);
  }
  return out;
}

}  // namespace

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : terms) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& [k, c] : terms) d = std::max(d, k.second);
  return d;
}

RatPoly parse_poly(std::string_view text) {
  const BiPoly b = Parser(text, false).parse();
  std::vector<BigRat> c(static_cast<std::size_t>(std::max(b.degree_x() + 1, 0)));
  for (const auto& [k, v] : b.terms) c[k.first] = v;
  return RatPoly(std::move(c));
}

BiPoly parse_bipoly(std::string_view text) { return Parser(text, true).parse(); }

std::string format_poly(const RatPoly& p, char var) {
  std::vector<std::tuple<int, int, BigRat>> terms;
  for (int k = p.degree(); k >= 0; --k)
    if (p.coeff(k) != 0) terms.emplace_back(k, 0, p.coeff(k));
  std::string s = format_terms(terms);
  if (var != 'x')
    for (auto& ch : s)
      if (ch == 'x') ch = var;
  return s;
}

std::string format_bipoly(const BiPoly& p) {
  std::vector<std::tuple<int, int, BigRat>> terms;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it)
    terms.emplace_back(it->first.first, it->first.second, it->second);
  return format_terms(terms);
}

RatPoly parse_chi_fixture(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool ascending = false;
  std::vector<BigInt> coeffs;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto tag = line.find("order:");
      if (tag != std::string::npos) {
        std::istringstream v(line.substr(tag + 6));
        std::string order;
        v >> order;
        if (order == "ascending") ascending = true;
        else if (order == "descending") ascending = false;
        else throw FixtureError("line " + std::to_string(line_no) + ": unknown order '" + order + "'");
      }
      continue;
    }
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      BigInt v;
      if (v.set_str(tok, 10) != 0)
        throw FixtureError("line " + std::to_string(line_no) + ": malformed coefficient '" + tok + "'");
      coeffs.push_back(std::move(v));
    }
  }
  if (coeffs.empty()) throw FixtureError("empty coefficient file");
  if (!ascending) std::reverse(coeffs.begin(), coeffs.end());
  std::vector<BigRat> rat;
  for (auto& c : coeffs) rat.emplace_back(c);
  RatPoly p(std::move(rat));
  if (p.is_zero()) throw FixtureError("all coefficients are zero");
  return p;
}

RatPoly load_chi_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_chi_fixture(buf.str());
}

}  // namespace rankcert
