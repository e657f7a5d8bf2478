#pragma once

// Polynomial text and coefficient fixtures.
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := int ('/' posint)?
//
// Whitespace is insignificant. The normal form lists monomials by descending
// x degree, then descending t degree, as "c*t^j*x^k" joined by " + " / " - ",
// with unit coefficients and exponents of 1 omitted; zero prints as "0".

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "rankcert/exactpoly.hpp"

namespace rankcert {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse polynomial in x and t; keys are (x exponent, t exponent), zero terms absent.
struct BiPoly {
  std::map<std::pair<int, int>, BigRat> terms;

  int degree_x() const;
  int degree_t() const;
  friend bool operator==(const BiPoly&, const BiPoly&) = default;
};

/// Polynomial in x only; "t" or any other name is an unknown variable.
RatPoly parse_poly(std::string_view text);
/// Polynomial in x and t.
BiPoly parse_bipoly(std::string_view text);

std::string format_poly(const RatPoly& p, char var = 'x');
std::string format_bipoly(const BiPoly& p);

/// Integer coefficients separated by whitespace. A header line
/// "# order: ascending" puts the constant term first; the default,
/// "# order: descending", puts it last. Other '#' lines are comments.
RatPoly parse_chi_fixture(std::string_view text);
RatPoly load_chi_fixture(const std::string& path);

}  // namespace rankcert
