#pragma once

#include <string>
#include <string_view>

#include "rankcert/exactpoly.hpp"

namespace rankcert {

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// Canonical byte encoding of a polynomial: decimal coefficients, constant
/// term first, separated by ','. The zero polynomial encodes as "".
std::string canonical_encoding(const IntPoly& f);
std::string canonical_encoding(const RatPoly& f);

}  // namespace rankcert
