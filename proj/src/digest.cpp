#include "rankcert/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace rankcert {

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

template <class Poly>
static std::string encode(const Poly& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s.push_back(',');
    s += f.coeffs()[i].get_str();
  }
  return s;
}

std::string canonical_encoding(const IntPoly& f) { return encode(f); }
std::string canonical_encoding(const RatPoly& f) { return encode(f); }

}  // namespace rankcert
