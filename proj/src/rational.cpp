#include "permpoly/rational.hpp"

#include <cctype>

#include "permpoly/config.hpp"

namespace permpoly {

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(std::string_view text) {
  // Strict "p" or "p/q": optional leading sign, digits, one optional /q.
  auto bad = [&] {
    throw InvalidInputError("bad rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) bad();
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) bad();
  if (i < text.size()) {
    if (text[i] != '/') bad();
    ++i;
    digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0 || i != text.size()) bad();
  }
  Rational out;
  if (mpq_set_str(out.get_mpq_t(), std::string(text).c_str(), 10) != 0) bad();
  if (sgn(out.get_den()) == 0) bad();
  out.canonicalize();
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace permpoly
