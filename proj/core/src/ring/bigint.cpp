#include "grasslin/ring/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace grasslin {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return BigInt(digits, 10);
}

bool is_unit(const BigInt& value) { return value == 1 || value == -1; }

}  // namespace grasslin
