#include "relhilb/rational.hpp"

#include <cctype>

#include "relhilb/errors.hpp"

namespace relhilb {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  return BigRational(BigInt(n), BigInt(std::string(den)));
}

std::size_t BigRational::hash() const {
  std::size_t h = 1469598103934665603ULL;
  auto mix = [&h](const mpz_class& z) {
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i)));
      h *= 1099511628211ULL;
    }
    h ^= static_cast<std::size_t>(sgn(z) + 2);
    h *= 1099511628211ULL;
  };
  mix(value_.get_num());
  mix(value_.get_den());
  return h;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  // C(n, k) = n (n-1) ... (n-k+1) / k!
  BigInt num = 1;
  BigInt den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return num / den;
}

}  // namespace relhilb
