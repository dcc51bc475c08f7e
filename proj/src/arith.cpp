#include "ips/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace ips {

SqrtResult integer_sqrt(const Int& x) {
  if (sgn(x) < 0) throw std::domain_error("integer_sqrt: negative input");
  SqrtResult r;
  Int rem;
  mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t());
  r.exact = (sgn(rem) == 0);
  return r;
}

bool is_perfect_square(const Int& x) {
  if (sgn(x) < 0) return false;
  return mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

Int exact_sqrt(const Int& x) {
  SqrtResult r = integer_sqrt(x);
  if (!r.exact) throw std::domain_error("exact_sqrt: not a perfect square");
  return r.root;
}

bool is_integer(const Rat& q) {
  // tolerate non-canonical input such as Rat(8, 2)
  return mpz_divisible_p(q.get_num().get_mpz_t(), q.get_den().get_mpz_t()) != 0;
}

Int to_integer(const Rat& q) {
  if (!is_integer(q)) throw std::domain_error("to_integer: nontrivial denominator");
  Int r;
  mpz_divexact(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rat parse_rational(const std::string& s) {
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::uint64_t isqrt_u64(std::uint64_t x) {
  if (x == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r > x / r) --r;
  while ((r + 1) <= x / (r + 1)) ++r;
  return r;
}

bool is_square_u64(std::uint64_t x) {
  // quick residue filters before the full root
  static constexpr std::uint64_t kMod64 =
      0x0202021202030213ULL;  // bit i set iff i is a QR mod 64
  if (!((kMod64 >> (x & 63)) & 1)) return false;
  std::uint64_t r = isqrt_u64(x);
  return r * r == x;
}

}  // namespace ips
