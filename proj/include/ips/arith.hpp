#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ips {

// All certification arithmetic is exact: arbitrary-precision integers
// for squared distances and determinants, rationals for Gram matrices
// and circumradii. Floating point only appears in coordinate export.
using Int = mpz_class;
using Rat = mpq_class;

struct SqrtResult {
  Int root;    // floor(sqrt(x))
  bool exact;  // root * root == x
};

// Floor square root. Throws std::domain_error for negative input.
SqrtResult integer_sqrt(const Int& x);

// True iff x >= 0 and x = k^2 for some integer k.
bool is_perfect_square(const Int& x);

// Square root of a perfect square. Throws std::domain_error otherwise.
Int exact_sqrt(const Int& x);

bool is_integer(const Rat& q);

// Numerator of an integer-valued rational. Throws std::domain_error if q
// has a nontrivial denominator.
Int to_integer(const Rat& q);

// Parses "a" or "a/b" with optional sign; result is canonicalized.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(const std::string& s);

// Fast paths for 64-bit search loops.
std::uint64_t isqrt_u64(std::uint64_t x);
bool is_square_u64(std::uint64_t x);

}  // namespace ips
