#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mirrorcheck {

// Exact rationals; mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as every constructor path goes through make_scalar or arithmetic.
using scalar = mpq_class;
using integer = mpz_class;

scalar make_scalar(long num, long den = 1);
scalar make_scalar(const integer &num, const integer &den);

// "num/den", always with the denominator (e.g. "588/1").
std::string to_string(const scalar &x);
// Human-readable form: "num" for integers, "num/den" otherwise.
std::string to_pretty(const scalar &x);
// Accepts "num/den" or "num". Throws precondition_error on malformed input or zero denominator.
scalar parse_scalar(std::string_view text);

inline bool is_integer(const scalar &x) { return x.get_den() == 1; }

} // namespace mirrorcheck
