#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ordext {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;  // row-major

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

// Standard dot product between X and X^vee coordinates.
Int pairing(const IntVec& x, const IntVec& y);
Rational pairing(const RatVec& x, const IntVec& y);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(Int c, const IntVec& a);
IntVec neg(const IntVec& a);
bool is_zero(const IntVec& a);

RatVec to_rational(const IntVec& a);

std::string format_vec(const IntVec& v);
std::string format_vec(const RatVec& v);

// Overflow-checked integer helpers; throw Error(Overflow).
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

Int gcd(Int a, Int b);
Int ipow(Int base, Int exp);

}  // namespace ordext
