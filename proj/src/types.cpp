#include "ordext/types.hpp"

#include <cstdlib>
#include <sstream>

#include "ordext/error.hpp"

namespace ordext {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  return out;
}

Int pairing(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::RankMismatch, "pairing of vectors of different length");
  Int s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s = checked_add(s, checked_mul(x[i], y[i]));
  return s;
}

Rational pairing(const RatVec& x, const IntVec& y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::RankMismatch, "pairing of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * Rational(static_cast<long>(y[i]));
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], -b[i]);
  return out;
}

IntVec scale(Int c, const IntVec& a) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(c, a[i]);
  return out;
}

IntVec neg(const IntVec& a) { return scale(-1, a); }

bool is_zero(const IntVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

RatVec to_rational(const IntVec& a) {
  RatVec out;
  out.reserve(a.size());
  for (Int x : a) out.emplace_back(static_cast<long>(x));
  return out;
}

std::string format_vec(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string format_vec(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

Int gcd(Int a, Int b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int ipow(Int base, Int exp) {
  Int out = 1;
  for (Int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace ordext
