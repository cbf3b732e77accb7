#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spinlift {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_even(const BigInt& x) { return (x & 1) == 0; }

/// x mod m normalized to [0, m), m > 0.
inline int mod_norm(const BigInt& x, int m) {
  int r = static_cast<int>(x % m);
  return r < 0 ? r + m : r;
}

/// Bit k of a nonnegative integer.
inline int bit_of(const BigInt& x, unsigned k) {
  return static_cast<int>((x >> k) & 1);
}

/// Parity of C(x,2) for x >= 0.  By Lucas' theorem this is bit 1 of x.
inline int choose2_parity(const BigInt& x) { return bit_of(x, 1); }

}  // namespace spinlift
