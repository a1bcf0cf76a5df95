#pragma once

#include "errors.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>

namespace efx {

// Exact signed 128-bit integer with checked arithmetic. All valuation math
// goes through this type: the non-degeneracy perturbation scales values by
// 2^m, which overflows 64-bit words long before it overflows these. There
// is no floating point anywhere in the library.
class Val {
public:
  constexpr Val() = default;
  constexpr Val(long long x) : v_(x) {}

  static Val pow2(int e) {
    if (e < 0 || e > 125) throw OverflowError("Val::pow2: exponent out of range");
    Val r;
    r.v_ = static_cast<__int128>(1) << e;
    return r;
  }

  static Val from_u64(std::uint64_t x) {
    Val r;
    r.v_ = static_cast<__int128>(x);
    return r;
  }

  Val operator+(Val o) const {
    Val r;
    if (__builtin_add_overflow(v_, o.v_, &r.v_)) throw OverflowError("integer overflow in addition");
    return r;
  }
  Val operator-(Val o) const {
    Val r;
    if (__builtin_sub_overflow(v_, o.v_, &r.v_)) throw OverflowError("integer overflow in subtraction");
    return r;
  }
  Val operator*(Val o) const {
    Val r;
    if (__builtin_mul_overflow(v_, o.v_, &r.v_)) throw OverflowError("integer overflow in multiplication");
    return r;
  }
  Val operator-() const { return Val(0) - *this; }
  Val& operator+=(Val o) { return *this = *this + o; }
  Val& operator-=(Val o) { return *this = *this - o; }
  Val& operator*=(Val o) { return *this = *this * o; }

  friend constexpr bool operator==(const Val& a, const Val& b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(const Val& a, const Val& b) { return a.v_ <=> b.v_; }

  bool fits_i64() const {
    return v_ >= static_cast<__int128>(INT64_MIN) && v_ <= static_cast<__int128>(INT64_MAX);
  }
  long long to_i64() const {
    if (!fits_i64()) throw OverflowError("value does not fit in 64 bits: " + str());
    return static_cast<long long>(v_);
  }

  std::string str() const {
    if (v_ == 0) return "0";
    unsigned __int128 u =
        v_ < 0 ? ~static_cast<unsigned __int128>(v_) + 1 : static_cast<unsigned __int128>(v_);
    std::string s;
    while (u != 0) {
      s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
      u /= 10;
    }
    if (v_ < 0) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
  }

private:
  __int128 v_ = 0;
};

}  // namespace efx
