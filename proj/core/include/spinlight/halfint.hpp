#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace spinlight {

/// Half-integer angular momentum quantity, stored as 2j so that
/// parity and selection rules are exact integer arithmetic.
class HalfInt {
public:
  constexpr HalfInt() : twice_(0) {}
  constexpr explicit HalfInt(int twice_value) : twice_(twice_value) {}

  static constexpr HalfInt from_int(int j) { return HalfInt(2 * j); }
  static HalfInt from_double(double j);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  constexpr auto operator<=>(const HalfInt&) const = default;

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }

  std::string str() const;

private:
  int twice_;
};

/// True when m is an admissible projection of momentum j:
/// |2m| <= 2j and 2m == 2j (mod 2).
constexpr bool valid_projection(HalfInt j, HalfInt m) {
  if (j.twice() < 0) return false;
  if (m.twice() > j.twice() || m.twice() < -j.twice()) return false;
  return ((j.twice() - m.twice()) % 2) == 0;
}

/// Triangle rule |a-b| <= c <= a+b with integer perimeter.
constexpr bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  if (a.twice() < 0 || b.twice() < 0 || c.twice() < 0) return false;
  if (c.twice() > a.twice() + b.twice()) return false;
  if (c.twice() < std::abs(a.twice() - b.twice())) return false;
  return ((a.twice() + b.twice() + c.twice()) % 2) == 0;
}

}  // namespace spinlight
