#pragma once

#include <string>

namespace spinlight::units {

inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class Dimension {
  Frequency,     // accepted in Hz and multiples; returned in rad/s
  AngularRate,   // rad/s directly
  Time,          // seconds
  Length,        // meters
  Area,          // m^2
  LinearDensity, // atoms per meter ("1/cm" etc.)
  Rate,          // events per second ("1/s", "1/us")
  DipoleSquared, // C^2 m^2 (also accepts D^2, (e a0)^2)
  Dimensionless
};

/// Parses "1000 MHz", "1 cm^2", "0.5 us", "1e8 1/cm", ... into SI.
/// Frequencies are converted Hz -> rad/s at this boundary.
/// Throws std::invalid_argument on unknown unit or dimension mismatch.
double parse_quantity(const std::string& text, Dimension dim);

const char* dimension_name(Dimension dim);

}  // namespace spinlight::units
