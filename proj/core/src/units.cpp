#include <spinlight/units.hpp>

#include <cctype>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace spinlight::units {

namespace {

struct UnitDef {
  Dimension dim;
  double to_si;  // multiplicative factor into SI (after Hz->rad/s for Frequency)
};

const std::map<std::string, UnitDef>& unit_table() {
  static const std::map<std::string, UnitDef> table = {
      {"Hz", {Dimension::Frequency, kTwoPi}},
      {"kHz", {Dimension::Frequency, kTwoPi * 1e3}},
      {"MHz", {Dimension::Frequency, kTwoPi * 1e6}},
      {"GHz", {Dimension::Frequency, kTwoPi * 1e9}},
      {"THz", {Dimension::Frequency, kTwoPi * 1e12}},
      {"rad/s", {Dimension::AngularRate, 1.0}},
      {"s", {Dimension::Time, 1.0}},
      {"ms", {Dimension::Time, 1e-3}},
      {"us", {Dimension::Time, 1e-6}},
      {"ns", {Dimension::Time, 1e-9}},
      {"m", {Dimension::Length, 1.0}},
      {"cm", {Dimension::Length, 1e-2}},
      {"mm", {Dimension::Length, 1e-3}},
      {"um", {Dimension::Length, 1e-6}},
      {"m^2", {Dimension::Area, 1.0}},
      {"cm^2", {Dimension::Area, 1e-4}},
      {"mm^2", {Dimension::Area, 1e-6}},
      {"um^2", {Dimension::Area, 1e-12}},
      {"1/m", {Dimension::LinearDensity, 1.0}},
      {"1/cm", {Dimension::LinearDensity, 1e2}},
      {"1/mm", {Dimension::LinearDensity, 1e3}},
      {"1/s", {Dimension::Rate, 1.0}},
      {"1/ms", {Dimension::Rate, 1e3}},
      {"1/us", {Dimension::Rate, 1e6}},
      {"C^2 m^2", {Dimension::DipoleSquared, 1.0}},
      // 1 debye = 3.33564e-30 C m; 1 e*a0 = 8.478353625e-30 C m
      {"D^2", {Dimension::DipoleSquared, 1.112650056e-59}},
      {"(e a0)^2", {Dimension::DipoleSquared, 7.188248213e-59}},
      {"", {Dimension::Dimensionless, 1.0}},
  };
  return table;
}

}  // namespace

const char* dimension_name(Dimension dim) {
  switch (dim) {
    case Dimension::Frequency: return "frequency";
    case Dimension::AngularRate: return "angular rate";
    case Dimension::Time: return "time";
    case Dimension::Length: return "length";
    case Dimension::Area: return "area";
    case Dimension::LinearDensity: return "linear density";
    case Dimension::Rate: return "rate";
    case Dimension::DipoleSquared: return "dipole^2";
    case Dimension::Dimensionless: return "dimensionless";
  }
  return "?";
}

double parse_quantity(const std::string& text, Dimension dim) {
  const char* begin = text.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin) {
    throw std::invalid_argument("quantity '" + text + "': no numeric value");
  }
  std::string unit(end);
  size_t a = unit.find_first_not_of(" \t");
  size_t b = unit.find_last_not_of(" \t");
  unit = (a == std::string::npos) ? "" : unit.substr(a, b - a + 1);

  auto it = unit_table().find(unit);
  if (it == unit_table().end()) {
    throw std::invalid_argument("quantity '" + text + "': unknown unit '" + unit + "'");
  }
  // a plain rad/s value is acceptable wherever a frequency is expected
  bool ok = it->second.dim == dim ||
            (dim == Dimension::Frequency && it->second.dim == Dimension::AngularRate);
  if (!ok) {
    throw std::invalid_argument("quantity '" + text + "': expected " +
                                std::string(dimension_name(dim)) + ", got " +
                                dimension_name(it->second.dim));
  }
  return value * it->second.to_si;
}

}  // namespace spinlight::units
