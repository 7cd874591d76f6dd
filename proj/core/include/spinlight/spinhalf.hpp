#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace spinlight::spinhalf {

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Alignment-free scenario (j0 = 1/2 or negligible alpha2_bar).
struct SpinHalfScenario {
  double beta = 0;      // rad per spin flip
  double Xi3_bar = 0;   // photons/s
  double Jx_bar = 0;    // total mean momentum
  double Omega0 = 0;    // rad/s
  double T = 0;         // pulse duration, s
  double L = 0;         // sample length, m
  double xi1_in = 0;
  double xi2_in = 0;
};

/// Coefficients of the zero-field input-output map on
/// (Jz, Jy, Xi1(t), Xi2(t)) with the time-integral of Xi2 as memory input:
///   Jz_out  = Jz_in
///   Jy_out  = Jy_in + jy_int_xi2 * Int[Xi2_in dt]
///   Xi1_out = Xi1_in + xi1_jz * Jz_in
///   Xi2_out = Xi2_in
struct ZeroFieldMap {
  double jy_int_xi2 = 0;  // beta * Jx_bar
  double xi1_jz = 0;      // 2 beta * Xi3_bar
};

ZeroFieldMap io_map_zero_field(const SpinHalfScenario& scn);

/// Time-dependent map with magnetic field: exact rotation block on
/// (Jz, Jy) plus convolution kernels onto Xi2_in, and the Xi1 output
/// including the second-order self term.
struct MagneticMap {
  // spin rotation block at time t: (Jz, Jy) <- R * (Jz_in, Jy_in)
  double rot_cos = 1, rot_sin = 0;
  // memory kernels k(t, t') multiplying Xi2_in(t'):
  std::function<double(double)> jz_xi2_kernel;   // beta*Jx*sin(Omega0 (t-t'))
  std::function<double(double)> jy_xi2_kernel;   // beta*Jx*cos(Omega0 (t-t'))
  // Xi1_out(t) = Xi1_in(t) + xi1_jz_cos*Jz_in + xi1_jy_sin*Jy_in
  //             + Int dt' xi1_xi2_kernel(t') Xi2_in(t')
  double xi1_jz_cos = 0;  // 2 beta Xi3 cos(Omega0 t)
  double xi1_jy_sin = 0;  // 2 beta Xi3 sin(Omega0 t)
  std::function<double(double)> xi1_xi2_kernel;  // 2 beta^2 Xi3 Jx sin(Omega0 (t-t'))
};

MagneticMap io_map_magnetic(const SpinHalfScenario& scn, double t);

/// Spatially resolved kernels at (z, t). Retardation keeps the
/// t - (z - z')/c arguments; with the flag off they collapse to t.
struct SpatialKernels {
  // Jz(z,t) = rot_cos*Jz_in(z) + rot_sin*Jy_in(z) + Int dt' jz_xi2(t') Xi2_in(t'-z/c)
  double rot_cos = 1, rot_sin = 0;
  std::function<double(double)> jz_xi2;
  std::function<double(double)> jy_xi2;
  // Xi1(z,t) = Xi1_in(t or t - z/c)
  //   + Int_0^z dz' xi1_jz(z') Jz_in(z') + Int_0^z dz' xi1_jy(z') Jy_in(z')
  //   + Int_0^z dz' Int_0^{upper(z')} dt' xi1_xi2(z', t') Xi2_in(...)
  std::function<double(double)> xi1_jz;  // of z'
  std::function<double(double)> xi1_jy;  // of z'
  std::function<double(double, double)> xi1_xi2;  // of (z', t')
  bool retarded = false;
};

SpatialKernels spatial_solution(const SpinHalfScenario& scn, double z, double t,
                                bool retardation = false);

struct FaradayResult {
  double xi1 = 0;
  double kappa_sq = 0;  // 2 eta f betaJ
};

/// Faraday-limit output Mandel parameter xi1(J) = xi1_in + 2 eta f betaJ.
FaradayResult faraday_xi(double xi1_in, double eta, double f, double betaJ);

struct SpatialProfiles {
  std::vector<double> z;   // sample points in [0, L]
  std::vector<double> jz;
  std::vector<double> jy;
};

/// Rotates initial spin profiles by Omega0 z / c pointwise (the retarded
/// initial-condition change of variables).
SpatialProfiles retarded_initial(const SpatialProfiles& in, double Omega0);

}  // namespace spinlight::spinhalf
