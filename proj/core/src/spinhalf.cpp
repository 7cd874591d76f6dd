#include <spinlight/spinhalf.hpp>

#include <spinlight/units.hpp>

#include <cmath>

namespace spinlight::spinhalf {

ZeroFieldMap io_map_zero_field(const SpinHalfScenario& scn) {
  if (scn.Omega0 != 0)
    throw PreconditionError("io_map_zero_field: Omega0 must be zero");
  ZeroFieldMap m;
  m.jy_int_xi2 = scn.beta * scn.Jx_bar;
  m.xi1_jz = 2.0 * scn.beta * scn.Xi3_bar;
  return m;
}

MagneticMap io_map_magnetic(const SpinHalfScenario& scn, double t) {
  const double om = scn.Omega0;
  const double bj = scn.beta * scn.Jx_bar;
  const double bx = 2.0 * scn.beta * scn.Xi3_bar;

  MagneticMap m;
  m.rot_cos = std::cos(om * t);
  m.rot_sin = std::sin(om * t);
  m.jz_xi2_kernel = [bj, om, t](double tp) { return bj * std::sin(om * (t - tp)); };
  m.jy_xi2_kernel = [bj, om, t](double tp) { return bj * std::cos(om * (t - tp)); };
  m.xi1_jz_cos = bx * std::cos(om * t);
  m.xi1_jy_sin = bx * std::sin(om * t);
  const double self = bx * bj;  // 2 beta^2 Xi3 Jx
  m.xi1_xi2_kernel = [self, om, t](double tp) { return self * std::sin(om * (t - tp)); };
  return m;
}

SpatialKernels spatial_solution(const SpinHalfScenario& scn, double z, double t,
                                bool retardation) {
  if (z < 0 || z > scn.L)
    throw std::domain_error("spatial_solution: z outside [0, L]");
  const double c = units::kSpeedOfLight;
  const double om = scn.Omega0;
  const double bj = scn.beta * scn.Jx_bar / scn.L;  // density form
  const double bx = 2.0 * scn.beta * scn.Xi3_bar;

  SpatialKernels k;
  k.retarded = retardation;
  k.rot_cos = std::cos(om * t);
  k.rot_sin = std::sin(om * t);
  k.jz_xi2 = [bj, om, t](double tp) { return bj * std::sin(om * (t - tp)); };
  k.jy_xi2 = [bj, om, t](double tp) { return bj * std::cos(om * (t - tp)); };
  auto arg = [om, t, z, c, retardation](double zp) {
    return retardation ? om * (t - (z - zp) / c) : om * t;
  };
  k.xi1_jz = [bx, arg](double zp) { return bx * std::cos(arg(zp)); };
  k.xi1_jy = [bx, arg](double zp) { return bx * std::sin(arg(zp)); };
  const double self = bx * bj;
  k.xi1_xi2 = [self, om, t, z, c, retardation](double zp, double tp) {
    double tau = retardation ? (t - tp - (z - zp) / c) : (t - tp);
    return self * std::sin(om * tau);
  };
  return k;
}

FaradayResult faraday_xi(double xi1_in, double eta, double f, double betaJ) {
  if (betaJ < 0) throw std::domain_error("faraday_xi: betaJ must be >= 0");
  FaradayResult r;
  r.kappa_sq = 2.0 * eta * f * betaJ;
  r.xi1 = xi1_in + r.kappa_sq;
  return r;
}

SpatialProfiles retarded_initial(const SpatialProfiles& in, double Omega0) {
  SpatialProfiles out = in;
  const double c = units::kSpeedOfLight;
  for (std::size_t i = 0; i < in.z.size(); ++i) {
    const double a = Omega0 * in.z[i] / c;
    const double cz = std::cos(a), sz = std::sin(a);
    out.jz[i] = cz * in.jz[i] + sz * in.jy[i];
    out.jy[i] = -sz * in.jz[i] + cz * in.jy[i];
  }
  return out;
}

}  // namespace spinlight::spinhalf
