#include <spinlight/couplings.hpp>

#include <spinlight/angular.hpp>
#include <spinlight/units.hpp>

#include <cmath>

namespace spinlight::couplings {

using angular::wigner_6j;
using units::kHbar;

namespace {
const HalfInt kOne = HalfInt::from_int(1);
const HalfInt kTwo = HalfInt::from_int(2);

double phase(int twice_exponent) {
  // (-1)^n with n given doubled; odd doubled exponents are invalid here
  int n = twice_exponent / 2;
  return (n % 2 == 0) ? 1.0 : -1.0;
}
}  // namespace

void TransitionSpec::validate() const {
  if (j0.twice() < 0 || j.twice() < 0)
    throw DomainError("transition: negative momentum");
  if (reduced_dipole_sq < 0)
    throw DomainError("transition: reduced_dipole_sq must be >= 0");
  if (detuning == 0) throw DomainError("transition: detuning must be nonzero");
  if (gamma <= 0) throw DomainError("transition: gamma must be > 0");
}

bool TransitionSpec::detuning_advisory(double threshold) const {
  return std::abs(detuning) < threshold * gamma;
}

void HyperfineSpec::validate() const {
  if (levels.empty()) throw DomainError("hyperfine: empty level list");
  for (const auto& lv : levels) {
    if (!triangle(nuclear_spin, j, lv.F))
      throw DomainError("hyperfine: level F=" + lv.F.str() +
                        " violates (I, j, F) triangle rule");
    if (!triangle(kOne, F0, lv.F))
      throw DomainError("hyperfine: level F=" + lv.F.str() +
                        " violates (1, F0, F) triangle rule");
    if (lv.detuning == 0)
      throw DomainError("hyperfine: zero detuning at F=" + lv.F.str());
  }
  if (!triangle(nuclear_spin, j0, F0))
    throw DomainError("hyperfine: F0 violates (I, j0, F0) triangle rule");
  if (gamma <= 0) throw DomainError("hyperfine: gamma must be > 0");
}

void BeamGeometry::validate() const {
  if (cross_section <= 0) throw DomainError("beam: cross_section must be > 0");
  if (sample_length <= 0) throw DomainError("beam: sample_length must be > 0");
  if (pulse_duration <= 0) throw DomainError("beam: pulse_duration must be > 0");
  if (carrier <= 0) throw DomainError("beam: carrier must be > 0");
  if (linear_density < 0) throw DomainError("beam: linear_density must be >= 0");
  if (photon_flux < 0) throw DomainError("beam: photon_flux must be >= 0");
}

Polarizabilities polarizabilities(const TransitionSpec& spec) {
  spec.validate();
  const double j0 = spec.j0.value();
  const double scale = spec.reduced_dipole_sq / (-kHbar * spec.detuning);

  Polarizabilities out;
  out.alpha0 = scale / (3.0 * std::sqrt(2.0 * j0 + 1.0));
  out.alpha1 = phase(spec.j.twice() + spec.j0.twice()) / std::sqrt(2.0) *
               wigner_6j(kOne, kOne, kOne, spec.j0, spec.j0, spec.j) * scale;
  out.alpha2 = phase(spec.j.twice() + spec.j0.twice() + 2) *
               wigner_6j(kOne, kOne, kTwo, spec.j0, spec.j0, spec.j) * scale;
  return out;
}

std::pair<double, double> dimensionless_polarizabilities(
    double alpha1, double alpha2, const BeamGeometry& geom) {
  geom.validate();
  const double k = 4.0 * units::kPi * geom.carrier /
                   (geom.cross_section * units::kSpeedOfLight);
  return {k * alpha1, k * alpha2};
}

std::pair<double, double> static_moments(HalfInt j0) {
  if (j0.twice() < 1)
    throw DomainError("static_moments: requires 2*j0 >= 1");
  const double j = j0.value();
  const double txy = std::sqrt(15.0 * j * (2.0 * j - 1.0)) /
                     (2.0 * std::sqrt(2.0 * (j + 1.0) * (2.0 * j + 1.0) * (2.0 * j + 3.0)));
  const double tx = std::sqrt(3.0 * j) / std::sqrt((j + 1.0) * (2.0 * j + 1.0));
  return {txy, tx};
}

CouplingSet coupling_set(double alpha1_bar, double alpha2_bar, HalfInt j0,
                         const BeamGeometry& geom) {
  geom.validate();
  const double j = j0.value();
  auto [txy, tx] = static_moments(j0);

  CouplingSet cs;
  cs.alpha1_bar = alpha1_bar;
  cs.alpha2_bar = alpha2_bar;
  cs.Txy_bar = txy;
  cs.Tx_bar = tx;
  cs.beta = std::sqrt(3.0) / (2.0 * std::sqrt(j * (j + 1.0) * (2.0 * j + 1.0))) *
            alpha1_bar;
  cs.epsilon = std::sqrt(15.0 * (2.0 * j - 1.0)) /
               (2.0 * std::sqrt(2.0 * j * (j + 1.0) * (2.0 * j + 1.0) * (2.0 * j + 3.0))) *
               alpha2_bar;
  cs.kappa2 = alpha2_bar * txy * geom.linear_density;
  cs.omega2 = std::sqrt(15.0 * (2.0 * j - 1.0)) /
              std::sqrt(2.0 * j * (j + 1.0) * (2.0 * j + 1.0) * (2.0 * j + 3.0)) *
              alpha2_bar * geom.photon_flux;
  cs.omega = geom.larmor + cs.omega2;
  cs.theta_y = cs.epsilon;
  cs.theta_z = cs.beta;
  cs.Jx_bar = geom.linear_density * j * geom.sample_length;
  cs.Xi3_bar = geom.photon_flux;
  return cs;
}

std::pair<double, double> hyperfine_polarizabilities(const HyperfineSpec& spec) {
  spec.validate();
  double a1 = 0.0, a2 = 0.0;
  for (const auto& lv : spec.levels) {
    const double scale = spec.reduced_dipole_sq / (-kHbar * lv.detuning);
    const double weight =
        (lv.F.twice() + 1.0) * (spec.F0.twice() + 1.0) *
        std::pow(wigner_6j(spec.nuclear_spin, spec.j, lv.F, kOne, spec.F0, spec.j0), 2);
    const int tFF0 = lv.F.twice() + spec.F0.twice();
    a1 += phase(tFF0) / std::sqrt(2.0) *
          wigner_6j(kOne, kOne, kOne, spec.F0, spec.F0, lv.F) * weight * scale;
    a2 += phase(tFF0 + 2) *
          wigner_6j(kOne, kOne, kTwo, spec.F0, spec.F0, lv.F) * weight * scale;
  }
  return {a1, a2};
}

double cesium_faraday_factor(double gamma, double delta5, double delta4,
                             double delta3) {
  if (delta5 == 0 || delta4 == 0 || delta3 == 0)
    throw DomainError("cesium_faraday_factor: zero detuning");
  const double x5 = gamma / delta5, x4 = gamma / delta4, x3 = gamma / delta3;
  const double num = (11.0 / 60.0) * x5 - (7.0 / 320.0) * x4 - (7.0 / 192.0) * x3;
  const double den = (3.0 / 10.0) * x5 * x5 + (7.0 / 10.0) * x4 * x4;
  if (den == 0) throw DomainError("cesium_faraday_factor: zero denominator");
  return num / den;
}

double sigma_from_faraday_factor(double beta, double cross_section, double f) {
  if (f == 0) throw DomainError("sigma_from_faraday_factor: f is zero");
  return beta * cross_section / f;
}

PhotonBudget photon_budget(double eta, double cross_section, double sigma_delta,
                           double n_atoms, double eta_max) {
  if (eta <= 0 || eta >= 1)
    throw DomainError("photon_budget: eta must be in (0,1)");
  if (sigma_delta <= 0)
    throw DomainError("photon_budget: sigma_delta must be > 0");
  PhotonBudget out;
  const double capacity = cross_section / sigma_delta;
  out.n_photons = eta * capacity;
  out.feasible = (out.n_photons <= eta_max * capacity) &&
                 (n_atoms < eta_max * capacity);
  return out;
}

}  // namespace spinlight::couplings
