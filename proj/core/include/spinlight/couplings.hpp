#pragma once

#include <spinlight/halfint.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace spinlight::couplings {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A single fine-structure optical transition j0 -> j.
struct TransitionSpec {
  HalfInt j0;                    // ground angular momentum
  HalfInt j;                     // excited angular momentum
  double reduced_dipole_sq = 0;  // |d_{j0 j}|^2, C^2 m^2
  double detuning = 0;           // rad/s, nonzero
  double gamma = 0;              // rad/s, > 0

  void validate() const;
  /// True when |detuning|/gamma is below the advisory far-off-resonance bound.
  bool detuning_advisory(double threshold = 20.0) const;
};

struct HyperfineLevel {
  HalfInt F;
  double detuning = 0;  // rad/s, nonzero
};

/// Ground hyperfine level F0 coupled to a set of excited levels F.
struct HyperfineSpec {
  HalfInt nuclear_spin;  // I
  HalfInt j0;            // electronic ground momentum
  HalfInt j;             // electronic excited momentum
  HalfInt F0;            // ground hyperfine level
  std::vector<HyperfineLevel> levels;
  double reduced_dipole_sq = 0;
  double gamma = 0;

  void validate() const;
};

struct BeamGeometry {
  double cross_section = 0;   // S0, m^2
  double linear_density = 0;  // n0, atoms/m
  double sample_length = 0;   // L, m
  double photon_flux = 0;     // Xi3_bar, photons/s
  double pulse_duration = 0;  // T, s
  double larmor = 0;          // Omega0, rad/s
  double carrier = 0;         // omega_bar, rad/s

  void validate() const;
};

/// All scalar coefficients of the closed mesoscopic dynamical system.
struct CouplingSet {
  double alpha1_bar = 0;  // dimensionless orientational polarizability
  double alpha2_bar = 0;  // dimensionless alignment polarizability
  double beta = 0;        // Faraday angle per spin flip, rad
  double epsilon = 0;     // ellipticity per spin flip
  double kappa2 = 0;      // birefringence, 1/m
  double omega2 = 0;      // light shift, rad/s
  double omega = 0;       // Omega0 + Omega2, rad/s
  double theta_y = 0;     // == epsilon
  double theta_z = 0;     // == beta
  double Jx_bar = 0;      // n0*j0*L (total)
  double Xi3_bar = 0;     // photon flux, photons/s
  double Txy_bar = 0;     // mean alignment
  double Tx_bar = 0;      // mean orientation
};

struct Polarizabilities {
  double alpha0 = 0, alpha1 = 0, alpha2 = 0;  // dipole^2/energy
};

/// Scalar polarizabilities of a bare j0 -> j transition.
Polarizabilities polarizabilities(const TransitionSpec& spec);

/// alpha_bar_i = 4 pi omega_bar alpha_i / (S0 c).
std::pair<double, double> dimensionless_polarizabilities(
    double alpha1, double alpha2, const BeamGeometry& geom);

/// Mean alignment Txy_bar and orientation Tx_bar of a fully x-oriented
/// momentum j0.
std::pair<double, double> static_moments(HalfInt j0);

CouplingSet coupling_set(double alpha1_bar, double alpha2_bar, HalfInt j0,
                         const BeamGeometry& geom);

/// Effective rank-1/rank-2 polarizabilities summed over a hyperfine
/// multiplet. Returns (alpha1_eff, alpha2_eff) in dipole^2/energy.
std::pair<double, double> hyperfine_polarizabilities(const HyperfineSpec& spec);

/// The rational function f(gamma/D5, gamma/D4, gamma/D3) tying the Faraday
/// angle to the incoherent cross section for the cesium D2 line.
double cesium_faraday_factor(double gamma, double delta5, double delta4,
                             double delta3);

/// Incoherent cross section implied by f == beta*S0/sigma.
double sigma_from_faraday_factor(double beta, double cross_section, double f);

struct PhotonBudget {
  double n_photons = 0;
  bool feasible = false;
};

/// N_ph = eta*S0/sigma. Feasible when both atom and photon numbers stay
/// below eta_max * S0/sigma.
PhotonBudget photon_budget(double eta, double cross_section, double sigma_delta,
                           double n_atoms, double eta_max = 0.2);

}  // namespace spinlight::couplings
