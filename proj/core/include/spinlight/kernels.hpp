#pragma once

#include <spinlight/couplings.hpp>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace spinlight::kernels {

using Complex = std::complex<double>;

struct NearSingularError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContourError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Coefficients of the Laplace-image system in density form
/// (jx is the per-length mean momentum Jx_bar / L).
struct KernelParams {
  double beta = 0;
  double eps = 0;
  double theta_y = 0;
  double theta_z = 0;
  double kappa2 = 0;  // 1/m
  double omega = 0;   // rad/s
  double jx = 0;      // mean momentum density, 1/m
  double xi3 = 0;     // photons/s

  static KernelParams from_coupling_set(const couplings::CouplingSet& cs,
                                        double sample_length);
};

struct Mat2c {
  Complex a11{}, a12{}, a21{}, a22{};
};
struct Mat2 {
  double a11 = 0, a12 = 0, a21 = 0, a22 = 0;
};

/// The four Laplace-image transfer matrices: M field->field, N spin->spin,
/// F spin->field, G field->spin.
struct KernelImages {
  Mat2c M, N, F, G;
};

/// Determinant of the Laplace-image linear system.
Complex determinant(Complex p, Complex s, const KernelParams& kp);

/// Closed-form image matrices; throws NearSingularError when |Delta| is
/// below threshold at the requested point.
KernelImages kernel_images(Complex p, Complex s, const KernelParams& kp);

/// Roots of Delta(., s) = 0 as a quadratic in p. Throws ContourError when
/// the leading coefficient s^2 + Omega^2 is too small.
struct PRoots {
  Complex p_plus, p_minus;
};
PRoots p_roots(Complex s, const KernelParams& kp);

/// Residue decomposition of one image entry in p:
///   K(p,s) = delta_coeff(s) + r_plus/(p - p_plus) + r_minus/(p - p_minus)
/// (delta_coeff nonzero only for entries with a p^2 numerator).
struct EntryDecomp {
  Complex delta_coeff{};
  Complex r_plus{}, r_minus{};
};
struct ImageDecomp {
  PRoots roots;
  std::array<EntryDecomp, 16> entries;  // M(4), N(4), F(4), G(4), row-major
};
ImageDecomp p_partial_fraction(Complex s, const KernelParams& kp);

/// Smooth (non-delta) part of the kernels after analytic inversion in p,
/// still a Laplace image in s. Delta parts are carried separately by
/// field_delta / spin_delta.
KernelImages spatial_kernels(double z, Complex s, const KernelParams& kp);

/// delta(t) coefficient of M(z, t): the pure birefringence rotation of the
/// boundary signal.
Mat2 field_delta(double z, const KernelParams& kp);

/// delta(z - z') coefficient of N(z, t): local precession.
Mat2 spin_delta(double t, const KernelParams& kp);

/// Bromwich inversion settings (damped trapezoid). The contour abscissa is
/// s0 = s0_factor / t_scale and the alias period is period_factor * t_scale.
struct QuadratureConfig {
  double s0_factor = 2.0;
  double period_factor = 16.0;
  int nodes = 16000;
  int max_refinements = 3;
  double tol = 1e-6;
  double t_scale = 0;  // 0: use max(t, tiny) of the evaluation point
  bool jump_subtraction = true;
};

struct TimeKernels {
  Mat2 M, N, F, G;  // smooth parts at (z, t)
};

/// Numerical Bromwich inversion in s of the analytically p-inverted images.
/// Throws AccuracyError when refinement does not converge.
TimeKernels kernel_time_domain(double z, double t, const KernelParams& kp,
                               const QuadratureConfig& quad = {});

/// Running time integrals Int_0^t K(z, u) du of the smooth kernel parts
/// (inverts K(z,s)/s; better behaved than integrating point values).
TimeKernels kernel_time_integral(double z, double t, const KernelParams& kp,
                                 const QuadratureConfig& quad = {});

/// Slow 2-D (p and s) trapezoid inversion, cross-check only.
TimeKernels kernel_time_domain_2d(double z, double t, const KernelParams& kp,
                                  int nodes_p, int nodes_s, double z_scale,
                                  double t_scale);

}  // namespace spinlight::kernels
