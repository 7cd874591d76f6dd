#include <spinlight/kernels.hpp>

#include <spinlight/units.hpp>

#include <cmath>
#include <functional>
#include <sstream>

namespace spinlight::kernels {

namespace {

constexpr double kSingularThreshold = 1e-300;

// numerator polynomial in p of one image entry: c2 p^2 + c1 p + c0
struct PPoly {
  Complex c2{}, c1{}, c0{};
};

// all 16 numerators, order M11,M12,M21,M22, N..., F..., G...
std::array<PPoly, 16> numerators(Complex s, const KernelParams& k) {
  const Complex a = s * s + k.omega * k.omega;
  const double jxx = k.jx * k.xi3;  // J_x_bar * Xi3_bar (density form)
  const double k2 = k.kappa2, om = k.omega, x3 = k.xi3, jx = k.jx;

  std::array<PPoly, 16> n;
  // M: field -> field
  n[0] = {0.0, a, 2.0 * k.eps * k.theta_z * jxx * s};
  n[1] = {0.0, 0.0, -k2 * a + 2.0 * k.beta * k.theta_z * jxx * om};
  n[2] = {0.0, 0.0, k2 * a - 2.0 * k.eps * k.theta_y * jxx * om};
  n[3] = {0.0, a, 2.0 * k.beta * k.theta_y * jxx * s};
  // N: spin -> spin
  n[4] = {s, 2.0 * k.eps * k.theta_z * jxx, s * k2 * k2};
  n[5] = {om, 0.0, om * k2 * k2 - 2.0 * k.eps * k.theta_y * jxx * k2};
  n[6] = {-om, 0.0, -om * k2 * k2 + 2.0 * k.beta * k.theta_z * jxx * k2};
  n[7] = {s, 2.0 * k.beta * k.theta_y * jxx, s * k2 * k2};
  // F: spin -> field
  n[8] = {0.0, 2.0 * x3 * k.beta * s,
          -2.0 * x3 * k.eps * k2 * om + 4.0 * k.beta * k.eps * k.theta_z * jxx * x3};
  n[9] = {0.0, 2.0 * x3 * k.beta * om, 2.0 * x3 * k.eps * k2 * s};
  n[10] = {0.0, 2.0 * x3 * k.eps * om, 2.0 * x3 * k.beta * k2 * s};
  n[11] = {0.0, -2.0 * x3 * k.eps * s,
           2.0 * x3 * k.beta * k2 * om - 4.0 * k.beta * k.eps * k.theta_y * jxx * x3};
  // G: field -> spin
  n[12] = {0.0, -jx * k.theta_y * s,
           jx * k.theta_z * k2 * om - 2.0 * k.eps * k.theta_y * k.theta_z * jx * jxx};
  n[13] = {0.0, jx * k.theta_z * om, jx * k.theta_y * k2 * s};
  n[14] = {0.0, jx * k.theta_y * om, jx * k.theta_z * k2 * s};
  n[15] = {0.0, jx * k.theta_z * s,
           -jx * k.theta_y * k2 * om + 2.0 * k.beta * k.theta_y * k.theta_z * jx * jxx};
  return n;
}

// Delta(p,s) = a p^2 + b p + c
struct DeltaPoly {
  Complex a, b, c;
};

DeltaPoly delta_poly(Complex s, const KernelParams& k) {
  const Complex a = s * s + k.omega * k.omega;
  const double jxx = k.jx * k.xi3;
  DeltaPoly d;
  d.a = a;
  d.b = 2.0 * (k.eps * k.theta_z + k.beta * k.theta_y) * jxx * s;
  d.c = a * k.kappa2 * k.kappa2 -
        2.0 * (k.eps * k.theta_y + k.beta * k.theta_z) * jxx * k.omega * k.kappa2 +
        4.0 * k.beta * k.eps * k.theta_z * k.theta_y * jxx * jxx;
  return d;
}

// sinh(q z)/q, stable as q -> 0
Complex sinhc_q(Complex q, double z) {
  Complex qz = q * z;
  if (std::abs(qz) < 1e-4) {
    Complex qz2 = qz * qz;
    return z * (1.0 + qz2 / 6.0 * (1.0 + qz2 / 20.0));
  }
  return std::sinh(qz) / q;
}

KernelImages pack(const std::array<Complex, 16>& v) {
  KernelImages out;
  out.M = {v[0], v[1], v[2], v[3]};
  out.N = {v[4], v[5], v[6], v[7]};
  out.F = {v[8], v[9], v[10], v[11]};
  out.G = {v[12], v[13], v[14], v[15]};
  return out;
}

using ImageFn = std::function<std::array<Complex, 16>(Complex)>;

struct BromwichResult {
  std::array<double, 16> values;
  int level = 0;
  double last_change = 0;
};

// damped trapezoid over Re s = s0; series truncated at `nodes` terms
std::array<double, 16> bromwich_once(const ImageFn& f, double t, double s0,
                                     double period, long nodes) {
  const double h = units::kTwoPi / period;
  std::array<double, 16> acc{};
  auto base = f(Complex(s0, 0.0));
  for (int i = 0; i < 16; ++i) acc[i] = 0.5 * base[i].real();
  for (long k = 1; k <= nodes; ++k) {
    const Complex s(s0, k * h);
    const Complex ph = std::exp(Complex(0.0, k * h * t));
    auto v = f(s);
    for (int i = 0; i < 16; ++i) acc[i] += (v[i] * ph).real();
  }
  const double scale = std::exp(s0 * t) * h / units::kPi;
  for (auto& x : acc) x *= scale;
  return acc;
}

// inversion with refinement until successive levels agree to tol
BromwichResult bromwich_invert(const ImageFn& f, double t, double t_scale,
                               const QuadratureConfig& q) {
  double period = q.period_factor * t_scale;
  if (period < 2.0 * t) period = 2.0 * t + q.period_factor * t_scale;
  const double s0 = q.s0_factor / t_scale * 8.0 / (period / t_scale);
  // keep s0 * period constant across refinements: aliasing improves as the
  // period doubles while the abscissa follows the spec default scale
  double a_exp = std::max(q.s0_factor * q.period_factor, 25.0);

  std::array<double, 16> prev{};
  bool have_prev = false;
  long nodes = q.nodes;
  for (int level = 0; level <= q.max_refinements; ++level) {
    const double s0_l = a_exp / period;
    auto cur = bromwich_once(f, t, s0_l, period, nodes);
    if (have_prev) {
      double scale = 1e-300;
      for (auto& x : cur) scale = std::max(scale, std::abs(x));
      double change = 0;
      for (int i = 0; i < 16; ++i)
        change = std::max(change, std::abs(cur[i] - prev[i]));
      if (change <= q.tol * scale) {
        return {cur, level, change / scale};
      }
      if (level == q.max_refinements) {
        std::ostringstream os;
        os << "Bromwich inversion did not converge at t=" << t
           << ": relative change " << change / scale << " > tol " << q.tol
           << " after " << level << " refinements (nodes=" << nodes
           << ", period=" << period << ")";
        throw AccuracyError(os.str());
      }
    }
    prev = cur;
    have_prev = true;
    period *= 2.0;
    nodes *= 3;
  }
  return {prev, q.max_refinements, 0.0};
}

(void)0;

}  // namespace

KernelParams KernelParams::from_coupling_set(const couplings::CouplingSet& cs,
                                             double sample_length) {
  KernelParams kp;
  kp.beta = cs.beta;
  kp.eps = cs.epsilon;
  kp.theta_y = cs.theta_y;
  kp.theta_z = cs.theta_z;
  kp.kappa2 = cs.kappa2;
  kp.omega = cs.omega;
  kp.jx = cs.Jx_bar / sample_length;
  kp.xi3 = cs.Xi3_bar;
  return kp;
}

Complex determinant(Complex p, Complex s, const KernelParams& kp) {
  auto d = delta_poly(s, kp);
  return (d.a * p + d.b) * p + d.c;
}

KernelImages kernel_images(Complex p, Complex s, const KernelParams& kp) {
  const Complex det = determinant(p, s, kp);
  if (std::abs(det) < kSingularThreshold) {
    std::ostringstream os;
    os << "near-singular determinant at p=(" << p.real() << "," << p.imag()
       << "), s=(" << s.real() << "," << s.imag() << ")";
    throw NearSingularError(os.str());
  }
  auto num = numerators(s, kp);
  std::array<Complex, 16> v;
  for (int i = 0; i < 16; ++i) {
    v[i] = ((num[i].c2 * p + num[i].c1) * p + num[i].c0) / det;
  }
  return pack(v);
}

PRoots p_roots(Complex s, const KernelParams& kp) {
  auto d = delta_poly(s, kp);
  if (std::abs(d.a) < 1e-30) {
    throw ContourError("p_roots: leading coefficient s^2 + Omega^2 vanishes");
  }
  const Complex pbar = -d.b / (2.0 * d.a);
  const Complex q = std::sqrt(pbar * pbar - d.c / d.a);
  return {pbar + q, pbar - q};
}

ImageDecomp p_partial_fraction(Complex s, const KernelParams& kp) {
  auto d = delta_poly(s, kp);
  if (std::abs(d.a) < 1e-30) {
    throw ContourError("p_partial_fraction: s^2 + Omega^2 vanishes");
  }
  auto num = numerators(s, kp);
  ImageDecomp out;
  out.roots = p_roots(s, kp);
  const Complex pp = out.roots.p_plus, pm = out.roots.p_minus;
  for (int i = 0; i < 16; ++i) {
    EntryDecomp e;
    e.delta_coeff = num[i].c2 / d.a;
    const Complex c1 = num[i].c1 - num[i].c2 * d.b / d.a;
    const Complex c0 = num[i].c0 - num[i].c2 * d.c / d.a;
    e.r_plus = (c1 * pp + c0) / (d.a * (pp - pm));
    e.r_minus = (c1 * pm + c0) / (d.a * (pm - pp));
    out.entries[i] = e;
  }
  return out;
}

KernelImages spatial_kernels(double z, Complex s, const KernelParams& kp) {
  auto d = delta_poly(s, kp);
  if (std::abs(d.a) < 1e-30) {
    throw ContourError("spatial_kernels: s^2 + Omega^2 vanishes");
  }
  auto num = numerators(s, kp);
  const Complex pbar = -d.b / (2.0 * d.a);
  const Complex q = std::sqrt(pbar * pbar - d.c / d.a);
  const Complex epz = std::exp(pbar * z);
  const Complex shc = sinhc_q(q, z);
  const Complex ch = std::cosh(q * z);

  std::array<Complex, 16> v;
  for (int i = 0; i < 16; ++i) {
    const Complex c1 = num[i].c1 - num[i].c2 * d.b / d.a;
    const Complex c0 = num[i].c0 - num[i].c2 * d.c / d.a;
    v[i] = epz / d.a * ((c1 * pbar + c0) * shc + c1 * ch);
  }
  return pack(v);
}

Mat2 field_delta(double z, const KernelParams& kp) {
  const double a = kp.kappa2 * z;
  return {std::cos(a), -std::sin(a), std::sin(a), std::cos(a)};
}

Mat2 spin_delta(double t, const KernelParams& kp) {
  const double a = kp.omega * t;
  return {std::cos(a), std::sin(a), -std::sin(a), std::cos(a)};
}

namespace {

std::array<Complex, 16> flat(const KernelImages& im) {
  return {im.M.a11, im.M.a12, im.M.a21, im.M.a22, im.N.a11, im.N.a12,
          im.N.a21, im.N.a22, im.F.a11, im.F.a12, im.F.a21, im.F.a22,
          im.G.a11, im.G.a12, im.G.a21, im.G.a22};
}

TimeKernels pack_real(const std::array<double, 16>& v) {
  TimeKernels out;
  out.M = {v[0], v[1], v[2], v[3]};
  out.N = {v[4], v[5], v[6], v[7]};
  out.F = {v[8], v[9], v[10], v[11]};
  out.G = {v[12], v[13], v[14], v[15]};
  return out;
}

double pick_t_scale(double t, const QuadratureConfig& q) {
  if (q.t_scale > 0) return q.t_scale;
  return std::max(t, 1e-12);
}

}  // namespace

TimeKernels kernel_time_domain(double z, double t, const KernelParams& kp,
                               const QuadratureConfig& quad) {
  if (z < 0 || t < 0)
    throw std::domain_error("kernel_time_domain: z, t must be >= 0");
  const double ts = pick_t_scale(t, quad);

  // subtract the temporal-delta coefficient (pure field rotation) from M
  const Mat2 md = field_delta(z, kp);
  std::array<Complex, 16> cinf{};
  cinf[0] = md.a11; cinf[1] = md.a12; cinf[2] = md.a21; cinf[3] = md.a22;

  // jump values lim s*(K - cinf), estimated by Richardson at large real s
  std::array<Complex, 16> jump{};
  if (quad.jump_subtraction) {
    const double s1 = 1e6 / ts, s2 = 2e6 / ts;
    auto v1 = flat(spatial_kernels(z, Complex(s1, 0.0), kp));
    auto v2 = flat(spatial_kernels(z, Complex(s2, 0.0), kp));
    for (int i = 0; i < 16; ++i) {
      jump[i] = 2.0 * s2 * (v2[i] - cinf[i]) - s1 * (v1[i] - cinf[i]);
    }
  }
  const double sigma = 1.0 / ts;

  ImageFn f = [&, z](Complex s) {
    auto v = flat(spatial_kernels(z, s, kp));
    for (int i = 0; i < 16; ++i) v[i] = v[i] - cinf[i] - jump[i] / (s + sigma);
    return v;
  };
  auto res = bromwich_invert(f, t, ts, quad);
  const double ejt = std::exp(-sigma * t);
  for (int i = 0; i < 16; ++i) res.values[i] += jump[i].real() * ejt;
  return pack_real(res.values);
}

TimeKernels kernel_time_integral(double z, double t, const KernelParams& kp,
                                 const QuadratureConfig& quad) {
  if (z < 0 || t < 0)
    throw std::domain_error("kernel_time_integral: z, t must be >= 0");
  const double ts = pick_t_scale(t, quad);
  const Mat2 md = field_delta(z, kp);
  std::array<Complex, 16> cinf{};
  cinf[0] = md.a11; cinf[1] = md.a12; cinf[2] = md.a21; cinf[3] = md.a22;

  ImageFn f = [&, z](Complex s) {
    auto v = flat(spatial_kernels(z, s, kp));
    for (int i = 0; i < 16; ++i) v[i] = (v[i] - cinf[i]) / s;
    return v;
  };
  auto res = bromwich_invert(f, t, ts, quad);
  return pack_real(res.values);
}

TimeKernels kernel_time_domain_2d(double z, double t, const KernelParams& kp,
                                  int nodes_p, int nodes_s, double z_scale,
                                  double t_scale) {
  // plain double damped trapezoid with Lanczos smoothing; slow, cross-check only
  const double Tp_s = 16.0 * std::max(t, t_scale);
  const double Tp_p = 16.0 * std::max(z, z_scale);
  const double s0 = 25.0 / Tp_s, p0 = 25.0 / Tp_p;
  const double hs = units::kTwoPi / Tp_s, hp = units::kTwoPi / Tp_p;

  auto sigma = [](long k, long n) {
    if (k == 0) return 1.0;
    double x = units::kPi * k / (n + 1.0);
    return std::sin(x) / x;
  };

  std::array<Complex, 16> acc{};
  for (long ks = -nodes_s; ks <= nodes_s; ++ks) {
    const Complex s(s0, ks * hs);
    const double ws = sigma(std::abs(ks), nodes_s) * (std::abs(ks) == nodes_s ? 0.5 : 1.0);
    const Complex es = std::exp(s * t);
    for (long kq = -nodes_p; kq <= nodes_p; ++kq) {
      const Complex p(p0, kq * hp);
      const double wp = sigma(std::abs(kq), nodes_p) * (std::abs(kq) == nodes_p ? 0.5 : 1.0);
      auto im = flat(kernel_images(p, s, kp));
      const Complex w = ws * wp * es * std::exp(p * z);
      for (int i = 0; i < 16; ++i) acc[i] += im[i] * w;
    }
  }
  const double scale = hs * hp / (units::kTwoPi * units::kTwoPi);
  std::array<double, 16> out{};
  for (int i = 0; i < 16; ++i) out[i] = (acc[i] * scale).real();
  return pack_real(out);
}

}  // namespace spinlight::kernels
