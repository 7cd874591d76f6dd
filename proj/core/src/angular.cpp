#include <spinlight/angular.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace spinlight {

HalfInt HalfInt::from_double(double j) {
  double t = 2.0 * j;
  double r = std::round(t);
  if (std::abs(t - r) > 1e-9) {
    throw std::invalid_argument("not a half-integer: " + std::to_string(j));
  }
  return HalfInt(static_cast<int>(r));
}

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace angular {

namespace {

// sized for 2j_max = 200: the largest factorial argument in the Racah
// sums is below 2*(2j_max) + 2
constexpr int kTableSize = 1024;

const std::vector<double>& ln_fact_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kTableSize);
    t[0] = 0.0;
    for (int n = 1; n < kTableSize; ++n) t[n] = t[n - 1] + std::log(double(n));
    return t;
  }();
  return table;
}

// ln of the triangle coefficient Delta(abc), arguments doubled
double ln_triangle_coeff(int ta, int tb, int tc) {
  return ln_factorial((ta + tb - tc) / 2) + ln_factorial((ta - tb + tc) / 2) +
         ln_factorial((-ta + tb + tc) / 2) - ln_factorial((ta + tb + tc) / 2 + 1);
}

void require_valid(HalfInt j, HalfInt m, const char* what) {
  if (!valid_projection(j, m)) {
    throw std::invalid_argument(std::string(what) + ": projection " + m.str() +
                                " invalid for momentum " + j.str());
  }
}

}  // namespace

double ln_factorial(int n) {
  if (n < 0) throw std::invalid_argument("ln_factorial of negative argument");
  const auto& t = ln_fact_table();
  if (n < kTableSize) return t[n];
  return std::lgamma(double(n) + 1.0);
}

double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3,
                 HalfInt m1, HalfInt m2, HalfInt m3) {
  require_valid(j1, m1, "wigner_3j");
  require_valid(j2, m2, "wigner_3j");
  require_valid(j3, m3, "wigner_3j");

  if (m1.twice() + m2.twice() + m3.twice() != 0) return 0.0;
  if (!triangle(j1, j2, j3)) return 0.0;

  const int tj1 = j1.twice(), tj2 = j2.twice(), tj3 = j3.twice();
  const int tm1 = m1.twice(), tm2 = m2.twice(), tm3 = m3.twice();

  const double ln_pre =
      0.5 * (ln_triangle_coeff(tj1, tj2, tj3) +
             ln_factorial((tj1 + tm1) / 2) + ln_factorial((tj1 - tm1) / 2) +
             ln_factorial((tj2 + tm2) / 2) + ln_factorial((tj2 - tm2) / 2) +
             ln_factorial((tj3 + tm3) / 2) + ln_factorial((tj3 - tm3) / 2));

  // Racah sum over k with all factorial arguments non-negative
  const int a1 = (tj1 + tj2 - tj3) / 2;   // j1+j2-j3
  const int a2 = (tj1 - tm1) / 2;         // j1-m1
  const int a3 = (tj2 + tm2) / 2;         // j2+m2
  const int b1 = (tj3 - tj2 + tm1) / 2;   // j3-j2+m1
  const int b2 = (tj3 - tj1 - tm2) / 2;   // j3-j1-m2

  const int kmin = std::max({0, -b1, -b2});
  const int kmax = std::min({a1, a2, a3});

  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    double ln_den = ln_factorial(k) + ln_factorial(a1 - k) + ln_factorial(a2 - k) +
                    ln_factorial(a3 - k) + ln_factorial(b1 + k) + ln_factorial(b2 + k);
    double term = std::exp(ln_pre - ln_den);
    sum += (k % 2 == 0) ? term : -term;
  }

  const int phase_exp = (tj1 - tj2 - tm3) / 2;
  return (phase_exp % 2 == 0) ? sum : -sum;
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                      HalfInt J, HalfInt M) {
  require_valid(j1, m1, "clebsch_gordan");
  require_valid(j2, m2, "clebsch_gordan");
  require_valid(J, M, "clebsch_gordan");

  if (m1.twice() + m2.twice() != M.twice()) return 0.0;
  if (!triangle(j1, j2, J)) return 0.0;

  double w = wigner_3j(j1, j2, J, m1, m2, -M);
  const int phase_exp = (j1.twice() - j2.twice() + M.twice()) / 2;
  double sign = (phase_exp % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sqrt(double(J.twice()) + 1.0) * w;
}

double wigner_6j(HalfInt a, HalfInt b, HalfInt c,
                 HalfInt d, HalfInt e, HalfInt f) {
  if (a.twice() < 0 || b.twice() < 0 || c.twice() < 0 ||
      d.twice() < 0 || e.twice() < 0 || f.twice() < 0) {
    throw std::invalid_argument("wigner_6j: negative momentum");
  }
  if (!triangle(a, b, c) || !triangle(a, e, f) ||
      !triangle(d, b, f) || !triangle(d, e, c)) {
    return 0.0;
  }

  const int ta = a.twice(), tb = b.twice(), tc = c.twice();
  const int td = d.twice(), te = e.twice(), tf = f.twice();

  const double ln_pre =
      0.5 * (ln_triangle_coeff(ta, tb, tc) + ln_triangle_coeff(ta, te, tf) +
             ln_triangle_coeff(td, tb, tf) + ln_triangle_coeff(td, te, tc));

  const int s_abc = (ta + tb + tc) / 2;
  const int s_aef = (ta + te + tf) / 2;
  const int s_dbf = (td + tb + tf) / 2;
  const int s_dec = (td + te + tc) / 2;
  const int q_abde = (ta + tb + td + te) / 2;
  const int q_bcef = (tb + tc + te + tf) / 2;
  const int q_acdf = (ta + tc + td + tf) / 2;

  const int tmin = std::max({s_abc, s_aef, s_dbf, s_dec});
  const int tmax = std::min({q_abde, q_bcef, q_acdf});

  double sum = 0.0;
  for (int t = tmin; t <= tmax; ++t) {
    double ln_num = ln_factorial(t + 1);
    double ln_den = ln_factorial(t - s_abc) + ln_factorial(t - s_aef) +
                    ln_factorial(t - s_dbf) + ln_factorial(t - s_dec) +
                    ln_factorial(q_abde - t) + ln_factorial(q_bcef - t) +
                    ln_factorial(q_acdf - t);
    double term = std::exp(ln_pre + ln_num - ln_den);
    sum += (t % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace angular
}  // namespace spinlight
