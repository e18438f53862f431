#include <array>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "zetaspec/error.hpp"
#include "zetaspec/numtheory.hpp"

namespace zetaspec {

namespace {

#include "rs_coefficients.inc"

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// B_{2k} / (2k)!, k = 1..20
constexpr std::array<double, 20> kBernoulliOverFactorial{
    0.083333333333333333333,   -0.0013888888888888888889,  0.000033068783068783068783,
    -8.2671957671957671958e-7, 2.0876756987868098979e-8,   -5.2841901386874931848e-10,
    1.3382536530684678833e-11, -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.174868698558061873e-16, 5.5090028283602295152e-18,  -1.3954464685812523341e-19,
    3.5347070396294674717e-21, -8.9535174270375468504e-23, 2.2679524523376830603e-24,
    -5.7447906688722024453e-26, 1.4551724756148649019e-27, -3.6859949406653101782e-29,
    9.336734257095044672e-31,  -2.3650224157006299346e-32};

// B_{2k} / (2k (2k-1)), k = 1..10, for Stirling's series
constexpr std::array<double, 10> kStirling{
    1.0 / 12.0,      -1.0 / 360.0,          1.0 / 1260.0,       -1.0 / 1680.0,         1.0 / 1188.0,
    -691.0 / 360360.0, 1.0 / 156.0,         -3617.0 / 122400.0, 43867.0 / 244188.0,    -174611.0 / 125400.0};

template <std::size_t N>
double horner(const double (&coeffs)[N], double x) {
  double acc = 0.0;
  for (std::size_t i = N; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

}  // namespace

cplx zeta_euler_maclaurin(cplx s) {
  if (s == cplx(1.0, 0.0)) throw DomainError("zeta: pole at s = 1");
  constexpr int kTerms = static_cast<int>(kBernoulliOverFactorial.size());
  // Correction terms shrink like (|s + 2k| / (2 pi N))^2; keep that ratio below 1/3.
  const double reach = std::abs(s + 2.0 * kTerms);
  const long n_cut = std::max(8L, static_cast<long>(std::ceil(1.5 * reach / kPi)));

  cplx head = 0.0;
  for (long n = n_cut - 1; n >= 1; --n) head += std::exp(-s * std::log(static_cast<double>(n)));

  const double big_n = static_cast<double>(n_cut);
  const cplx n_pow = std::exp(-s * std::log(big_n));  // N^{-s}
  cplx tail = n_pow * big_n / (s - 1.0) + 0.5 * n_pow;
  cplx term = s * n_pow / big_n;
  for (int k = 1; k <= kTerms; ++k) {
    tail += kBernoulliOverFactorial[k - 1] * term;
    term *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k) / (big_n * big_n);
  }
  return head + tail;
}

cplx log_gamma(cplx z) {
  if (!(z.real() > 0.0)) throw DomainError("log_gamma: needs Re z > 0");
  cplx shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi) + series - shift;
}

double siegel_theta(double t) {
  return log_gamma(cplx(0.25, 0.5 * t)).imag() - 0.5 * t * std::log(kPi);
}

double siegel_theta_asymptotic(double t) {
  const double inv = 1.0 / t;
  return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 + inv / 48.0 + 7.0 * inv * inv * inv / 5760.0;
}

double riemann_siegel_z_asymptotic(double t) {
  if (!(t >= kTwoPi)) throw DomainError("riemann_siegel_z_asymptotic: needs t >= 2 pi");
  const double a = std::sqrt(t / kTwoPi);
  const auto n_main = static_cast<long>(std::floor(a));
  const double frac = a - static_cast<double>(n_main);
  const double theta = siegel_theta_asymptotic(t);

  double main = 0.0;
  for (long n = 1; n <= n_main; ++n) {
    const double dn = static_cast<double>(n);
    main += std::cos(theta - t * std::log(dn)) / std::sqrt(dn);
  }

  const double x = frac - 0.5;
  const double w = 1.0 / a;
  const double remainder =
      horner(kRsC0, x) +
      w * (horner(kRsC1, x) + w * (horner(kRsC2, x) + w * (horner(kRsC3, x) + w * horner(kRsC4, x))));
  const double sign = (n_main % 2 == 1) ? 1.0 : -1.0;  // (-1)^{N-1}
  return 2.0 * main + sign * remainder / std::sqrt(a);
}

double riemann_siegel_z(double t, const ZOptions& options) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("riemann_siegel_z: needs finite t >= 0");
  if (t >= options.switch_point && t >= kTwoPi) return riemann_siegel_z_asymptotic(t);
  const cplx rotated = std::polar(1.0, siegel_theta(t)) * zeta_euler_maclaurin(cplx(0.5, t));
  return rotated.real();
}

namespace {

// arg zeta(sigma + iT), continued from sigma = 2 (where Re zeta > 0) down to the critical line.
double critical_line_arg(double t) {
  constexpr double kMaxTurn = kPi / 8.0;
  double sigma = 2.0;
  double step = 1.0 / 32.0;
  cplx prev = zeta_euler_maclaurin(cplx(sigma, t));
  double arg = std::arg(prev);
  while (sigma > 0.5) {
    const double next = std::max(0.5, sigma - step);
    const cplx value = zeta_euler_maclaurin(cplx(next, t));
    const double turn = std::arg(value / prev);
    if (std::abs(turn) > kMaxTurn && step > 1e-9) {
      step *= 0.5;
      continue;
    }
    arg += turn;
    prev = value;
    sigma = next;
    step = std::min(step * 2.0, 1.0 / 16.0);
  }
  return arg;
}

}  // namespace

long zero_count(double t) {
  if (!std::isfinite(t)) throw DomainError("zero_count: needs finite T");
  if (t <= 0.0) return 0;
  return std::lround((siegel_theta(t) + critical_line_arg(t)) / kPi + 1.0);
}

double zero_count_smooth(double t) {
  const double u = t / kTwoPi;
  return u * std::log(u) - u + 7.0 / 8.0;
}

}  // namespace zetaspec
