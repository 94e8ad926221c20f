#include <cmath>
#include <random>

#include "critlab/field.hpp"
#include "critlab/spectral.hpp"
#include "doctest.h"

using namespace critlab;
namespace sp = critlab::spectral;

namespace {

Field random_field(const Grid& g, std::uint64_t seed, double amp = 1.0) {
  std::mt19937_64 rng(seed);
  std::vector<double> s(g.size());
  for (auto& v : s) v = amp * (2.0 * double(rng() >> 11) * 0x1p-53 - 1.0);
  return Field::from_samples(g, std::move(s));
}

}  // namespace

TEST_CASE("grid invariants") {
  CHECK_THROWS(Grid(1, 12, 1.0));   // not a power of two
  CHECK_THROWS(Grid(1, 4, 1.0));    // too small
  CHECK_THROWS(Grid(1, 64, -1.0));  // bad half-period
  CHECK_THROWS(Grid(3, 64, 1.0));   // bad dim

  Grid g(1, 64, 2.0);
  CHECK(g.dx() == doctest::Approx(4.0 / 64));
  CHECK(g.freq(0) == 0.0);
  CHECK(g.freq(1) == doctest::Approx(M_PI / 2.0));
  CHECK(g.freq(63) == doctest::Approx(-M_PI / 2.0));
  CHECK(g.mode(32) == -32);
}

TEST_CASE("transform of constant concentrates at xi=0") {
  Grid g(1, 64, 3.0);
  Field f = Field::sample(g, [](double) { return 1.0; });
  const auto& c = f.spectrum();
  CHECK(c[0].real() == doctest::Approx(64.0));
  for (std::size_t k = 1; k < c.size(); ++k) CHECK(std::abs(c[k]) < 1e-12 * 64);
}

TEST_CASE("pure mode sin(pi x / L) has exactly two spectral lines") {
  Grid g(1, 128, 5.0);
  Field f = Field::sample(g, [&](double x) { return std::sin(M_PI * x / g.L); });
  const auto& c = f.spectrum();
  int nonzero = 0;
  for (int k = 0; k < g.n; ++k)
    if (std::abs(c[k]) > 1e-9 * g.n) ++nonzero;
  CHECK(nonzero == 2);
  CHECK(std::abs(c[1] - std::complex<double>(0.0, -64.0)) < 1e-9);
  CHECK(std::abs(c[g.n - 1] - std::complex<double>(0.0, 64.0)) < 1e-9);
}

TEST_CASE("round-trip physical -> spectral -> physical") {
  for (int dim : {1, 2}) {
    Grid g(dim, dim == 1 ? 1024 : 64, 2.5);
    Field f = random_field(g, 7);
    Field back = Field::from_spectrum(g, f.spectrum());
    double err = 0.0;
    for (std::size_t i = 0; i < f.samples().size(); ++i)
      err = std::max(err, std::abs(f.samples()[i] - back.samples()[i]));
    CHECK(err <= 1e-12 * f.max_abs());
  }
}

TEST_CASE("non-finite samples are rejected") {
  Grid g(1, 16, 1.0);
  std::vector<double> s(16, 0.0);
  s[3] = std::nan("");
  CHECK_THROWS(Field::from_samples(g, s));
}

TEST_CASE("multiplier: identity, |xi| eigenfunction, derivative") {
  Grid g(1, 256, M_PI);  // integer frequencies
  const int k = 5;
  Field s = Field::sample(g, [&](double x) { return std::sin(k * x); });
  Field c = Field::sample(g, [&](double x) { return std::cos(k * x); });

  auto one = sp::make_radial_multiplier(g, [](double) { return 1.0; });
  Field id = sp::apply_multiplier(s, one);
  CHECK((id - s).max_abs() < 1e-13);

  auto lam = sp::make_radial_multiplier(g, [](double a) { return a; });
  Field ls = sp::apply_multiplier(s, lam);
  CHECK((ls - double(k) * s).max_abs() < 1e-10 * k);

  auto ddx = sp::make_multiplier(g, [](double fx, double) { return std::complex<double>(0.0, fx); });
  Field dc = sp::apply_multiplier(c, ddx);
  Field expect = double(-k) * s;
  CHECK((dc - expect).max_abs() < 1e-10 * k);
}

TEST_CASE("multiplier composition equals product multiplier exactly") {
  Grid g(1, 512, 2.0);
  Field f = random_field(g, 11);
  auto m1 = sp::make_radial_multiplier(g, [](double a) { return std::exp(-0.3 * a); });
  auto m2 = sp::make_radial_multiplier(g, [](double a) { return 1.0 / (1.0 + a * a); });
  sp::mvec m12(m1.size());
  for (std::size_t i = 0; i < m1.size(); ++i) m12[i] = m1[i] * m2[i];

  auto once = sp::apply_multiplier_spec(g, f.spectrum(), m12);
  auto twice = sp::apply_multiplier_spec(g, sp::apply_multiplier_spec(g, f.spectrum(), m2), m1);
  for (std::size_t i = 0; i < once.size(); ++i) CHECK(once[i] == twice[i]);  // bitwise
}

TEST_CASE("conjugate-symmetry check rejects complex-output multipliers") {
  Grid g(1, 64, 1.0);
  Field f = random_field(g, 3);
  auto bad = sp::make_multiplier(g, [](double fx, double) {
    return std::complex<double>(0.0, fx >= 0 ? 1.0 : 1.0);  // not odd in xi
  });
  CHECK_THROWS(sp::apply_multiplier(f, bad));
  auto good = sp::make_multiplier(g, [](double fx, double) {
    return std::complex<double>(0.0, fx);
  });
  CHECK_THROWS(sp::apply_multiplier(f, good));  // random field has Nyquist content
  Field fd = sp::dealias(f);
  CHECK_NOTHROW(sp::apply_multiplier(fd, good));  // Nyquist empty -> fine
}

TEST_CASE("realness: conjugate-symmetric multiplier keeps fields real") {
  Grid g(2, 32, 1.5);
  Field f = sp::dealias(random_field(g, 21));  // clear the self-paired Nyquist lines
  auto m = sp::make_multiplier(g, [](double fx, double fy) {
    return std::complex<double>(std::cos(fx + fy), std::sin(fx) + std::sin(fy));
  });
  // imaginary residual is checked inside from_spectrum via inverse_real
  CHECK_NOTHROW(sp::apply_multiplier(f, m));
}

TEST_CASE("dealias: band-limited fields pass through, high modes die") {
  Grid g(1, 128, M_PI);
  Field low = Field::sample(g, [](double x) { return std::cos(7 * x); });
  CHECK((sp::dealias(low) - low).max_abs() < 1e-13);

  const int hi = 128 / 2 - 1;
  Field top = Field::sample(g, [&](double x) { return std::cos(hi * x); });
  CHECK(sp::dealias(top).max_abs() < 1e-13);
}

TEST_CASE("dealiased product equals exact product projected to the band") {
  Grid g(1, 256, M_PI);
  // two band-limited fields with support inside |k| <= n/3
  Field a = random_field(g, 100);
  Field b = random_field(g, 101);
  a = sp::dealias(a);
  b = sp::dealias(b);

  std::vector<double> prod(g.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a.samples()[i] * b.samples()[i];
  Field grid_prod = sp::dealias(Field::from_samples(g, prod));

  // oracle: zero-padded transform product (no aliasing), then project back
  Grid g2(1, 512, M_PI);
  auto pad = [&](const Field& f) {
    fft::cvec big(g2.size(), 0.0);
    for (int k = 0; k < g.n; ++k) {
      int m = g.mode(k);
      big[(m + g2.n) % g2.n] = f.spectrum()[k] * 2.0;  // forward scale ratio n2/n
    }
    return Field::from_spectrum(g2, big);
  };
  Field A = pad(a), B = pad(b);
  std::vector<double> prod2(g2.size());
  for (std::size_t i = 0; i < prod2.size(); ++i) prod2[i] = A.samples()[i] * B.samples()[i];
  Field exact_big = Field::from_samples(g2, prod2);
  fft::cvec down(g.size(), 0.0);
  for (int k = 0; k < g.n; ++k) {
    int m = g.mode(k);
    down[k] = exact_big.spectrum()[(m + g2.n) % g2.n] * 0.5;
  }
  Grid gg = g;
  Field exact = Field::from_spectrum(gg, down);
  exact = sp::dealias(exact);

  CHECK((grid_prod - exact).max_abs() < 1e-12 * std::max(1.0, exact.max_abs()));
}

TEST_CASE("lp norms: constant, sine max, gaussian quadrature") {
  Grid g(1, 512, 4.0);
  Field one = Field::sample(g, [](double) { return 1.0; });
  CHECK(sp::lp_norm(one, 1.0) == doctest::Approx(2 * g.L).epsilon(1e-12));

  Field s = Field::sample(g, [&](double x) { return std::sin(M_PI * x / g.L); });
  CHECK(sp::lp_norm(s, sp::kInf) == doctest::Approx(1.0).epsilon(1e-4));

  Grid gg(1, 4096, 20.0);
  Field gauss = Field::sample(gg, [](double x) { return std::exp(-x * x); });
  // integral of exp(-2x^2) is sqrt(pi/2)
  CHECK(sp::lp_norm(gauss, 2.0) == doctest::Approx(std::pow(M_PI / 2.0, 0.25)).epsilon(1e-10));
}

TEST_CASE("Parseval ties the normalization down") {
  for (int dim : {1, 2}) {
    Grid g(dim, dim == 1 ? 2048 : 64, 3.0);
    Field f = random_field(g, 31);
    double phys = sp::lp_norm(f, 2.0);
    double spec = sp::parseval_l2(g, f.spectrum());
    CHECK(std::abs(phys - spec) <= 1e-10 * phys);
  }
}

TEST_CASE("integral equals mode-0 quadrature") {
  Grid g(1, 256, 7.0);
  Field f = Field::sample(g, [](double x) { return std::exp(-x * x) + 0.25; });
  double direct = 0.0;
  for (double v : f.samples()) direct += v * g.dx();
  CHECK(sp::integral(f) == doctest::Approx(direct).epsilon(1e-13));
}
