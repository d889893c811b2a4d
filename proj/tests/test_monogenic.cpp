#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "octo/monogenic.hpp"

using octo::DomainSpec;
using octo::Octonion;
using Catch::Approx;

namespace {

Octonion e(std::size_t i) { return Octonion::unit(i); }

Octonion random_direction(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Octonion x;
  for (std::size_t i = 0; i < 8; ++i) x[i] = g(rng);
  return x / norm(x);
}

Octonion random_in_ball(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return random_direction(rng) * (radius * u(rng));
}

// Re in (lo, hi), imaginary part of norm <= im.
Octonion random_slab(std::mt19937_64& rng, double lo, double hi, double im) {
  std::uniform_real_distribution<double> u(lo, hi);
  Octonion x = random_in_ball(rng, im).imag();
  x[0] = u(rng);
  return x;
}

}  // namespace

TEST_CASE("domain descriptors", "[monogenic]") {
  CHECK(DomainSpec::ball().contains(0.5 * e(3)));
  CHECK(!DomainSpec::ball().contains(e(3)));
  CHECK(DomainSpec::halfspace().contains(0.1 + 5.0 * e(2)));
  CHECK(!DomainSpec::halfspace().contains(-0.1 + e(2)));
  const auto strip = DomainSpec::strip(2.0);
  CHECK(strip.contains(Octonion(1.9)));
  CHECK(!strip.contains(Octonion(2.0)));
  CHECK(strip.terms == 50);
  CHECK_THROWS_AS(DomainSpec::strip(0.0), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::strip(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec::strip(1.0, 0), std::invalid_argument);
}

TEST_CASE("finite-difference Cauchy-Riemann operator", "[monogenic]") {
  std::mt19937_64 rng(1);
  const Octonion c = random_direction(rng);
  CHECK(norm(octo::cr_apply_fd([&](const Octonion&) { return c; }, random_direction(rng))) <= 1e-12);
  // D x = 1 + sum e_i e_i = -6
  CHECK(distance(octo::cr_apply_fd([](const Octonion& x) { return x; }, 0.3 * e(2)), Octonion(-6.0)) <= 1e-9);
  const Octonion p = 2.0 * e(1);
  for (int k = 0; k < 20; ++k) {
    const Octonion x = random_in_ball(rng, 0.5);
    CHECK(norm(octo::cr_apply_fd([&](const Octonion& y) { return octo::cauchy_kernel(y - p); }, x)) <= 1e-6);
  }
}

TEST_CASE("Cauchy kernel", "[monogenic]") {
  CHECK(octo::cauchy_kernel(e(1)) == -e(1));
  CHECK(octo::cauchy_kernel(Octonion(2.0)) == Octonion(1.0 / 128.0));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    const Octonion x = random_direction(rng) * (0.2 + k * 0.01);
    CHECK(norm(octo::cauchy_kernel(x)) == Approx(std::pow(norm(x), -7.0)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(octo::cauchy_kernel(Octonion(0.0)), octo::Singularity);
  CHECK_THROWS_AS(octo::cauchy_kernel(Octonion(1e-13)), octo::Singularity);
  try {
    octo::cauchy_kernel(Octonion(0.0));
  } catch (const octo::Singularity& s) {
    CHECK(s.set() == "x = 0");
  }
}

TEST_CASE("Szegő kernels", "[monogenic]") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const Octonion y = random_in_ball(rng, 0.99);
    CHECK(octo::szego_kernel(DomainSpec::ball(), 0.0, y) == Octonion(1.0));
  }
  CHECK(octo::szego_kernel(DomainSpec::halfspace(), 1.0, 1.0) == Octonion(1.0 / 128.0));
  CHECK_THROWS_AS(octo::szego_kernel(DomainSpec::ball(), 1.0, 1.0), octo::Singularity);
  CHECK_THROWS_AS(octo::szego_kernel(DomainSpec::halfspace(), e(1), e(1)), octo::Singularity);
  CHECK_THROWS_AS(octo::szego_kernel(DomainSpec::strip(1.0), Octonion(1.0), Octonion(1.0)), octo::Singularity);
}

TEST_CASE("Bergman kernels", "[monogenic]") {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 20; ++k) {
    const Octonion y = random_in_ball(rng, 0.99);
    CHECK(distance(octo::bergman_kernel(DomainSpec::ball(), 0.0, y), Octonion(8.0)) <= 1e-14);
    CHECK(distance(octo::bergman_kernel(DomainSpec::ball(), 0.0, y, octo::BergmanBallVariant::octonion_factor),
                   Octonion(8.0)) <= 1e-14);
  }
}

TEST_CASE("half-space Bergman kernel is -2 d/dx0 of the Szegő expression", "[monogenic]") {
  std::mt19937_64 rng(5);
  const double h = 1e-5;
  for (int k = 0; k < 100; ++k) {
    const Octonion x = random_slab(rng, 0.3, 1.5, 0.8), y = random_slab(rng, 0.3, 1.5, 0.8);
    auto s = [&](double shift) {
      const Octonion v = conjugate(x + shift) + y;
      return v / std::pow(norm_sq(v), 4);
    };
    const Octonion fd = -2.0 * (s(h) - s(-h)) / (2.0 * h);
    const Octonion closed = octo::bergman_kernel(DomainSpec::halfspace(), x, y);
    CHECK(distance(fd, closed) <= 1e-6 * std::max(1.0, norm(closed)));
  }
}

TEST_CASE("Hermitian symmetry of the monogenic kernels", "[monogenic][property]") {
  std::mt19937_64 rng(6);
  const auto ball = DomainSpec::ball(), half = DomainSpec::halfspace(), strip = DomainSpec::strip(1.0);
  for (int k = 0; k < 1000; ++k) {
    const Octonion xb = random_in_ball(rng, 0.95), yb = random_in_ball(rng, 0.95);
    const Octonion xh = random_slab(rng, 0.05, 3.0, 2.0), yh = random_slab(rng, 0.05, 3.0, 2.0);
    const Octonion xs = random_slab(rng, 0.05, 0.95, 1.0), ys = random_slab(rng, 0.05, 0.95, 1.0);
    auto herm = [](auto kernel, const Octonion& a, const Octonion& b) {
      const Octonion kab = kernel(a, b);
      return distance(conjugate(kab), kernel(b, a)) / std::max(1.0, norm(kab));
    };
    REQUIRE(herm([&](auto a, auto b) { return octo::szego_kernel(ball, a, b); }, xb, yb) <= 1e-12);
    REQUIRE(herm([&](auto a, auto b) { return octo::bergman_kernel(ball, a, b); }, xb, yb) <= 1e-12);
    REQUIRE(herm([&](auto a, auto b) { return octo::szego_kernel(half, a, b); }, xh, yh) <= 1e-12);
    REQUIRE(herm([&](auto a, auto b) { return octo::bergman_kernel(half, a, b); }, xh, yh) <= 1e-12);
    REQUIRE(herm([&](auto a, auto b) { return octo::szego_kernel(strip, a, b); }, xs, ys) <= 1e-12);
    REQUIRE(herm([&](auto a, auto b) { return octo::bergman_kernel(strip, a, b); }, xs, ys) <= 1e-12);
  }
}

TEST_CASE("the octonion-factor ball Bergman kernel is not Hermitian", "[monogenic]") {
  const Octonion x = 0.3 * e(1) + 0.2 * e(5), y = 0.4 * e(2) - 0.1;
  const auto v = octo::BergmanBallVariant::octonion_factor;
  const Octonion kxy = octo::bergman_kernel(DomainSpec::ball(), x, y, v);
  CHECK(distance(conjugate(kxy), octo::bergman_kernel(DomainSpec::ball(), y, x, v)) > 1e-3);
}

TEST_CASE("kernels are left monogenic in the first variable", "[monogenic][property]") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const Octonion x = random_direction(rng) * (1.5 + 1.5 * (k / 50.0));
    CHECK(norm(octo::cr_apply_fd([](const Octonion& z) { return octo::cauchy_kernel(z); }, x)) <= 1e-6);

    const Octonion y = random_in_ball(rng, 0.5);
    const Octonion xb = random_in_ball(rng, 0.5);
    CHECK(norm(octo::cr_apply_fd([&](const Octonion& z) { return octo::szego_kernel(DomainSpec::ball(), z, y); },
                                 xb)) <= 1e-6);

    const Octonion xh = random_slab(rng, 0.5, 1.5, 0.5), yh = random_slab(rng, 0.5, 1.5, 0.5);
    CHECK(norm(octo::cr_apply_fd([&](const Octonion& z) { return octo::szego_kernel(DomainSpec::halfspace(), z, yh); },
                                 xh)) <= 1e-6);
  }
}

TEST_CASE("weight factor", "[monogenic]") {
  CHECK(octo::weight_factor(DomainSpec::ball(), 0.5 * e(3)) == e(3));
  CHECK(octo::weight_factor(DomainSpec::ball(), 0.0) == Octonion(0.0));
  CHECK(octo::weight_factor(DomainSpec::halfspace(), 0.2 + e(4)) == Octonion(1.0));
  const auto strip = DomainSpec::strip(1.0);
  CHECK(octo::weight_factor(strip, 0.2 + e(1)) == Octonion(-1.0));
  CHECK(octo::weight_factor(strip, 0.7) == Octonion(1.0));
  CHECK(octo::weight_factor(strip, 0.5 + e(6)) == Octonion(0.0));
  CHECK_THROWS_AS(octo::weight_factor(DomainSpec::ball(), e(3)), octo::OutsideDomain);
  CHECK_THROWS_AS(octo::weight_factor(DomainSpec::halfspace(), Octonion(-1.0)), octo::OutsideDomain);
  CHECK_THROWS_AS(octo::weight_factor(strip, Octonion(1.2)), octo::OutsideDomain);

  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const Octonion w = octo::weight_factor(DomainSpec::ball(), random_in_ball(rng, 0.99));
    CHECK(norm(w) == Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("weighted integrands are invariant under a sign flip of the weight", "[monogenic][property]") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 500; ++k) {
    const Octonion x = random_in_ball(rng, 0.99);
    const Octonion w = octo::weight_factor(DomainSpec::ball(), x);
    const Octonion f = random_direction(rng) * 2.0, g = random_direction(rng);
    REQUIRE(conjugate(w * g) * (w * f) == conjugate((-w) * g) * ((-w) * f));
  }
}

TEST_CASE("strip series tails decrease", "[monogenic][strip]") {
  const Octonion x = 0.3 + 0.2 * e(1) + 0.1 * e(6), y = 0.6 - 0.3 * e(4);
  for (auto family : {octo::StripFamily::szego, octo::StripFamily::bergman}) {
    double prev = 1e300;
    for (std::uint32_t n : {5u, 10u, 20u, 40u, 80u}) {
      const double tail = octo::strip_tail_estimate(family, DomainSpec::strip(1.0, n), x, y);
      CHECK(tail < prev);
      prev = tail;
    }
    CHECK(prev < 1e-9);
  }
  CHECK_THROWS_AS(octo::strip_tail_estimate(octo::StripFamily::szego, DomainSpec::ball(), x, y), std::invalid_argument);
}

TEST_CASE("wide strips approach the half-space kernels", "[monogenic][strip]") {
  const Octonion x = 0.3 + 0.2 * e(1), y = 0.4 - 0.3 * e(4);
  const auto strip = DomainSpec::strip(1000.0);
  const Octonion s = octo::szego_kernel(DomainSpec::halfspace(), x, y);
  const Octonion b = octo::bergman_kernel(DomainSpec::halfspace(), x, y);
  CHECK(distance(octo::szego_kernel(strip, x, y), s) <= 1e-6 * norm(s));
  CHECK(distance(octo::bergman_kernel(strip, x, y), b) <= 1e-6 * norm(b));
}

TEST_CASE("Cauchy integral by Monte Carlo", "[monogenic][mc]") {
  const octo::SphereSampler sampler({200'000, 7, 0, 0});
  SECTION("constant e1 at the origin") {
    const auto r = octo::cauchy_integral_mc([](const Octonion&) { return e(1); }, 0.0, sampler);
    CHECK(distance(r.value, e(1)) <= 1e-12);
  }
  SECTION("constant 1 off the origin") {
    const auto r = octo::cauchy_integral_mc([](const Octonion&) { return Octonion(1.0); }, 0.3 * e(2), sampler);
    CHECK(distance(r.value, Octonion(1.0)) <= std::max(4 * r.std_error, 0.02));
  }
  SECTION("shifted Cauchy kernel") {
    auto f = [](const Octonion& y) { return octo::cauchy_kernel(y - 2.0 * e(1)); };
    const Octonion x = 0.2 * e(5);
    const auto r = octo::cauchy_integral_mc(f, x, sampler);
    CHECK(distance(r.value, f(x)) <= std::max(4 * r.std_error, 0.02 * norm(f(x))));
  }
}

TEST_CASE("mean value property by Monte Carlo", "[monogenic][mc]") {
  const octo::BallSampler sampler({200'000, 11, 0, 0});
  const Octonion c = 1.0 - 2.0 * e(7);
  for (double r : {0.2, 0.5}) {
    const auto m = octo::mean_value_mc([&](const Octonion&) { return c; }, 0.0, r, sampler);
    CHECK(distance(m.value, c) <= 1e-13);
    CHECK(m.std_error == 0.0);
  }
  auto f = [](const Octonion& y) { return octo::cauchy_kernel(y - 2.0); };
  const auto m = octo::mean_value_mc(f, 0.0, 0.5, sampler);
  CHECK(distance(m.value, Octonion(-1.0 / 128.0)) <= 4 * m.std_error);
}
