#include <doctest.h>

#include <numbers>

#include "fpj/errors.hpp"
#include "fpj/hadamard.hpp"
#include "fpj/jacobi.hpp"
#include "support.hpp"

using fpj::Complex;
using fpj::DensePoly;
using fpj::JacobiParams;
using fpj::test::poly_rel_diff;
using fpj::test::rel_err;

namespace {

DensePoly ode_image(const JacobiParams& p, const DensePoly& pn, std::size_t n) {
  const Complex a = p.alpha(), b = p.beta();
  const DensePoly q{0.0, 1.0, -1.0};
  const DensePoly drift{a + 1.0, -(a + 1.0) - (b + 1.0)};
  const double nd = static_cast<double>(n);
  return q * fpj::derivative(pn, 2) + drift * fpj::derivative(pn) + pn * (nd * (nd + a + b + 1.0));
}

}  // namespace

TEST_SUITE("jacobi_basis") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(JacobiParams(-1.0, 0.5), fpj::InvalidParameters);
    CHECK_THROWS_AS(JacobiParams(0.5, -3.0), fpj::InvalidParameters);
    CHECK_THROWS_AS(JacobiParams(-0.5, -1.5), fpj::InvalidParameters);  // alpha + beta = -2
    CHECK_THROWS_AS(JacobiParams({-1.0, 1e-11}, 0.5), fpj::InvalidParameters);
    CHECK_NOTHROW(JacobiParams({-1.0, 1e-6}, 0.5));
    CHECK_NOTHROW(JacobiParams(0.0, 0.0));
    CHECK_THROWS_AS(JacobiParams(0.0, 0.5, fpj::ParamMode::strict), fpj::InvalidParameters);
    CHECK_THROWS_AS(JacobiParams(0.5, 0.0, fpj::ParamMode::strict), fpj::InvalidParameters);
    CHECK(JacobiParams(-0.5, 2.0).classical());
    CHECK_FALSE(JacobiParams(-1.5, 2.0).classical());
  }

  TEST_CASE("rodrigues examples") {
    const JacobiParams p({-1.5, 0.3}, {0.7, -0.2});
    CHECK(fpj::jacobi_rodrigues(p, 0) == DensePoly{1.0});
    const DensePoly p1 = fpj::jacobi_rodrigues(p, 1);
    CHECK(poly_rel_diff(p1, DensePoly{p.alpha() + 1.0, -(p.alpha() + p.beta() + 2.0)}) <= 1e-15);
    CHECK(fpj::jacobi_rodrigues(JacobiParams(0.0, 0.0), 2) == DensePoly{2.0, -12.0, 12.0});
  }

  TEST_CASE("recurrence examples") {
    const JacobiParams legendre(0.0, 0.0);
    CHECK(fpj::jacobi_via_recurrence(JacobiParams(0.4, 1.1), 0) == DensePoly{1.0});
    CHECK(poly_rel_diff(fpj::jacobi_via_recurrence(legendre, 1), DensePoly{1.0, -2.0}) <= 1e-15);
    CHECK(poly_rel_diff(fpj::jacobi_via_recurrence(legendre, 2), DensePoly{2.0, -12.0, 12.0}) <= 1e-15);
  }

  TEST_CASE("degree cap") {
    const JacobiParams p(0.3, 0.4);
    CHECK_THROWS_AS(fpj::jacobi_rodrigues(p, 41), fpj::DegreeCapExceeded);
    CHECK_THROWS_AS(fpj::JacobiBasis(p, 12, 10), fpj::DegreeCapExceeded);
    CHECK_NOTHROW(fpj::jacobi_rodrigues(p, 41, 50));
  }

  TEST_CASE("norm examples") {
    CHECK(rel_err(fpj::norm_an(JacobiParams(0.0, 0.0), 0), 1.0) <= 1e-15);
    CHECK(rel_err(fpj::norm_an(JacobiParams(0.0, 0.0), 1), 1.0 / 3.0) <= 1e-15);
    CHECK(rel_err(fpj::norm_an(JacobiParams(-0.5, -0.5), 1), std::numbers::pi / 8.0) <= 1e-14);
    for (const auto& [a, b] : fpj::test::parameter_pairs()) {
      const JacobiParams p(a, b);
      CHECK(rel_err(fpj::norm_an(p, 0), fpj::beta_fp(a + 1.0, b + 1.0)) <= 1e-14);
    }
  }

  TEST_CASE("norm matches the Gamma form") {
    for (const auto& [a, b] : fpj::test::parameter_pairs()) {
      const JacobiParams p(a, b);
      for (std::size_t n = 1; n <= 30; n += 7) {
        const double nd = static_cast<double>(n);
        const Complex s = a + b;
        if (fpj::near_nonpositive_integer(nd + s + 1.0)) continue;
        const Complex log_value = fpj::log_gamma(nd + 1.0) + fpj::log_gamma(nd + a + 1.0) +
                                  fpj::log_gamma(nd + b + 1.0) - fpj::log_gamma(nd + s + 1.0);
        const Complex want = std::exp(log_value) / (2.0 * nd + s + 1.0);
        CAPTURE(a);
        CAPTURE(n);
        CHECK(rel_err(fpj::norm_an(p, n), want) <= 1e-11);
      }
    }
  }

  TEST_CASE("gram entry examples") {
    const JacobiParams p({-1.5, 0.3}, -2.4);
    const fpj::JacobiBasis basis(p, 3);
    CHECK(rel_err(basis.gram_entry(0, 0), fpj::beta_fp(p.alpha() + 1.0, p.beta() + 1.0)) <= 1e-13);
    CHECK(std::abs(basis.gram_entry(0, 1)) <= 1e-10 * std::sqrt(std::abs(basis.norm(0) * basis.norm(1))));
    const fpj::JacobiBasis chebyshev(JacobiParams(-0.5, -0.5), 2);
    CHECK(rel_err(chebyshev.gram_entry(1, 1), std::numbers::pi / 8.0) <= 1e-14);
  }

  TEST_CASE("gram diagonality") {
    for (const auto& [a, b] : fpj::test::parameter_pairs()) {
      const fpj::JacobiBasis basis(JacobiParams(a, b), 15);
      for (std::size_t n = 0; n <= 15; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          const Complex g = basis.gram_entry(n, k);
          if (n == k) {
            CHECK(rel_err(g, basis.norm(n)) <= 1e-9);
          } else {
            CHECK(std::abs(g) <= 1e-9 * std::sqrt(std::abs(basis.norm(n) * basis.norm(k))));
          }
        }
      }
    }
  }

  TEST_CASE("classical gram matches quadrature") {
    for (const auto& [a, b] : fpj::test::parameter_pairs()) {
      const JacobiParams p(a, b);
      if (!p.classical()) continue;
      const fpj::JacobiBasis basis(p, 6);
      for (std::size_t n = 0; n <= 6; ++n) {
        for (std::size_t k = 0; k <= n; k += 2) {
          const Complex q = fpj::test::weighted_quadrature(
              [&](double x) { return basis.evaluate(n, x) * basis.evaluate(k, x); }, a, b);
          CHECK(std::abs(q - basis.gram_entry(n, k)) <= 1e-8 * std::sqrt(std::abs(basis.norm(n) * basis.norm(k))));
        }
      }
    }
  }

  TEST_CASE("dual construction") {
    for (const auto& [a, b] : fpj::test::parameter_pairs()) {
      const JacobiParams p(a, b);
      for (std::size_t n = 0; n <= 15; ++n) {
        CAPTURE(a);
        CAPTURE(n);
        CHECK(poly_rel_diff(fpj::jacobi_rodrigues(p, n), fpj::jacobi_via_recurrence(p, n)) <= 1e-10);
      }
    }
  }

  TEST_CASE("leading coefficient") {
    for (const auto& [a, b] : fpj::test::parameter_pairs()) {
      const JacobiParams p(a, b);
      for (std::size_t n = 0; n <= 20; ++n) {
        const Complex want = (n % 2 ? -1.0 : 1.0) * fpj::pochhammer(static_cast<double>(n) + a + b + 1.0, n);
        CHECK(rel_err(fpj::leading_coefficient(p, n), want) <= 1e-11);
        CHECK(rel_err(fpj::jacobi_rodrigues(p, n)[n], want) <= 1e-11);
      }
    }
  }

  TEST_CASE("differential equation annihilates p_n") {
    for (const auto& [a, b] : fpj::test::parameter_pairs()) {
      const JacobiParams p(a, b);
      for (std::size_t n = 1; n <= 15; ++n) {
        const DensePoly pn = fpj::jacobi_rodrigues(p, n);
        const double scale = fpj::test::max_abs(pn.coeffs()) * static_cast<double>(n * n);
        CHECK(fpj::test::max_abs(ode_image(p, pn, n).coeffs()) <= 1e-10 * scale);
      }
    }
  }

  TEST_CASE("carlson R_n is proportional to p_n") {
    const JacobiParams p(1.3, -1.6);
    // (-1)^n (n + alpha + beta + 1)_n at these parameters.
    const double ratio[] = {1.0, -1.7, 9.99, -99.123, 1382.0961, -24815.97657};
    CHECK(fpj::carlson_rn(p, 0) == DensePoly{1.0});
    for (std::size_t n = 0; n <= 5; ++n) {
      const DensePoly pn = fpj::jacobi_rodrigues(p, n);
      const DensePoly rn = fpj::carlson_rn(p, n);
      REQUIRE(rn.degree() == n);
      for (std::size_t k = 0; k <= n; ++k) {
        if (std::abs(pn[k]) < 1e-12 * fpj::test::max_abs(pn.coeffs())) continue;
        CAPTURE(n);
        CAPTURE(k);
        CHECK(rel_err(pn[k] / rn[k], ratio[n]) <= 1e-10);
      }
    }
    const JacobiParams q({0.4, 0.5}, -0.3);
    const DensePoly r1 = fpj::carlson_rn(q, 1), p1 = fpj::jacobi_rodrigues(q, 1);
    CHECK(rel_err(p1[0] / r1[0], p1[1] / r1[1]) <= 1e-12);
  }

  TEST_CASE("basis evaluation and extension") {
    const JacobiParams p(0.5, {-1.7, 0.2});
    fpj::JacobiBasis basis(p, 5);
    basis.extend(12);
    CHECK(basis.n_max() == 12);
    for (std::size_t n = 0; n <= 12; ++n) {
      const Complex x(0.3, 0.1);
      CHECK(rel_err(basis.evaluate(n, x), basis.poly(n)(x)) <= 1e-11);
    }
    std::vector<Complex> c = {0.5, -1.0, 0.25, 2.0};
    const Complex x = 0.7;
    Complex direct = 0.0;
    for (std::size_t n = 0; n < c.size(); ++n) direct += c[n] * basis.evaluate(n, x);
    CHECK(rel_err(basis.clenshaw(c, x), direct) <= 1e-13);
  }

  TEST_CASE("coefficients depend polynomially on alpha") {
    // Derivative in alpha by a Cauchy integral (exact for polynomials of
    // degree < 32 in alpha) against a forward difference.
    const Complex a(0.37, 0.2), b(0.45, 0.0);
    const std::size_t n = 6;
    const int nodes = 32;
    const double r = 0.1;
    std::vector<Complex> exact(n + 1, 0.0);
    for (int j = 0; j < nodes; ++j) {
      const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * j / nodes);
      const DensePoly pe = fpj::jacobi_rodrigues(JacobiParams(a + r * e, b), n);
      for (std::size_t k = 0; k <= n; ++k) exact[k] += pe[k] / (r * e) / static_cast<double>(nodes);
    }
    const double delta = 1e-6;
    const DensePoly p0 = fpj::jacobi_rodrigues(JacobiParams(a, b), n);
    const DensePoly p1 = fpj::jacobi_rodrigues(JacobiParams(a + delta, b), n);
    for (std::size_t k = 0; k <= n; ++k) {
      const Complex fd = (p1[k] - p0[k]) / delta;
      CAPTURE(k);
      CHECK(rel_err(fd, exact[k]) <= 1e-4);
    }
  }

  TEST_CASE("recurrence step builds p_{n+1}") {
    const JacobiParams p({-2.7, -0.4}, {0.8, 0.5});
    for (std::size_t n = 1; n <= 10; ++n) {
      const auto st = fpj::recurrence_step(p, n);
      const DensePoly next = DensePoly{st.s, st.t} * fpj::jacobi_rodrigues(p, n) +
                             fpj::jacobi_rodrigues(p, n - 1) * st.u;
      CHECK(poly_rel_diff(next, fpj::jacobi_rodrigues(p, n + 1)) <= 1e-11);
    }
  }
}
