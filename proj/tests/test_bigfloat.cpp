#include "doctest.h"

#include <cmath>

#include "whittaker/bigfloat.hpp"

using namespace whittaker;

TEST_CASE("BigFloat basic arithmetic and precision promotion") {
    BigFloat a(1.0, 128);
    BigFloat b(3.0, 256);
    BigFloat c = a / b;
    CHECK(c.prec() >= 256);
    // 1/3 to ~70 digits
    BigFloat three_c = c * 3.0;
    CHECK(std::abs((three_c - 1.0).to_double()) < 1e-60);
}

TEST_CASE("string construction carries full precision") {
    BigFloat x("0.333333333333333333333333333333333333333333", 256);
    CHECK(std::abs((x * 3.0 - 1.0).to_double()) < 1e-40);
}

TEST_CASE("real gamma values") {
    mpfr_prec_t p = BigFloat::bits_for_digits(40);
    CHECK(std::abs(gamma(BigFloat(1.0, p)).to_double() - 1.0) < 1e-30);
    CHECK(std::abs(gamma(BigFloat(0.5, p)).to_double() - std::sqrt(M_PI)) < 1e-14);
    // Gamma(-1/2) = -2 sqrt(pi)
    CHECK(std::abs(gamma(BigFloat(-0.5, p)).to_double() + 2.0 * std::sqrt(M_PI)) < 1e-13);
}

TEST_CASE("complex lngamma agrees with the real implementation on the axis") {
    mpfr_prec_t p = BigFloat::bits_for_digits(40);
    for (double x : {0.7, 1.0, 2.5, 24.5, 41.0, 200.0}) {
        BigComplex lg = lngamma(BigComplex(x, 0.0, p));
        BigFloat ref = lngamma(BigFloat(x, p));
        CHECK(std::abs((lg.re - ref).to_double()) < 1e-35 * std::max(1.0, std::abs(ref.to_double())));
        CHECK(std::abs(lg.im.to_double()) < 1e-35);
    }
}

TEST_CASE("complex lngamma recurrence Gamma(z+1) = z Gamma(z)") {
    mpfr_prec_t p = BigFloat::bits_for_digits(40);
    BigComplex z(1.3, 2.1, p);
    BigComplex lhs = lngamma(z + BigFloat(1.0, p));
    BigComplex rhs = lngamma(z) + log(z);
    CHECK(abs(lhs - rhs).to_double() < 1e-36);
}

TEST_CASE("complex lngamma reflection region") {
    mpfr_prec_t p = BigFloat::bits_for_digits(40);
    // Gamma(z) Gamma(1-z) = pi / sin(pi z), checked through exp(lngamma)
    BigComplex z(-1.3, 0.8, p);
    BigComplex g1 = exp(lngamma(z));
    BigComplex g2 = exp(lngamma(BigComplex(1.0, 0.0, p) - z));
    BigComplex pz = pi(p) * z;
    BigComplex i_pz(-pz.im, pz.re);
    BigComplex s = (exp(i_pz) - exp(-i_pz)) / BigComplex(0.0, 2.0, p);
    BigComplex rhs = BigComplex(pi(p), BigFloat(0.0, p)) / s;
    CHECK(abs(g1 * g2 - rhs).to_double() / abs(rhs).to_double() < 1e-32);
}

TEST_CASE("Bernoulli numbers from zeta") {
    mpfr_prec_t p = BigFloat::bits_for_digits(40);
    CHECK(std::abs(bernoulli_2k(1, p).to_double() - 1.0 / 6.0) < 1e-30);
    CHECK(std::abs(bernoulli_2k(2, p).to_double() + 1.0 / 30.0) < 1e-30);
    CHECK(std::abs(bernoulli_2k(3, p).to_double() - 1.0 / 42.0) < 1e-30);
    CHECK(std::abs(bernoulli_2k(7, p).to_double() - 7.0 / 6.0) < 1e-25);
}

TEST_CASE("Gauss-Legendre integrates exp exactly enough") {
    mpfr_prec_t p = BigFloat::bits_for_digits(35);
    const GaussLegendre& gl = gauss_legendre(48, p);
    BigFloat acc(0.0, p);
    for (int i = 0; i < 48; ++i) acc += gl.weights[i] * exp(gl.nodes[i]);
    // integral of e^x over [-1,1] = e - 1/e
    BigFloat expect = exp(BigFloat(1.0, p)) - exp(BigFloat(-1.0, p));
    CHECK(std::abs((acc - expect).to_double()) < 1e-33);
}

TEST_CASE("complex sqrt and log principal branches") {
    mpfr_prec_t p = BigFloat::bits_for_digits(30);
    BigComplex z(-3.0, 4.0, p);
    BigComplex r = sqrt(z);
    CHECK(abs(r * r - z).to_double() < 1e-27);
    CHECK(r.re.to_double() > 0.0);  // principal: Re >= 0
    BigComplex l = log(z);
    CHECK(std::abs(l.im.to_double() - std::atan2(4.0, -3.0)) < 1e-15);
}
