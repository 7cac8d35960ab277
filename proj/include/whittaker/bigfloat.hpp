#pragma once

#include <mpfr.h>

#include <complex>
#include <string>
#include <vector>

namespace whittaker {

// Arbitrary-precision real number backed by MPFR. Each value carries its own
// working precision (in bits); binary operations promote to the wider operand.
// Precision is always set explicitly by whoever creates the value, so there is
// no hidden global state.
class BigFloat {
  public:
    BigFloat() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigFloat(double x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(long x, mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_si(v_, x, MPFR_RNDN); }
    BigFloat(const std::string& s, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static mpfr_prec_t bits_for_digits(int digits) {
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 16);
    }
    static BigFloat with_digits(double x, int digits) { return BigFloat(x, bits_for_digits(digits)); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    std::string to_string(int digits = 20) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigFloat& operator+=(const BigFloat& o) { promote(o.prec()); mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { promote(o.prec()); mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { promote(o.prec()); mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { promote(o.prec()); mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigFloat& operator+=(double x) { mpfr_add_d(v_, v_, x, MPFR_RNDN); return *this; }
    BigFloat& operator-=(double x) { mpfr_sub_d(v_, v_, x, MPFR_RNDN); return *this; }
    BigFloat& operator*=(double x) { mpfr_mul_d(v_, v_, x, MPFR_RNDN); return *this; }
    BigFloat& operator/=(double x) { mpfr_div_d(v_, v_, x, MPFR_RNDN); return *this; }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { a += b; return a; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { a -= b; return a; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { a *= b; return a; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { a /= b; return a; }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(BigFloat a, double b) { BigFloat t(b, a.prec()); a += t; return a; }
    friend BigFloat operator-(BigFloat a, double b) { BigFloat t(b, a.prec()); a -= t; return a; }
    friend BigFloat operator*(BigFloat a, double b) { BigFloat t(b, a.prec()); a *= t; return a; }
    friend BigFloat operator/(BigFloat a, double b) { BigFloat t(b, a.prec()); a /= t; return a; }
    friend BigFloat operator+(double a, const BigFloat& b) { return b + a; }
    friend BigFloat operator-(double a, const BigFloat& b) { return -(b - a); }
    friend BigFloat operator*(double a, const BigFloat& b) { return b * a; }
    friend BigFloat operator/(double a, const BigFloat& b) { BigFloat t(a, b.prec()); t /= b; return t; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
    friend bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
    friend bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
    friend bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }

  private:
    void promote(mpfr_prec_t p) {
        if (p > prec()) mpfr_prec_round(v_, p, MPFR_RNDN);
    }
    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat pow_int(const BigFloat& x, long n);
BigFloat pi(mpfr_prec_t bits);
BigFloat factorial(unsigned long n, mpfr_prec_t bits);
// Real log-gamma / gamma (MPFR built-ins; x must avoid nonpositive integers).
BigFloat lngamma(const BigFloat& x);
BigFloat gamma(const BigFloat& x);
// Even Bernoulli number B_{2k}, computed from zeta(2k) so the value is
// accurate at full working precision for any k.
BigFloat bernoulli_2k(int k, mpfr_prec_t bits);

// Complex number on top of BigFloat. Only the operations the oracle needs.
struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(double r, double i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}
    BigComplex(std::complex<double> z, mpfr_prec_t bits) : re(z.real(), bits), im(z.imag(), bits) {}

    mpfr_prec_t prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
    BigComplex& operator+=(const BigFloat& s) { re += s; return *this; }
    BigComplex& operator-=(const BigFloat& s) { re -= s; return *this; }
    BigComplex& operator*=(const BigFloat& s) { re *= s; im *= s; return *this; }
    BigComplex& operator*=(const BigComplex& o) {
        BigFloat r = re * o.re - im * o.im;
        BigFloat i = re * o.im + im * o.re;
        re = std::move(r); im = std::move(i);
        return *this;
    }
    BigComplex& operator/=(const BigComplex& o);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { a += b; return a; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { a -= b; return a; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { a *= b; return a; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { a /= b; return a; }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigFloat& s, BigComplex a) { a.re *= s; a.im *= s; return a; }
    friend BigComplex operator*(BigComplex a, const BigFloat& s) { a.re *= s; a.im *= s; return a; }
    friend BigComplex operator/(BigComplex a, const BigFloat& s) { a.re /= s; a.im /= s; return a; }
    friend BigComplex operator+(BigComplex a, const BigFloat& s) { a.re += s; return a; }
    friend BigComplex operator-(BigComplex a, const BigFloat& s) { a.re -= s; return a; }
};

BigFloat abs(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal branch: Im(log) = atan2(im, re).
BigComplex log(const BigComplex& z);
BigComplex pow_int(const BigComplex& z, long n);
// z^a with principal log, real exponent.
BigComplex pow(const BigComplex& z, const BigFloat& a);
// Log-gamma for complex argument via Stirling with Bernoulli correction and a
// recurrence shift; principal branch for Re(z) > 0 (reflection handles the
// left half plane away from the poles).
BigComplex lngamma(const BigComplex& z);

// Gauss-Legendre nodes and weights on [-1, 1] at the given precision.
// Results are cached per (n, bits); the cache is guarded and read-mostly.
struct GaussLegendre {
    std::vector<BigFloat> nodes;
    std::vector<BigFloat> weights;
};
const GaussLegendre& gauss_legendre(int n, mpfr_prec_t bits);

}  // namespace whittaker
