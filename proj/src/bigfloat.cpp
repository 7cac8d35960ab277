#include "whittaker/bigfloat.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace whittaker {

std::string BigFloat::to_string(int digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

#define WHIT_BF_UNARY(name, mpfr_fn)                       \
    BigFloat name(const BigFloat& x) {                     \
        BigFloat r(x.prec());                              \
        mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);              \
        return r;                                          \
    }

WHIT_BF_UNARY(abs, mpfr_abs)
WHIT_BF_UNARY(sqrt, mpfr_sqrt)
WHIT_BF_UNARY(exp, mpfr_exp)
WHIT_BF_UNARY(log, mpfr_log)
WHIT_BF_UNARY(sin, mpfr_sin)
WHIT_BF_UNARY(cos, mpfr_cos)
WHIT_BF_UNARY(lngamma, mpfr_lngamma)
WHIT_BF_UNARY(gamma, mpfr_gamma)

#undef WHIT_BF_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    mpfr_prec_t p = y.prec() > x.prec() ? y.prec() : x.prec();
    BigFloat r(p);
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow_int(const BigFloat& x, long n) {
    BigFloat r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

BigFloat pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat factorial(unsigned long n, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_fac_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

namespace {
// B_2 .. B_30 as exact rationals; beyond that the zeta series converges fast
// enough to evaluate directly.
constexpr long long kBernNum[15] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611,
                                    854513, -236364091, 8553103, -23749461029LL, 8615841276005LL};
constexpr long long kBernDen[15] = {6, 30, 42, 30, 66, 2730, 6, 510, 798, 330,
                                    138, 2730, 6, 870, 14322};
}  // namespace

BigFloat bernoulli_2k(int k, mpfr_prec_t bits) {
    if (k < 1) throw std::invalid_argument("bernoulli_2k: k must be >= 1");
    if (k <= 15) {
        return BigFloat(static_cast<long>(kBernNum[k - 1]), bits) /
               BigFloat(static_cast<long>(kBernDen[k - 1]), bits);
    }
    // B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}; with 2k >= 32 the
    // zeta tail after N terms is below N^{1-2k}/(2k-1)
    mpfr_prec_t wp = bits + 32;
    BigFloat zeta(1.0, wp);
    BigFloat one(1.0, wp);
    for (long j = 2; j <= 4096; ++j) {
        BigFloat term = one / pow_int(BigFloat(j, wp), 2L * k);
        zeta += term;
        if (term.is_zero() || mpfr_get_exp(term.raw()) < -static_cast<mpfr_exp_t>(wp) - 4) break;
    }
    BigFloat num = factorial(2UL * k, wp) * 2.0 * zeta;
    BigFloat den = pow_int(2.0 * pi(wp), 2L * k);
    BigFloat b = num / den;
    if (k % 2 == 0) b = -b;
    return b;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
    BigFloat d = o.re * o.re + o.im * o.im;
    BigFloat r = (re * o.re + im * o.im) / d;
    BigFloat i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigFloat abs(const BigComplex& z) {
    mpfr_prec_t p = z.prec();
    BigFloat r(p);
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex sqrt(const BigComplex& z) {
    // Principal branch, matching std::sqrt(std::complex).
    mpfr_prec_t p = z.prec();
    BigFloat m = abs(z);
    if (m.is_zero()) return BigComplex(0.0, 0.0, p);
    BigFloat re_part = sqrt((m + z.re) / 2.0);
    BigFloat im_abs = sqrt((m - z.re) / 2.0);
    if (z.im.is_negative()) im_abs = -im_abs;
    return {re_part, im_abs};
}

BigComplex exp(const BigComplex& z) {
    BigFloat m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) { return {log(abs(z)), atan2(z.im, z.re)}; }

BigComplex pow_int(const BigComplex& z, long n) {
    mpfr_prec_t p = z.prec();
    if (n == 0) return BigComplex(1.0, 0.0, p);
    bool inv = n < 0;
    unsigned long m = inv ? -static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
    BigComplex acc(1.0, 0.0, p);
    BigComplex base = z;
    while (m) {
        if (m & 1) acc *= base;
        base *= base;
        m >>= 1;
    }
    if (inv) {
        BigComplex one(1.0, 0.0, p);
        acc = one / acc;
    }
    return acc;
}

BigComplex pow(const BigComplex& z, const BigFloat& a) { return exp(a * log(z)); }

namespace {

// Stirling series tail for lngamma; the shift threshold and term count are
// sized so the truncation error stays below the working precision for
// precisions up to ~120 decimal digits.
BigComplex lngamma_stirling(BigComplex z, mpfr_prec_t p) {
    int digits = static_cast<int>(p / 3.32) + 1;
    double threshold = 0.8 * digits + 12.0;
    int n_terms = static_cast<int>(threshold * 1.2) + 8;

    BigComplex shift_acc(0.0, 0.0, p);
    while (z.re < threshold) {
        shift_acc += log(z);
        z += BigFloat(1.0, p);
    }
    BigComplex lz = log(z);
    BigComplex half(0.5, 0.0, p);
    BigComplex res = (z - half) * lz - z;
    res += BigComplex(log(2.0 * pi(p)) / 2.0, BigFloat(0.0, p));
    BigComplex zinv = BigComplex(1.0, 0.0, p) / z;
    BigComplex zinv2 = zinv * zinv;
    BigComplex zp = zinv;
    for (int k = 1; k <= n_terms; ++k) {
        BigFloat b = bernoulli_2k(k, p);
        BigFloat c = b / BigFloat(static_cast<long>(2 * k) * (2 * k - 1), p);
        BigComplex term = c * zp;
        res += term;
        mpfr_exp_t mag = mpfr_get_exp(abs(term).raw());
        mpfr_exp_t ref = mpfr_get_exp(abs(res).raw());
        if (mag < ref - static_cast<mpfr_exp_t>(p) - 8) break;
        zp *= zinv2;
    }
    return res - shift_acc;
}

}  // namespace

BigComplex lngamma(const BigComplex& z) {
    mpfr_prec_t p = z.prec();
    if (z.im.is_zero() && z.re > 0.0) {
        return {lngamma(z.re), BigFloat(0.0, p)};
    }
    if (z.re >= 0.5) return lngamma_stirling(z, p);
    // Reflection: lnGamma(z) = ln(pi) - ln(sin(pi z)) - lnGamma(1-z).
    // Adequate away from the poles; oracle arguments never approach them.
    BigComplex one(1.0, 0.0, p);
    BigFloat PI = pi(p);
    BigComplex pz = PI * z;
    // sin(pz) for complex argument
    BigComplex i_pz(-pz.im, pz.re);
    BigComplex s = (exp(i_pz) - exp(-i_pz)) / BigComplex(0.0, 2.0, p);
    return BigComplex(log(PI), BigFloat(0.0, p)) - log(s) - lngamma(one - z);
}

namespace {
std::mutex gl_mutex;
std::map<std::pair<int, long>, GaussLegendre> gl_cache;
}  // namespace

const GaussLegendre& gauss_legendre(int n, mpfr_prec_t bits) {
    std::lock_guard<std::mutex> lock(gl_mutex);
    auto key = std::make_pair(n, static_cast<long>(bits));
    auto it = gl_cache.find(key);
    if (it != gl_cache.end()) return it->second;

    GaussLegendre gl;
    gl.nodes.reserve(n);
    gl.weights.reserve(n);
    mpfr_prec_t wp = bits + 16;
    BigFloat PI = pi(wp);
    for (int i = 0; i < n; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        BigFloat x(std::cos(M_PI * (i + 0.75) / (n + 0.5)), wp);
        BigFloat dp(wp);
        for (int iter = 0; iter < 64; ++iter) {
            BigFloat p0(1.0, wp), p1 = x;
            for (int k = 2; k <= n; ++k) {
                BigFloat p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = p2;
            }
            // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
            dp = BigFloat(static_cast<long>(n), wp) * (x * p1 - p0) / (x * x - 1.0);
            BigFloat dx = p1 / dp;
            x -= dx;
            if (abs(dx) < pow_int(BigFloat(2.0, wp), -static_cast<long>(bits) - 8)) break;
        }
        gl.nodes.push_back(x);
        gl.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
    auto [pos, ok] = gl_cache.emplace(key, std::move(gl));
    (void)ok;
    return pos->second;
}

}  // namespace whittaker
