#include "whittaker/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace whittaker {

namespace {

mpfr_prec_t bits_of(int digits) { return BigFloat::bits_for_digits(digits); }

double eps_of_digits(int digits) { return std::pow(10.0, -digits); }

bool near_nonpositive_integer(std::complex<double> x, double tol = 1e-12) {
    if (std::abs(x.imag()) > tol) return false;
    double r = x.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) < tol;
}

bool is_nonneg_integer(double x, double tol = 1e-10) {
    return x > -tol && std::abs(x - std::round(x)) < tol;
}

// digits lost to cancellation when summing the Kummer series at argument w
int series_cancellation_digits(std::complex<double> w) {
    double loss = 0.4342944819 * (std::abs(w) - w.real());
    return loss < 0 ? 0 : static_cast<int>(loss) + 4;
}

BigComplex bc(std::complex<double> z, mpfr_prec_t p) { return BigComplex(z, p); }

// ---------------------------------------------------------------------------
// Kummer M series
// ---------------------------------------------------------------------------

struct SeriesResult {
    BigComplex sum;
    double est;
};

// sum_{s>=0} (a)_s / ((b)_s s!) w^s with term recurrence
SeriesResult kummer_m_series(const BigComplex& w, const BigFloat& a, const BigFloat& b,
                             mpfr_prec_t p, int target_digits) {
    BigComplex sum(1.0, 0.0, p);
    BigComplex term(1.0, 0.0, p);
    double wmag = abs(w).to_double();
    long max_terms = static_cast<long>(4.0 * wmag) + 4000;
    int small_streak = 0;
    mpfr_exp_t cut = static_cast<mpfr_exp_t>(p);
    for (long s = 0; s < max_terms; ++s) {
        BigFloat num = a + static_cast<double>(s);
        BigFloat den = (b + static_cast<double>(s)) * (s + 1.0);
        term *= w;
        term *= num;
        term = term / den;
        sum += term;
        mpfr_exp_t e_t = mpfr_get_exp(abs(term).raw());
        mpfr_exp_t e_s = mpfr_get_exp(abs(sum).raw());
        if (e_t < e_s - cut + 4) {
            if (++small_streak >= 3 && s > static_cast<long>(wmag)) {
                return {sum, 10.0 * eps_of_digits(target_digits)};
            }
        } else {
            small_streak = 0;
        }
    }
    throw std::runtime_error("whittaker_M_reference: series did not converge at requested precision");
}

// ---------------------------------------------------------------------------
// Gauss-Legendre helpers
// ---------------------------------------------------------------------------

template <class F>
BigComplex gl_on_interval(const F& f, const BigFloat& lo, const BigFloat& hi, int n, mpfr_prec_t p) {
    const GaussLegendre& gl = gauss_legendre(n, p);
    BigFloat half_len = (hi - lo) / 2.0;
    BigFloat mid = (hi + lo) / 2.0;
    BigComplex acc(0.0, 0.0, p);
    for (int i = 0; i < n; ++i) {
        BigFloat x = mid + half_len * gl.nodes[i];
        acc += gl.weights[i] * f(x);
    }
    return half_len * acc;
}

// doubling refinement with relative-change estimate
template <class F>
SeriesResult gl_adaptive(const F& f, const BigFloat& lo, const BigFloat& hi, mpfr_prec_t p,
                         int target_digits, int n0 = 64, int nmax = 2048) {
    BigComplex prev = gl_on_interval(f, lo, hi, n0, p);
    double est = 1.0;
    for (int n = 2 * n0; n <= nmax; n *= 2) {
        BigComplex cur = gl_on_interval(f, lo, hi, n, p);
        BigFloat diff = abs(cur - prev);
        BigFloat scale = abs(cur);
        est = scale.is_zero() ? diff.to_double() : (diff / scale).to_double();
        prev = cur;
        if (est < eps_of_digits(target_digits)) break;
    }
    return {prev, std::max(est, 10.0 * eps_of_digits(target_digits))};
}

}  // namespace

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

BigComplex gamma_reference_ln(std::complex<double> x, int digits) {
    if (near_nonpositive_integer(x))
        throw std::domain_error("gamma_reference: pole at nonpositive integer");
    mpfr_prec_t p = bits_of(digits + 10);
    return lngamma(bc(x, p));
}

BigComplex gamma_reference(std::complex<double> x, int digits) {
    if (near_nonpositive_integer(x))
        throw std::domain_error("gamma_reference: pole at nonpositive integer");
    mpfr_prec_t p = bits_of(digits + 10);
    if (std::abs(x.imag()) == 0.0) {
        BigComplex r(p);
        r.re = gamma(BigFloat(x.real(), p));
        r.im = BigFloat(0.0, p);
        return r;
    }
    return exp(lngamma(bc(x, p)));
}

// ---------------------------------------------------------------------------
// M
// ---------------------------------------------------------------------------

OracleValue whittaker_M_quadrature(std::complex<double> w, double mu, double kappa, int digits) {
    if (!(mu + kappa > -0.5 && mu - kappa > -0.5))
        throw std::domain_error("whittaker_M_quadrature: requires Re(mu +- kappa) > -1/2");
    int boost = static_cast<int>(0.2172 * std::abs(w.real())) + 8;
    int wd = digits + boost;
    mpfr_prec_t p = bits_of(wd);
    BigComplex W = bc(w, p);
    BigFloat p1(mu - 0.5 - kappa, p);  // exponent of (1+t)
    BigFloat p2(mu + kappa - 0.5, p);  // exponent of (1-t)

    auto integrand = [&](const BigFloat& t) {
        BigComplex e = exp(W * (t / 2.0));
        BigFloat one_p = 1.0 + t;
        BigFloat one_m = 1.0 - t;
        BigFloat alg = exp(p1 * log(one_p) + p2 * log(one_m));
        return e * alg;
    };

    SeriesResult I{BigComplex(p), 1.0};
    if (mu - std::abs(kappa) - 0.5 < 1.0) {
        // endpoint exponents below 1: map t = tanh(u) to push the
        // singularity to infinity
        double pmin = mu - std::abs(kappa) + 0.5;  // min exponent + 1
        if (pmin <= 0) throw std::domain_error("whittaker_M_quadrature: endpoint not integrable");
        double U = (wd + 4) * 2.302585 / (2.0 * pmin) + 2.0;
        auto g = [&](const BigFloat& u) {
            BigFloat t(u.prec());
            mpfr_tanh(t.raw(), u.raw(), MPFR_RNDN);
            BigFloat sech2 = 1.0 - t * t;
            return integrand(t) * sech2;
        };
        I = gl_adaptive(g, BigFloat(-U, p), BigFloat(U, p), p, wd, 128, 4096);
    } else {
        I = gl_adaptive(integrand, BigFloat(-1.0, p), BigFloat(1.0, p), p, wd);
    }

    // prefactor Gamma(1+2mu) w^{mu+1/2} / (2^{2mu} Gamma(mu-kappa+1/2) Gamma(mu+kappa+1/2))
    BigComplex lnpre = BigComplex(lngamma(BigFloat(1.0 + 2.0 * mu, p)), BigFloat(0.0, p));
    lnpre += BigFloat(mu + 0.5, p) * log(W);
    lnpre -= BigFloat(2.0 * mu, p) * log(BigFloat(2.0, p));
    lnpre -= BigComplex(lngamma(BigFloat(mu - kappa + 0.5, p)), BigFloat(0.0, p));
    lnpre -= BigComplex(lngamma(BigFloat(mu + kappa + 0.5, p)), BigFloat(0.0, p));

    OracleValue out;
    out.value = exp(lnpre) * I.sum;
    out.est_accuracy = std::max(I.est, 10.0 * eps_of_digits(digits));
    out.method = OracleMethod::quadrature;
    return out;
}

OracleValue whittaker_M_reference(std::complex<double> w, double mu, double kappa, int digits) {
    if (near_nonpositive_integer(2.0 * mu + 1.0))
        throw std::domain_error("whittaker_M_reference: 2 mu must not be a negative integer");
    int wd = digits + series_cancellation_digits(w) + 6;
    mpfr_prec_t p = bits_of(wd);
    BigComplex W = bc(w, p);
    BigFloat a(0.5 + mu - kappa, p);
    BigFloat b(1.0 + 2.0 * mu, p);

    SeriesResult s = kummer_m_series(W, a, b, p, digits);
    // prefactor w^{mu+1/2} e^{-w/2}
    BigComplex val = exp(BigFloat(mu + 0.5, p) * log(W) - W * BigFloat(0.5, p)) * s.sum;

    OracleValue out;
    out.value = val;
    out.est_accuracy = s.est;
    out.method = OracleMethod::series;

    // dual-route check against the integral representation at moderate |w|
    if (mu + kappa > -0.5 && mu - kappa > -0.5 && std::abs(w) <= 500.0 && std::abs(w) > 1e-8) {
        OracleValue q = whittaker_M_quadrature(w, mu, kappa, digits);
        BigFloat diff = abs(out.value - q.value);
        BigFloat scale = abs(out.value);
        double rel = scale.is_zero() ? diff.to_double() : (diff / scale).to_double();
        out.est_accuracy = std::max(out.est_accuracy, rel);
    }
    return out;
}

// ---------------------------------------------------------------------------
// W
// ---------------------------------------------------------------------------

namespace {

// exact finite sum for W_{k,m}(v) when N = m + k - 1/2 is a nonnegative
// integer; ln_v supplies the branch of log v explicitly so the same code
// serves arguments continued to arg = -pi.
OracleValue w_finite_sum(const BigComplex& ln_v, double mu, double k, int digits) {
    int N = static_cast<int>(std::round(mu + k - 0.5));
    mpfr_prec_t p = bits_of(digits + 10);
    BigComplex v = exp(ln_v);
    BigComplex vinv = BigComplex(1.0, 0.0, p) / v;
    BigComplex term(1.0, 0.0, p);
    BigComplex sum(1.0, 0.0, p);
    for (int s = 0; s < N; ++s) {
        BigFloat num((mu - k + 0.5 + s) * (mu + k - 0.5 - s), p);
        term = term * vinv * (num / (s + 1.0));
        sum += term;
    }
    BigComplex lnpre = BigFloat(k, p) * ln_v - v * BigFloat(0.5, p);
    OracleValue out;
    out.value = exp(lnpre) * sum;
    out.est_accuracy = 10.0 * eps_of_digits(digits);
    out.method = OracleMethod::finite_sum;
    return out;
}

}  // namespace

OracleValue whittaker_W_integral(std::complex<double> w, double mu, double kappa, int digits) {
    double a = mu - kappa + 0.5;
    if (!(a > 0)) throw std::domain_error("whittaker_W_integral: requires mu - kappa + 1/2 > 0");
    double omega = std::arg(w);
    if (std::abs(omega) > M_PI - 0.2)
        throw std::domain_error("whittaker_W_integral: arg too close to the cut; use reflection");
    // rotate the contour t -> s e^{i phi} so that w t becomes real positive:
    // the integrand then decays monotonically and nothing cancels. The sweep
    // never crosses the pole/branch point at t = -1 while |arg w| < pi.
    double phi = -omega;

    int wd = digits + 8;
    mpfr_prec_t p = bits_of(wd);
    BigComplex W = bc(w, p);
    BigComplex eiphi = exp(BigComplex(0.0, phi, p));
    BigComplex weff = W * eiphi;  // Re > 0
    BigFloat bma(mu + kappa - 0.5, p);  // exponent of (1+t)
    BigFloat am1(a - 1.0, p);

    auto f_of_t = [&](const BigComplex& t) {
        // e^{-w t} t^{a-1} (1+t)^{mu+kappa-1/2}, principal logs (t stays in
        // |arg| < pi/2, 1 + t in the right half plane)
        BigComplex lt = log(t);
        BigComplex l1t = log(BigComplex(1.0, 0.0, p) + t);
        return exp(-(W * t) + am1 * lt + bma * l1t);
    };

    // leg 1: s in (0, 1]
    auto leg1 = [&](const BigFloat& s) { return f_of_t(eiphi * s) * eiphi; };
    SeriesResult I1 = gl_adaptive(leg1, BigFloat(0.0, p), BigFloat(1.0, p), p, wd, 128, 4096);

    // leg 2: s in [1, inf), s = 1 - ln(u)/alpha
    double re_weff = weff.re.to_double();
    double alpha = std::max(re_weff / 4.0, 2.0);
    BigFloat alpha_mp(alpha, p);
    auto leg2 = [&](const BigFloat& u) {
        BigFloat s = 1.0 - log(u) / alpha_mp;
        return f_of_t(eiphi * s) * eiphi / (alpha_mp * u);
    };
    SeriesResult I2 = gl_adaptive(leg2, BigFloat(0.0, p), BigFloat(1.0, p), p, wd, 128, 4096);

    BigComplex I = I1.sum + I2.sum;
    BigComplex lnpre = BigFloat(mu + 0.5, p) * log(W) - W * BigFloat(0.5, p);
    lnpre -= BigComplex(lngamma(BigFloat(a, p)), BigFloat(0.0, p));

    OracleValue out;
    out.value = exp(lnpre) * I;
    out.est_accuracy = std::max({I1.est, I2.est, 10.0 * eps_of_digits(digits)});
    out.method = OracleMethod::quadrature;
    return out;
}

OracleValue whittaker_W_reference(std::complex<double> w, double mu, double kappa, int digits) {
    if (is_nonneg_integer(mu + kappa - 0.5)) {
        mpfr_prec_t p = bits_of(digits + 10);
        return w_finite_sum(log(bc(w, p)), mu, kappa, digits);
    }
    if (mu - kappa + 0.5 > 0) return whittaker_W_integral(w, mu, kappa, digits);
    throw std::domain_error("whittaker_W_reference: no applicable evaluation branch");
}

OracleValue whittaker_Wminus_reference(std::complex<double> w, double mu, double kappa, int digits) {
    // target: W_{-kappa,mu}(w e^{-pi i}), w in the closed upper half plane
    if (w.imag() < 0) throw std::domain_error("whittaker_Wminus_reference: w must be in C+");
    mpfr_prec_t p = bits_of(digits + 10);

    if (is_nonneg_integer(mu - kappa - 0.5)) {
        // exact elementary form, valid for any w via the explicit branch
        // ln(w e^{-pi i}) = ln w - pi i
        BigComplex ln_v = log(bc(w, p));
        ln_v.im -= pi(p);
        return w_finite_sum(ln_v, mu, -kappa, digits);
    }

    if (std::arg(w) >= 0.35) {
        // Schwarz reflection: W_{-k,mu}(w e^{-pi i}) = conj W_{-k,mu}(conj(w) e^{pi i}),
        // and conj(w) e^{pi i} = -conj(w) sits in the upper half plane
        std::complex<double> v = -std::conj(w);
        OracleValue inner = whittaker_W_integral(v, mu, -kappa, digits);
        OracleValue out;
        out.value = conj(inner.value);
        out.est_accuracy = inner.est_accuracy;
        out.method = OracleMethod::reflection;
        return out;
    }

    // near the positive real axis: solve the connection formula for W-
    OracleValue M = whittaker_M_reference(w, mu, kappa, digits);
    OracleValue W = whittaker_W_reference(w, mu, kappa, digits);
    BigFloat PI = pi(p);
    BigComplex ln_g2mu = BigComplex(lngamma(BigFloat(2.0 * mu + 1.0, p)), BigFloat(0.0, p));
    BigComplex ln_gp = BigComplex(lngamma(BigFloat(mu + kappa + 0.5, p)), BigFloat(0.0, p));
    BigComplex ln_gm = BigComplex(lngamma(BigFloat(mu - kappa + 0.5, p)), BigFloat(0.0, p));

    // i e^{(mu-kappa) pi i} Gamma(2mu+1)/Gamma(mu+kappa+1/2) * W
    BigComplex phase1 = exp(BigComplex(BigFloat(0.0, p), (mu - kappa) * PI + PI / 2.0));
    BigComplex t1 = phase1 * exp(ln_g2mu - ln_gp) * W.value;
    BigComplex diff = M.value - t1;
    // W- = e^{kappa pi i} Gamma(mu-kappa+1/2)/Gamma(2mu+1) * (M - t1)
    BigComplex phase2 = exp(BigComplex(BigFloat(0.0, p), BigFloat(kappa, p) * PI));
    OracleValue out;
    out.value = phase2 * exp(ln_gm - ln_g2mu) * diff;
    double m_mag = abs(M.value).to_double();
    double t_mag = abs(t1).to_double();
    double d_mag = abs(diff).to_double();
    double amplification = d_mag > 0 ? (m_mag + t_mag) / d_mag : 1e300;
    out.est_accuracy = std::max(M.est_accuracy, W.est_accuracy) * std::max(1.0, amplification);
    out.method = OracleMethod::connection;
    return out;
}

// ---------------------------------------------------------------------------
// reflection / continuation
// ---------------------------------------------------------------------------

OracleValue m_continuation(std::complex<double> w, int sign, double mu, double kappa, int digits) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("m_continuation: sign must be +-1");
    OracleValue inner = whittaker_M_reference(w, mu, -kappa, digits);
    mpfr_prec_t p = inner.value.prec();
    BigFloat PI = pi(p);
    // +- i e^{+- mu pi i}
    BigComplex phase = exp(BigComplex(BigFloat(0.0, p), sign * (mu * PI + PI / 2.0)));
    OracleValue out;
    out.value = phase * inner.value;
    out.est_accuracy = inner.est_accuracy;
    out.method = OracleMethod::reflection;
    return out;
}

OracleValue symmetry_reflection(WhittakerKind fn, std::complex<double> w, double mu, double kappa,
                                int digits) {
    if (w.imag() >= 0.0) {
        switch (fn) {
            case WhittakerKind::M: return whittaker_M_reference(w, mu, kappa, digits);
            case WhittakerKind::W: return whittaker_W_reference(w, mu, kappa, digits);
            case WhittakerKind::Wminus: return whittaker_Wminus_reference(w, mu, kappa, digits);
        }
    }
    std::complex<double> wb = std::conj(w);
    OracleValue inner;
    switch (fn) {
        case WhittakerKind::M: inner = whittaker_M_reference(wb, mu, kappa, digits); break;
        case WhittakerKind::W: inner = whittaker_W_reference(wb, mu, kappa, digits); break;
        // lower-half companion is W_{-k,mu}(w e^{+pi i}) = conj W_{-k,mu}(conj(w) e^{-pi i})
        case WhittakerKind::Wminus: inner = whittaker_Wminus_reference(wb, mu, kappa, digits); break;
    }
    OracleValue out;
    out.value = conj(inner.value);
    out.est_accuracy = inner.est_accuracy;
    out.method = OracleMethod::reflection;
    return out;
}

double connection_residual(std::complex<double> w, double mu, double kappa, int digits) {
    OracleValue M = whittaker_M_reference(w, mu, kappa, digits);
    OracleValue W = whittaker_W_reference(w, mu, kappa, digits);
    OracleValue Wm = whittaker_Wminus_reference(w, mu, kappa, digits);
    if (Wm.method == OracleMethod::connection)
        throw std::domain_error("connection_residual: W- only available through the same identity");

    mpfr_prec_t p = bits_of(digits + 10);
    BigFloat PI = pi(p);
    BigComplex ln_g2mu = BigComplex(lngamma(BigFloat(2.0 * mu + 1.0, p)), BigFloat(0.0, p));
    BigComplex ln_gp = BigComplex(lngamma(BigFloat(mu + kappa + 0.5, p)), BigFloat(0.0, p));
    BigComplex ln_gm = BigComplex(lngamma(BigFloat(mu - kappa + 0.5, p)), BigFloat(0.0, p));

    BigComplex t1 = exp(BigComplex(BigFloat(0.0, p), (mu - kappa) * PI + PI / 2.0)) *
                    exp(ln_g2mu - ln_gp) * W.value;
    BigComplex t2 = exp(BigComplex(BigFloat(0.0, p), -BigFloat(kappa, p) * PI)) *
                    exp(ln_g2mu - ln_gm) * Wm.value;
    BigFloat resid = abs(M.value - t1 - t2);
    BigFloat scale = abs(M.value);
    BigFloat s1 = abs(t1);
    BigFloat s2 = abs(t2);
    if (s1 > scale) scale = s1;
    if (s2 > scale) scale = s2;
    return (resid / scale).to_double();
}

}  // namespace whittaker
