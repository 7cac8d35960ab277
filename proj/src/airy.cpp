#include "whittaker/airy.hpp"

#include <cmath>
#include <stdexcept>

namespace whittaker {

namespace {

constexpr double kSeriesRadius = 9.2;
constexpr mpfr_prec_t kSeriesBits = 200;  // ~60 digits; worst cancellation at the rim eats ~17

struct AiPair {
    cplx ai, aip;
    double log_scale;
};

// Maclaurin evaluation of Ai and Ai' in extended precision.
AiPair airy_series(cplx w) {
    const mpfr_prec_t p = kSeriesBits;
    BigComplex z(w, p);
    BigComplex z3 = z * z * z;

    BigComplex f(1.0, 0.0, p), fp(0.0, 0.0, p);
    BigComplex g = z, gp = BigComplex(1.0, 0.0, p);
    BigComplex tf(1.0, 0.0, p);  // z^{3k} / c_k
    BigComplex tg = z;           // z^{3k+1} / d_k
    for (int k = 1; k <= 400; ++k) {
        tf = tf * z3 / BigFloat(static_cast<long>(3 * k) * (3 * k - 1), p);
        tg = tg * z3 / BigFloat(static_cast<long>(3 * k) * (3 * k + 1), p);
        f += tf;
        g += tg;
        // f' term: d/dz z^{3k}/c_k = 3k z^{3k-1}/c_k; g' term: (3k+1) z^{3k}/d_k
        if (std::abs(w) > 0) {
            fp += BigFloat(static_cast<long>(3 * k), p) * (tf / z);
            gp += BigFloat(static_cast<long>(3 * k + 1), p) * (tg / z);
        }
        mpfr_exp_t et = mpfr_get_exp(abs(tf).raw());
        mpfr_exp_t eg = mpfr_get_exp(abs(tg).raw());
        if ((tf.re.is_zero() && tf.im.is_zero() && tg.re.is_zero() && tg.im.is_zero()) ||
            (et < -static_cast<mpfr_exp_t>(p) - 8 && eg < -static_cast<mpfr_exp_t>(p) - 8))
            break;
    }

    BigFloat third(1.0, p);
    third /= 3.0;
    BigFloat c1 = 1.0 / (pow(BigComplex(3.0, 0.0, p), BigFloat(2.0, p) / 3.0).re * gamma(2.0 * third));
    BigFloat c2 = 1.0 / (pow(BigComplex(3.0, 0.0, p), third).re * gamma(third));

    BigComplex ai = c1 * f - c2 * g;
    BigComplex aip = c1 * fp - c2 * gp;
    return {ai.to_complex(), aip.to_complex(), 0.0};
}

const std::vector<double>& aseq() {
    static const std::vector<double> s = b_sequence_d(BSeqKind::a, 28);
    return s;
}
const std::vector<double>& atseq() {
    static const std::vector<double> s = b_sequence_d(BSeqKind::a_tilde, 28);
    return s;
}

// Exponential-form asymptotics, |arg w| away from pi:
//   Ai(w)  =  exp(-psi + sum (-1)^s a_s /(s psi^s)) / (2 sqrt(pi) w^{1/4})
//   Ai'(w) = -w^{1/4} exp(-psi + sum (-1)^s a~_s /(s psi^s)) / (2 sqrt(pi))
// with psi = (2/3) w^{3/2}. Scaled by exp(-Re psi).
AiPair airy_asymptotic(cplx w) {
    cplx w12 = std::sqrt(w);
    cplx psi = (2.0 / 3.0) * w * w12;
    cplx psi_inv = 1.0 / psi;

    const auto& a = aseq();
    const auto& at = atseq();
    cplx sum_a(0.0), sum_at(0.0);
    cplx p = psi_inv;
    double prev = 1e300;
    for (std::size_t s = 1; s < a.size(); ++s) {
        double sign = (s % 2 == 0) ? 1.0 : -1.0;
        cplx ta = sign * a[s] / static_cast<double>(s) * p;
        cplx tat = sign * at[s] / static_cast<double>(s) * p;
        double mag = std::abs(ta);
        if (mag > prev) break;  // divergent tail reached
        sum_a += ta;
        sum_at += tat;
        prev = mag;
        if (mag < 1e-18) break;
        p *= psi_inv;
    }

    cplx w14 = std::sqrt(w12);
    double ls = -psi.real();
    cplx osc = std::exp(cplx(0.0, -psi.imag()));
    double c = 0.5 / std::sqrt(M_PI);
    cplx ai = c * osc * std::exp(sum_a) / w14;
    cplx aip = -c * w14 * osc * std::exp(sum_at);
    return {ai, aip, ls};
}

AiPair airy_base(cplx w);

// Ai(w) from the two rotated companions; used near the negative real axis.
AiPair airy_by_connection(cplx w) {
    const cplx rot = std::exp(cplx(0.0, 2.0 * M_PI / 3.0));
    const cplx rot_m = std::exp(cplx(0.0, -2.0 * M_PI / 3.0));
    AiPair up = airy_base(w * rot_m);  // Ai(w e^{-2pi i/3})
    AiPair dn = airy_base(w * rot);    // Ai(w e^{+2pi i/3})
    double ls = std::max(up.log_scale, dn.log_scale);
    double eu = std::exp(up.log_scale - ls);
    double ed = std::exp(dn.log_scale - ls);
    AiPair r;
    r.log_scale = ls;
    r.ai = -(rot_m * up.ai * eu + rot * dn.ai * ed);
    // d/dw: Ai'(w) = -e^{-4pi i/3} Ai'(w e^{-2pi i/3}) - e^{4pi i/3} Ai'(w e^{2pi i/3})
    r.aip = -(rot_m * rot_m * up.aip * eu + rot * rot * dn.aip * ed);
    return r;
}

AiPair airy_base(cplx w) {
    if (std::abs(w) <= kSeriesRadius) return airy_series(w);
    double ph = std::arg(w);
    if (std::abs(ph) <= 2.0 * M_PI / 3.0 + 0.05) return airy_asymptotic(w);
    return airy_by_connection(w);
}

}  // namespace

AiryValue airy_complex(cplx w, int j) {
    if (j != 0 && j != 1 && j != -1) throw std::invalid_argument("airy_complex: j must be 0 or +-1");
    cplx rot = std::exp(cplx(0.0, -2.0 * M_PI * j / 3.0));
    AiPair base = airy_base(w * rot);
    AiryValue out;
    out.j = j;
    out.ai = base.ai;
    out.ai_prime = rot * base.aip;
    out.log_scale = base.log_scale;
    return out;
}

std::vector<BigFloat> b_sequence(BSeqKind kind, int s_max) {
    if (s_max < 2) throw std::invalid_argument("b_sequence: s_max must be >= 2");
    const mpfr_prec_t p = 256;
    std::vector<BigFloat> b(static_cast<std::size_t>(s_max) + 1, BigFloat(p));
    BigFloat seed(kind == BSeqKind::a ? 5.0 : -7.0, p);
    seed /= 72.0;
    b[1] = seed;
    b[2] = seed;
    for (int s = 2; s < s_max; ++s) {
        BigFloat acc = 0.5 * (s + 1.0) * b[s];
        BigFloat conv(0.0, p);
        for (int j = 1; j <= s - 1; ++j) conv += b[j] * b[s - j];
        b[s + 1] = acc + 0.5 * conv;
    }
    return b;
}

std::vector<double> b_sequence_d(BSeqKind kind, int s_max) {
    auto b = b_sequence(kind, s_max);
    std::vector<double> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i].to_double();
    return out;
}

}  // namespace whittaker
