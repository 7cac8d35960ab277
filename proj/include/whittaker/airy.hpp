#pragma once

#include <complex>
#include <vector>

#include "whittaker/bigfloat.hpp"

namespace whittaker {

using cplx = std::complex<double>;

// Value of a rotated Airy function Ai_j(w) = Ai(w e^{-2 pi i j/3}) together
// with its derivative in w (chain factor included, so the triple identity
// Ai_0 + e^{-2pi i/3} Ai_1 + e^{2pi i/3} Ai_-1 = 0 also holds term-wise for
// the derivatives). Values are scaled: true value = field * exp(log_scale).
struct AiryValue {
    int j = 0;
    cplx ai{0.0, 0.0};
    cplx ai_prime{0.0, 0.0};
    double log_scale = 0.0;

    cplx ai_unscaled() const { return ai * std::exp(log_scale); }
    cplx ai_prime_unscaled() const { return ai_prime * std::exp(log_scale); }
};

// Complex Airy function of rotation index j in {0, +1, -1}. Maclaurin series
// in extended precision below the crossover radius, exponential-form
// asymptotics above it; the rotation connection identity covers arguments
// close to the negative real axis where a single expansion loses accuracy.
AiryValue airy_complex(cplx w, int j);

// Rational sequences from the asymptotic exponent of Ai and Ai':
// a_1 = a_2 = 5/72, a~_1 = a~_2 = -7/72, both continued by
// b_{s+1} = (s+1) b_s / 2 + (1/2) sum_{j=1}^{s-1} b_j b_{s-j}.
enum class BSeqKind { a, a_tilde };
std::vector<BigFloat> b_sequence(BSeqKind kind, int s_max);
std::vector<double> b_sequence_d(BSeqKind kind, int s_max);

}  // namespace whittaker
