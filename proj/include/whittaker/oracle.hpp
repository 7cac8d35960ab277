#pragma once

#include <complex>
#include <string>

#include "whittaker/bigfloat.hpp"

namespace whittaker {

// Independent high-precision evaluation of the Whittaker functions, used only
// to validate the asymptotic evaluators. Precision is passed explicitly as a
// decimal digit count; internal working precision is raised further whenever
// a method is known to cancel (e.g. the Maclaurin series at arg(w) near pi).
enum class OracleMethod { series, quadrature, finite_sum, connection, reflection };

struct OracleValue {
    BigComplex value;
    double est_accuracy = 0.0;  // relative, from convergence diagnostics
    OracleMethod method = OracleMethod::series;

    std::complex<double> to_complex() const { return value.to_complex(); }
};

inline const char* oracle_method_name(OracleMethod m) {
    switch (m) {
        case OracleMethod::series: return "series";
        case OracleMethod::quadrature: return "quadrature";
        case OracleMethod::finite_sum: return "finite_sum";
        case OracleMethod::connection: return "connection";
        case OracleMethod::reflection: return "reflection";
    }
    return "?";
}

// M_{kappa,mu}(w) for w in the closed upper half plane. Maclaurin series of
// the defining Kummer function, cross-checked against quadrature of the
// integral representation for moderate |w|.
OracleValue whittaker_M_reference(std::complex<double> w, double mu, double kappa, int digits);

// W_{kappa,mu}(w): exact finite sum when mu + kappa - 1/2 is a nonnegative
// integer, otherwise quadrature of the Kummer-U integral (contour rotated for
// complex w). Throws std::domain_error when neither branch applies.
OracleValue whittaker_W_reference(std::complex<double> w, double mu, double kappa, int digits);

// W_{-kappa,mu}(w e^{-pi i}) for w in the closed upper half plane; direct
// route via Schwarz reflection + rotated integral away from the positive real
// axis, connection-formula route near it.
OracleValue whittaker_Wminus_reference(std::complex<double> w, double mu, double kappa, int digits);

// Quadrature-only M evaluation (integral representation); exposed separately
// so series/quadrature can be compared as genuinely distinct code paths.
OracleValue whittaker_M_quadrature(std::complex<double> w, double mu, double kappa, int digits);
// Integral-only W evaluation (Kummer-U route), regardless of the finite-sum
// applicability.
OracleValue whittaker_W_integral(std::complex<double> w, double mu, double kappa, int digits);

// Log-gamma in extended precision (Stirling + Bernoulli + recurrence shift).
// Throws std::domain_error at nonpositive integers.
BigComplex gamma_reference_ln(std::complex<double> x, int digits);
BigComplex gamma_reference(std::complex<double> x, int digits);

enum class WhittakerKind { M, W, Wminus };

// Schwarz reflections (lower half plane) and the analytic continuation of M
// across the cut: M_{kappa,mu}(w e^{+-pi i}) = +- i e^{+-mu pi i} M_{-kappa,mu}(w).
OracleValue symmetry_reflection(WhittakerKind fn, std::complex<double> w, double mu, double kappa,
                                int digits);
OracleValue m_continuation(std::complex<double> w, int sign, double mu, double kappa, int digits);

// Relative residual of the connection formula linking the three solutions at
// argument w (upper half plane), computed from oracle values.
double connection_residual(std::complex<double> w, double mu, double kappa, int digits);

}  // namespace whittaker
