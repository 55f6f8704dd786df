#pragma once

#include <cmath>
#include <complex>

#include "dicke/errors.hpp"
#include "dicke/xstate.hpp"

namespace dicke {

// Broadband driving field: mean photon number N and two-photon correlation M.
// The named kinds pin |M| to its characteristic value; Custom exposes the raw
// pair for intermediate correlation strengths.
enum class FieldKind { Thermal, ClassicalSqueezed, QuantumSqueezed, Custom };

struct FieldParams {
    double n_bar = 0.0;
    Complex m_corr{};
    FieldKind kind = FieldKind::Thermal;
};

inline FieldParams thermal_field(double n_bar) {
    return {n_bar, Complex{}, FieldKind::Thermal};
}

// |M| = N (maximal classical two-photon correlations).
inline FieldParams classical_squeezed_field(double n_bar, double m_arg = 0.0) {
    return {n_bar, std::polar(n_bar, m_arg), FieldKind::ClassicalSqueezed};
}

// |M| = sqrt(N(N+1)) (perfect quantum correlations).
inline FieldParams quantum_squeezed_field(double n_bar, double m_arg = 0.0) {
    return {n_bar, std::polar(std::sqrt(n_bar * (n_bar + 1.0)), m_arg), FieldKind::QuantumSqueezed};
}

inline FieldParams custom_field(double n_bar, Complex m_corr) {
    return {n_bar, m_corr, FieldKind::Custom};
}

inline void validate(const FieldParams& f) {
    if (!std::isfinite(f.n_bar) || f.n_bar < 0.0)
        throw UnphysicalField("mean photon number must be finite and nonnegative");
    if (!std::isfinite(f.m_corr.real()) || !std::isfinite(f.m_corr.imag()))
        throw UnphysicalField("two-photon correlation must be finite");
    const double m_abs = std::abs(f.m_corr);
    const double bound = std::sqrt(f.n_bar * (f.n_bar + 1.0));
    const double tol = 1e-12 * (1.0 + f.n_bar);
    if (m_abs > bound + tol)
        throw UnphysicalField("|M| exceeds the physical bound sqrt(N(N+1))");
    switch (f.kind) {
        case FieldKind::Thermal:
            if (m_abs != 0.0) throw UnphysicalField("thermal field requires M = 0");
            break;
        case FieldKind::ClassicalSqueezed:
            if (std::abs(m_abs - f.n_bar) > tol)
                throw UnphysicalField("classical squeezed field requires |M| = N");
            break;
        case FieldKind::QuantumSqueezed:
            if (std::abs(m_abs - bound) > tol)
                throw UnphysicalField("quantum squeezed field requires |M| = sqrt(N(N+1))");
            break;
        case FieldKind::Custom:
            break;
    }
}

// Steady state of the driven two-atom system:
//   rho_ee   = [N^2(2N+1) - (2N-1)|M|^2] / [(2N+1) D]
//   rho_ss   = [N(N+1) - |M|^2] / D
//   |rho_eg| = |M| / [(2N+1) D]
// with D = 3N^2 + 3N + 1 - 3|M|^2 and arg(rho_eg) = arg(M).
//
// The named kinds use the formulas with their |M| substituted analytically:
// the quantum field sits exactly on the bound |M|^2 = N(N+1), where the raw
// numerators and D cancel catastrophically at large N (D = 1 arrives as a
// difference of ~N^2 terms). Each branch computes the shared denominator once,
// and rho_gg is set by subtraction to keep the trace exactly 1.
inline XStateParams steady_state(const FieldParams& f) {
    validate(f);
    const double n = f.n_bar;
    const double two_n1 = 2.0 * n + 1.0;

    XStateParams p;
    double eg_abs = 0.0;
    switch (f.kind) {
        case FieldKind::Thermal: {
            const double denom = 3.0 * n * n + 3.0 * n + 1.0;
            p.rho_ee = n * n / denom;
            p.rho_ss = n * (n + 1.0) / denom;
            break;
        }
        case FieldKind::ClassicalSqueezed: {
            const double denom = 3.0 * n + 1.0;
            p.rho_ee = 2.0 * n * n / (two_n1 * denom);
            p.rho_ss = n / denom;
            eg_abs = n / (two_n1 * denom);
            break;
        }
        case FieldKind::QuantumSqueezed: {
            p.rho_ee = n / two_n1;
            p.rho_ss = 0.0;
            eg_abs = std::sqrt(n * (n + 1.0)) / two_n1;
            break;
        }
        case FieldKind::Custom: {
            const double m_abs = std::abs(f.m_corr);
            const double m2 = m_abs * m_abs;
            const double denom = 3.0 * n * n + 3.0 * n + 1.0 - 3.0 * m2;
            p.rho_ee = (n * n * two_n1 - (2.0 * n - 1.0) * m2) / (two_n1 * denom);
            p.rho_ss = (n * (n + 1.0) - m2) / denom;
            eg_abs = m_abs / (two_n1 * denom);
            break;
        }
    }
    p.rho_eg = std::polar(eg_abs, std::arg(f.m_corr));
    p.rho_gg = 1.0 - p.rho_ee - p.rho_ss;
    return p;
}

// 2|rho_eg| - rho_ss for the classical squeezed field, in closed form:
// N(1-2N) / [(2N+1)(3N+1)]. Positive values mean the steady state is both
// entangled and spin squeezed; the sign flips at N = 1/2.
inline double classical_witness_parameter(double n_bar) {
    return n_bar * (1.0 - 2.0 * n_bar) / ((2.0 * n_bar + 1.0) * (3.0 * n_bar + 1.0));
}

// Pure steady state under the quantum squeezed field, in the collective basis:
// [sqrt(N+1)|g> + sqrt(N)|e>] / sqrt(2N+1).
inline Vector4 quantum_pure_state(double n_bar) {
    if (!std::isfinite(n_bar) || n_bar < 0.0)
        throw UnphysicalField("mean photon number must be finite and nonnegative");
    const double inv = 1.0 / std::sqrt(2.0 * n_bar + 1.0);
    Vector4 v;
    v[0] = std::sqrt(n_bar) * inv;
    v[3] = std::sqrt(n_bar + 1.0) * inv;
    return v;
}

}  // namespace dicke
