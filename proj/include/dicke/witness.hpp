#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "dicke/linalg.hpp"
#include "dicke/xstate.hpp"

namespace dicke {

enum class Subsystem { First, Second };

// Transpose one atom's indices of a product-basis two-qubit operator.
// Involutive and trace preserving; Hermitian input stays Hermitian.
inline Matrix4 partial_transpose(const Matrix4& m, Subsystem which = Subsystem::First) {
    Matrix4 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    if (which == Subsystem::First)
                        r(2 * a + b, 2 * c + d) = m(2 * c + b, 2 * a + d);
                    else
                        r(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
                }
    return r;
}

// The four partial-transpose eigenvalues of an X state in closed form:
//   mu_1+- = rho_ss/2 +- |rho_eg|
//   mu_2+- = [(rho_ee + rho_gg) +- sqrt((rho_ee - rho_gg)^2 + rho_ss^2)]/2
// mu_1+ and mu_2+ are nonnegative for every valid state.
struct PtEigenvalues {
    double mu_1p = 0.0, mu_1m = 0.0, mu_2p = 0.0, mu_2m = 0.0;
};

inline PtEigenvalues pt_eigenvalues_closed_form(const XStateParams& p) {
    validate(p);
    const double e = std::abs(p.rho_eg);
    const double half_ss = 0.5 * p.rho_ss;
    const double sum = p.rho_ee + p.rho_gg;
    const double diff = p.rho_ee - p.rho_gg;
    const double root = std::sqrt(diff * diff + p.rho_ss * p.rho_ss);
    return {half_ss + e, half_ss - e, 0.5 * (sum + root), 0.5 * (sum - root)};
}

// Negativity plus the two entanglement criteria. criterion_coherence is the
// two-photon-coherence route (mu_1- < 0, equivalently |rho_eg| > rho_ss/2);
// criterion_population the collective-population route (mu_2- < 0,
// equivalently rho_ss > 2 sqrt(rho_ee rho_gg)). A physical X state can
// satisfy at most one of them.
struct EntanglementReport {
    double negativity_e = 0.0;
    PtEigenvalues mu;
    bool criterion_coherence = false;
    bool criterion_population = false;
};

inline EntanglementReport entanglement_report(const XStateParams& p) {
    EntanglementReport r;
    r.mu = pt_eigenvalues_closed_form(p);
    double negative_sum = 0.0;
    for (double mu : {r.mu.mu_1p, r.mu.mu_1m, r.mu.mu_2p, r.mu.mu_2m})
        if (mu < 0.0) negative_sum += mu;
    r.negativity_e = std::max(0.0, -2.0 * negative_sum);
    r.criterion_coherence = r.mu.mu_1m < 0.0;
    r.criterion_population = r.mu.mu_2m < 0.0;
    return r;
}

namespace detail {

using Mat2 = std::array<Complex, 4>;  // row-major 2x2

inline Matrix4 kron(const Mat2& a, const Mat2& b) {
    Matrix4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a[2 * i + j] * b[2 * k + l];
    return r;
}

inline Mat2 pauli_x() { return {Complex(0), Complex(1), Complex(1), Complex(0)}; }
inline Mat2 pauli_y() { return {Complex(0), Complex(0, -1), Complex(0, 1), Complex(0)}; }
inline Mat2 pauli_z() { return {Complex(1), Complex(0), Complex(0), Complex(-1)}; }
inline Mat2 identity2() { return {Complex(1), Complex(0), Complex(0), Complex(1)}; }

inline Matrix4 collective_spin(const Mat2& sigma) {
    const Matrix4 first = kron(sigma, identity2());
    const Matrix4 second = kron(identity2(), sigma);
    return Complex(0.5) * (first + second);
}

}  // namespace detail

// Collective spin components S_k = (sigma_k x I + I x sigma_k)/2 in the
// product basis, with |e> the spin-up single-atom state.
inline Matrix4 collective_sx() { return detail::collective_spin(detail::pauli_x()); }
inline Matrix4 collective_sy() { return detail::collective_spin(detail::pauli_y()); }
inline Matrix4 collective_sz() { return detail::collective_spin(detail::pauli_z()); }

// First and second moments of the collective spin, taken directly from the
// density matrix by operator algebra. variance_at(theta) is the variance of
// S_theta = cos(theta) S_x + sin(theta) S_y; this is the independent route
// against which the closed-form squeezing parameter is checked.
struct SpinMoments {
    double mean_sx = 0.0, mean_sy = 0.0, mean_sz = 0.0;
    double sxx = 0.0, syy = 0.0, sxy_sym = 0.0;  // <Sx^2>, <Sy^2>, <SxSy + SySx>

    double variance_at(double theta) const {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const double second = c * c * sxx + s * s * syy + c * s * sxy_sym;
        const double first = c * mean_sx + s * mean_sy;
        double v = second - first * first;
        if (v < 0.0 && v > -1e-12) v = 0.0;  // roundoff on pure squeezed states
        return v;
    }
};

inline SpinMoments spin_moments(const Matrix4& rho_product) {
    detail::require_physical(rho_product, 1e-10);

    const Matrix4 sx = collective_sx();
    const Matrix4 sy = collective_sy();
    const Matrix4 sz = collective_sz();

    const auto expect = [&rho_product](const Matrix4& op) {
        return std::real(trace(rho_product * op));
    };

    SpinMoments m;
    m.mean_sx = expect(sx);
    m.mean_sy = expect(sy);
    m.mean_sz = expect(sz);
    m.sxx = expect(sx * sx);
    m.syy = expect(sy * sy);
    m.sxy_sym = expect(sx * sy + sy * sx);
    return m;
}

// Angle of maximum squeezing in the x-y plane, folded into [0, pi).
// The transverse variance is [1 + rho_ss + 2|rho_eg| cos(2 theta + arg rho_eg)]/2,
// minimized at theta* = (pi - arg rho_eg)/2.
inline double optimal_squeezing_angle(const Complex& rho_eg) {
    double theta = 0.5 * (std::numbers::pi - std::arg(rho_eg));
    theta = std::fmod(theta, std::numbers::pi);
    if (theta < 0.0) theta += std::numbers::pi;
    return theta;
}

// Wineland-style parameter 2 * min-variance / <Sz>^2. Undefined when the mean
// spin vanishes; callers must fall back to the Kitagawa-Ueda form then.
inline std::optional<double> squeezing_wineland(const XStateParams& p) {
    validate(p);
    const double sz = p.rho_ee - p.rho_gg;
    if (std::abs(sz) <= 1e-9) return std::nullopt;
    const double xi_ku = 1.0 + (p.rho_ss - 2.0 * std::abs(p.rho_eg));
    return xi_ku / (sz * sz);
}

// Kitagawa-Ueda parameter: twice the minimal transverse variance,
// 1 + rho_ss - 2|rho_eg|. Values below 1 signal squeezing. The grouping
// keeps the comparison against 1 exact at the threshold.
struct SqueezingResult {
    double xi_ku = 1.0;
    double theta_opt = 0.0;
    std::optional<double> xi_wineland;
};

inline SqueezingResult squeezing_ku(const XStateParams& p) {
    validate(p);
    SqueezingResult r;
    r.xi_ku = 1.0 + (p.rho_ss - 2.0 * std::abs(p.rho_eg));
    r.theta_opt = optimal_squeezing_angle(p.rho_eg);
    r.xi_wineland = squeezing_wineland(p);
    return r;
}

}  // namespace dicke
