#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "dicke/linalg.hpp"
#include "dicke/xstate.hpp"

namespace testutil {

using dicke::Complex;
using dicke::Matrix4;
using dicke::Vector4;

inline Matrix4 random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Matrix4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = Complex(u(rng), u(rng));
    return dicke::Complex(0.5) * (a + dicke::adjoint(a));
}

// Product of complex Givens rotations over all index pairs.
inline Matrix4 random_unitary(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Matrix4 u = Matrix4::identity();
    for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 4; ++q) {
            const double theta = angle(rng);
            const Complex s = std::polar(std::sin(theta), angle(rng));
            Matrix4 r = Matrix4::identity();
            r(p, p) = std::cos(theta);
            r(p, q) = s;
            r(q, p) = -std::conj(s);
            r(q, q) = std::cos(theta);
            u = u * r;
        }
    return u;
}

// Valid X state: populations from normalized exponentials, coherence bounded
// by sqrt(rho_ee rho_gg). Occasionally hits the edges (no coherence, maximal
// coherence, empty symmetric state).
inline dicke::XStateParams random_x_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto exp_draw = [&] { return -std::log(u(rng) + 1e-300); };

    double ee = exp_draw(), ss = exp_draw(), gg = exp_draw();
    const unsigned special = rng() % 8u;
    if (special == 0) ss = 0.0;
    if (special == 1) ee = 0.0;
    const double total = ee + ss + gg;
    ee /= total;
    ss /= total;

    dicke::XStateParams p;
    p.rho_ee = ee;
    p.rho_ss = ss;
    p.rho_gg = 1.0 - ee - ss;

    double ratio = u(rng);
    if (special == 2) ratio = 0.0;
    if (special == 3) ratio = 1.0;
    p.rho_eg = std::polar(ratio * std::sqrt(p.rho_ee * p.rho_gg), 2.0 * std::numbers::pi * u(rng));
    return p;
}

inline Matrix4 projector(const Vector4& v) { return dicke::outer(v, v); }

inline double max_entry_diff(const Matrix4& a, const Matrix4& b) {
    return dicke::max_abs_diff(a, b);
}

}  // namespace testutil
