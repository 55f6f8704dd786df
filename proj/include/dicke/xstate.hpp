#pragma once

#include <cmath>

#include "dicke/errors.hpp"
#include "dicke/linalg.hpp"

namespace dicke {

// Basis orderings used throughout:
//   Product:    |e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>
//   Collective: |e>, |s>, |a>, |g>
// with |e> = |e1 e2>, |g> = |g1 g2>, |s>,|a> = (|e1 g2> +- |g1 e2>)/sqrt(2).
enum class BasisKind { Product, Collective };

// Unitary whose columns are the collective states in product coordinates.
// Entries are exactly 0, 1, +-1/sqrt(2); the matrix is real orthogonal.
inline Matrix4 collective_basis_matrix() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Matrix4 u;
    u(0, 0) = 1.0;                            // |e> = |e1 e2>
    u(1, 1) = inv_sqrt2;                      // |s>
    u(2, 1) = inv_sqrt2;
    u(1, 2) = inv_sqrt2;                      // |a>
    u(2, 2) = -inv_sqrt2;
    u(3, 3) = 1.0;                            // |g> = |g1 g2>
    return u;
}

inline Matrix4 collective_basis_transform(const Matrix4& m, BasisKind from, BasisKind to) {
    if (from == to) return m;
    const Matrix4 u = collective_basis_matrix();
    if (from == BasisKind::Product) return adjoint(u) * m * u;
    return u * m * adjoint(u);
}

// The four independent parameters of the Dicke X-form density matrix:
// populations of |g>, |e>, |s> (rho_aa = 0 in this model) and the
// two-photon coherence between |e> and |g>. The phase of rho_eg matters:
// it sets the direction of maximum squeezing.
struct XStateParams {
    double rho_gg = 0.0;
    double rho_ee = 0.0;
    double rho_ss = 0.0;
    Complex rho_eg{};
};

inline void validate(const XStateParams& p, double tol = 1e-12) {
    const auto in_unit = [tol](double x) { return std::isfinite(x) && x >= -tol && x <= 1.0 + tol; };
    if (!in_unit(p.rho_gg) || !in_unit(p.rho_ee) || !in_unit(p.rho_ss))
        throw InvalidStateParams("populations must lie in [0,1]");
    if (!std::isfinite(p.rho_eg.real()) || !std::isfinite(p.rho_eg.imag()))
        throw InvalidStateParams("rho_eg must be finite");
    if (std::abs(p.rho_gg + p.rho_ee + p.rho_ss - 1.0) > tol)
        throw InvalidStateParams("populations must sum to 1 (rho_aa = 0)");
    if (std::norm(p.rho_eg) > p.rho_ee * p.rho_gg + tol)
        throw InvalidStateParams("|rho_eg|^2 must not exceed rho_ee*rho_gg");
}

inline bool is_valid(const XStateParams& p, double tol = 1e-12) {
    try {
        validate(p, tol);
        return true;
    } catch (const InvalidStateParams&) {
        return false;
    }
}

inline Matrix4 to_density_matrix(const XStateParams& p, BasisKind basis) {
    validate(p);
    Matrix4 m;
    if (basis == BasisKind::Product) {
        m(0, 0) = p.rho_ee;
        m(0, 3) = p.rho_eg;
        m(3, 0) = std::conj(p.rho_eg);
        m(3, 3) = p.rho_gg;
        const double half = 0.5 * p.rho_ss;
        m(1, 1) = half;
        m(1, 2) = half;
        m(2, 1) = half;
        m(2, 2) = half;
    } else {
        m(0, 0) = p.rho_ee;
        m(1, 1) = p.rho_ss;
        m(3, 3) = p.rho_gg;
        m(0, 3) = p.rho_eg;
        m(3, 0) = std::conj(p.rho_eg);
    }
    return m;
}

namespace detail {

inline void require_physical(const Matrix4& m, double tol) {
    if (!all_finite(m)) throw NotPhysical("matrix has non-finite entries");
    if (hermiticity_defect(m) > tol) throw NotPhysical("matrix is not Hermitian");
    if (std::abs(trace(m) - 1.0) > tol) throw NotPhysical("matrix trace differs from 1");
    if (!is_positive_semidefinite(m, tol)) throw NotPhysical("matrix has a negative eigenvalue");
}

}  // namespace detail

// Inverse of to_density_matrix. Rejects matrices outside the X form: any
// one-photon coherence, symmetric-antisymmetric coherence, or population of
// the antisymmetric state larger than tol. Sparsity is checked before
// positivity, so a non-X entry reports NotXForm even when it also breaks
// positivity (one-photon coherences always push the decoupled |a> eigenvalue
// negative).
inline XStateParams from_density_matrix(const Matrix4& m, BasisKind basis, double tol = 1e-10) {
    if (!all_finite(m)) throw NotPhysical("matrix has non-finite entries");
    if (hermiticity_defect(m) > tol) throw NotPhysical("matrix is not Hermitian");
    if (std::abs(trace(m) - 1.0) > tol) throw NotPhysical("matrix trace differs from 1");

    XStateParams p;
    if (basis == BasisKind::Product) {
        static constexpr int one_photon[8][2] = {{0, 1}, {0, 2}, {1, 0}, {2, 0},
                                                 {1, 3}, {2, 3}, {3, 1}, {3, 2}};
        for (const auto& ij : one_photon)
            if (std::abs(m(ij[0], ij[1])) > tol)
                throw NotXForm(ij[0], ij[1], "one-photon coherence outside the X form");

        const double pop1 = m(1, 1).real();
        const double pop2 = m(2, 2).real();
        const Complex sa = 0.5 * (m(1, 1) - m(2, 2)) - Complex(0.0, 1.0) * m(1, 2).imag();
        if (std::abs(sa) > tol)
            throw NotXForm(1, 2, "symmetric-antisymmetric coherence outside the X form");
        const double rho_aa = 0.5 * (pop1 + pop2) - m(1, 2).real();
        if (std::abs(rho_aa) > tol)
            throw NotXForm(2, 2, "antisymmetric-state population outside the Dicke model");

        p.rho_ee = m(0, 0).real();
        p.rho_gg = m(3, 3).real();
        p.rho_ss = 0.5 * (pop1 + pop2) + m(1, 2).real();
        p.rho_eg = m(0, 3);
    } else {
        static constexpr int forbidden[5][2] = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
        for (const auto& ij : forbidden)
            if (std::abs(m(ij[0], ij[1])) > tol || std::abs(m(ij[1], ij[0])) > tol)
                throw NotXForm(ij[0], ij[1], "coherence outside the X form");
        if (std::abs(m(2, 2)) > tol)
            throw NotXForm(2, 2, "antisymmetric-state population outside the Dicke model");

        p.rho_ee = m(0, 0).real();
        p.rho_ss = m(1, 1).real();
        p.rho_gg = m(3, 3).real();
        p.rho_eg = m(0, 3);
    }

    if (!is_positive_semidefinite(m, tol)) throw NotPhysical("matrix has a negative eigenvalue");

    validate(p, std::max(tol, 1e-12));
    return p;
}

// Eigen-decomposition of the X state. The antisymmetric state is decoupled
// (pi_a = 0 always); |s> stays an eigenstate; the remaining pair lives in the
// span of |g>, |e>. Vectors are given in the collective basis.
struct SpectralDecomposition {
    Vector4 psi_plus, psi_minus, psi_s, psi_a;
    double pi_plus = 0.0, pi_minus = 0.0, pi_s = 0.0, pi_a = 0.0;
};

inline SpectralDecomposition spectral_decompose(const XStateParams& p) {
    validate(p);
    SpectralDecomposition d;
    d.psi_s = Vector4::unit(1);
    d.psi_a = Vector4::unit(2);
    d.pi_s = p.rho_ss;
    d.pi_a = 0.0;

    const double diff = p.rho_gg - p.rho_ee;
    const double sum = p.rho_gg + p.rho_ee;
    const double e2 = std::norm(p.rho_eg);
    const double root = std::sqrt(diff * diff + 4.0 * e2);

    d.pi_plus = 0.5 * (sum + root);
    // Product form avoids cancelation when the g-e block is near rank one.
    d.pi_minus = (sum + root) > 0.0 ? std::max(0.0, 2.0 * (p.rho_gg * p.rho_ee - e2) / (sum + root)) : 0.0;

    // Weight of |g> in psi_plus; the difference form cancels badly when
    // rho_ee > rho_gg and the coherence is small.
    const double w_plus = diff >= 0.0 ? 0.5 * (diff + root) : 2.0 * e2 / (root - diff);
    const double norm2 = w_plus * w_plus + e2;

    if (norm2 == 0.0) {
        // rho_eg = 0: populations are already eigenvalues. With rho_ee = rho_gg
        // any orthonormal pair works; take |g>, |e>.
        const bool excited_dominant = p.rho_ee > p.rho_gg;
        d.psi_plus = Vector4::unit(excited_dominant ? 0 : 3);
        d.psi_minus = Vector4::unit(excited_dominant ? 3 : 0);
        return d;
    }

    const double inv = 1.0 / std::sqrt(norm2);
    d.psi_plus[0] = p.rho_eg * inv;           // |e> amplitude
    d.psi_plus[3] = w_plus * inv;             // |g> amplitude
    d.psi_minus[0] = -w_plus * inv;
    d.psi_minus[3] = std::conj(p.rho_eg) * inv;
    return d;
}

}  // namespace dicke
