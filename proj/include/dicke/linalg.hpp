#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "dicke/errors.hpp"

namespace dicke {

using Complex = std::complex<double>;

// 4x4 complex matrix, row-major. Plain value type; all operations below are pure.
struct Matrix4 {
    std::array<Complex, 16> m{};

    Complex& operator()(int i, int j) { return m[4 * i + j]; }
    const Complex& operator()(int i, int j) const { return m[4 * i + j]; }

    static Matrix4 identity() {
        Matrix4 r;
        for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
        return r;
    }

    static Matrix4 diagonal(double d0, double d1, double d2, double d3) {
        Matrix4 r;
        r(0, 0) = d0;
        r(1, 1) = d1;
        r(2, 2) = d2;
        r(3, 3) = d3;
        return r;
    }
};

inline Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (int k = 0; k < 16; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}

inline Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (int k = 0; k < 16; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
}

inline Matrix4 operator*(Complex s, const Matrix4& a) {
    Matrix4 r;
    for (int k = 0; k < 16; ++k) r.m[k] = s * a.m[k];
    return r;
}

// Standard matrix product.
inline Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Complex acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

inline Matrix4 adjoint(const Matrix4& a) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

inline Complex trace(const Matrix4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

inline double max_abs_diff(const Matrix4& a, const Matrix4& b) {
    double d = 0.0;
    for (int k = 0; k < 16; ++k) d = std::max(d, std::abs(a.m[k] - b.m[k]));
    return d;
}

// max_ij |a_ij - conj(a_ji)|
inline double hermiticity_defect(const Matrix4& a) {
    double d = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
    return d;
}

inline bool is_hermitian(const Matrix4& a, double tol = 1e-12) {
    return hermiticity_defect(a) <= tol;
}

inline bool all_finite(const Matrix4& a) {
    for (const Complex& z : a.m)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

struct Vector4 {
    std::array<Complex, 4> v{};

    Complex& operator[](int i) { return v[i]; }
    const Complex& operator[](int i) const { return v[i]; }

    static Vector4 unit(int i) {
        Vector4 r;
        r[i] = 1.0;
        return r;
    }
};

// Conjugate-linear in the first argument: <a|b>.
inline Complex dot(const Vector4& a, const Vector4& b) {
    Complex acc = 0.0;
    for (int i = 0; i < 4; ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline double norm(const Vector4& a) { return std::sqrt(std::real(dot(a, a))); }

inline Vector4 normalized(const Vector4& a) {
    const double n = norm(a);
    Vector4 r;
    for (int i = 0; i < 4; ++i) r[i] = a[i] / n;
    return r;
}

// |a><b|
inline Matrix4 outer(const Vector4& a, const Vector4& b) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a[i] * std::conj(b[j]);
    return r;
}

inline Vector4 apply(const Matrix4& m, const Vector4& x) {
    Vector4 r;
    for (int i = 0; i < 4; ++i) {
        Complex acc = 0.0;
        for (int j = 0; j < 4; ++j) acc += m(i, j) * x[j];
        r[i] = acc;
    }
    return r;
}

// Full spectral decomposition of a Hermitian 4x4. Eigenvalues ascending,
// eigenvectors orthonormal, columns phase-fixed so the largest-magnitude
// entry is real and positive.
struct Eigensystem4 {
    std::array<double, 4> values{};
    std::array<Vector4, 4> vectors{};
};

namespace detail {

inline double off_diagonal_norm(const Matrix4& a) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Rotate so the largest-magnitude entry becomes real positive.
inline void fix_phase(Vector4& v) {
    int k = 0;
    double best = std::abs(v[0]);
    for (int i = 1; i < 4; ++i) {
        const double a = std::abs(v[i]);
        if (a > best) {
            best = a;
            k = i;
        }
    }
    if (best == 0.0) return;
    const Complex phase = std::conj(v[k]) / best;
    for (int i = 0; i < 4; ++i) v[i] *= phase;
    v[k] = best;  // exact real entry
}

inline bool lex_less(const Vector4& a, const Vector4& b) {
    for (int i = 0; i < 4; ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

}  // namespace detail

// Cyclic Jacobi diagonalization with complex Givens rotations. The dimension is
// fixed and tiny, so the iteration runs until the off-diagonal Frobenius norm
// drops below 1e-14 (or 100 sweeps). Within degenerate clusters
// (eigenvalue gap < 1e-10) the vectors are re-orthonormalized by sequential
// projection; only the spanned subspace is well defined there.
inline Eigensystem4 eigen_hermitian(const Matrix4& input) {
    if (!all_finite(input)) throw NonHermitianInput("eigen_hermitian: non-finite entries");
    if (hermiticity_defect(input) > 1e-10)
        throw NonHermitianInput("eigen_hermitian: matrix is not Hermitian (defect > 1e-10)");

    // Work on the Hermitian average so tolerated input asymmetries cannot bias the iteration.
    Matrix4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    Matrix4 v = Matrix4::identity();

    for (int sweep = 0; sweep < 100 && detail::off_diagonal_norm(a) > 1e-14; ++sweep) {
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq == 0.0) continue;

                const Complex phase = a(p, q) / apq;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = phase * (t * c);

                // a <- R^dagger a R with R acting on the (p,q) plane:
                // R(p,p)=c, R(p,q)=s, R(q,p)=-conj(s), R(q,q)=c.
                for (int k = 0; k < 4; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
                a(p, q) = 0.0;  // zeroed by construction
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (int k = 0; k < 4; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    Eigensystem4 out;
    std::array<int, 4> order{0, 1, 2, 3};
    std::array<Vector4, 4> cols;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) cols[j][i] = v(i, j);
    for (auto& col : cols) detail::fix_phase(col);

    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        if (a(i, i).real() != a(j, j).real()) return a(i, i).real() < a(j, j).real();
        return detail::lex_less(cols[i], cols[j]);
    });
    for (int k = 0; k < 4; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        out.vectors[k] = cols[order[k]];
    }

    // Sequential projection inside degenerate clusters.
    for (int k = 1; k < 4; ++k) {
        if (out.values[k] - out.values[k - 1] >= 1e-10) continue;
        for (int j = k - 1; j >= 0 && out.values[k] - out.values[j] < 1e-10; --j) {
            const Complex overlap = dot(out.vectors[j], out.vectors[k]);
            for (int i = 0; i < 4; ++i) out.vectors[k][i] -= overlap * out.vectors[j][i];
        }
        out.vectors[k] = normalized(out.vectors[k]);
        detail::fix_phase(out.vectors[k]);
    }

    return out;
}

// min eigenvalue >= -tol
inline bool is_positive_semidefinite(const Matrix4& m, double tol) {
    return eigen_hermitian(m).values[0] >= -tol;
}

}  // namespace dicke
