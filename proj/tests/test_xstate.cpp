#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "dicke/fields.hpp"
#include "dicke/xstate.hpp"
#include "helpers.hpp"

using namespace dicke;
using testutil::random_x_state;

namespace {

Matrix4 reconstruct(const SpectralDecomposition& d) {
    return Complex(d.pi_plus) * testutil::projector(d.psi_plus) +
           Complex(d.pi_minus) * testutil::projector(d.psi_minus) +
           Complex(d.pi_s) * testutil::projector(d.psi_s) +
           Complex(d.pi_a) * testutil::projector(d.psi_a);
}

}  // namespace

TEST_CASE("the collective change of basis is unitary with exact entries") {
    const Matrix4 u = collective_basis_matrix();
    REQUIRE(max_abs_diff(u * adjoint(u), Matrix4::identity()) < 1e-15);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    REQUIRE(u(1, 1).real() == inv_sqrt2);
    REQUIRE(u(2, 1).real() == inv_sqrt2);
    REQUIRE(u(1, 2).real() == inv_sqrt2);
    REQUIRE(u(2, 2).real() == -inv_sqrt2);
    REQUIRE(u(0, 0).real() == 1.0);
    REQUIRE(u(3, 3).real() == 1.0);
}

TEST_CASE("ground state maps to a corner projector in the product basis") {
    const XStateParams p{1.0, 0.0, 0.0, Complex{}};
    const Matrix4 m = to_density_matrix(p, BasisKind::Product);
    REQUIRE(max_abs_diff(m, Matrix4::diagonal(0.0, 0.0, 0.0, 1.0)) == 0.0);
}

TEST_CASE("pure symmetric state fills the central block with one half") {
    const XStateParams p{0.0, 0.0, 1.0, Complex{}};
    const Matrix4 m = to_density_matrix(p, BasisKind::Product);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) REQUIRE(m(i, j) == Complex(0.5));
    REQUIRE(m(0, 0) == Complex(0.0));
    REQUIRE(m(3, 3) == Complex(0.0));
    REQUIRE(m(0, 3) == Complex(0.0));
}

TEST_CASE("thermal steady state at N=1 is the expected diagonal mixture") {
    const XStateParams p = steady_state(thermal_field(1.0));
    REQUIRE(p.rho_ee == Catch::Approx(1.0 / 7.0).margin(1e-15));
    REQUIRE(p.rho_ss == Catch::Approx(2.0 / 7.0).margin(1e-15));
    REQUIRE(p.rho_gg == Catch::Approx(4.0 / 7.0).margin(1e-15));
    REQUIRE(std::abs(p.rho_eg) == 0.0);

    const Matrix4 m = to_density_matrix(p, BasisKind::Collective);
    REQUIRE(m(0, 0).real() == Catch::Approx(1.0 / 7.0).margin(1e-15));
    REQUIRE(m(1, 1).real() == Catch::Approx(2.0 / 7.0).margin(1e-15));
    REQUIRE(m(2, 2) == Complex(0.0));
    REQUIRE(m(3, 3).real() == Catch::Approx(4.0 / 7.0).margin(1e-15));
}

TEST_CASE("invalid parameters are rejected") {
    REQUIRE_THROWS_AS(validate(XStateParams{-0.1, 0.6, 0.5, Complex{}}), InvalidStateParams);
    REQUIRE_THROWS_AS(validate(XStateParams{0.5, 0.4, 0.2, Complex{}}), InvalidStateParams);
    REQUIRE_THROWS_AS(validate(XStateParams{0.5, 0.5, 0.0, Complex(0.6, 0.0)}),
                      InvalidStateParams);
    REQUIRE_THROWS_AS(to_density_matrix(XStateParams{0.5, 0.4, 0.2, Complex{}}, BasisKind::Product),
                      InvalidStateParams);
}

TEST_CASE("round trip through the density matrix preserves the parameters") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const XStateParams p = random_x_state(rng);
        for (BasisKind basis : {BasisKind::Product, BasisKind::Collective}) {
            const XStateParams q = from_density_matrix(to_density_matrix(p, basis), basis);
            REQUIRE(q.rho_gg == Catch::Approx(p.rho_gg).margin(1e-12));
            REQUIRE(q.rho_ee == Catch::Approx(p.rho_ee).margin(1e-12));
            REQUIRE(q.rho_ss == Catch::Approx(p.rho_ss).margin(1e-12));
            REQUIRE(std::abs(q.rho_eg - p.rho_eg) < 1e-12);
        }
    }
}

TEST_CASE("one-photon coherences are flagged as non-X-form") {
    Matrix4 m = to_density_matrix(XStateParams{0.5, 0.3, 0.2, Complex{}}, BasisKind::Product);
    m(0, 1) = 0.1;
    m(1, 0) = 0.1;
    try {
        from_density_matrix(m, BasisKind::Product);
        FAIL("expected NotXForm");
    } catch (const NotXForm& e) {
        REQUIRE(e.row == 0);
        REQUIRE(e.col == 1);
    }
}

TEST_CASE("antisymmetric population is flagged as non-X-form") {
    // |e1 g2><e1 g2| has rho_aa = 1/2.
    Matrix4 m;
    m(1, 1) = 1.0;
    REQUIRE_THROWS_AS(from_density_matrix(m, BasisKind::Product), NotXForm);

    Matrix4 c;  // collective-basis |a><a|
    c(2, 2) = 1.0;
    REQUIRE_THROWS_AS(from_density_matrix(c, BasisKind::Collective), NotXForm);
}

TEST_CASE("unphysical matrices are rejected before X-form checks") {
    // X sparsity but coherence beyond the positivity bound.
    Matrix4 m = to_density_matrix(XStateParams{0.5, 0.5, 0.0, Complex(0.49, 0.0)},
                                  BasisKind::Product);
    m(0, 3) = 0.6;
    m(3, 0) = 0.6;
    REQUIRE_THROWS_AS(from_density_matrix(m, BasisKind::Product), NotPhysical);

    Matrix4 t = Matrix4::diagonal(0.5, 0.0, 0.0, 0.6);  // trace 1.1
    REQUIRE_THROWS_AS(from_density_matrix(t, BasisKind::Product), NotPhysical);
}

TEST_CASE("pure-state projector of the quantum field at N=1 extracts exactly") {
    const Vector4 psi = quantum_pure_state(1.0);
    const Matrix4 rho_coll = testutil::projector(psi);
    const XStateParams p = from_density_matrix(rho_coll, BasisKind::Collective);
    REQUIRE(p.rho_gg == Catch::Approx(2.0 / 3.0).margin(1e-12));
    REQUIRE(p.rho_ee == Catch::Approx(1.0 / 3.0).margin(1e-12));
    REQUIRE(p.rho_ss == 0.0);
    REQUIRE(p.rho_eg.real() == Catch::Approx(std::sqrt(2.0) / 3.0).margin(1e-12));
    REQUIRE(p.rho_eg.imag() == 0.0);
}

TEST_CASE("basis transform is the identity when source and target agree") {
    std::mt19937_64 rng(11);
    const Matrix4 m = testutil::random_hermitian(rng);
    REQUIRE(max_abs_diff(collective_basis_transform(m, BasisKind::Product, BasisKind::Product), m) ==
            0.0);
}

TEST_CASE("|e1 g2> projector splits evenly between |s> and |a>") {
    Matrix4 m;
    m(1, 1) = 1.0;
    const Matrix4 c = collective_basis_transform(m, BasisKind::Product, BasisKind::Collective);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) REQUIRE(std::abs(c(i, j) - Complex(0.5)) < 1e-15);
    REQUIRE(std::abs(c(0, 0)) < 1e-15);
    REQUIRE(std::abs(c(3, 3)) < 1e-15);

    // |g1 e2> picks up the opposite sign on the s-a coherences.
    Matrix4 m2;
    m2(2, 2) = 1.0;
    const Matrix4 c2 = collective_basis_transform(m2, BasisKind::Product, BasisKind::Collective);
    REQUIRE(std::abs(c2(1, 2) - Complex(-0.5)) < 1e-15);
    REQUIRE(std::abs(c2(1, 1) - Complex(0.5)) < 1e-15);
}

TEST_CASE("X-form states have a decoupled antisymmetric state") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix4 rho = to_density_matrix(random_x_state(rng), BasisKind::Product);
        const Matrix4 c = collective_basis_transform(rho, BasisKind::Product, BasisKind::Collective);
        for (int i = 0; i < 4; ++i) {
            REQUIRE(std::abs(c(2, i)) < 1e-14);
            REQUIRE(std::abs(c(i, 2)) < 1e-14);
        }
    }
}

TEST_CASE("basis transform preserves the eigenvalue list") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix4 m = testutil::random_hermitian(rng);
        const auto before = eigen_hermitian(m);
        const auto after =
            eigen_hermitian(collective_basis_transform(m, BasisKind::Product, BasisKind::Collective));
        for (int k = 0; k < 4; ++k)
            REQUIRE(after.values[k] == Catch::Approx(before.values[k]).margin(1e-10));
        const Matrix4 back = collective_basis_transform(
            collective_basis_transform(m, BasisKind::Product, BasisKind::Collective),
            BasisKind::Collective, BasisKind::Product);
        REQUIRE(max_abs_diff(back, m) < 1e-15);
    }
}

TEST_CASE("pure ground state decomposes onto |g>") {
    const auto d = spectral_decompose(XStateParams{1.0, 0.0, 0.0, Complex{}});
    REQUIRE(d.pi_plus == 1.0);
    REQUIRE(d.pi_minus == 0.0);
    REQUIRE(d.pi_s == 0.0);
    REQUIRE(d.pi_a == 0.0);
    REQUIRE(d.psi_plus[3] == Complex(1.0));
    REQUIRE(std::abs(d.psi_plus[0]) == 0.0);
}

TEST_CASE("quantum-field steady state is a pure two-photon entangled state") {
    for (double n : {0.2, 1.0, 3.7, 25.0}) {
        const auto d = spectral_decompose(steady_state(quantum_squeezed_field(n)));
        REQUIRE(d.pi_plus == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(d.pi_minus == Catch::Approx(0.0).margin(1e-12));
        REQUIRE(d.pi_s == 0.0);
        const Vector4 expected = quantum_pure_state(n);
        for (int i = 0; i < 4; ++i) REQUIRE(std::abs(d.psi_plus[i] - expected[i]) < 1e-12);
    }
}

TEST_CASE("rank-one coherent block diagonalizes to (|g>+|e>)/sqrt(2)") {
    const auto d = spectral_decompose(XStateParams{0.5, 0.5, 0.0, Complex(0.5, 0.0)});
    REQUIRE(d.pi_plus == Catch::Approx(1.0).margin(1e-15));
    REQUIRE(d.pi_minus == Catch::Approx(0.0).margin(1e-15));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    REQUIRE(std::abs(d.psi_plus[0] - Complex(inv_sqrt2)) < 1e-12);
    REQUIRE(std::abs(d.psi_plus[3] - Complex(inv_sqrt2)) < 1e-12);
}

TEST_CASE("degenerate populations fall back to the standard basis vectors") {
    const auto d = spectral_decompose(XStateParams{0.4, 0.4, 0.2, Complex{}});
    REQUIRE(d.pi_plus == Catch::Approx(0.4).margin(1e-15));
    REQUIRE(d.pi_minus == Catch::Approx(0.4).margin(1e-15));
    REQUIRE(d.psi_plus[3] == Complex(1.0));
    REQUIRE(d.psi_minus[0] == Complex(1.0));
    const Matrix4 rebuilt = reconstruct(d);
    const Matrix4 expected = to_density_matrix(XStateParams{0.4, 0.4, 0.2, Complex{}},
                                               BasisKind::Collective);
    REQUIRE(max_abs_diff(rebuilt, expected) < 1e-12);
}

TEST_CASE("population-inverted state without coherence decomposes onto |e> first") {
    const auto d = spectral_decompose(XStateParams{0.1, 0.7, 0.2, Complex{}});
    REQUIRE(d.pi_plus == Catch::Approx(0.7).margin(1e-15));
    REQUIRE(d.pi_minus == Catch::Approx(0.1).margin(1e-15));
    REQUIRE(d.psi_plus[0] == Complex(1.0));
    REQUIRE(d.psi_minus[3] == Complex(1.0));
}

TEST_CASE("spectral decomposition reconstructs the state and matches the eigensolver") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        const XStateParams p = random_x_state(rng);
        const auto d = spectral_decompose(p);

        REQUIRE(d.pi_a == 0.0);
        REQUIRE(d.pi_plus + d.pi_minus + d.pi_s + d.pi_a == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(d.pi_minus >= 0.0);

        const std::array<Vector4, 4> vecs{d.psi_plus, d.psi_minus, d.psi_s, d.psi_a};
        for (int k = 0; k < 4; ++k) {
            REQUIRE(norm(vecs[k]) == Catch::Approx(1.0).margin(1e-12));
            for (int l = k + 1; l < 4; ++l) REQUIRE(std::abs(dot(vecs[k], vecs[l])) < 1e-10);
        }

        const Matrix4 rho_coll = to_density_matrix(p, BasisKind::Collective);
        REQUIRE(max_abs_diff(reconstruct(d), rho_coll) < 1e-10);

        // Eigenvalue multiset must agree with the numerical solver.
        const auto es = eigen_hermitian(rho_coll);
        std::array<double, 4> closed{d.pi_plus, d.pi_minus, d.pi_s, d.pi_a};
        std::sort(closed.begin(), closed.end());
        for (int k = 0; k < 4; ++k)
            REQUIRE(closed[k] == Catch::Approx(es.values[k]).margin(1e-9));
    }
}
