#include <doctest.h>

#include <algorithm>
#include <array>
#include <bit>
#include <numbers>

#include "spincoh/limits.hpp"
#include "spincoh/models.hpp"
#include "test_util.hpp"

using namespace spincoh;
namespace tst = spincoh::test;

namespace {

ModelSpec two_site(double jx, double jy, double jz, double dx, double dy, double dz,
                   Boundary boundary = Boundary::Open) {
    ModelSpec m;
    m.n_sites = 2;
    m.boundary = boundary;
    m.jx = jx; m.jy = jy; m.jz = jz;
    m.dx = dx; m.dy = dy; m.dz = dz;
    return m;
}

double eigenpair_residual(const ComplexMatrix& h, const Eigen::Vector4cd& v, double e) {
    return (h * v - e * v).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("build_chain_hamiltonian: pinned matrices") {
    SUBCASE("two-site Ising is diagonal") {
        const ComplexMatrix h = build_chain_hamiltonian(two_site(0, 0, 0.7, 0, 0, 0));
        Eigen::Vector4cd diag;
        diag << 0.7, -0.7, -0.7, 0.7;
        CHECK(tst::max_abs_diff(h, ComplexMatrix(diag.asDiagonal())) == 0.0);
    }
    SUBCASE("analytic two-site Dz eigenvalues") {
        const ComplexMatrix h = build_chain_hamiltonian(two_site(-1, -0.5, 0.2, 0, 0, 1));
        const Spectrum s = hermitian_eigendecomposition(h);
        CHECK(s.eigenvalues[0] == doctest::Approx(-2.7).epsilon(1e-12));
        CHECK(s.eigenvalues[1] == doctest::Approx(-0.3).epsilon(1e-12));
        CHECK(s.eigenvalues[2] == doctest::Approx(0.7).epsilon(1e-12));
        CHECK(s.eigenvalues[3] == doctest::Approx(2.3).epsilon(1e-12));
    }
    SUBCASE("generic Dz formula on a random grid") {
        auto rng = tst::make_rng(61);
        for (int i = 0; i < 25; ++i) {
            const double jx = tst::uniform(rng, -2, 2), jy = tst::uniform(rng, -2, 2);
            const double jz = tst::uniform(rng, -2, 2), dz = tst::uniform(rng, -2, 2);
            const Spectrum s =
                hermitian_eigendecomposition(build_chain_hamiltonian(two_site(jx, jy, jz, 0, 0, dz)));
            const double omega = std::sqrt(4 * dz * dz + (jx + jy) * (jx + jy));
            std::array<double, 4> expected{jz + jx - jy, jz - jx + jy, -jz + omega, -jz - omega};
            std::sort(expected.begin(), expected.end());
            for (int k = 0; k < 4; ++k)
                CHECK(std::abs(s.eigenvalues[k] - expected[static_cast<std::size_t>(k)]) <= 1e-10);
        }
    }
    SUBCASE("size limits enforced") {
        ModelSpec m;
        m.n_sites = 13;
        CHECK_THROWS_AS(build_chain_hamiltonian(m), std::invalid_argument);
        m.n_sites = 1;
        CHECK_THROWS_AS(build_chain_hamiltonian(m), std::invalid_argument);
    }
    SUBCASE("periodic two-site warning") {
        CHECK(model_warnings(two_site(1, 1, 0, 0, 0, 0, Boundary::Periodic)).size() == 1);
        CHECK(model_warnings(two_site(1, 1, 0, 0, 0, 0)).empty());
    }
}

TEST_CASE("build_chain_hamiltonian: Hermitian for 100 random specs") {
    auto rng = tst::make_rng(67);
    for (int i = 0; i < 100; ++i) {
        ModelSpec m;
        m.n_sites = 2 + static_cast<int>(tst::uniform(rng, 0, 3.999));
        m.boundary = tst::uniform(rng, 0, 1) < 0.5 ? Boundary::Open : Boundary::Periodic;
        m.jx = tst::uniform(rng, -2, 2);
        m.jy = tst::uniform(rng, -2, 2);
        m.jz = tst::uniform(rng, -2, 2);
        m.dx = tst::uniform(rng, -2, 2);
        m.dy = tst::uniform(rng, -2, 2);
        m.dz = tst::uniform(rng, -2, 2);
        const ComplexMatrix h = build_chain_hamiltonian(m);
        CHECK(tst::max_abs_diff(h, h.adjoint()) <= 1e-14);
    }
}

TEST_CASE("two_site_spectrum_dz") {
    SUBCASE("spot values") {
        const TwoSiteSpectrumDz s = two_site_spectrum_dz({-1, -0.5, 0.2, DmAxis::Z, 1});
        CHECK(s.omega == doctest::Approx(2.5).epsilon(1e-14));
        CHECK(s.energies[0] == doctest::Approx(-0.3).epsilon(1e-14));
        CHECK(s.energies[1] == doctest::Approx(0.7).epsilon(1e-14));
        CHECK(s.energies[2] == doctest::Approx(2.3).epsilon(1e-14));
        CHECK(s.energies[3] == doctest::Approx(-2.7).epsilon(1e-14));
    }
    SUBCASE("DM-free limit: theta = 0, omega = 2|J|") {
        const TwoSiteSpectrumDz s = two_site_spectrum_dz({0.7, 0.7, 0.1, DmAxis::Z, 0});
        CHECK(s.theta == doctest::Approx(0.0));
        CHECK(s.omega == doctest::Approx(1.4).epsilon(1e-14));
    }
    SUBCASE("pure-DM limit: theta = pi/2, omega = 2") {
        const TwoSiteSpectrumDz s = two_site_spectrum_dz({0.5, -0.5, 0.3, DmAxis::Z, 1});
        CHECK(s.theta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
        CHECK(s.omega == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("eigenpairs of the built Hamiltonian on a random grid") {
        auto rng = tst::make_rng(71);
        for (int i = 0; i < 25; ++i) {
            const TwoSiteCouplings c{tst::uniform(rng, -2, 2), tst::uniform(rng, -2, 2),
                                     tst::uniform(rng, -2, 2), DmAxis::Z,
                                     tst::uniform(rng, -2, 2)};
            const ComplexMatrix h = build_chain_hamiltonian(to_model_spec(c));
            const TwoSiteSpectrumDz s = two_site_spectrum_dz(c);
            for (int k = 0; k < 4; ++k)
                CHECK(eigenpair_residual(h, s.states.col(k),
                                         s.energies[static_cast<std::size_t>(k)]) <= 1e-10);
            const Spectrum sorted = s.sorted();
            const Spectrum numeric = hermitian_eigendecomposition(h);
            for (int k = 0; k < 4; ++k)
                CHECK(std::abs(sorted.eigenvalues[k] - numeric.eigenvalues[k]) <= 1e-10);
        }
    }
    SUBCASE("wrong axis rejected") {
        CHECK_THROWS_AS(two_site_spectrum_dz({1, 1, 1, DmAxis::Y, 1}), std::invalid_argument);
    }
}

TEST_CASE("two_site_spectrum_dy") {
    SUBCASE("spot values for E1, E2") {
        const TwoSiteSpectrumDy s = two_site_spectrum_dy({-1, 0.2, -0.5, DmAxis::Y, 1});
        CHECK(s.energies[0] == doctest::Approx(-0.3).epsilon(1e-14));
        CHECK(s.energies[1] == doctest::Approx(0.7).epsilon(1e-14));
        CHECK(s.omega == doctest::Approx(2.5).epsilon(1e-14));
    }
    SUBCASE("DM-free limit reduces to singlet/triplet combinations") {
        for (double jx : {0.8, -0.8}) {
            const TwoSiteCouplings c{jx, -0.3, 0.4, DmAxis::Y, 0};
            const TwoSiteSpectrumDy s = two_site_spectrum_dy(c);
            const ComplexMatrix h = build_chain_hamiltonian(to_model_spec(c));
            for (int k = 0; k < 4; ++k)
                CHECK(eigenpair_residual(h, s.states.col(k),
                                         s.energies[static_cast<std::size_t>(k)]) <= 1e-12);
            CHECK(tst::max_abs_diff(ComplexMatrix(s.states).adjoint() * ComplexMatrix(s.states),
                                    identity_matrix(4)) <= 1e-14);
        }
    }
    SUBCASE("5x5x5 coupling grid agreement with the numeric solver") {
        const double values[5] = {-1.0, -0.5, 0.2, 0.9, 1.7};
        for (double jx : values)
            for (double jy : values)
                for (double jz : values) {
                    const TwoSiteCouplings c{jx, jy, jz, DmAxis::Y, 0.8};
                    const ComplexMatrix h = build_chain_hamiltonian(to_model_spec(c));
                    const TwoSiteSpectrumDy s = two_site_spectrum_dy(c);
                    const Spectrum numeric = hermitian_eigendecomposition(h);
                    const Spectrum sorted = s.sorted();
                    for (int k = 0; k < 4; ++k) {
                        CHECK(std::abs(sorted.eigenvalues[k] - numeric.eigenvalues[k]) <= 1e-10);
                        CHECK(eigenpair_residual(h, s.states.col(k),
                                                 s.energies[static_cast<std::size_t>(k)]) <= 1e-10);
                    }
                }
    }
    SUBCASE("wrong axis rejected") {
        CHECK_THROWS_AS(two_site_spectrum_dy({1, 1, 1, DmAxis::Z, 1}), std::invalid_argument);
    }
}

TEST_CASE("Dx <-> Dy swap symmetry is an exact diagonal conjugation") {
    // exp(i pi sigma_z / 4) on both sites maps the Dx model at (Jx, Jy, Jz)
    // onto the Dy model at (Jy, Jx, Jz) with the same DM magnitude
    ComplexMatrix u1 = ComplexMatrix::Zero(2, 2);
    u1(0, 0) = std::polar(1.0, std::numbers::pi / 4);
    u1(1, 1) = std::polar(1.0, -std::numbers::pi / 4);
    const ComplexMatrix u = kronecker(u1, u1);

    auto rng = tst::make_rng(73);
    for (int i = 0; i < 10; ++i) {
        const double jx = tst::uniform(rng, -2, 2), jy = tst::uniform(rng, -2, 2);
        const double jz = tst::uniform(rng, -2, 2), d = tst::uniform(rng, -2, 2);
        const ComplexMatrix hx = build_chain_hamiltonian(two_site(jx, jy, jz, d, 0, 0));
        const ComplexMatrix hy = build_chain_hamiltonian(two_site(jy, jx, jz, 0, d, 0));
        CHECK(tst::max_abs_diff(u.adjoint() * hx * u, hy) <= 1e-12);
    }
}

TEST_CASE("dispersion") {
    SUBCASE("cosine node") {
        CHECK(dispersion({1.0, 0.0, 6}, std::numbers::pi / 2) ==
              doctest::Approx(0.0).epsilon(1e-14));
    }
    SUBCASE("calibrated scale at q = 0") {
        CHECK(dispersion({1.0, 0.0, 6}, 0.0) == doctest::Approx(4.0).epsilon(1e-14));
    }
    SUBCASE("N = 6 negative-mode sum equals the ED ground energy") {
        const DispersionParams p{1.0, 0.5, 6};
        ModelSpec m;
        m.n_sites = 6;
        m.boundary = Boundary::Periodic;
        m.jx = m.jy = 1.0;
        m.dz = 0.5;
        const GroundStateResult g = ground_state(m);
        const JwModeSet modes = jw_mode_set(p);
        double sum = 0.0;
        for (double q : modes.filled_momenta) sum += dispersion(p, q);
        CHECK(std::abs(sum - g.energy) <= 1e-8);
        CHECK(modes.filled_momenta.size() == 3);
    }
    SUBCASE("minimal half-filled subset sum is attained at jw_mode_set (N = 6, 10)") {
        for (int n : {6, 10}) {
            const DispersionParams p{1.0, 0.5, n};
            ModelSpec m;
            m.n_sites = n;
            m.boundary = Boundary::Periodic;
            m.jx = m.jy = 1.0;
            m.dz = 0.5;
            const GroundStateResult g = ground_state(m);
            const JwModeSet modes = jw_mode_set(p);
            double jw_sum = 0.0;
            for (double q : modes.filled_momenta) jw_sum += dispersion(p, q);

            // enumerate all n-choose-(n/2) subset sums; the ED ground energy
            // must appear, and at the jw set
            std::vector<double> lambdas;
            for (int k = 0; k < n; ++k)
                lambdas.push_back(dispersion(p, 2.0 * std::numbers::pi * k / n));
            double best = 1e300;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                if (std::popcount(mask) != n / 2) continue;
                double s = 0.0;
                for (int k = 0; k < n; ++k)
                    if (mask & (1u << k)) s += lambdas[static_cast<std::size_t>(k)];
                best = std::min(best, s);
            }
            CHECK(std::abs(best - g.energy) <= 1e-8);
            CHECK(std::abs(jw_sum - best) <= 1e-12);
        }
    }
}

TEST_CASE("jw_mode_set") {
    SUBCASE("n = 6, D = 0: the three cos q < 0 momenta fill") {
        const JwModeSet modes = jw_mode_set({1.0, 0.0, 6});
        REQUIRE(modes.filled_momenta.size() == 3);
        CHECK(modes.filled_momenta[0] == doctest::Approx(2 * std::numbers::pi / 3).epsilon(1e-14));
        CHECK(modes.filled_momenta[1] == doctest::Approx(std::numbers::pi).epsilon(1e-14));
        CHECK(modes.filled_momenta[2] ==
              doctest::Approx(4 * std::numbers::pi / 3).epsilon(1e-14));
        CHECK_FALSE(modes.has_zero_mode);
    }
    SUBCASE("n = 4, D = 0 has zero modes at q = +-pi/2") {
        CHECK(jw_mode_set({1.0, 0.0, 4}).has_zero_mode);
    }
    SUBCASE("same filled set within one 60-degree sector") {
        const JwModeSet a = jw_mode_set({1.0, 0.2, 6});
        const JwModeSet b = jw_mode_set({1.0, 0.4, 6});
        REQUIRE(a.filled_momenta.size() == b.filled_momenta.size());
        for (std::size_t i = 0; i < a.filled_momenta.size(); ++i)
            CHECK(a.filled_momenta[i] == doctest::Approx(b.filled_momenta[i]).epsilon(1e-14));
    }
    SUBCASE("odd n rejected") {
        CHECK_THROWS_AS(jw_mode_set({1.0, 0.0, 5}), std::invalid_argument);
    }
}
