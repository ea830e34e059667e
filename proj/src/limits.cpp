#include "spincoh/limits.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "spincoh/thermal.hpp"

namespace spincoh {

namespace {

constexpr double kAmplitudeTol = 1e-12;
constexpr double kCouplingTol = 1e-12;

int total_sigma_z(Eigen::Index basis_index, int n_sites) {
    const auto downs = std::popcount(static_cast<std::uint64_t>(basis_index));
    return n_sites - 2 * static_cast<int>(downs);
}

// sector value of the state when every significant amplitude shares one
// total-sigma-z eigenvalue
std::optional<int> sharp_sector(const Eigen::VectorXcd& state, int n_sites) {
    std::optional<int> sector;
    for (Eigen::Index i = 0; i < state.size(); ++i) {
        if (std::abs(state[i]) <= kAmplitudeTol) continue;
        const int s = total_sigma_z(i, n_sites);
        if (!sector) sector = s;
        else if (*sector != s) return std::nullopt;
    }
    return sector;
}

}  // namespace

std::uint64_t central_binomial(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("central_binomial: n must be even, >= 2");
    if (n > 64) throw std::invalid_argument("central_binomial: n > 64 overflows exact arithmetic");
    unsigned __int128 result = 1;
    for (int k = 1; k <= n / 2; ++k) {
        // C(n, k) = C(n, k-1) * (n - k + 1) / k; the division is exact
        result = result * static_cast<unsigned>(n - k + 1) / static_cast<unsigned>(k);
    }
    return static_cast<std::uint64_t>(result);
}

double equal_superposition_coherence(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("equal_superposition_coherence: m must be >= 1");
    const double md = static_cast<double>(m);
    const double j =
        1.0 + 0.5 * std::log2(md) - 0.5 * (1.0 + 1.0 / md) * std::log2(md + 1.0);
    return std::sqrt(std::max(j, 0.0));
}

double coherence_closed_form_jz0(int n) {
    return equal_superposition_coherence(central_binomial(n));
}

double ghz_coherence() { return equal_superposition_coherence(2); }

double broken_symmetry_coherence() { return 0.0; }

GroundStateResult ground_state(const ModelSpec& spec, std::optional<int> sector) {
    const ComplexMatrix h = build_chain_hamiltonian(spec);
    const Eigen::Index dim = h.rows();

    std::vector<Eigen::Index> indices;
    if (sector) {
        for (Eigen::Index i = 0; i < dim; ++i)
            if (total_sigma_z(i, spec.n_sites) == *sector) indices.push_back(i);
        if (indices.empty())
            throw std::invalid_argument("ground_state: empty total-sigma-z sector");
    } else {
        indices.resize(static_cast<std::size_t>(dim));
        for (Eigen::Index i = 0; i < dim; ++i) indices[static_cast<std::size_t>(i)] = i;
    }

    const Eigen::Index sub = static_cast<Eigen::Index>(indices.size());
    ComplexMatrix hs(sub, sub);
    for (Eigen::Index r = 0; r < sub; ++r)
        for (Eigen::Index c = 0; c < sub; ++c)
            hs(r, c) = h(indices[static_cast<std::size_t>(r)], indices[static_cast<std::size_t>(c)]);

    const Spectrum s = hermitian_eigendecomposition(hs);

    GroundStateResult out;
    out.energy = s.eigenvalues[0];
    out.degeneracy = 0;
    for (Eigen::Index i = 0; i < sub; ++i)
        if (s.eigenvalues[i] - out.energy <= kDegeneracyGapTol) ++out.degeneracy;
    out.state = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index r = 0; r < sub; ++r)
        out.state[indices[static_cast<std::size_t>(r)]] = s.eigenvectors(r, 0);
    out.state.normalize();
    out.sector = sector ? sector : sharp_sector(out.state, spec.n_sites);
    return out;
}

ChainGroundCoherence chain_ground_coherence(const ModelSpec& spec, MeasurementBasis basis) {
    if (std::abs(spec.jz) > kCouplingTol)
        throw std::invalid_argument("chain_ground_coherence: requires Jz = 0");
    if (std::abs(spec.jx - spec.jy) > kCouplingTol)
        throw std::invalid_argument("chain_ground_coherence: requires Jx = Jy");
    if (std::abs(spec.dx) > kCouplingTol || std::abs(spec.dy) > kCouplingTol)
        throw std::invalid_argument("chain_ground_coherence: DM vector must point along z");
    if (spec.n_sites % 2 != 0)
        throw std::invalid_argument("chain_ground_coherence: n_sites must be even");

    if (spec.boundary == Boundary::Periodic) {
        const DispersionParams p{spec.jx, spec.dz, spec.n_sites};
        const JwModeSet modes = jw_mode_set(p);
        if (modes.has_zero_mode) {
            std::ostringstream msg;
            msg << "chain_ground_coherence: degenerate ground state, zero modes at q =";
            for (int k = 0; k < p.n; ++k) {
                const double q = 2.0 * std::numbers::pi * k / p.n;
                if (std::abs(dispersion(p, q)) <= 1e-12) msg << " " << q;
            }
            throw degeneracy_error(msg.str());
        }
    }

    ChainGroundCoherence out;
    out.ground = ground_state(spec);
    if (out.ground.degeneracy > 1) {
        std::ostringstream msg;
        msg << "chain_ground_coherence: ground state degenerate (multiplicity "
            << out.ground.degeneracy << ")";
        throw degeneracy_error(msg.str());
    }
    const DensityMatrix rho =
        DensityMatrix::from_matrix(out.ground.state * out.ground.state.adjoint());
    out.coherence = coherence(rho, basis);
    out.closed_form = coherence_closed_form_jz0(spec.n_sites);
    out.deviation = out.coherence - out.closed_form;
    return out;
}

}  // namespace spincoh
