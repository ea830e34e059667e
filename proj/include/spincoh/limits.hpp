#pragma once

#include <cstdint>
#include <optional>

#include "spincoh/coherence.hpp"
#include "spincoh/models.hpp"

namespace spincoh {

struct GroundStateResult {
    double energy = 0.0;
    Eigen::VectorXcd state;             ///< unit norm; first eigenvector if degenerate
    int degeneracy = 1;                 ///< eigenvalues within 1e-9 of the minimum
    std::optional<int> sector;          ///< total sigma-z when the state is sharp in it
};

/// C(n, n/2) computed exactly; n <= 64.
std::uint64_t central_binomial(int n);

/// Z-basis coherence of an equal-weight superposition of m basis states
/// (arbitrary phases):
///   C = sqrt(1 + log2(m)/2 - (1/2)(1 + 1/m) log2(m + 1)).
double equal_superposition_coherence(std::uint64_t m);

/// Closed-form ground-state coherence of the Jz = 0 chain: the equal-weight
/// superposition value with m = C(n, n/2). Strictly increasing in n, -> 1 as
/// n -> infinity.
double coherence_closed_form_jz0(int n);

/// Coherence of (|11...1> + |-1-1...-1>)/sqrt2, the symmetry-preserving
/// ferromagnetic ground state: the m = 2 value 0.557923..., independent of N.
double ghz_coherence();

/// Z-basis coherence of a symmetry-broken product ground state
/// (ferromagnetic or Neel): exactly 0.
double broken_symmetry_coherence();

/// Exact-diagonalization ground state, optionally restricted to a total
/// sigma-z sector (restriction by basis projection). If the ground level is
/// degenerate the deterministic first eigenvector is returned and the count
/// surfaced in `degeneracy`.
GroundStateResult ground_state(const ModelSpec& spec, std::optional<int> sector = std::nullopt);

struct ChainGroundCoherence {
    double coherence = 0.0;    ///< measured on the ED ground state
    double closed_form = 0.0;  ///< coherence_closed_form_jz0(n)
    double deviation = 0.0;    ///< coherence - closed_form, signed
    GroundStateResult ground;
};

/// Ground-state coherence of the Jz = 0, Jx = Jy chain (DM along z only)
/// compared against the closed form. Refuses with degeneracy_error when the
/// Jordan-Wigner mode set has a zero mode (Periodic chains) or the ED ground
/// level is degenerate.
ChainGroundCoherence chain_ground_coherence(const ModelSpec& spec, MeasurementBasis basis);

}  // namespace spincoh
