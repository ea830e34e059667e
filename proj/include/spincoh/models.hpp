#pragma once

#include <array>
#include <string>
#include <vector>

#include "spincoh/densemath.hpp"

namespace spincoh {

enum class Boundary { Periodic, Open };

enum class DmAxis { X, Y, Z };

/// Couplings of the N-site XYZ chain with a Dzyaloshinsky-Moriya vector:
/// H = sum_n Jx sx_n sx_{n+1} + Jy sy_n sy_{n+1} + Jz sz_n sz_{n+1}
///           + D . (sigma_n x sigma_{n+1})
/// with the bond sum running 1..N for Periodic (site N+1 = 1) and 1..N-1 for
/// Open boundaries.
struct ModelSpec {
    int n_sites = 2;
    double jx = 0.0, jy = 0.0, jz = 0.0;
    double dx = 0.0, dy = 0.0, dz = 0.0;
    Boundary boundary = Boundary::Open;
};

/// Non-fatal caveats about a spec (currently: Periodic with n_sites = 2
/// counts each bond twice).
std::vector<std::string> model_warnings(const ModelSpec& spec);

/// Two-site single-bond model with the DM vector restricted to one axis.
struct TwoSiteCouplings {
    double jx = 0.0, jy = 0.0, jz = 0.0;
    DmAxis d_axis = DmAxis::Z;
    double d_mag = 0.0;
};

/// Single-bond (Open, n = 2) chain spec equivalent to `c`.
ModelSpec to_model_spec(const TwoSiteCouplings& c);

/// Parameters of the Jz = 0, Jx = Jy = J chain solved by the Jordan-Wigner
/// transformation; `d` is the z-axis DM magnitude.
struct DispersionParams {
    double j = 0.0;
    double d = 0.0;
    int n = 2;  ///< even site count
};

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& pauli_id();

/// op embedded at `site` (1-based) of an n-site chain: I (x) ... (x) op (x) ... (x) I.
ComplexMatrix site_operator(int n_sites, int site, const ComplexMatrix& op);

ComplexMatrix build_chain_hamiltonian(const ModelSpec& spec);

/// Analytic spectrum of the two-site model with D along z.
/// Energies in the analytic labelling: E1,2 = Jz +- Jx -+ Jy, E3,4 = -Jz +- omega,
/// omega = sqrt(4 Dz^2 + (Jx + Jy)^2); states hold the matching eigenvectors
/// (|dd> +- |uu>)/sqrt2 and (|du> +- e^{i theta} |ud>)/sqrt2 with
/// cos theta = (Jx + Jy)/omega, sin theta = 2 Dz/omega.
struct TwoSiteSpectrumDz {
    std::array<double, 4> energies;
    Eigen::Matrix4cd states;  ///< column i is the eigenvector of energies[i]
    double theta = 0.0;
    double omega = 0.0;

    /// Ascending-eigenvalue view with the library phase convention.
    Spectrum sorted() const;
};
TwoSiteSpectrumDz two_site_spectrum_dz(const TwoSiteCouplings& c);

/// Analytic spectrum of the two-site model with D along y.
/// E1,2 = Jy +- Jx -+ Jz, E3,4 = -Jy +- omega with
/// omega = sqrt(4 Dy^2 + (Jx + Jz)^2) and mixing angles
/// tan phi_{1,2} = 2 Dy / (Jx + Jz -+ omega).
struct TwoSiteSpectrumDy {
    std::array<double, 4> energies;
    Eigen::Matrix4cd states;
    double phi1 = 0.0;
    double phi2 = 0.0;
    double omega = 0.0;

    Spectrum sorted() const;
};
TwoSiteSpectrumDy two_site_spectrum_dy(const TwoSiteCouplings& c);

/// Single-fermion dispersion of the Jz = 0 chain,
/// lambda_q = 4 (J cos q + D sin q). The factor 4 is calibrated against exact
/// diagonalization (Pauli operators rather than spin-1/2 operators carry a
/// factor 2 each); see the dispersion tests for the N = 2 and N = 6 anchors.
double dispersion(const DispersionParams& p, double q);

struct JwModeSet {
    std::vector<double> filled_momenta;  ///< momenta q = 2 pi k / n with lambda_q < -1e-12
    bool has_zero_mode = false;          ///< any |lambda_q| <= 1e-12 (degenerate ground state)
};

JwModeSet jw_mode_set(const DispersionParams& p);

}  // namespace spincoh
