#pragma once

#include <string>

#include "spincoh/densemath.hpp"

namespace spincoh {

/// Uniform per-site measurement basis; "incoherent" means diagonal after
/// rotating every site into this basis.
enum class MeasurementBasis { Z, X, Y };

const char* to_string(MeasurementBasis basis);
MeasurementBasis basis_from_string(const std::string& name);

struct CoherenceReport {
    double total = 0.0;       ///< in [0, 1]
    double local = 0.0;       ///< coherence of the product of single-site marginals
    double correlated = 0.0;  ///< total - local, signed
    MeasurementBasis basis = MeasurementBasis::Z;
    double entropy_rho = 0.0;    ///< S(rho), bits (basis independent)
    double entropy_rho_d = 0.0;  ///< S(rho_d) of the rotated, dephased state
    double entropy_mix = 0.0;    ///< S((rho + rho_d)/2) in the rotated basis
};

/// Quantum Jensen-Shannon divergence
///   J(rho, sigma) = S((rho + sigma)/2) - S(rho)/2 - S(sigma)/2
/// with base-2 entropies, so the range is [0, 1]. Values below -1e-12 throw
/// contract_error; the result is clipped into [0, 1].
double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma);

/// u^(x)N where u's columns are the eigenvectors of the chosen Pauli axis
/// (identity for Z, Hadamard for X, (|0>+-i|1>)/sqrt2 columns for Y).
ComplexMatrix basis_change_unitary(MeasurementBasis basis, int n_sites);

/// C = sqrt(J(rho', dephase(rho'))) with rho' the state rotated into the
/// measurement basis. Zero exactly when rho' is diagonal.
double coherence(const DensityMatrix& rho, MeasurementBasis basis);

/// Tensor product of the single-site marginals of rho, in site order.
DensityMatrix product_of_marginals(const DensityMatrix& rho);

/// Coherence of the product of single-site marginals.
double local_coherence(const DensityMatrix& rho, MeasurementBasis basis);

/// Total/local/correlated decomposition plus the entropies behind the total.
CoherenceReport coherence_report(const DensityMatrix& rho, MeasurementBasis basis);

}  // namespace spincoh
