#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "spincoh/errors.hpp"

namespace spincoh {

using Complex = std::complex<double>;

/// Dense complex matrix. Entry (i, j) means row i, column j throughout this
/// library; basis index i of a 2^N-dimensional operator encodes site 1 in the
/// most significant bit, with |up> = |0> (sigma_z eigenvalue +1).
using ComplexMatrix = Eigen::MatrixXcd;

/// Dense storage only; 2^12 = 4096 is the largest dimension we ever build.
inline constexpr int kMaxSites = 12;

/// State-contract tolerances shared by every module.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-12;

/// Hermitian, positive-semidefinite, unit-trace state on `sites` spin-1/2
/// sites. Construction validates all three properties (Hermiticity within
/// 1e-12, |tr - 1| <= 1e-12, smallest eigenvalue >= -1e-10) and that the
/// dimension is a power of two.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return mat_; }
    Eigen::Index dim() const { return mat_.rows(); }
    int sites() const { return sites_; }

private:
    DensityMatrix(ComplexMatrix m, int sites) : mat_(std::move(m)), sites_(sites) {}

    ComplexMatrix mat_;
    int sites_;
};

/// Eigendecomposition of a Hermitian matrix.
struct Spectrum {
    Eigen::VectorXd eigenvalues;  ///< ascending
    ComplexMatrix eigenvectors;   ///< orthonormal columns, one per eigenvalue
};

bool is_hermitian(const ComplexMatrix& m, double tol);

ComplexMatrix identity_matrix(Eigen::Index dim);

/// Ascending eigenvalues with orthonormal eigenvectors. The input is
/// symmetrized by (M + M^dag)/2 before solving; inputs that are not Hermitian
/// within 1e-10 (relative to the largest entry for matrices with entries
/// beyond unit scale) are rejected. Each eigenvector's phase is fixed by
/// making its largest-magnitude component (first such index on ties) real and
/// positive, so output is deterministic.
Spectrum hermitian_eigendecomposition(const ComplexMatrix& m);

/// Von Neumann entropy in bits: S = -sum lambda_i log2 lambda_i with
/// 0 log 0 = 0. Eigenvalues in [-1e-10, 0) are clipped to 0; anything below
/// -1e-10 throws contract_error.
double von_neumann_entropy(const DensityMatrix& rho);

/// Zero all off-diagonal entries; the diagonal is preserved exactly, so the
/// operation is exactly idempotent.
DensityMatrix dephase(const DensityMatrix& rho);

/// Reduced state on the kept sites (1-based, site 1 = most significant bit of
/// the index). The order of `keep` becomes the site order of the result.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// U^dag rho U for unitary U (checked within 1e-12). Spectrum, and hence
/// entropy, is preserved.
DensityMatrix unitary_conjugate(const DensityMatrix& rho, const ComplexMatrix& u);

/// Tensor product: (A (x) B)[i*q + k, j*q + l] = A[i, j] B[k, l] with
/// q = dim(B).
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace spincoh
