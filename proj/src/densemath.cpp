#include "spincoh/densemath.hpp"

#include <algorithm>
#include <cmath>

namespace spincoh {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(Eigen::Index n) {
    int k = 0;
    while ((Eigen::Index{1} << k) < n) ++k;
    return k;
}

// Make the largest-magnitude component of each column real and positive
// (first index on ties), so eigenvector output is reproducible.
void fix_column_phases(ComplexMatrix& v) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
        Eigen::Index imax = 0;
        v.col(c).cwiseAbs().maxCoeff(&imax);
        const Complex pivot = v(imax, c);
        const double mag = std::abs(pivot);
        if (mag > 0.0) v.col(c) *= std::conj(pivot) / mag;
    }
}

}  // namespace

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix identity_matrix(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("DensityMatrix: matrix must be square");
    if (m.rows() < 2 || !is_power_of_two(m.rows()))
        throw std::invalid_argument("DensityMatrix: dimension must be 2^N with N >= 1");
    if (!is_hermitian(m, kHermitianTol))
        throw contract_error("DensityMatrix: not Hermitian within 1e-12");
    if (std::abs(m.trace() - Complex{1.0, 0.0}) > kTraceTol)
        throw contract_error("DensityMatrix: trace differs from 1 beyond 1e-12");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw contract_error("DensityMatrix: eigenvalue computation failed");
    if (solver.eigenvalues().minCoeff() < -kPsdTol)
        throw contract_error("DensityMatrix: negative eigenvalue beyond 1e-10 (not PSD)");
    const int sites = log2_exact(m.rows());
    return DensityMatrix(std::move(m), sites);
}

Spectrum hermitian_eigendecomposition(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigendecomposition: matrix must be square");
    if (m.rows() < 1)
        throw std::invalid_argument("hermitian_eigendecomposition: empty matrix");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (!is_hermitian(m, 1e-10 * scale))
        throw contract_error("hermitian_eigendecomposition: input not Hermitian within 1e-10");
    const ComplexMatrix sym = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success)
        throw contract_error("hermitian_eigendecomposition: solver did not converge");
    Spectrum out{solver.eigenvalues(), solver.eigenvectors()};
    fix_column_phases(out.eigenvectors);
    return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw contract_error("von_neumann_entropy: eigenvalue computation failed");
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lambda = solver.eigenvalues()[i];
        if (lambda < -kPsdTol)
            throw contract_error("von_neumann_entropy: eigenvalue below -1e-10 (PSD violation)");
        const double clipped = std::clamp(lambda, 0.0, 1.0);
        if (clipped > 0.0) s -= clipped * std::log2(clipped);
    }
    return std::max(s, 0.0);
}

DensityMatrix dephase(const DensityMatrix& rho) {
    ComplexMatrix d = ComplexMatrix::Zero(rho.dim(), rho.dim());
    d.diagonal() = rho.matrix().diagonal();
    return DensityMatrix::from_matrix(std::move(d));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int n = rho.sites();
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int site : keep) {
        if (site < 1 || site > n)
            throw std::invalid_argument("partial_trace: site index out of range");
        if (seen[static_cast<std::size_t>(site)])
            throw std::invalid_argument("partial_trace: duplicate site in keep set");
        seen[static_cast<std::size_t>(site)] = true;
    }
    std::vector<int> traced;
    for (int s = 1; s <= n; ++s)
        if (!seen[static_cast<std::size_t>(s)]) traced.push_back(s);

    const int nk = static_cast<int>(keep.size());
    const int nt = static_cast<int>(traced.size());
    const Eigen::Index dim_keep = Eigen::Index{1} << nk;
    const Eigen::Index dim_traced = Eigen::Index{1} << nt;

    // Site s occupies bit (n - s) of the full index; bit j of a reduced index
    // belongs to keep[j] counted from the most significant side.
    auto full_index = [&](Eigen::Index kept_bits, Eigen::Index traced_bits) {
        Eigen::Index idx = 0;
        for (int j = 0; j < nk; ++j)
            idx |= ((kept_bits >> (nk - 1 - j)) & 1) << (n - keep[static_cast<std::size_t>(j)]);
        for (int j = 0; j < nt; ++j)
            idx |= ((traced_bits >> (nt - 1 - j)) & 1) << (n - traced[static_cast<std::size_t>(j)]);
        return idx;
    };

    ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
    for (Eigen::Index r = 0; r < dim_keep; ++r) {
        for (Eigen::Index c = 0; c < dim_keep; ++c) {
            Complex acc{0.0, 0.0};
            for (Eigen::Index t = 0; t < dim_traced; ++t)
                acc += rho.matrix()(full_index(r, t), full_index(c, t));
            out(r, c) = acc;
        }
    }
    return DensityMatrix::from_matrix(std::move(out));
}

DensityMatrix unitary_conjugate(const DensityMatrix& rho, const ComplexMatrix& u) {
    if (u.rows() != u.cols() || u.rows() != rho.dim())
        throw std::invalid_argument("unitary_conjugate: dimension mismatch");
    const ComplexMatrix gram = u.adjoint() * u;
    if ((gram - identity_matrix(u.rows())).cwiseAbs().maxCoeff() > kUnitaryTol)
        throw contract_error("unitary_conjugate: matrix not unitary within 1e-12");
    return DensityMatrix::from_matrix(u.adjoint() * rho.matrix() * u);
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace spincoh
