#include "spincoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spincoh {

namespace {

constexpr double kQjsdTol = 1e-12;

ComplexMatrix single_site_basis(MeasurementBasis basis) {
    const double inv = 1.0 / std::numbers::sqrt2;
    ComplexMatrix u(2, 2);
    switch (basis) {
        case MeasurementBasis::Z:
            u = ComplexMatrix::Identity(2, 2);
            break;
        case MeasurementBasis::X:
            u << inv, inv, inv, -inv;
            break;
        case MeasurementBasis::Y:
            u << Complex(inv, 0), Complex(inv, 0), Complex(0, inv), Complex(0, -inv);
            break;
    }
    return u;
}

DensityMatrix rotate_to_basis(const DensityMatrix& rho, MeasurementBasis basis) {
    if (basis == MeasurementBasis::Z) return rho;
    return unitary_conjugate(rho, basis_change_unitary(basis, rho.sites()));
}

double qjsd_from_entropies(double s_mix, double s_rho, double s_sigma) {
    double j = s_mix - 0.5 * s_rho - 0.5 * s_sigma;
    if (j < -kQjsdTol)
        throw contract_error("qjsd: divergence negative beyond 1e-12 (entropy concavity broken)");
    return std::clamp(j, 0.0, 1.0);
}

struct BasisDecomposition {
    double s_rho, s_rho_d, s_mix;
    double total;
};

BasisDecomposition decompose(const DensityMatrix& rotated) {
    const DensityMatrix deph = dephase(rotated);
    BasisDecomposition out{};
    out.s_rho = von_neumann_entropy(rotated);
    out.s_rho_d = von_neumann_entropy(deph);
    const DensityMatrix mix =
        DensityMatrix::from_matrix(0.5 * (rotated.matrix() + deph.matrix()));
    out.s_mix = von_neumann_entropy(mix);
    out.total = std::sqrt(qjsd_from_entropies(out.s_mix, out.s_rho, out.s_rho_d));
    return out;
}

}  // namespace

const char* to_string(MeasurementBasis basis) {
    switch (basis) {
        case MeasurementBasis::Z: return "Z";
        case MeasurementBasis::X: return "X";
        case MeasurementBasis::Y: return "Y";
    }
    return "?";
}

MeasurementBasis basis_from_string(const std::string& name) {
    if (name == "Z" || name == "z") return MeasurementBasis::Z;
    if (name == "X" || name == "x") return MeasurementBasis::X;
    if (name == "Y" || name == "y") return MeasurementBasis::Y;
    throw std::invalid_argument("unknown measurement basis '" + name + "' (expected Z, X or Y)");
}

double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim())
        throw std::invalid_argument("qjsd: states must have equal dimension");
    const DensityMatrix mix =
        DensityMatrix::from_matrix(0.5 * (rho.matrix() + sigma.matrix()));
    return qjsd_from_entropies(von_neumann_entropy(mix), von_neumann_entropy(rho),
                               von_neumann_entropy(sigma));
}

ComplexMatrix basis_change_unitary(MeasurementBasis basis, int n_sites) {
    if (n_sites < 1 || n_sites > kMaxSites)
        throw std::invalid_argument("basis_change_unitary: n_sites out of range");
    const ComplexMatrix u = single_site_basis(basis);
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int s = 0; s < n_sites; ++s) out = kronecker(out, u);
    return out;
}

double coherence(const DensityMatrix& rho, MeasurementBasis basis) {
    return decompose(rotate_to_basis(rho, basis)).total;
}

DensityMatrix product_of_marginals(const DensityMatrix& rho) {
    ComplexMatrix prod = ComplexMatrix::Identity(1, 1);
    for (int site = 1; site <= rho.sites(); ++site)
        prod = kronecker(prod, partial_trace(rho, {site}).matrix());
    // each factor has unit trace; divide out the accumulated rounding drift
    prod /= prod.trace().real();
    return DensityMatrix::from_matrix(std::move(prod));
}

double local_coherence(const DensityMatrix& rho, MeasurementBasis basis) {
    return coherence(product_of_marginals(rho), basis);
}

CoherenceReport coherence_report(const DensityMatrix& rho, MeasurementBasis basis) {
    const BasisDecomposition d = decompose(rotate_to_basis(rho, basis));
    CoherenceReport report;
    report.basis = basis;
    report.total = d.total;
    report.local = local_coherence(rho, basis);
    report.correlated = report.total - report.local;
    report.entropy_rho = d.s_rho;
    report.entropy_rho_d = d.s_rho_d;
    report.entropy_mix = d.s_mix;
    return report;
}

}  // namespace spincoh
