#include "spincoh/thermal.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace spincoh {

namespace {

constexpr double kOmegaTol = 1e-12;

// Boltzmann weights relative to the lowest level; avoids overflow at small T.
std::array<double, 4> shifted_weights(const std::array<double, 4>& energies, double beta) {
    const double e0 = *std::min_element(energies.begin(), energies.end());
    std::array<double, 4> w{};
    for (std::size_t i = 0; i < 4; ++i) w[i] = std::exp(-beta * (energies[i] - e0));
    return w;
}

}  // namespace

ThermalParams::ThermalParams(double t) : temperature(t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("ThermalParams: temperature must be a positive finite number");
}

DensityMatrix gibbs_state(const ComplexMatrix& h, ThermalParams t) {
    const Spectrum spec = hermitian_eigendecomposition(h);
    const Eigen::Index dim = spec.eigenvalues.size();
    Eigen::VectorXd weights(dim);
    const double e0 = spec.eigenvalues[0];
    if (t.temperature < kProjectorTemperature) {
        // ground-space projector, uniform over the gap-tolerance degeneracy
        for (Eigen::Index i = 0; i < dim; ++i)
            weights[i] = (spec.eigenvalues[i] - e0 <= kDegeneracyGapTol) ? 1.0 : 0.0;
    } else {
        for (Eigen::Index i = 0; i < dim; ++i)
            weights[i] = std::exp(-(spec.eigenvalues[i] - e0) / t.temperature);
    }
    weights /= weights.sum();
    const ComplexMatrix rho =
        spec.eigenvectors * weights.asDiagonal() * spec.eigenvectors.adjoint();
    return DensityMatrix::from_matrix(rho);
}

DensityMatrix thermal_state_dz_analytic(const TwoSiteCouplings& c, ThermalParams t) {
    if (c.d_axis != DmAxis::Z)
        throw std::invalid_argument("thermal_state_dz_analytic: DM axis must be Z");
    const TwoSiteSpectrumDz spec = two_site_spectrum_dz(c);
    const double beta = t.beta();
    const std::array<double, 4> w = shifted_weights(spec.energies, beta);
    const double z = w[0] + w[1] + w[2] + w[3];

    const double r = 0.5 * (w[0] + w[1]);
    const double u = 0.5 * (w[2] + w[3]);
    const double s = 0.5 * (w[0] - w[1]);
    const Complex coupling{c.jx + c.jy, 2.0 * c.d_mag};  // |coupling| = omega
    Complex v;
    if (spec.omega > kOmegaTol) {
        v = (w[2] - w[3]) / (2.0 * spec.omega) * coupling;
    } else {
        // sinh(omega/T)/omega -> 1/T
        v = -beta * std::sqrt(w[2] * w[3]) * coupling;
    }

    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = r; rho(3, 3) = r;
    rho(0, 3) = s; rho(3, 0) = s;
    rho(1, 1) = u; rho(2, 2) = u;
    rho(1, 2) = v; rho(2, 1) = std::conj(v);
    rho /= z;
    return DensityMatrix::from_matrix(std::move(rho));
}

DensityMatrix thermal_state_dy_analytic(const TwoSiteCouplings& c, ThermalParams t) {
    if (c.d_axis != DmAxis::Y)
        throw std::invalid_argument("thermal_state_dy_analytic: DM axis must be Y");
    const TwoSiteSpectrumDy spec = two_site_spectrum_dy(c);
    const double beta = t.beta();
    const std::array<double, 4> w = shifted_weights(spec.energies, beta);
    const double z = w[0] + w[1] + w[2] + w[3];

    const double s1 = std::sin(spec.phi1), c1 = std::cos(spec.phi1);
    const double s2 = std::sin(spec.phi2), c2 = std::cos(spec.phi2);
    const double m1 = (w[1] + w[2] * s1 * s1 + w[3] * s2 * s2) / (2.0 * z);
    const double m2 = (-w[1] + w[2] * s1 * s1 + w[3] * s2 * s2) / (2.0 * z);
    const double n1 = (w[0] + w[2] * c1 * c1 + w[3] * c2 * c2) / (2.0 * z);
    const double n2 = (w[0] - w[2] * c1 * c1 - w[3] * c2 * c2) / (2.0 * z);
    const double q = (w[2] * s1 * c1 + w[3] * s2 * c2) / (2.0 * z);

    ComplexMatrix rho(4, 4);
    rho << m1, -q, q, m2,
           -q, n1, n2, -q,
           q, n2, n1, q,
           m2, -q, q, m1;
    return DensityMatrix::from_matrix(std::move(rho));
}

double partition_function_dz(const TwoSiteCouplings& c, ThermalParams t) {
    if (c.d_axis != DmAxis::Z)
        throw std::invalid_argument("partition_function_dz: DM axis must be Z");
    const TwoSiteSpectrumDz spec = two_site_spectrum_dz(c);
    const double beta = t.beta();
    return 2.0 * std::exp(-beta * c.jz) * std::cosh(beta * (c.jx - c.jy)) +
           2.0 * std::exp(beta * c.jz) * std::cosh(beta * spec.omega);
}

double partition_function_dy(const TwoSiteCouplings& c, ThermalParams t) {
    if (c.d_axis != DmAxis::Y)
        throw std::invalid_argument("partition_function_dy: DM axis must be Y");
    const TwoSiteSpectrumDy spec = two_site_spectrum_dy(c);
    const double beta = t.beta();
    return 2.0 * std::exp(-beta * c.jy) * std::cosh(beta * (c.jx - c.jz)) +
           2.0 * std::exp(beta * c.jy) * std::cosh(beta * spec.omega);
}

double partition_function_numeric(const ComplexMatrix& h, ThermalParams t) {
    const Spectrum spec = hermitian_eigendecomposition(h);
    double z = 0.0;
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i)
        z += std::exp(-spec.eigenvalues[i] / t.temperature);
    return z;
}

}  // namespace spincoh
