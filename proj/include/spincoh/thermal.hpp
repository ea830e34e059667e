#pragma once

#include "spincoh/densemath.hpp"
#include "spincoh/models.hpp"

namespace spincoh {

/// Temperatures below this are served by the ground-space projector instead
/// of Boltzmann weights.
inline constexpr double kProjectorTemperature = 1e-6;

/// Eigenvalues within this gap of the minimum count as degenerate.
inline constexpr double kDegeneracyGapTol = 1e-9;

/// Temperature in the shared energy unit (k_B = 1). Must be > 0.
struct ThermalParams {
    explicit ThermalParams(double t);

    double temperature;
    double beta() const { return 1.0 / temperature; }
};

/// Gibbs state exp(-H/T)/Z. The spectrum is shifted by its minimum before
/// exponentiation so small temperatures cannot overflow; below
/// kProjectorTemperature the uniform mixture over the (gap-tolerance)
/// ground space is returned.
DensityMatrix gibbs_state(const ComplexMatrix& h, ThermalParams t);

/// Closed-form thermal state of the two-site model with D along z:
/// an X-form matrix with entries
///   r = e^{-Jz/T} cosh((Jx-Jy)/T),  u = e^{Jz/T} cosh(omega/T),
///   v = -(e^{Jz/T}/omega) sinh(omega/T) (2i Dz + Jx + Jy),
///   s = e^{-Jz/T} sinh((Jx-Jy)/T),
/// normalized by the partition function. Evaluated in min-energy-shifted form
/// with the same analytic value; omega -> 0 uses sinh(omega/T)/omega -> 1/T.
DensityMatrix thermal_state_dz_analytic(const TwoSiteCouplings& c, ThermalParams t);

/// Closed-form thermal state of the two-site model with D along y (entries
/// m1, m2, n1, n2, q built from the TwoSiteSpectrumDy angles).
DensityMatrix thermal_state_dy_analytic(const TwoSiteCouplings& c, ThermalParams t);

/// Z = 2 e^{-Jz/T} cosh((Jx - Jy)/T) + 2 e^{Jz/T} cosh(omega/T).
double partition_function_dz(const TwoSiteCouplings& c, ThermalParams t);

/// Z = 2 e^{-Jy/T} cosh((Jx - Jz)/T) + 2 e^{Jy/T} cosh(omega/T).
double partition_function_dy(const TwoSiteCouplings& c, ThermalParams t);

/// Tr exp(-H/T) from the eigenvalues of H.
double partition_function_numeric(const ComplexMatrix& h, ThermalParams t);

}  // namespace spincoh
