#include "spincoh/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spincoh {

namespace {

constexpr double kZeroModeTol = 1e-12;
constexpr double kOmegaTol = 1e-12;

void validate_sites(int n_sites) {
    if (n_sites < 2) throw std::invalid_argument("ModelSpec: n_sites must be >= 2");
    if (n_sites > kMaxSites)
        throw std::invalid_argument("ModelSpec: n_sites exceeds the dense-storage cap of 12");
}

struct BondTerm {
    const ComplexMatrix* first;   // operator on site n of the bond
    const ComplexMatrix* second;  // operator on site n+1
    double coefficient;
};

// Jx XX + Jy YY + Jz ZZ + D . (sigma x sigma) expanded into Pauli pairs.
std::vector<BondTerm> bond_terms(const ModelSpec& s) {
    const ComplexMatrix& x = pauli_x();
    const ComplexMatrix& y = pauli_y();
    const ComplexMatrix& z = pauli_z();
    return {
        {&x, &x, s.jx}, {&y, &y, s.jy}, {&z, &z, s.jz},
        {&y, &z, s.dx}, {&z, &y, -s.dx},
        {&z, &x, s.dy}, {&x, &z, -s.dy},
        {&x, &y, s.dz}, {&y, &x, -s.dz},
    };
}

Spectrum sort_levels(const std::array<double, 4>& energies, const Eigen::Matrix4cd& states) {
    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return energies[static_cast<std::size_t>(a)] <
                                                energies[static_cast<std::size_t>(b)]; });
    Spectrum out;
    out.eigenvalues.resize(4);
    out.eigenvectors.resize(4, 4);
    for (int i = 0; i < 4; ++i) {
        out.eigenvalues[i] = energies[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        out.eigenvectors.col(i) = states.col(order[static_cast<std::size_t>(i)]);
    }
    // same phase convention as the numeric path
    for (Eigen::Index col = 0; col < 4; ++col) {
        Eigen::Index imax = 0;
        out.eigenvectors.col(col).cwiseAbs().maxCoeff(&imax);
        const Complex pivot = out.eigenvectors(imax, col);
        if (std::abs(pivot) > 0.0) out.eigenvectors.col(col) *= std::conj(pivot) / std::abs(pivot);
    }
    return out;
}

}  // namespace

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = [] {
        ComplexMatrix p(2, 2);
        p << 0, 1, 1, 0;
        return p;
    }();
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = [] {
        ComplexMatrix p(2, 2);
        p << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
        return p;
    }();
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = [] {
        ComplexMatrix p(2, 2);
        p << 1, 0, 0, -1;
        return p;
    }();
    return m;
}

const ComplexMatrix& pauli_id() {
    static const ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    return m;
}

std::vector<std::string> model_warnings(const ModelSpec& spec) {
    std::vector<std::string> warnings;
    if (spec.boundary == Boundary::Periodic && spec.n_sites == 2)
        warnings.push_back(
            "periodic boundary with n_sites = 2 counts the single bond twice; "
            "use Open for the single-bond two-site model");
    return warnings;
}

ModelSpec to_model_spec(const TwoSiteCouplings& c) {
    ModelSpec spec;
    spec.n_sites = 2;
    spec.boundary = Boundary::Open;
    spec.jx = c.jx;
    spec.jy = c.jy;
    spec.jz = c.jz;
    switch (c.d_axis) {
        case DmAxis::X: spec.dx = c.d_mag; break;
        case DmAxis::Y: spec.dy = c.d_mag; break;
        case DmAxis::Z: spec.dz = c.d_mag; break;
    }
    return spec;
}

ComplexMatrix site_operator(int n_sites, int site, const ComplexMatrix& op) {
    if (site < 1 || site > n_sites) throw std::invalid_argument("site_operator: site out of range");
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (int s = 1; s <= n_sites; ++s) out = kronecker(out, s == site ? op : pauli_id());
    return out;
}

ComplexMatrix build_chain_hamiltonian(const ModelSpec& spec) {
    validate_sites(spec.n_sites);
    const int n = spec.n_sites;
    const Eigen::Index dim = Eigen::Index{1} << n;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);

    // two-site block acting on an adjacent bond
    ComplexMatrix bond = ComplexMatrix::Zero(4, 4);
    for (const BondTerm& t : bond_terms(spec))
        bond += t.coefficient * kronecker(*t.first, *t.second);

    for (int site = 1; site + 1 <= n; ++site) {
        const ComplexMatrix left = identity_matrix(Eigen::Index{1} << (site - 1));
        const ComplexMatrix right = identity_matrix(Eigen::Index{1} << (n - site - 1));
        h += kronecker(left, kronecker(bond, right));
    }
    if (spec.boundary == Boundary::Periodic) {
        // wrap bond (n, 1): first operator sits on site n, second on site 1
        const ComplexMatrix mid = identity_matrix(Eigen::Index{1} << (n - 2));
        for (const BondTerm& t : bond_terms(spec))
            h += t.coefficient * kronecker(*t.second, kronecker(mid, *t.first));
    }
    return h;
}

TwoSiteSpectrumDz two_site_spectrum_dz(const TwoSiteCouplings& c) {
    if (c.d_axis != DmAxis::Z)
        throw std::invalid_argument("two_site_spectrum_dz: DM axis must be Z");
    TwoSiteSpectrumDz out;
    const double sum = c.jx + c.jy;
    out.omega = std::sqrt(4.0 * c.d_mag * c.d_mag + sum * sum);
    out.theta = out.omega > kOmegaTol ? std::atan2(2.0 * c.d_mag, sum) : 0.0;
    out.energies = {c.jz + c.jx - c.jy, c.jz - c.jx + c.jy, -c.jz + out.omega, -c.jz - out.omega};

    const double inv = 1.0 / std::numbers::sqrt2;
    const Complex phase = std::polar(1.0, out.theta);
    out.states.setZero();
    // basis order |uu>, |ud>, |du>, |dd>
    out.states(0, 0) = inv;          out.states(3, 0) = inv;    // (|dd> + |uu>)/sqrt2
    out.states(0, 1) = -inv;         out.states(3, 1) = inv;    // (|dd> - |uu>)/sqrt2
    out.states(1, 2) = phase * inv;  out.states(2, 2) = inv;    // (|du> + e^{i theta}|ud>)/sqrt2
    out.states(1, 3) = -phase * inv; out.states(2, 3) = inv;    // (|du> - e^{i theta}|ud>)/sqrt2
    return out;
}

Spectrum TwoSiteSpectrumDz::sorted() const { return sort_levels(energies, states); }

TwoSiteSpectrumDy two_site_spectrum_dy(const TwoSiteCouplings& c) {
    if (c.d_axis != DmAxis::Y)
        throw std::invalid_argument("two_site_spectrum_dy: DM axis must be Y");
    TwoSiteSpectrumDy out;
    const double sum = c.jx + c.jz;
    out.omega = std::sqrt(4.0 * c.d_mag * c.d_mag + sum * sum);
    if (out.omega > kOmegaTol) {
        // tan phi_{1,2} = 2 Dy / (sum -+ omega); one of the two denominators
        // vanishes with Dy, so each angle is taken from whichever parallel
        // representation keeps its denominator of order omega
        if (sum < 0.0) {
            out.phi1 = std::atan2(2.0 * c.d_mag, sum - out.omega);
            out.phi2 = std::atan2(sum - out.omega, -2.0 * c.d_mag);
        } else {
            out.phi1 = std::atan2(sum + out.omega, -2.0 * c.d_mag);
            out.phi2 = std::atan2(2.0 * c.d_mag, sum + out.omega);
        }
    } else {
        // fully degenerate inner block; any orthogonal pair works
        out.phi1 = std::numbers::pi / 2.0;
        out.phi2 = 0.0;
    }
    out.energies = {c.jy + c.jx - c.jz, c.jy - c.jx + c.jz, -c.jy + out.omega, -c.jy - out.omega};

    const double inv = 1.0 / std::numbers::sqrt2;
    const double s1 = std::sin(out.phi1), c1 = std::cos(out.phi1);
    const double s2 = std::sin(out.phi2), c2 = std::cos(out.phi2);
    out.states.setZero();
    out.states(1, 0) = inv;  out.states(2, 0) = inv;   // (|du> + |ud>)/sqrt2
    out.states(0, 1) = -inv; out.states(3, 1) = inv;   // (|dd> - |uu>)/sqrt2
    // sin phi (|dd> + |uu>)/sqrt2 - cos phi (|du> - |ud>)/sqrt2 up to global sign
    out.states(0, 2) = s1 * inv; out.states(1, 2) = -c1 * inv;
    out.states(2, 2) = c1 * inv; out.states(3, 2) = s1 * inv;
    out.states(0, 3) = s2 * inv; out.states(1, 3) = -c2 * inv;
    out.states(2, 3) = c2 * inv; out.states(3, 3) = s2 * inv;
    return out;
}

Spectrum TwoSiteSpectrumDy::sorted() const { return sort_levels(energies, states); }

double dispersion(const DispersionParams& p, double q) {
    // Calibrated against ED: Pauli operators carry a factor 2 relative to
    // spin-1/2 operators, so each hopping amplitude doubles twice.
    return 4.0 * (p.j * std::cos(q) + p.d * std::sin(q));
}

JwModeSet jw_mode_set(const DispersionParams& p) {
    if (p.n < 2) throw std::invalid_argument("jw_mode_set: n must be >= 2");
    if (p.n % 2 != 0) throw std::invalid_argument("jw_mode_set: n must be even");
    JwModeSet out;
    for (int k = 0; k < p.n; ++k) {
        const double q = 2.0 * std::numbers::pi * k / p.n;
        const double lambda = dispersion(p, q);
        if (lambda < -kZeroModeTol) out.filled_momenta.push_back(q);
        if (std::abs(lambda) <= kZeroModeTol) out.has_zero_mode = true;
    }
    return out;
}

}  // namespace spincoh
