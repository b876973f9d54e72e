#include "nlslab/spectral.hpp"

#include <cmath>

#include "nlslab/fft.hpp"

namespace nlslab {

Field derivative(const Field& u) {
    auto spec = fft::forward(u);
    const int n = u.grid.n;
    for (int m = 0; m < n; ++m) {
        if (m == n / 2) {
            spec[m] = 0.0;
            continue;
        }
        spec[m] *= Complex(0.0, u.grid.wavenumber(m));
    }
    return fft::inverse(u.grid, spec);
}

Field second_derivative(const Field& u) {
    auto spec = fft::forward(u);
    const int n = u.grid.n;
    for (int m = 0; m < n; ++m) {
        const double k = u.grid.wavenumber(m);
        spec[m] *= -k * k;
    }
    return fft::inverse(u.grid, spec);
}

double inner(const Field& v1, const Field& v2) {
    require_same_grid(v1, v2);
    double s = 0.0;
    for (int j = 0; j < v1.size(); ++j)
        s += v1[j].real() * v2[j].real() + v1[j].imag() * v2[j].imag();
    return s * v1.grid.dx();
}

double symplectic_pair(const Field& v1, const Field& v2) {
    require_same_grid(v1, v2);
    // Im(v1 conj(v2)) = im1*re2 - re1*im2
    double s = 0.0;
    for (int j = 0; j < v1.size(); ++j)
        s += v1[j].imag() * v2[j].real() - v1[j].real() * v2[j].imag();
    return s * v1.grid.dx();
}

double mass(const Field& u) {
    double s = 0.0;
    for (const Complex& z : u.v) s += std::norm(z);
    return 0.5 * s * u.grid.dx();
}

double momentum(const Field& u) {
    const Field ux = derivative(u);
    double s = 0.0;
    // Im(conj(u) u_x)
    for (int j = 0; j < u.size(); ++j)
        s += u[j].real() * ux[j].imag() - u[j].imag() * ux[j].real();
    return 0.5 * s * u.grid.dx();
}

double hamiltonian(const Field& u) {
    const Field ux = derivative(u);
    double kin = 0.0, pot = 0.0;
    for (int j = 0; j < u.size(); ++j) {
        kin += std::norm(ux[j]);
        const double a2 = std::norm(u[j]);
        pot += a2 * a2;
    }
    return 0.25 * (kin - pot) * u.grid.dx();
}

double l2_norm(const Field& u) {
    double s = 0.0;
    for (const Complex& z : u.v) s += std::norm(z);
    return std::sqrt(s * u.grid.dx());
}

double h1_norm(const Field& u) {
    const Field ux = derivative(u);
    double s = 0.0;
    for (int j = 0; j < u.size(); ++j) s += std::norm(u[j]) + std::norm(ux[j]);
    return std::sqrt(s * u.grid.dx());
}

double h_minus1_norm(const Field& u) {
    auto spec = fft::forward(u);
    const int n = u.grid.n;
    double s = 0.0;
    for (int m = 0; m < n; ++m) {
        const double k = u.grid.wavenumber(m);
        s += std::norm(spec[m]) / (1.0 + k * k);
    }
    // Parseval: dx * sum_j |u_j|^2 = (dx/n) * sum_m |u_hat_m|^2
    return std::sqrt(s * u.grid.dx() / n);
}

Field apply_j(const Field& u) { return Complex(0.0, -1.0) * u; }

Field apply_j_inverse(const Field& u) { return Complex(0.0, 1.0) * u; }

Field hamiltonian_gradient(const Field& u) {
    Field g = second_derivative(u);
    for (int j = 0; j < u.size(); ++j) g[j] = -0.5 * g[j] - std::norm(u[j]) * u[j];
    return g;
}

Field hamiltonian_hessian(const Field& u, const Field& w) {
    require_same_grid(u, w);
    Field h = second_derivative(w);
    for (int j = 0; j < u.size(); ++j)
        h[j] = -0.5 * h[j] - 2.0 * std::norm(u[j]) * w[j] - u[j] * u[j] * std::conj(w[j]);
    return h;
}

Field nls_vector_field(const Field& u) { return apply_j(hamiltonian_gradient(u)); }

double mass_spectral(const Field& u) {
    auto spec = fft::forward(u);
    double s = 0.0;
    for (const Complex& z : spec) s += std::norm(z);
    return 0.5 * s * u.grid.dx() / u.grid.n;
}

}  // namespace nlslab
