#pragma once

#include "nlslab/grid.hpp"

namespace nlslab {

// Spectral d/dx. Exact for band-limited inputs; the Nyquist mode is zeroed
// (standard convention for odd-order derivatives).
Field derivative(const Field& u);

// Spectral d^2/dx^2 via multiplication by -k^2 (Nyquist kept).
Field second_derivative(const Field& u);

// <v1, v2> = Re \int v1 conj(v2), by dx * sum over nodes.
double inner(const Field& v1, const Field& v2);

// omega(v1, v2) = <v1, J^{-1} v2> with J = -i, i.e. Im \int v1 conj(v2).
double symplectic_pair(const Field& v1, const Field& v2);

double mass(const Field& u);         // (1/2) \int |u|^2
double momentum(const Field& u);     // (1/2) Im \int conj(u) u_x
double hamiltonian(const Field& u);  // (1/4) \int |u_x|^2 - (1/4) \int |u|^4

double l2_norm(const Field& u);  // (\int |u|^2)^{1/2}, no 1/2 factor
double h1_norm(const Field& u);  // (\int |u|^2 + \int |u_x|^2)^{1/2}

// Smoothed dual norm (sum |u_hat|^2 / (1 + k^2))^{1/2}, used where a
// derivative should vanish in a weak sense.
double h_minus1_norm(const Field& u);

Field apply_j(const Field& u);          // J u = -i u
Field apply_j_inverse(const Field& u);  // i u

Field hamiltonian_gradient(const Field& u);  // H'(u) = -u_xx/2 - |u|^2 u
// H''(u) w = -w_xx/2 - 2|u|^2 w - u^2 conj(w)
Field hamiltonian_hessian(const Field& u, const Field& w);
Field nls_vector_field(const Field& u);  // J H'(u)

// Mass computed from the Fourier coefficients (Parseval route).
double mass_spectral(const Field& u);

}  // namespace nlslab
