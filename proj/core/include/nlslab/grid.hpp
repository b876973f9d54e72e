#pragma once

#include <complex>
#include <vector>

namespace nlslab {

using Complex = std::complex<double>;

// Uniform periodic grid on [-L/2, L/2) with n a power of two.
// Nodes x_j = -L/2 + j dx, wavenumbers in the standard signed FFT layout.
struct Grid {
    int n = 0;
    double length = 0.0;

    double dx() const { return length / n; }
    double node(int j) const { return -0.5 * length + j * dx(); }

    // Signed mode index: 0,1,...,n/2-1,-n/2,...,-1.
    int signed_index(int m) const { return m < n / 2 ? m : m - n; }
    double wavenumber(int m) const;

    std::vector<double> nodes() const;
    std::vector<double> wavenumbers() const;

    static Grid make(int n, double length);
};

bool operator==(const Grid& a, const Grid& b);
inline bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

// Complex-valued function sampled on a Grid; the discrete stand-in for an
// L^2 element (and for tangent vectors, which are identified with L^2).
struct Field {
    Grid grid;
    std::vector<Complex> v;

    Field() = default;
    explicit Field(const Grid& g) : grid(g), v(g.n, Complex(0.0, 0.0)) {}
    Field(const Grid& g, std::vector<Complex> values);

    int size() const { return grid.n; }
    Complex& operator[](int j) { return v[j]; }
    const Complex& operator[](int j) const { return v[j]; }

    bool all_finite() const;

    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(Complex c);
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(Complex c, Field a);
Field operator*(double c, Field a);

void require_same_grid(const Field& a, const Field& b);

}  // namespace nlslab
