#include "nlslab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlslab {

double Grid::wavenumber(int m) const {
    return 2.0 * std::numbers::pi * signed_index(m) / length;
}

std::vector<double> Grid::nodes() const {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j) x[j] = node(j);
    return x;
}

std::vector<double> Grid::wavenumbers() const {
    std::vector<double> k(n);
    for (int m = 0; m < n; ++m) k[m] = wavenumber(m);
    return k;
}

Grid Grid::make(int n, double length) {
    if (n < 8 || (n & (n - 1)) != 0)
        throw std::invalid_argument("Grid: n must be a power of two with n >= 8");
    if (!(length > 0.0) || !std::isfinite(length))
        throw std::invalid_argument("Grid: length must be positive and finite");
    Grid g;
    g.n = n;
    g.length = length;
    return g;
}

bool operator==(const Grid& a, const Grid& b) {
    return a.n == b.n && a.length == b.length;
}

Field::Field(const Grid& g, std::vector<Complex> values) : grid(g), v(std::move(values)) {
    if (static_cast<int>(v.size()) != g.n)
        throw std::invalid_argument("Field: values.size() must equal grid.n");
}

bool Field::all_finite() const {
    for (const Complex& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

Field& Field::operator+=(const Field& o) {
    require_same_grid(*this, o);
    for (int j = 0; j < size(); ++j) v[j] += o.v[j];
    return *this;
}

Field& Field::operator-=(const Field& o) {
    require_same_grid(*this, o);
    for (int j = 0; j < size(); ++j) v[j] -= o.v[j];
    return *this;
}

Field& Field::operator*=(Complex c) {
    for (Complex& z : v) z *= c;
    return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(Complex c, Field a) { return a *= c; }
Field operator*(double c, Field a) { return a *= Complex(c, 0.0); }

void require_same_grid(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw std::invalid_argument("fields live on different grids");
}

}  // namespace nlslab
