#pragma once

#include <complex>
#include <functional>

namespace nlslab {

struct QuadratureOptions {
    double abs_tol = 1e-16;
    double rel_tol = 1e-12;
    int max_depth = 60;
};

// Adaptive Gauss-Kronrod (G7/K15) with recursive panel bisection.
// Throws QuadratureError when the tolerance cannot be met.
std::complex<double> integrate(const std::function<std::complex<double>(double)>& f, double lo,
                               double hi, const QuadratureOptions& opt = {});

double integrate_real(const std::function<double(double)>& f, double lo, double hi,
                      const QuadratureOptions& opt = {});

}  // namespace nlslab
