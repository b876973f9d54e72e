#include "nlslab/quadrature.hpp"

#include <cmath>
#include <limits>

#include "nlslab/errors.hpp"

namespace nlslab {

namespace {

// Kronrod-15 abscissae (positive half) and weights; the Gauss-7 rule uses
// the odd-indexed abscissae. Values as tabulated in QUADPACK.
constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

using Cplx = std::complex<double>;
using Fn = std::function<Cplx(double)>;

struct PanelResult {
    Cplx k15;
    double err;     // |K15 - G7|
    double resabs;  // K15 applied to |f|
};

PanelResult panel(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    Cplx k15 = 0.0, g7 = 0.0;
    double resabs = 0.0;
    for (int i = 0; i < 8; ++i) {
        const Cplx fp = f(c + hw * xgk[i]);
        const Cplx fm = (i == 7) ? fp : f(c - hw * xgk[i]);
        const Cplx pair = (i == 7) ? fp : fp + fm;
        k15 += wgk[i] * pair;
        resabs += wgk[i] * ((i == 7) ? std::abs(fp) : std::abs(fp) + std::abs(fm));
        if (i % 2 == 1) g7 += wg[i / 2] * pair;
    }
    PanelResult r;
    r.k15 = hw * k15;
    r.err = std::abs(hw * (k15 - g7));
    r.resabs = hw * resabs;
    return r;
}

Cplx refine(const Fn& f, double a, double b, double tol, int depth, const QuadratureOptions& opt) {
    const PanelResult r = panel(f, a, b);
    const double floor = 100.0 * std::numeric_limits<double>::epsilon() * r.resabs;
    if (r.err <= std::max(tol, floor)) return r.k15;
    if (depth >= opt.max_depth) throw QuadratureError("adaptive quadrature did not converge");
    const double m = 0.5 * (a + b);
    return refine(f, a, m, 0.5 * tol, depth + 1, opt) +
           refine(f, m, b, 0.5 * tol, depth + 1, opt);
}

}  // namespace

Cplx integrate(const Fn& f, double lo, double hi, const QuadratureOptions& opt) {
    if (!(hi > lo)) throw std::invalid_argument("integrate: requires hi > lo");
    const PanelResult first = panel(f, lo, hi);
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(first.k15));
    return refine(f, lo, hi, tol, 0, opt);
}

double integrate_real(const std::function<double(double)>& f, double lo, double hi,
                      const QuadratureOptions& opt) {
    return integrate([&f](double x) { return Cplx(f(x), 0.0); }, lo, hi, opt).real();
}

}  // namespace nlslab
