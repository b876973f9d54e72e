#include "nlslab/symplectic.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "nlslab/errors.hpp"
#include "nlslab/field_io.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

Frame single_soliton_frame(const SolitonParams& p, const Grid& g) {
    auto fields = tangent_frame(p, g);
    Frame f;
    f.fields.assign(fields.begin(), fields.end());
    f.labels = {"mu", "a", "theta", "v"};
    return f;
}

Frame two_soliton_frame(const ZCoords& z, const Grid& g) {
    auto fields = two_soliton_tangent(z, g);
    Frame f;
    f.fields.assign(fields.begin(), fields.end());
    f.labels = {"mu1", "a1", "mu2", "a2", "theta1", "v1", "theta2", "v2"};
    return f;
}

PairingMatrix pairing_matrix(const Frame& frame) {
    const int k = frame.size();
    Eigen::MatrixXd A(k, k);
    for (int l = 0; l < k; ++l) {
        A(l, l) = 0.0;
        for (int m = l + 1; m < k; ++m) {
            const double w_lm = symplectic_pair(frame.fields[l], frame.fields[m]);
            const double w_ml = symplectic_pair(frame.fields[m], frame.fields[l]);
            A(l, m) = 0.5 * (w_lm - w_ml);  // antisymmetric by construction
            A(m, l) = -A(l, m);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    PairingMatrix P;
    P.entries = A;
    P.cond = sv(0) / sv(k - 1);
    if (!(P.cond < 1e8)) throw DegenerateFrameError("degenerate frame: cond(A) >= 1e8");
    P.inverse = A.partialPivLu().inverse();
    return P;
}

Field project(const Frame& frame, const PairingMatrix& A, const Field& f) {
    const int k = frame.size();
    Eigen::VectorXd c(k);
    for (int l = 0; l < k; ++l) c(l) = symplectic_pair(f, frame.fields[l]);
    // coefficients d_m = sum_l c_l a^{lm}
    Eigen::VectorXd d = A.inverse.transpose() * c;
    Field out(f.grid);
    for (int m = 0; m < k; ++m) {
        const Field& fm = frame.fields[m];
        for (int j = 0; j < out.size(); ++j) out[j] += d(m) * fm[j];
    }
    return out;
}

Field project_complement(const Frame& frame, const PairingMatrix& A, const Field& f) {
    return f - project(frame, A, f);
}

namespace {

// Orthogonality defects G_l(z) = <u - u_z, J^{-1} d_{z^l} u_z>.
Eigen::Matrix<double, 8, 1> orthogonality_defects(const Field& u, const ZCoords& z) {
    const Field uz = two_soliton(z, u.grid);
    const Field w = u - uz;
    const auto tangent = two_soliton_tangent(z, u.grid);
    Eigen::Matrix<double, 8, 1> g;
    for (int l = 0; l < 8; ++l) g(l) = symplectic_pair(w, tangent[l]);
    return g;
}

void check_on_chart(const ZCoords& z, double min_separation) {
    if (z.mu1() <= 0.0 || z.mu2() <= 0.0 || std::abs(z.a2() - z.a1()) < min_separation)
        throw LeftManifoldError("left manifold: mu <= 0 or solitons overlap");
}

}  // namespace

Decomposition decompose(const Field& u, const ZCoords& z_guess, const DecomposeOptions& opt) {
    if (!u.all_finite()) throw std::invalid_argument("decompose: non-finite input field");
    check_on_chart(z_guess, opt.min_separation);

    const double scale = h1_norm(u);
    const double tol = opt.tol_rel * scale;
    ZCoords z = z_guess;
    Eigen::Matrix<double, 8, 1> g = orthogonality_defects(u, z);

    int iter = 0;
    while (g.cwiseAbs().maxCoeff() > tol) {
        if (++iter > opt.max_iterations)
            throw NoConvergenceError("no convergence: decompose exceeded max iterations");
        Eigen::Matrix<double, 8, 8> jac;
        for (int m = 0; m < 8; ++m) {
            ZCoords zp = z, zm = z;
            zp[m] += opt.fd_step;
            zm[m] -= opt.fd_step;
            jac.col(m) = (orthogonality_defects(u, zp) - orthogonality_defects(u, zm)) /
                         (2.0 * opt.fd_step);
        }
        const Eigen::Matrix<double, 8, 1> step = jac.partialPivLu().solve(-g);
        if (!step.allFinite()) throw NoConvergenceError("no convergence: singular Jacobian");
        for (int m = 0; m < 8; ++m) z[m] += step(m);
        check_on_chart(z, opt.min_separation);
        g = orthogonality_defects(u, z);
    }

    Decomposition d;
    d.z = z;
    d.w = u - two_soliton(z, u.grid);
    for (int l = 0; l < 8; ++l) d.residuals[l] = g(l);
    d.iterations = iter;
    return d;
}

std::string decomposition_csv_header() {
    return "t,mu1,a1,mu2,a2,theta1,v1,theta2,v2,w_l2,w_h1,max_residual,iterations";
}

std::string decomposition_csv_row(double t, const Decomposition& d) {
    std::ostringstream os;
    os << format_double(t);
    for (int i = 0; i < 8; ++i) os << ',' << format_double(d.z[i]);
    double rmax = 0.0;
    for (double r : d.residuals) rmax = std::max(rmax, std::abs(r));
    os << ',' << format_double(l2_norm(d.w)) << ',' << format_double(h1_norm(d.w)) << ','
       << format_double(rmax) << ',' << d.iterations;
    return os.str();
}

}  // namespace nlslab
