#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nlslab/soliton.hpp"

namespace nlslab {

// Tangent frame d_{z^l} u_z, k = 4 (single soliton) or k = 8 (two-soliton).
struct Frame {
    std::vector<Field> fields;
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(fields.size()); }
};

Frame single_soliton_frame(const SolitonParams& p, const Grid& g);
Frame two_soliton_frame(const ZCoords& z, const Grid& g);

// A_{lm} = <d_{z^l} u_z, J^{-1} d_{z^m} u_z>, antisymmetrized as computed.
struct PairingMatrix {
    Eigen::MatrixXd entries;
    Eigen::MatrixXd inverse;
    double cond = 0.0;
};

// Throws DegenerateFrameError when cond > 1e8.
PairingMatrix pairing_matrix(const Frame& frame);

// Pi_z f = sum_{l,m} <f, J^{-1} d_{z^l} u_z> a^{lm} d_{z^m} u_z.
Field project(const Frame& frame, const PairingMatrix& A, const Field& f);
Field project_complement(const Frame& frame, const PairingMatrix& A, const Field& f);

struct Decomposition {
    ZCoords z;
    Field w;
    std::array<double, 8> residuals{};  // orthogonality defects at the solution
    int iterations = 0;
};

struct DecomposeOptions {
    double tol_rel = 1e-12;   // on max residual, relative to ||u||_{H1}
    int max_iterations = 50;
    double fd_step = 1e-6;    // Jacobian finite-difference step per coordinate
    double min_separation = 2.0;
};

// Newton solve of the orthogonality conditions <u - u_z, J^{-1} d_{z^l} u_z> = 0.
// Throws NoConvergenceError / LeftManifoldError.
Decomposition decompose(const Field& u, const ZCoords& z_guess, const DecomposeOptions& opt = {});

// CSV row: t, z(8), ||w||_L2, ||w||_H1, max residual, iterations.
std::string decomposition_csv_row(double t, const Decomposition& d);
std::string decomposition_csv_header();

}  // namespace nlslab
