#pragma once

#include "cartanlab/field.hpp"
#include "cartanlab/matrix.hpp"
#include "cartanlab/weyl.hpp"

namespace cartanlab {

/// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps.  Converges when
/// the off-diagonal Frobenius mass drops below 1e-12 of the diagonal mass;
/// throws ConvergenceError past `max_sweeps`.
std::vector<double> symmetric_eigenvalues_jacobi(MatrixD a, int max_sweeps = 100);

/// Sorted, re-centered log singular values of any real matrix (no det
/// check).  mu_archimedean is this kernel behind the SL_n precondition; the
/// power-limit path uses it on rescaled iterates, where re-centering cancels
/// the scale.
WeylVector log_singular_values(const MatrixD& g);

/// Cartan projection for SL_n(R): x_i = log of the i-th singular value,
/// sorted descending and re-centered to sum zero.
WeylVector mu_archimedean(const MatrixD& g);

/// Nonarchimedean Cartan projection via Smith-normal-form reduction over the
/// valuation ring, pivoting on a minimum-valuation entry: x_i = -omega(d_i)
/// for the invariant factors d_1 | d_2 | ...
WeylVector mu_nonarch_snf(const MatrixQ& g, const FieldDescriptor& field);
WeylVector mu_nonarch_snf(const MatrixL& g, const FieldDescriptor& field);

/// Independent oracle for the same map: partial sums x_1 + ... + x_i equal
/// -min over all i-by-i minors of omega(minor).  Cost grows with binom(n,i)^2;
/// intended for n <= 4.
WeylVector mu_nonarch_minors(const MatrixQ& g, const FieldDescriptor& field);
WeylVector mu_nonarch_minors(const MatrixL& g, const FieldDescriptor& field);

/// Field-directed dispatch.
WeylVector mu(const MatrixQ& g, const FieldDescriptor& field);
WeylVector mu(const MatrixL& g, const FieldDescriptor& field);
WeylVector mu(const MatrixD& g, const FieldDescriptor& field);

/// Slack pair of the two triangle-style inequalities
///   |mu(gh) - mu(g)| <= |mu(h)|   and   |mu(gh) - mu(h)| <= |mu(g)|.
/// Both slacks are nonnegative for every pair; `nonnegative` is decided
/// exactly in nonarchimedean fields and with a 1e-8 tolerance over R.
struct SubadditivitySlack {
    double first;  // |mu(h)| - |mu(gh) - mu(g)|
    double second; // |mu(g)| - |mu(gh) - mu(h)|
    bool nonnegative;
};

SubadditivitySlack check_mu_subadditivity(const MatrixQ& g, const MatrixQ& h, const FieldDescriptor& field);
SubadditivitySlack check_mu_subadditivity(const MatrixL& g, const MatrixL& h, const FieldDescriptor& field);

} // namespace cartanlab
