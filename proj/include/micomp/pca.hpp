#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "micomp/matrix.hpp"

namespace micomp {

/// Group membership of each observation. The level order is the order of
/// first appearance; the first level is the reference group.
struct GroupFactor {
    std::vector<std::string> labels;  // one per observation
    std::vector<std::string> levels;  // ordered distinct labels
    std::vector<int> codes;           // level index per observation

    static GroupFactor from_labels(std::vector<std::string> labels);

    std::size_t size() const { return labels.size(); }
    std::size_t n_levels() const { return levels.size(); }
    std::vector<std::size_t> level_counts() const;

    /// Throws degenerate_error unless there are >= 2 levels, each with >= 2
    /// members, matching n observations.
    void validate(std::size_t n) const;
};

/// Principal-component representation of an observation matrix: scores T
/// (n x r), eigenvalues of the covariance of the centered data (descending)
/// and the explained-variance fractions.
struct PcaProjection {
    Matrix scores;
    std::vector<double> eigenvalues;
    std::vector<double> varexp;
    std::size_t r = 0;
};

/// PCA of an n x m observation matrix. Columns are mean-centered, the thin
/// SVD is computed through the n x n Gram matrix, eigenvalues are s_i^2/(n-1)
/// and components below 1e-12 * lambda_1 (or beyond min(n-1, m)) are
/// truncated. Each score column is flipped so its entry of largest absolute
/// value is positive.
PcaProjection pca(const OutputMatrix& x);

/// Explained-variance fractions lambda_i / sum(lambda).
std::vector<double> explained_variance(const PcaProjection& p);

/// Smallest q such that the first q components explain at least `ve` of the
/// variance; ve in (0, 1].
std::size_t select_npcs(const PcaProjection& p, double ve);

/// Loadings matrix V (m x r) such that scores * V^T reconstructs the
/// centered data when all components are retained.
Matrix pca_loadings(const OutputMatrix& x, const PcaProjection& p);

/// Symmetric eigendecomposition (cyclic Jacobi). Returns eigenvalues in
/// descending order; columns of `vectors` are the matching eigenvectors.
void jacobi_eigen_sym(const Matrix& a, std::vector<double>& values, Matrix& vectors);

} // namespace micomp
