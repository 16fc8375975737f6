#pragma once

#include <vector>

#include "micomp/matrix.hpp"

namespace micomp::kernels {

// Data-parallel inner loops of the library. Every kernel has a serial
// reference twin used by the test suite and the benchmark target. The
// parallel versions split work over independent output elements only, so
// each element is accumulated in a fixed order and results are bit-identical
// to the serial reference for any thread count.

/// Subtract the column mean from every column in place; returns the means.
std::vector<double> center_columns(Matrix& x);
std::vector<double> center_columns_serial(Matrix& x);

/// Gram matrix G = X * X^T (n x n, symmetric) of an n x m matrix.
Matrix gram_matrix(const Matrix& x);
Matrix gram_matrix_serial(const Matrix& x);

/// Loadings V (m x r) from centered data and scores: V = Xc^T * T * diag(1/(s_i^2)),
/// where column i of T has squared norm s_i^2.
Matrix loadings_from_scores(const Matrix& centered, const Matrix& scores,
                            const std::vector<double>& score_sq_norms);
Matrix loadings_from_scores_serial(const Matrix& centered, const Matrix& scores,
                                   const std::vector<double>& score_sq_norms);

/// Reconstruction T * V^T (n x m).
Matrix scores_times_loadings_t(const Matrix& scores, const Matrix& loadings);
Matrix scores_times_loadings_t_serial(const Matrix& scores, const Matrix& loadings);

} // namespace micomp::kernels
