#include "micomp/kernels.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace micomp::kernels {

std::vector<double> center_columns_serial(Matrix& x) {
    const std::size_t n = x.rows(), m = x.cols();
    std::vector<double> means(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x(i, j);
        means[j] = s / static_cast<double>(n);
    }
    for (std::size_t i = 0; i < n; ++i) {
        double* row = x.row_ptr(i);
        for (std::size_t j = 0; j < m; ++j) row[j] -= means[j];
    }
    return means;
}

std::vector<double> center_columns(Matrix& x) {
    const std::int64_t n = static_cast<std::int64_t>(x.rows());
    const std::int64_t m = static_cast<std::int64_t>(x.cols());
    std::vector<double> means(static_cast<std::size_t>(m), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
        double s = 0.0;
        for (std::int64_t i = 0; i < n; ++i) s += x(i, j);
        means[j] = s / static_cast<double>(n);
        for (std::int64_t i = 0; i < n; ++i) x(i, j) -= means[j];
    }
    return means;
}

Matrix gram_matrix_serial(const Matrix& x) {
    const std::size_t n = x.rows(), m = x.cols();
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double* a = x.row_ptr(i);
            const double* b = x.row_ptr(j);
            double s = 0.0;
            for (std::size_t k = 0; k < m; ++k) s += a[k] * b[k];
            g(i, j) = s;
            g(j, i) = s;
        }
    }
    return g;
}

Matrix gram_matrix(const Matrix& x) {
    const std::int64_t n = static_cast<std::int64_t>(x.rows());
    const std::int64_t m = static_cast<std::int64_t>(x.cols());
    Matrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    // flattened upper triangle, one dot product per entry
    const std::int64_t npairs = n * (n + 1) / 2;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t p = 0; p < npairs; ++p) {
        // unrank pair index into (i, j), i <= j
        std::int64_t i = 0, rem = p;
        while (rem >= n - i) { rem -= n - i; ++i; }
        const std::int64_t j = i + rem;
        const double* a = x.row_ptr(static_cast<std::size_t>(i));
        const double* b = x.row_ptr(static_cast<std::size_t>(j));
        double s = 0.0;
        for (std::int64_t k = 0; k < m; ++k) s += a[k] * b[k];
        g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
        g(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = s;
    }
    return g;
}

Matrix loadings_from_scores_serial(const Matrix& centered, const Matrix& scores,
                                   const std::vector<double>& score_sq_norms) {
    const std::size_t n = centered.rows(), m = centered.cols(), r = scores.cols();
    Matrix v(m, r);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t c = 0; c < r; ++c) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += centered(i, k) * scores(i, c);
            v(k, c) = s / score_sq_norms[c];
        }
    }
    return v;
}

Matrix loadings_from_scores(const Matrix& centered, const Matrix& scores,
                            const std::vector<double>& score_sq_norms) {
    const std::int64_t n = static_cast<std::int64_t>(centered.rows());
    const std::int64_t m = static_cast<std::int64_t>(centered.cols());
    const std::int64_t r = static_cast<std::int64_t>(scores.cols());
    Matrix v(static_cast<std::size_t>(m), static_cast<std::size_t>(r));
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < m; ++k) {
        for (std::int64_t c = 0; c < r; ++c) {
            double s = 0.0;
            for (std::int64_t i = 0; i < n; ++i)
                s += centered(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) *
                     scores(static_cast<std::size_t>(i), static_cast<std::size_t>(c));
            v(static_cast<std::size_t>(k), static_cast<std::size_t>(c)) =
                s / score_sq_norms[static_cast<std::size_t>(c)];
        }
    }
    return v;
}

Matrix scores_times_loadings_t_serial(const Matrix& scores, const Matrix& loadings) {
    const std::size_t n = scores.rows(), r = scores.cols(), m = loadings.rows();
    Matrix out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            double s = 0.0;
            for (std::size_t c = 0; c < r; ++c) s += scores(i, c) * loadings(k, c);
            out(i, k) = s;
        }
    }
    return out;
}

Matrix scores_times_loadings_t(const Matrix& scores, const Matrix& loadings) {
    const std::int64_t n = static_cast<std::int64_t>(scores.rows());
    const std::int64_t r = static_cast<std::int64_t>(scores.cols());
    const std::int64_t m = static_cast<std::int64_t>(loadings.rows());
    Matrix out(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t k = 0; k < m; ++k) {
            double s = 0.0;
            for (std::int64_t c = 0; c < r; ++c)
                s += scores(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) *
                     loadings(static_cast<std::size_t>(k), static_cast<std::size_t>(c));
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = s;
        }
    }
    return out;
}

} // namespace micomp::kernels
