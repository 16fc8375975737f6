#include "micomp/pca.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "micomp/error.hpp"
#include "micomp/kernels.hpp"

namespace micomp {

GroupFactor GroupFactor::from_labels(std::vector<std::string> labels) {
    GroupFactor g;
    g.labels = std::move(labels);
    g.codes.reserve(g.labels.size());
    for (const auto& l : g.labels) {
        auto it = std::find(g.levels.begin(), g.levels.end(), l);
        if (it == g.levels.end()) {
            g.levels.push_back(l);
            g.codes.push_back(static_cast<int>(g.levels.size()) - 1);
        } else {
            g.codes.push_back(static_cast<int>(it - g.levels.begin()));
        }
    }
    return g;
}

std::vector<std::size_t> GroupFactor::level_counts() const {
    std::vector<std::size_t> counts(levels.size(), 0);
    for (int c : codes) counts[static_cast<std::size_t>(c)]++;
    return counts;
}

void GroupFactor::validate(std::size_t n) const {
    if (labels.size() != n)
        throw data_error("group factor length does not match number of observations");
    if (levels.size() < 2)
        throw degenerate_error("at least two groups are required");
    for (auto c : level_counts())
        if (c < 2) throw degenerate_error("every group needs at least two observations");
}

void jacobi_eigen_sym(const Matrix& a, std::vector<double>& values, Matrix& vectors) {
    const std::size_t n = a.rows();
    Matrix m = a;
    vectors = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) vectors(i, i) = 1.0;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += m(p, q) * m(p, q);
        if (off < 1e-30 * std::max(1.0, std::inner_product(m.data().begin(), m.data().end(),
                                                           m.data().begin(), 0.0)))
            break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0.0) continue;
                const double app = m(p, p), aqq = m(q, q);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = vectors(k, p), vkq = vectors(k, q);
                    vectors(k, p) = c * vkp - s * vkq;
                    vectors(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    values.resize(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = m(i, i);

    // sort descending, stable on the original index
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
    std::vector<double> sorted_vals(n);
    Matrix sorted_vecs(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        sorted_vals[c] = values[order[c]];
        for (std::size_t i = 0; i < n; ++i) sorted_vecs(i, c) = vectors(i, order[c]);
    }
    values = std::move(sorted_vals);
    vectors = std::move(sorted_vecs);
}

PcaProjection pca(const OutputMatrix& x) {
    const std::size_t n = x.data.rows(), m = x.data.cols();
    if (n < 2) throw data_error("pca: need at least two observations");
    if (m < 1) throw data_error("pca: need at least one variable");
    for (double v : x.data.data())
        if (!std::isfinite(v)) throw data_error("pca: non-finite entry in '" + x.name + "'");

    Matrix centered = x.data;
    kernels::center_columns(centered);
    Matrix g = kernels::gram_matrix(centered);

    std::vector<double> gvals;
    Matrix u;
    jacobi_eigen_sym(g, gvals, u);

    if (!(gvals[0] > 0.0))
        throw degenerate_error("pca: zero total variance in '" + x.name + "'");

    const std::size_t rmax = std::min(n - 1, m);
    std::size_t r = 0;
    while (r < rmax && gvals[r] > 1e-12 * gvals[0]) ++r;

    PcaProjection p;
    p.r = r;
    p.scores = Matrix(n, r);
    p.eigenvalues.resize(r);
    for (std::size_t c = 0; c < r; ++c) {
        const double s = std::sqrt(gvals[c]);
        for (std::size_t i = 0; i < n; ++i) p.scores(i, c) = u(i, c) * s;
        p.eigenvalues[c] = gvals[c] / static_cast<double>(n - 1);
    }

    // sign convention: largest-magnitude score entry positive
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t imax = 0;
        double amax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double av = std::fabs(p.scores(i, c));
            if (av > amax) { amax = av; imax = i; }
        }
        if (p.scores(imax, c) < 0.0)
            for (std::size_t i = 0; i < n; ++i) p.scores(i, c) = -p.scores(i, c);
    }

    p.varexp = explained_variance(p);
    return p;
}

std::vector<double> explained_variance(const PcaProjection& p) {
    const double total = std::accumulate(p.eigenvalues.begin(), p.eigenvalues.end(), 0.0);
    if (!(total > 0.0)) throw degenerate_error("explained_variance: zero total variance");
    std::vector<double> ve(p.eigenvalues.size());
    for (std::size_t i = 0; i < ve.size(); ++i) ve[i] = p.eigenvalues[i] / total;
    return ve;
}

std::size_t select_npcs(const PcaProjection& p, double ve) {
    if (!(ve > 0.0 && ve <= 1.0))
        throw config_error("variance threshold must be in (0, 1]");
    double cum = 0.0;
    for (std::size_t q = 0; q < p.r; ++q) {
        cum += p.varexp[q];
        if (cum >= ve) return q + 1;
    }
    return p.r;
}

Matrix pca_loadings(const OutputMatrix& x, const PcaProjection& p) {
    Matrix centered = x.data;
    kernels::center_columns(centered);
    std::vector<double> sqnorms(p.r);
    for (std::size_t c = 0; c < p.r; ++c)
        sqnorms[c] = p.eigenvalues[c] * static_cast<double>(x.data.rows() - 1);
    return kernels::loadings_from_scores(centered, p.scores, sqnorms);
}

} // namespace micomp
