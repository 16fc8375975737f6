#pragma once

#include <span>
#include <string>
#include <vector>

#include "micomp/matrix.hpp"
#include "micomp/pca.hpp"
#include "micomp/probability.hpp"

namespace micomp {

enum class TestMethod { TTest, MannWhitney, Anova, KruskalWallis, ManovaPillai };

std::string test_method_name(TestMethod m, bool long_name = false);

struct TestResult {
    double statistic = 0.0;
    MaybeProbability p;
    std::string df;      // human-readable degrees-of-freedom description
    TestMethod method = TestMethod::TTest;
    std::string note;    // diagnostic when p is not applicable
};

enum class TTestVariant { Pooled, Welch };

/// Two-sided two-sample t-test. The pooled-variance form is the default used
/// by the comparison pipeline; Welch is available for unequal variances.
TestResult t_test_two_sample(std::span<const double> x, std::span<const double> y,
                             TTestVariant variant = TTestVariant::Pooled);

/// Two-sided Mann-Whitney U test. Exact when both samples are smaller than
/// 50 and there are no ties, otherwise the normal approximation with
/// tie-corrected variance and continuity correction 0.5.
TestResult mann_whitney_u(std::span<const double> x, std::span<const double> y);

/// One-way ANOVA over two or more groups.
TestResult anova_oneway(const std::vector<std::vector<double>>& groups);

/// Kruskal-Wallis rank test with midranks and tie correction.
TestResult kruskal_wallis(const std::vector<std::vector<double>>& groups);

/// MANOVA with Pillai's trace and its F approximation over the first q score
/// columns. Not applicable when q == 1 or the within-groups SSCP is singular.
TestResult manova_pillai(const Matrix& scores, std::size_t q, const GroupFactor& groups);

struct WeightedPValues {
    std::vector<double> raw;
    std::vector<double> weights;
    std::vector<double> adjusted;  // min(1, raw/weight)
};

/// Weighted Bonferroni adjustment with explained-variance weights.
WeightedPValues weighted_bonferroni(const std::vector<double>& raw,
                                    const std::vector<double>& weights);

/// Midranks of a sample (ties share the average rank). Ranks start at 1.
std::vector<double> midranks(std::span<const double> values);

/// CDF of the exact Mann-Whitney U distribution: P(U <= u) for samples of
/// sizes nx and ny under the null, counted by dynamic programming.
double mann_whitney_exact_cdf(double u, std::size_t nx, std::size_t ny);

} // namespace micomp
