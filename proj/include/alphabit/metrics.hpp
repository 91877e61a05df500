#pragma once

#include <Eigen/Dense>
#include <vector>

namespace alphabit::metrics {

// Mean Bernoulli log loss; probabilities clamped to [1e-15, 1 - 1e-15].
double cross_entropy(const Eigen::Ref<const Eigen::VectorXd>& p,
                     const Eigen::Ref<const Eigen::VectorXd>& y);

// Mean of sensitivity and specificity; requires both classes in y.
double balanced_accuracy(const Eigen::Ref<const Eigen::VectorXd>& yhat,
                         const Eigen::Ref<const Eigen::VectorXd>& y);

struct DependenceReport {
    double pearson = 0.0;
    double r2 = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    double kendall_tau = 0.0;    // tau-b, tie corrected
    double kendall_pvalue = 1.0; // two-sided, normal approximation
};

// Pearson, simple OLS fit of y on x, and Kendall tau-b with its p-value.
DependenceReport dependence(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Eigen::Ref<const Eigen::VectorXd>& y);

// Quartiles by linear interpolation, whisker bounds at 1.5 IQR; outliers
// strictly outside the bounds.
struct BoxplotStats {
    double median = 0.0;
    double q1 = 0.0;
    double q3 = 0.0;
    double whisker_low = 0.0;
    double whisker_high = 0.0;
    std::vector<int> outliers; // indices into the input vector
};

BoxplotStats boxplot_stats(const Eigen::Ref<const Eigen::VectorXd>& values);

double quantile(std::vector<double> sorted_or_not, double p);

// Two-sided p-value of a Student-t statistic with `dof` degrees of freedom.
double student_t_pvalue(double t, double dof);

// Simple linear regression of y on x with the slope's t-test p-value.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double p_value = 1.0;
};

SlopeFit slope_test(const Eigen::Ref<const Eigen::VectorXd>& x,
                    const Eigen::Ref<const Eigen::VectorXd>& y);

} // namespace alphabit::metrics
