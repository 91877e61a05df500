#include "alphabit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/SpecialFunctions>

#include "alphabit/errors.hpp"

namespace alphabit::metrics {

namespace {
constexpr double kProbClamp = 1e-15;
} // namespace

double cross_entropy(const Eigen::Ref<const Eigen::VectorXd>& p,
                     const Eigen::Ref<const Eigen::VectorXd>& y) {
    if (p.size() != y.size())
        throw SizeError("cross_entropy: " + std::to_string(p.size()) + " probabilities vs " +
                        std::to_string(y.size()) + " targets");
    if (p.size() == 0)
        throw SizeError("cross_entropy: empty input");
    const Eigen::ArrayXd pc = p.array().min(1.0 - kProbClamp).max(kProbClamp);
    const Eigen::ArrayXd ya = y.array();
    return -(ya * pc.log() + (1.0 - ya) * (1.0 - pc).log()).mean();
}

double balanced_accuracy(const Eigen::Ref<const Eigen::VectorXd>& yhat,
                         const Eigen::Ref<const Eigen::VectorXd>& y) {
    if (yhat.size() != y.size())
        throw SizeError("balanced_accuracy: size mismatch");
    long tp = 0, tn = 0, pos = 0, neg = 0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (y(i) > 0.5) {
            ++pos;
            if (yhat(i) > 0.5)
                ++tp;
        } else {
            ++neg;
            if (yhat(i) <= 0.5)
                ++tn;
        }
    }
    if (pos == 0 || neg == 0)
        throw DegenerateTargetError("balanced_accuracy: single-class targets");
    return 0.5 * (static_cast<double>(tp) / static_cast<double>(pos) +
                  static_cast<double>(tn) / static_cast<double>(neg));
}

namespace {

// Counts discordant pairs as inversions of y after sorting by (x, y).
// Knight's O(n log n) merge-count; ties inside an x-group contribute no
// inversions because y is pre-sorted within each group.
long long merge_count_inversions(std::vector<double>& v, std::vector<double>& scratch,
                                 std::size_t lo, std::size_t hi) {
    if (hi - lo < 2)
        return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    long long count = merge_count_inversions(v, scratch, lo, mid) +
                      merge_count_inversions(v, scratch, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            count += static_cast<long long>(mid - i);
            scratch[k++] = v[j++];
        } else {
            scratch[k++] = v[i++];
        }
    }
    while (i < mid)
        scratch[k++] = v[i++];
    while (j < hi)
        scratch[k++] = v[j++];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              v.begin() + static_cast<std::ptrdiff_t>(lo));
    return count;
}

struct TieCounts {
    long long pairs = 0;   // sum t*(t-1)/2
    long long v_term = 0;  // sum t*(t-1)*(2t+5)
    long long t1 = 0;      // sum t*(t-1)
    long long t2 = 0;      // sum t*(t-1)*(t-2)
};

template <typename GroupKey>
TieCounts tie_counts(const std::vector<GroupKey>& sorted_keys) {
    TieCounts c;
    std::size_t i = 0;
    while (i < sorted_keys.size()) {
        std::size_t j = i;
        while (j < sorted_keys.size() && sorted_keys[j] == sorted_keys[i])
            ++j;
        const long long t = static_cast<long long>(j - i);
        c.pairs += t * (t - 1) / 2;
        c.v_term += t * (t - 1) * (2 * t + 5);
        c.t1 += t * (t - 1);
        c.t2 += t * (t - 1) * (t - 2);
        i = j;
    }
    return c;
}

} // namespace

DependenceReport dependence(const Eigen::Ref<const Eigen::VectorXd>& x,
                            const Eigen::Ref<const Eigen::VectorXd>& y) {
    if (x.size() != y.size())
        throw SizeError("dependence: size mismatch");
    const auto n = x.size();
    if (n < 3)
        throw SizeError("dependence: need at least 3 points, got " + std::to_string(n));

    const double mx = x.mean();
    const double my = y.mean();
    const Eigen::ArrayXd dx = x.array() - mx;
    const Eigen::ArrayXd dy = y.array() - my;
    const double sxx = (dx * dx).sum();
    const double syy = (dy * dy).sum();
    const double sxy = (dx * dy).sum();
    if (sxx <= 0.0 || syy <= 0.0)
        throw DegenerateVarianceError("dependence: constant input");

    DependenceReport report;
    report.pearson = sxy / std::sqrt(sxx * syy);
    report.slope = sxy / sxx;
    report.intercept = my - report.slope * mx;
    report.r2 = report.pearson * report.pearson;

    // Kendall tau-b. Sort lexicographically by (x, y), count y-inversions.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (x(a) != x(b))
            return x(a) < x(b);
        return y(a) < y(b);
    });
    std::vector<double> xs, ys;
    std::vector<std::pair<double, double>> xy;
    xs.reserve(static_cast<std::size_t>(n));
    ys.reserve(static_cast<std::size_t>(n));
    xy.reserve(static_cast<std::size_t>(n));
    for (int idx : order) {
        xs.push_back(x(idx));
        ys.push_back(y(idx));
        xy.push_back({x(idx), y(idx)});
    }
    std::vector<double> yseq = ys, scratch(ys.size());
    const long long dis = merge_count_inversions(yseq, scratch, 0, yseq.size());

    const TieCounts ct_joint = tie_counts(xy);
    const TieCounts ct_x = tie_counts(xs);
    std::sort(ys.begin(), ys.end());
    const TieCounts ct_y = tie_counts(ys);

    const long long tot = static_cast<long long>(n) * (n - 1) / 2;
    const long long xtie = ct_x.pairs, ytie = ct_y.pairs, ntie = ct_joint.pairs;
    const double con_minus_dis =
        static_cast<double>(tot - xtie - ytie + ntie) - 2.0 * static_cast<double>(dis);
    const double denom = std::sqrt(static_cast<double>(tot - xtie)) *
                         std::sqrt(static_cast<double>(tot - ytie));
    if (denom <= 0.0)
        throw DegenerateVarianceError("dependence: all values tied");
    report.kendall_tau = con_minus_dis / denom;

    // Normal approximation of con - dis under independence, tie corrected.
    const double dn = static_cast<double>(n);
    const double v0 = dn * (dn - 1.0) * (2.0 * dn + 5.0);
    const double var =
        (v0 - static_cast<double>(ct_x.v_term) - static_cast<double>(ct_y.v_term)) / 18.0 +
        static_cast<double>(ct_x.t1) * static_cast<double>(ct_y.t1) / (2.0 * dn * (dn - 1.0)) +
        static_cast<double>(ct_x.t2) * static_cast<double>(ct_y.t2) /
            (9.0 * dn * (dn - 1.0) * (dn - 2.0));
    if (var <= 0.0) {
        report.kendall_pvalue = 1.0;
    } else {
        const double z = con_minus_dis / std::sqrt(var);
        report.kendall_pvalue = std::erfc(std::abs(z) / std::sqrt(2.0));
    }
    return report;
}

double quantile(std::vector<double> values, double p) {
    if (values.empty())
        throw SizeError("quantile: empty input");
    std::sort(values.begin(), values.end());
    const double h = (static_cast<double>(values.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= values.size())
        return values.back();
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

BoxplotStats boxplot_stats(const Eigen::Ref<const Eigen::VectorXd>& values) {
    if (values.size() == 0)
        throw SizeError("boxplot_stats: empty input");
    std::vector<double> v(values.data(), values.data() + values.size());
    BoxplotStats s;
    s.median = quantile(v, 0.5);
    s.q1 = quantile(v, 0.25);
    s.q3 = quantile(v, 0.75);
    const double iqr = s.q3 - s.q1;
    s.whisker_low = s.q1 - 1.5 * iqr;
    s.whisker_high = s.q3 + 1.5 * iqr;
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (values(i) < s.whisker_low || values(i) > s.whisker_high)
            s.outliers.push_back(static_cast<int>(i));
    return s;
}

double student_t_pvalue(double t, double dof) {
    if (!std::isfinite(t))
        return 0.0;
    if (t == 0.0)
        return 1.0;
    Eigen::ArrayXd a(1), b(1), x(1);
    a(0) = dof / 2.0;
    b(0) = 0.5;
    x(0) = dof / (dof + t * t);
    return Eigen::betainc(a, b, x)(0);
}

SlopeFit slope_test(const Eigen::Ref<const Eigen::VectorXd>& x,
                    const Eigen::Ref<const Eigen::VectorXd>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw SizeError("slope_test: need matching inputs of size >= 3");
    const auto n = static_cast<double>(x.size());
    const double mx = x.mean();
    const double my = y.mean();
    const Eigen::ArrayXd dx = x.array() - mx;
    const double sxx = (dx * dx).sum();
    if (sxx <= 0.0)
        throw DegenerateVarianceError("slope_test: constant x");

    SlopeFit fit;
    fit.slope = (dx * (y.array() - my)).sum() / sxx;
    fit.intercept = my - fit.slope * mx;
    const Eigen::ArrayXd resid = y.array() - (fit.intercept + fit.slope * x.array());
    const double rss = (resid * resid).sum();
    const double se2 = rss / ((n - 2.0) * sxx);
    if (se2 <= 0.0) {
        // A numerically exact linear relation: zero slope is indistinguishable
        // from flat, any other slope is unambiguous.
        fit.p_value = fit.slope == 0.0 ? 1.0 : 0.0;
        return fit;
    }
    fit.p_value = student_t_pvalue(fit.slope / std::sqrt(se2), n - 2.0);
    return fit;
}

} // namespace alphabit::metrics
