#include "alphabit/factor_model.hpp"

#include <cmath>

#include "alphabit/errors.hpp"

namespace alphabit::target {

RegressionResult ols_fit(const std::vector<std::pair<YearMonth, double>>& excess_returns,
                         const data::FactorSeries& factors, FactorModelKind kind) {
    const int k = factor_count(kind);
    std::vector<std::pair<YearMonth, double>> usable;
    for (const auto& [month, r] : excess_returns)
        if (factors.find(month) != nullptr)
            usable.push_back({month, r});

    const auto n = static_cast<Eigen::Index>(usable.size());
    if (n < k + 2)
        throw InsufficientDataError("ols_fit: " + std::to_string(usable.size()) +
                                    " months for " + std::to_string(k + 1) + " coefficients");

    Eigen::MatrixXd design(n, k + 1);
    Eigen::VectorXd yv(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto* f = factors.find(usable[static_cast<std::size_t>(i)].first);
        design(i, 0) = 1.0;
        design(i, 1) = f->mkt_excess;
        if (kind == FactorModelKind::FF3) {
            design(i, 2) = f->smb;
            design(i, 3) = f->hml;
        }
        yv(i) = usable[static_cast<std::size_t>(i)].second;
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < k + 1)
        throw SingularFitError("ols_fit: rank-deficient design matrix (rank " +
                               std::to_string(qr.rank()) + " of " + std::to_string(k + 1) + ")");
    const Eigen::VectorXd coef = qr.solve(yv);
    const Eigen::VectorXd resid = yv - design * coef;

    RegressionResult result;
    result.alpha = coef(0);
    result.betas = coef.tail(k);
    result.n_months = static_cast<int>(n);
    result.residuals.reserve(usable.size());
    for (Eigen::Index i = 0; i < n; ++i)
        result.residuals.push_back({usable[static_cast<std::size_t>(i)].first, resid(i)});
    return result;
}

TargetComputation compute_targets(const std::vector<data::PriceSeries>& prices,
                                  const data::FactorSeries& factors, FactorModelKind kind,
                                  int year, const TargetOptions& opts) {
    const YearMonth window_start{year - 4, 1};
    const YearMonth window_end{year, 12};

    TargetComputation out;
    for (const auto& series : prices) {
        std::vector<std::pair<YearMonth, double>> window_excess;
        int target_year_months = 0;
        try {
            for (const auto& [month, r] : monthly_returns(series)) {
                if (month < window_start || window_end < month)
                    continue;
                const auto* f = factors.find(month);
                if (f == nullptr)
                    continue;
                window_excess.push_back({month, r - f->rf});
                if (month.year == year)
                    ++target_year_months;
            }
        } catch (const InsufficientDataError&) {
            out.skips.push_back({series.company, year, "fewer than 2 populated months"});
            continue;
        }

        if (static_cast<int>(window_excess.size()) < opts.min_months) {
            out.skips.push_back({series.company, year,
                                 "only " + std::to_string(window_excess.size()) +
                                     " months in window (need " + std::to_string(opts.min_months) +
                                     ")"});
            continue;
        }
        if (target_year_months < opts.min_target_year_months) {
            out.skips.push_back({series.company, year,
                                 "only " + std::to_string(target_year_months) +
                                     " returns in target year (need " +
                                     std::to_string(opts.min_target_year_months) + ")"});
            continue;
        }

        RegressionResult fit;
        try {
            fit = ols_fit(window_excess, factors, kind);
        } catch (const DataError& e) {
            out.skips.push_back({series.company, year, e.what()});
            continue;
        }
        fit.company = series.company;
        fit.window_end_year = year;

        double annual_idio = 0.0;
        for (const auto& [month, eps] : fit.residuals)
            if (month.year == year)
                annual_idio += fit.alpha + eps;

        if (annual_idio == 0.0) {
            out.skips.push_back({series.company, year, "annual idiosyncratic part exactly zero"});
            continue;
        }
        out.targets.push_back({series.company, year, annual_idio > 0.0 ? 1 : 0, annual_idio,
                               fit.alpha, fit.n_months});
    }
    return out;
}

} // namespace alphabit::target
