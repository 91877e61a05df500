#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "alphabit/panel.hpp"

namespace alphabit::target {

enum class FactorModelKind { CAPM, FF3 };

inline int factor_count(FactorModelKind kind) {
    return kind == FactorModelKind::CAPM ? 1 : 3;
}

// One OLS fit of monthly excess returns on the factor set, with intercept.
struct RegressionResult {
    data::CompanyId company;
    int window_end_year = 0;
    double alpha = 0.0;
    Eigen::VectorXd betas; // one loading per factor
    std::vector<std::pair<YearMonth, double>> residuals;
    int n_months = 0;
};

struct TargetBit {
    data::CompanyId company;
    int year = 0;
    int value = 0;           // 1 iff annual_idio > 0
    double annual_idio = 0.0;
    double alpha = 0.0;
    int n_months = 0;        // months used in the regression window
};

struct SkipRecord {
    data::CompanyId company;
    int year = 0;
    std::string reason;
};

struct TargetComputation {
    std::vector<TargetBit> targets;
    std::vector<SkipRecord> skips;
};

struct TargetOptions {
    int min_months = 24;           // of the 60-month window
    int min_target_year_months = 9; // monthly returns required inside the target year
};

// Plain OLS with intercept; residuals are actual minus fitted.
RegressionResult ols_fit(const std::vector<std::pair<YearMonth, double>>& excess_returns,
                         const data::FactorSeries& factors, FactorModelKind kind);

// Fits the 5-civil-year window ending at `year` for every company with
// enough data and emits the sign bit of the summed idiosyncratic part over
// the target year's months.
TargetComputation compute_targets(const std::vector<data::PriceSeries>& prices,
                                  const data::FactorSeries& factors, FactorModelKind kind,
                                  int year, const TargetOptions& opts = {});

} // namespace alphabit::target
