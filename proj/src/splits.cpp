#include "alphabit/splits.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "alphabit/errors.hpp"
#include "alphabit/rng.hpp"

namespace alphabit::splits {

namespace {

std::vector<int> test_rows(const data::Panel& panel, int test_year) {
    std::vector<int> rows;
    for (int i = 0; i < static_cast<int>(panel.samples.size()); ++i)
        if (panel.year(i) == test_year)
            rows.push_back(i);
    return rows;
}

} // namespace

SplitPlan company_kfold(const data::Panel& panel, int test_year, int n_splits,
                        std::uint64_t seed) {
    if (n_splits < 1)
        throw ConfigError("company_kfold: n_splits must be >= 1");

    std::set<data::CompanyId> universe;
    for (int i = 0; i < static_cast<int>(panel.samples.size()); ++i)
        if (panel.year(i) < test_year)
            universe.insert(panel.company(i));
    if (static_cast<int>(universe.size()) < n_splits)
        throw InsufficientDataError("company_kfold: " + std::to_string(universe.size()) +
                                    " pre-test companies for " + std::to_string(n_splits) +
                                    " splits");
    const std::vector<data::CompanyId> companies(universe.begin(), universe.end());
    const auto n_validation =
        static_cast<std::size_t>(std::ceil(0.25 * static_cast<double>(companies.size())));

    SplitPlan plan;
    plan.scheme = Scheme::CompanyWise;
    plan.test_year = test_year;
    plan.seed = seed;
    plan.test = test_rows(panel, test_year);

    for (int f = 0; f < n_splits; ++f) {
        auto g = rng::engine(rng::derive(seed, {rng::kSplitFold, static_cast<std::uint64_t>(f)}));
        std::vector<data::CompanyId> shuffled = companies;
        rng::shuffle(shuffled, g);

        Fold fold;
        fold.validation_companies.assign(shuffled.begin(),
                                         shuffled.begin() + static_cast<std::ptrdiff_t>(n_validation));
        fold.train_companies.assign(shuffled.begin() + static_cast<std::ptrdiff_t>(n_validation),
                                    shuffled.end());
        std::sort(fold.validation_companies.begin(), fold.validation_companies.end());
        std::sort(fold.train_companies.begin(), fold.train_companies.end());

        const std::set<data::CompanyId> val_set(fold.validation_companies.begin(),
                                                fold.validation_companies.end());
        for (int i = 0; i < static_cast<int>(panel.samples.size()); ++i) {
            if (panel.year(i) >= test_year)
                continue;
            if (val_set.count(panel.company(i)))
                fold.validation.push_back(i);
            else
                fold.train.push_back(i);
        }
        plan.folds.push_back(std::move(fold));
    }
    return plan;
}

SplitPlan temporal_split(const data::Panel& panel, int test_year) {
    std::map<int, int> count_by_year;
    for (int i = 0; i < static_cast<int>(panel.samples.size()); ++i)
        if (panel.year(i) < test_year)
            ++count_by_year[panel.year(i)];
    if (static_cast<int>(count_by_year.size()) < 4)
        throw InsufficientDataError("temporal_split: " + std::to_string(count_by_year.size()) +
                                    " distinct pre-test years, need at least 4");

    int total = 0;
    for (const auto& [year, n] : count_by_year)
        total += n;

    // First validation year = the year after the minimal chronological
    // prefix holding >= 75% of pre-test samples.
    int cum = 0;
    int first_validation_year = count_by_year.rbegin()->first;
    for (const auto& [year, n] : count_by_year) {
        cum += n;
        if (4 * cum >= 3 * total) {
            first_validation_year = year + 1;
            break;
        }
    }
    // The prefix can swallow everything when the last year is heavy; keep
    // the most recent year for validation in that case.
    if (first_validation_year > count_by_year.rbegin()->first)
        first_validation_year = count_by_year.rbegin()->first;

    SplitPlan plan;
    plan.scheme = Scheme::Temporal;
    plan.test_year = test_year;
    plan.test = test_rows(panel, test_year);

    Fold fold;
    std::set<data::CompanyId> train_set, val_set;
    for (int i = 0; i < static_cast<int>(panel.samples.size()); ++i) {
        if (panel.year(i) >= test_year)
            continue;
        if (panel.year(i) >= first_validation_year) {
            fold.validation.push_back(i);
            val_set.insert(panel.company(i));
        } else {
            fold.train.push_back(i);
            train_set.insert(panel.company(i));
        }
    }
    fold.train_companies.assign(train_set.begin(), train_set.end());
    fold.validation_companies.assign(val_set.begin(), val_set.end());
    plan.folds.push_back(std::move(fold));
    return plan;
}

std::vector<int> expanding_windows(int first_test, int last_test) {
    if (first_test > last_test)
        throw ConfigError("expanding_windows: first_test " + std::to_string(first_test) +
                          " > last_test " + std::to_string(last_test));
    std::vector<int> years;
    for (int y = first_test; y <= last_test; ++y)
        years.push_back(y);
    return years;
}

std::string to_manifest_json(const SplitPlan& plan) {
    nlohmann::json j;
    j["scheme"] = scheme_name(plan.scheme);
    j["test_year"] = plan.test_year;
    j["seed"] = plan.seed;
    j["folds"] = nlohmann::json::array();
    for (const auto& fold : plan.folds) {
        nlohmann::json f;
        f["train_companies"] = fold.train_companies;
        f["validation_companies"] = fold.validation_companies;
        j["folds"].push_back(std::move(f));
    }
    return j.dump(2);
}

} // namespace alphabit::splits
