#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphabit/panel.hpp"

namespace alphabit::splits {

enum class Scheme { CompanyWise, Temporal };

inline const char* scheme_name(Scheme s) {
    return s == Scheme::CompanyWise ? "company" : "temporal";
}

struct Fold {
    std::vector<int> train;      // row indices into the panel
    std::vector<int> validation;
    std::vector<data::CompanyId> train_companies;
    std::vector<data::CompanyId> validation_companies;
};

struct SplitPlan {
    Scheme scheme = Scheme::CompanyWise;
    int test_year = 0;
    std::uint64_t seed = 0;
    std::vector<Fold> folds;
    std::vector<int> test; // all rows with year == test_year
};

// K independent random 75/25 company partitions of the pre-test-year
// universe; every year of a company follows the company's assignment.
SplitPlan company_kfold(const data::Panel& panel, int test_year, int n_splits,
                        std::uint64_t seed);

// Single chronological fold: train is the minimal prefix of whole years
// holding at least 75% of pre-test samples, validation the remaining suffix.
SplitPlan temporal_split(const data::Panel& panel, int test_year);

std::vector<int> expanding_windows(int first_test, int last_test);

std::string to_manifest_json(const SplitPlan& plan);

} // namespace alphabit::splits
