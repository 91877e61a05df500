#pragma once

#include <Eigen/Dense>
#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alphabit/dates.hpp"

namespace alphabit::data {

using CompanyId = std::string; // 12-character ISIN

struct PricePoint {
    Date date;
    double close = 0.0; // adjusted, strictly positive
};

struct PriceSeries {
    CompanyId company;
    std::vector<PricePoint> observations; // dates strictly increasing
};

struct FactorRow {
    YearMonth month;
    double mkt_excess = 0.0;
    double smb = 0.0;
    double hml = 0.0;
    double rf = 0.0;
};

// Monthly factor returns over a contiguous month range.
struct FactorSeries {
    std::vector<FactorRow> rows;

    const FactorRow* find(YearMonth m) const {
        if (rows.empty())
            return nullptr;
        const int off = m.index() - rows.front().month.index();
        if (off < 0 || off >= static_cast<int>(rows.size()))
            return nullptr;
        return &rows[static_cast<std::size_t>(off)];
    }
};

inline constexpr int kNumPillars = 10;
inline constexpr const char* kPillarNames[kNumPillars] = {
    "resource_use",   "emissions",  "innovation",   "workforce",    "human_rights",
    "community",      "product_responsibility",     "management",   "shareholders",
    "csr_strategy",
};

struct FeatureRow {
    CompanyId company;
    int year = 0;
    std::array<std::optional<double>, kNumPillars> pillars; // each in [0,1] when present
    std::optional<double> controversy;                      // in [0,1] when present
    double market_cap = 0.0;                                // euros, > 0
    std::string country;
    std::string sector_l1;
    std::string sector_l2;
    std::string sector_l3;
};

struct Sample {
    FeatureRow features;
    int target = 0; // 0 or 1
};

enum class FeatureKind { Numeric, Categorical };

struct FeatureDef {
    std::string name;
    FeatureKind kind = FeatureKind::Numeric;
    std::vector<std::string> categories; // registry, code = position; empty for numeric
};

using FeatureSchema = std::vector<FeatureDef>;

// Column layout of the encoded feature matrix. The 11 ESG columns come
// first, then the five benchmark columns.
inline constexpr int kColControversy = 10;
inline constexpr int kColMarketCap = 11;
inline constexpr int kColCountry = 12;
inline constexpr int kColSectorL1 = 13;
inline constexpr int kColSectorL2 = 14;
inline constexpr int kColSectorL3 = 15;
inline constexpr int kNumFeatures = 16;
inline constexpr int kNumEsgFeatures = 11;

// Company-year training corpus. `X` holds the dictionary-encoded feature
// matrix (NaN = missing), row i matching samples[i]; immutable once built.
struct Panel {
    std::vector<Sample> samples; // sorted by (company, year), unique keys
    FeatureSchema schema;
    Eigen::MatrixXd X;
    Eigen::VectorXd y;

    int year(int row) const { return samples[static_cast<std::size_t>(row)].features.year; }
    const CompanyId& company(int row) const {
        return samples[static_cast<std::size_t>(row)].features.company;
    }
};

struct PanelBuildReport {
    Panel panel;
    int dropped = 0; // feature rows without a matching target
};

// File loaders; schemas documented in the README.
std::vector<PriceSeries> load_prices(const std::filesystem::path& path);
FactorSeries load_factors(const std::filesystem::path& path);
std::vector<FeatureRow> load_features(const std::filesystem::path& path);

// Simple return per calendar month from the last available daily close of
// each month. A month with no observation breaks contiguity: the following
// month gets no return.
std::vector<std::pair<YearMonth, double>> monthly_returns(const PriceSeries& series);

// Inner join of features and targets on (company, year).
PanelBuildReport build_panel(const std::vector<FeatureRow>& features,
                             const std::map<std::pair<CompanyId, int>, int>& targets);

// Column subset used when benchmark-only models are trained.
enum class FeatureSet { EsgPlusBenchmark, BenchmarkOnly };

struct FeatureView {
    Eigen::MatrixXd X;
    FeatureSchema schema;
    std::vector<int> columns; // panel column index per view column
};

FeatureView feature_view(const Panel& panel, FeatureSet set);

// Encodes a raw categorical value against a registry; unseen values map to
// NaN so that trees route them along the missing direction.
double encode_category(const FeatureDef& def, const std::string& value);

} // namespace alphabit::data
