#include "alphabit/panel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "alphabit/csv.hpp"
#include "alphabit/errors.hpp"

namespace alphabit::data {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_score(std::optional<double> v, std::size_t line_no, const std::string& what) {
    if (v && (*v < 0.0 || *v > 1.0))
        throw ParseError("line " + std::to_string(line_no) + ": " + what + " " +
                         csv::fmt_double(*v) + " outside [0,1]");
}
} // namespace

std::vector<PriceSeries> load_prices(const std::filesystem::path& path) {
    const auto table = csv::read_file(path, {"isin", "date", "close"});
    std::map<CompanyId, PriceSeries> by_isin;
    std::set<std::pair<CompanyId, Date>> seen;
    for (const auto& row : table.rows) {
        const CompanyId& isin = row.fields[0];
        if (isin.empty())
            throw ParseError("line " + std::to_string(row.line) + ": empty isin");
        const Date date = [&] {
            try {
                return parse_date(row.fields[1]);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(row.line) + ": " + e.what());
            }
        }();
        const double close = csv::parse_double(row.fields[2], row.line, "close");
        if (close <= 0.0)
            throw ParseError("line " + std::to_string(row.line) + ": non-positive close " +
                             csv::fmt_double(close));
        if (!seen.insert({isin, date}).second)
            throw DuplicateKeyError("duplicate price (" + isin + ", " + date.str() + ") at line " +
                                    std::to_string(row.line));
        auto& series = by_isin[isin];
        series.company = isin;
        series.observations.push_back({date, close});
    }
    std::vector<PriceSeries> out;
    out.reserve(by_isin.size());
    for (auto& [isin, series] : by_isin) {
        std::sort(series.observations.begin(), series.observations.end(),
                  [](const PricePoint& a, const PricePoint& b) { return a.date < b.date; });
        out.push_back(std::move(series));
    }
    return out;
}

FactorSeries load_factors(const std::filesystem::path& path) {
    const auto table = csv::read_file(path, {"month", "mkt_excess", "smb", "hml", "rf"});
    FactorSeries series;
    for (const auto& row : table.rows) {
        FactorRow f;
        try {
            f.month = parse_year_month(row.fields[0]);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(row.line) + ": " + e.what());
        }
        f.mkt_excess = csv::parse_double(row.fields[1], row.line, "mkt_excess");
        f.smb = csv::parse_double(row.fields[2], row.line, "smb");
        f.hml = csv::parse_double(row.fields[3], row.line, "hml");
        f.rf = csv::parse_double(row.fields[4], row.line, "rf");
        series.rows.push_back(f);
    }
    std::sort(series.rows.begin(), series.rows.end(),
              [](const FactorRow& a, const FactorRow& b) { return a.month < b.month; });
    for (std::size_t i = 1; i < series.rows.size(); ++i) {
        if (series.rows[i].month == series.rows[i - 1].month)
            throw DuplicateKeyError("duplicate factor month " + series.rows[i].month.str());
        if (series.rows[i].month.index() != series.rows[i - 1].month.index() + 1)
            throw DataError("factor months not contiguous around " + series.rows[i].month.str());
    }
    return series;
}

std::vector<FeatureRow> load_features(const std::filesystem::path& path) {
    std::vector<std::string> header = {"isin", "year"};
    for (const char* p : kPillarNames)
        header.push_back(p);
    header.insert(header.end(),
                  {"controversy", "market_cap", "country", "sector_l1", "sector_l2", "sector_l3"});
    const auto table = csv::read_file(path, header);

    std::vector<FeatureRow> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        FeatureRow f;
        f.company = row.fields[0];
        if (f.company.empty())
            throw ParseError("line " + std::to_string(row.line) + ": empty isin");
        f.year = csv::parse_int(row.fields[1], row.line, "year");
        for (int p = 0; p < kNumPillars; ++p) {
            f.pillars[static_cast<std::size_t>(p)] =
                csv::parse_optional_double(row.fields[static_cast<std::size_t>(2 + p)], row.line,
                                           kPillarNames[p]);
            check_score(f.pillars[static_cast<std::size_t>(p)], row.line, kPillarNames[p]);
        }
        f.controversy = csv::parse_optional_double(row.fields[12], row.line, "controversy");
        check_score(f.controversy, row.line, "controversy");
        f.market_cap = csv::parse_double(row.fields[13], row.line, "market_cap");
        if (f.market_cap <= 0.0)
            throw ParseError("line " + std::to_string(row.line) + ": non-positive market_cap");
        f.country = row.fields[14];
        f.sector_l1 = row.fields[15];
        f.sector_l2 = row.fields[16];
        f.sector_l3 = row.fields[17];
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::pair<YearMonth, double>> monthly_returns(const PriceSeries& series) {
    // Last close per populated calendar month; observations are sorted.
    std::vector<std::pair<YearMonth, double>> last_close;
    for (const auto& obs : series.observations) {
        const YearMonth m = obs.date.ym();
        if (!last_close.empty() && last_close.back().first == m)
            last_close.back().second = obs.close;
        else
            last_close.push_back({m, obs.close});
    }
    if (last_close.size() < 2)
        throw InsufficientDataError("series " + series.company + ": fewer than 2 populated months");

    std::vector<std::pair<YearMonth, double>> returns;
    for (std::size_t i = 1; i < last_close.size(); ++i) {
        if (last_close[i].first.index() != last_close[i - 1].first.index() + 1)
            continue; // gap month: no return, contiguity broken
        returns.push_back({last_close[i].first, last_close[i].second / last_close[i - 1].second - 1.0});
    }
    return returns;
}

double encode_category(const FeatureDef& def, const std::string& value) {
    const auto it = std::lower_bound(def.categories.begin(), def.categories.end(), value);
    if (it == def.categories.end() || *it != value)
        return kNaN;
    return static_cast<double>(it - def.categories.begin());
}

namespace {
FeatureSchema make_schema(const std::vector<FeatureRow>& rows) {
    FeatureSchema schema;
    for (const char* p : kPillarNames)
        schema.push_back({p, FeatureKind::Numeric, {}});
    schema.push_back({"controversy", FeatureKind::Numeric, {}});
    schema.push_back({"market_cap", FeatureKind::Numeric, {}});
    schema.push_back({"country", FeatureKind::Categorical, {}});
    schema.push_back({"sector_l1", FeatureKind::Categorical, {}});
    schema.push_back({"sector_l2", FeatureKind::Categorical, {}});
    schema.push_back({"sector_l3", FeatureKind::Categorical, {}});

    // Registries hold sorted unique values so the encoding does not depend
    // on row order.
    std::set<std::string> country, l1, l2, l3;
    for (const auto& r : rows) {
        country.insert(r.country);
        l1.insert(r.sector_l1);
        l2.insert(r.sector_l2);
        l3.insert(r.sector_l3);
    }
    schema[kColCountry].categories.assign(country.begin(), country.end());
    schema[kColSectorL1].categories.assign(l1.begin(), l1.end());
    schema[kColSectorL2].categories.assign(l2.begin(), l2.end());
    schema[kColSectorL3].categories.assign(l3.begin(), l3.end());
    return schema;
}
} // namespace

PanelBuildReport build_panel(const std::vector<FeatureRow>& features,
                             const std::map<std::pair<CompanyId, int>, int>& targets) {
    std::set<std::pair<CompanyId, int>> seen;
    for (const auto& f : features)
        if (!seen.insert({f.company, f.year}).second)
            throw DuplicateKeyError("duplicate feature row (" + f.company + ", " +
                                    std::to_string(f.year) + ")");

    std::vector<Sample> samples;
    int dropped = 0;
    for (const auto& f : features) {
        const auto it = targets.find({f.company, f.year});
        if (it == targets.end()) {
            ++dropped;
            continue;
        }
        samples.push_back({f, it->second});
    }
    if (samples.empty())
        throw EmptyPanelError("no feature row has a matching target");
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
        return std::tie(a.features.company, a.features.year) <
               std::tie(b.features.company, b.features.year);
    });

    PanelBuildReport report;
    report.dropped = dropped;
    Panel& panel = report.panel;
    panel.samples = std::move(samples);
    std::vector<FeatureRow> rows;
    rows.reserve(panel.samples.size());
    for (const auto& s : panel.samples)
        rows.push_back(s.features);
    panel.schema = make_schema(rows);

    const auto n = static_cast<Eigen::Index>(panel.samples.size());
    panel.X.resize(n, kNumFeatures);
    panel.y.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& f = panel.samples[static_cast<std::size_t>(i)].features;
        for (int p = 0; p < kNumPillars; ++p)
            panel.X(i, p) = f.pillars[static_cast<std::size_t>(p)].value_or(kNaN);
        panel.X(i, kColControversy) = f.controversy.value_or(kNaN);
        panel.X(i, kColMarketCap) = f.market_cap;
        panel.X(i, kColCountry) = encode_category(panel.schema[kColCountry], f.country);
        panel.X(i, kColSectorL1) = encode_category(panel.schema[kColSectorL1], f.sector_l1);
        panel.X(i, kColSectorL2) = encode_category(panel.schema[kColSectorL2], f.sector_l2);
        panel.X(i, kColSectorL3) = encode_category(panel.schema[kColSectorL3], f.sector_l3);
        panel.y(i) = panel.samples[static_cast<std::size_t>(i)].target;
    }
    return report;
}

FeatureView feature_view(const Panel& panel, FeatureSet set) {
    FeatureView view;
    if (set == FeatureSet::EsgPlusBenchmark) {
        view.X = panel.X;
        view.schema = panel.schema;
        view.columns.resize(kNumFeatures);
        for (int c = 0; c < kNumFeatures; ++c)
            view.columns[static_cast<std::size_t>(c)] = c;
        return view;
    }
    for (int c = kColMarketCap; c < kNumFeatures; ++c)
        view.columns.push_back(c);
    view.X.resize(panel.X.rows(), static_cast<Eigen::Index>(view.columns.size()));
    for (std::size_t j = 0; j < view.columns.size(); ++j) {
        view.X.col(static_cast<Eigen::Index>(j)) = panel.X.col(view.columns[j]);
        view.schema.push_back(panel.schema[static_cast<std::size_t>(view.columns[j])]);
    }
    return view;
}

} // namespace alphabit::data
