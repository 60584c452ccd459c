#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causalpanel/common.hpp"

namespace causalpanel {

// Inclusive span of years.
struct YearRange {
    int first = 0;
    int last = -1;

    int count() const { return last - first + 1; }
    bool contains(int y) const { return y >= first && y <= last; }
    int index_of(int y) const { return y - first; }
    bool operator==(const YearRange&) const = default;
};

// Dense matrix with an explicit observed mask. Missing cells hold 0.0 so
// equality and hashing stay well defined.
class MaskedMatrix {
public:
    MaskedMatrix() = default;
    MaskedMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), values_(rows * cols, 0.0), observed_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool observed(std::size_t r, std::size_t c) const { return observed_[idx(r, c)] != 0; }

    double value(std::size_t r, std::size_t c) const { return values_[idx(r, c)]; }

    std::optional<double> at(std::size_t r, std::size_t c) const {
        if (!observed(r, c)) return std::nullopt;
        return values_[idx(r, c)];
    }

    void set(std::size_t r, std::size_t c, double v) {
        values_[idx(r, c)] = v;
        observed_[idx(r, c)] = 1;
    }

    void clear(std::size_t r, std::size_t c) {
        values_[idx(r, c)] = 0.0;
        observed_[idx(r, c)] = 0;
    }

    std::size_t missing_count() const {
        std::size_t n = 0;
        for (auto o : observed_)
            if (!o) ++n;
        return n;
    }

    bool complete() const { return missing_count() == 0; }

    bool operator==(const MaskedMatrix&) const = default;

private:
    std::size_t idx(std::size_t r, std::size_t c) const { return r * cols_ + c; }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> values_;
    std::vector<std::uint8_t> observed_;
};

struct CountryPanel {
    std::string country_id;
    std::vector<std::string> indicator_names;  // same across the dataset
    YearRange years;
    MaskedMatrix values;     // indicator x year
    std::vector<int> label;  // 0/1 per year, never missing

    std::size_t n_indicators() const { return indicator_names.size(); }
    std::size_t n_years() const { return static_cast<std::size_t>(years.count()); }

    // One indicator row as (value, observed) pairs in year order.
    std::vector<double> observed_values(std::size_t indicator) const {
        std::vector<double> out;
        for (std::size_t y = 0; y < n_years(); ++y)
            if (values.observed(indicator, y)) out.push_back(values.value(indicator, y));
        return out;
    }

    void validate() const {
        if (values.rows() != indicator_names.size() ||
            values.cols() != static_cast<std::size_t>(years.count()))
            throw DomainError("CountryPanel '" + country_id + "': matrix shape mismatch");
        if (label.size() != static_cast<std::size_t>(years.count()))
            throw DomainError("CountryPanel '" + country_id + "': label length mismatch");
        for (int v : label)
            if (v != 0 && v != 1)
                throw DomainError("CountryPanel '" + country_id + "': label outside {0,1}");
    }

    bool operator==(const CountryPanel&) const = default;
};

struct PanelDataset {
    std::vector<std::string> indicator_names;
    YearRange years;
    std::vector<CountryPanel> countries;
    std::vector<std::string> warnings;  // ingest-time notes (label defaults, ...)

    // names removed by the drop_sparse call that produced this dataset;
    // annotation only, not part of structural equality
    std::vector<std::string> dropped_indicators;

    void validate() const {
        std::set<std::string> seen;
        for (const auto& n : indicator_names) {
            if (n == kLabelName)
                throw DomainError("indicator name '" + n + "' is reserved");
            if (!seen.insert(n).second)
                throw DuplicateKeyError("duplicate indicator name '" + n + "'");
        }
        for (const auto& c : countries) {
            if (c.indicator_names != indicator_names || c.years != years)
                throw DomainError("CountryPanel '" + c.country_id +
                                  "' disagrees with dataset shape");
            c.validate();
        }
    }

    bool same_data(const PanelDataset& o) const {
        return indicator_names == o.indicator_names && years == o.years &&
               countries == o.countries;
    }
};

struct MissingnessReport {
    std::map<std::string, double> per_indicator_fraction;
    double overall_fraction = 0.0;
};

inline MissingnessReport missingness(const PanelDataset& data) {
    MissingnessReport rep;
    std::size_t total_cells = 0, total_missing = 0;
    for (std::size_t i = 0; i < data.indicator_names.size(); ++i) {
        std::size_t cells = 0, miss = 0;
        for (const auto& c : data.countries) {
            for (std::size_t y = 0; y < c.n_years(); ++y) {
                ++cells;
                if (!c.values.observed(i, y)) ++miss;
            }
        }
        rep.per_indicator_fraction[data.indicator_names[i]] =
            cells ? static_cast<double>(miss) / static_cast<double>(cells) : 0.0;
        total_cells += cells;
        total_missing += miss;
    }
    rep.overall_fraction =
        total_cells ? static_cast<double>(total_missing) / static_cast<double>(total_cells) : 0.0;
    return rep;
}

// Remove indicators whose global missing fraction strictly exceeds the
// threshold. The result's dropped_indicators records what was removed.
inline PanelDataset drop_sparse(const PanelDataset& data, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw DomainError("drop_sparse: threshold must be in [0,1]");
    MissingnessReport rep = missingness(data);

    std::vector<std::size_t> keep;
    PanelDataset out;
    out.years = data.years;
    out.warnings = data.warnings;
    for (std::size_t i = 0; i < data.indicator_names.size(); ++i) {
        if (rep.per_indicator_fraction.at(data.indicator_names[i]) > threshold)
            out.dropped_indicators.push_back(data.indicator_names[i]);
        else
            keep.push_back(i);
    }
    for (std::size_t i : keep) out.indicator_names.push_back(data.indicator_names[i]);
    for (const auto& c : data.countries) {
        CountryPanel nc;
        nc.country_id = c.country_id;
        nc.indicator_names = out.indicator_names;
        nc.years = c.years;
        nc.label = c.label;
        nc.values = MaskedMatrix(keep.size(), c.n_years());
        for (std::size_t r = 0; r < keep.size(); ++r)
            for (std::size_t y = 0; y < c.n_years(); ++y)
                if (auto v = c.values.at(keep[r], y)) nc.values.set(r, y, *v);
        out.countries.push_back(std::move(nc));
    }
    return out;
}

// Complete, aligned numeric columns ready for correlation/causality work.
struct VariableSet {
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;  // one per name, equal lengths

    std::size_t n_vars() const { return names.size(); }
    std::size_t n_obs() const { return cols.empty() ? 0 : cols.front().size(); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
};

}  // namespace causalpanel
