#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causalpanel/csv.hpp"
#include "causalpanel/panel.hpp"

namespace causalpanel {

enum class Layout { long_form, wide_form };

inline Layout layout_from_string(const std::string& s) {
    if (s == "long") return Layout::long_form;
    if (s == "wide") return Layout::wide_form;
    throw DomainError("unknown layout '" + s + "' (expected long|wide)");
}

namespace detail {

struct RawCell {
    std::string country;
    int year;
    std::string indicator;
    std::optional<double> value;
};

inline void read_long_panel(const std::string& path, std::vector<RawCell>& cells) {
    auto lines = csv::read_lines(path);
    if (lines.empty()) throw ParseError("empty panel file", 0);
    auto header = csv::split_record(lines[0], 1);
    if (header != std::vector<std::string>{"country", "year", "indicator", "value"})
        throw ParseError("long layout requires header 'country,year,indicator,value'", 1);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto f = csv::split_record(lines[i], i + 1);
        if (f.size() != 4) throw ParseError("expected 4 columns", i + 1);
        RawCell cell;
        cell.country = f[0];
        cell.year = static_cast<int>(csv::parse_int(f[1], i + 1));
        cell.indicator = f[2];
        if (!f[3].empty()) cell.value = csv::parse_double(f[3], i + 1);
        cells.push_back(std::move(cell));
    }
}

inline void read_wide_dir(const std::string& dir, std::vector<RawCell>& cells) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error("wide layout: no .csv files in " + dir);
    for (const auto& file : files) {
        std::string country = file.stem().string();
        auto lines = csv::read_lines(file.string());
        if (lines.empty()) throw ParseError("empty country file " + file.string(), 0);
        auto header = csv::split_record(lines[0], 1);
        if (header.empty() || header[0] != "indicator")
            throw ParseError("wide layout header must start with 'indicator'", 1);
        std::vector<int> years;
        for (std::size_t j = 1; j < header.size(); ++j)
            years.push_back(static_cast<int>(csv::parse_int(header[j], 1)));
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto f = csv::split_record(lines[i], i + 1);
            if (f.size() != header.size())
                throw ParseError("row width does not match header in " + file.string(), i + 1);
            for (std::size_t j = 1; j < f.size(); ++j) {
                RawCell cell;
                cell.country = country;
                cell.year = years[j - 1];
                cell.indicator = f[0];
                if (!f[j].empty()) cell.value = csv::parse_double(f[j], i + 1);
                cells.push_back(std::move(cell));
            }
        }
    }
}

}  // namespace detail

// Read panel + label CSVs into a validated dataset. Years absent from a
// country become all-missing columns; label years absent from the label
// file default to 0 with a warning.
inline PanelDataset ingest(const std::string& panel_path, Layout layout,
                           const std::string& label_path) {
    std::vector<detail::RawCell> cells;
    if (layout == Layout::long_form)
        detail::read_long_panel(panel_path, cells);
    else
        detail::read_wide_dir(panel_path, cells);

    // label file: country,year,label
    struct LabelRow {
        std::string country;
        int year;
        int value;
    };
    std::vector<LabelRow> label_rows;
    {
        auto lines = csv::read_lines(label_path);
        if (lines.empty()) throw ParseError("empty label file", 0);
        auto header = csv::split_record(lines[0], 1);
        if (header != std::vector<std::string>{"country", "year", "label"})
            throw ParseError("label file requires header 'country,year,label'", 1);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            auto f = csv::split_record(lines[i], i + 1);
            if (f.size() != 3) throw ParseError("expected 3 columns", i + 1);
            long v = csv::parse_int(f[2], i + 1);
            if (v != 0 && v != 1)
                throw DomainError("label value " + std::to_string(v) + " outside {0,1} (line " +
                                  std::to_string(i + 1) + ")");
            label_rows.push_back({f[0], static_cast<int>(csv::parse_int(f[1], i + 1)),
                                  static_cast<int>(v)});
        }
    }

    PanelDataset data;
    std::map<std::string, std::size_t> country_idx, indicator_idx;
    std::vector<std::string> country_order;
    int ymin = 0, ymax = 0;
    bool have_year = false;
    auto note_year = [&](int y) {
        if (!have_year) {
            ymin = ymax = y;
            have_year = true;
        } else {
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    };

    for (const auto& c : cells) {
        note_year(c.year);
        if (!country_idx.count(c.country)) {
            country_idx[c.country] = country_order.size();
            country_order.push_back(c.country);
        }
        if (!indicator_idx.count(c.indicator)) {
            if (c.indicator == kLabelName)
                throw DomainError("indicator name '" + std::string(kLabelName) + "' is reserved");
            indicator_idx[c.indicator] = data.indicator_names.size();
            data.indicator_names.push_back(c.indicator);
        }
    }
    for (const auto& r : label_rows) note_year(r.year);
    if (!have_year) throw Error("no data rows found");
    data.years = {ymin, ymax};

    for (const auto& name : country_order) {
        CountryPanel p;
        p.country_id = name;
        p.indicator_names = data.indicator_names;
        p.years = data.years;
        p.values = MaskedMatrix(data.indicator_names.size(),
                                static_cast<std::size_t>(data.years.count()));
        p.label.assign(static_cast<std::size_t>(data.years.count()), 0);
        data.countries.push_back(std::move(p));
    }

    std::set<std::tuple<std::string, int, std::string>> seen;
    for (const auto& c : cells) {
        if (!seen.insert({c.country, c.year, c.indicator}).second)
            throw DuplicateKeyError("duplicate cell (" + c.country + ", " +
                                    std::to_string(c.year) + ", " + c.indicator + ")");
        if (!c.value) continue;
        auto& panel = data.countries[country_idx.at(c.country)];
        panel.values.set(indicator_idx.at(c.indicator),
                         static_cast<std::size_t>(data.years.index_of(c.year)), *c.value);
    }

    std::map<std::string, std::set<int>> labeled_years;
    for (const auto& r : label_rows) {
        auto it = country_idx.find(r.country);
        if (it == country_idx.end()) {
            data.warnings.push_back("label row for unknown country '" + r.country +
                                    "' ignored");
            continue;
        }
        auto& panel = data.countries[it->second];
        auto yi = static_cast<std::size_t>(data.years.index_of(r.year));
        if (!labeled_years[r.country].insert(r.year).second)
            throw DuplicateKeyError("duplicate label row (" + r.country + ", " +
                                    std::to_string(r.year) + ")");
        panel.label[yi] = r.value;
    }
    for (const auto& name : country_order) {
        int missing = data.years.count() - static_cast<int>(labeled_years[name].size());
        if (missing > 0)
            data.warnings.push_back("country '" + name + "': label defaulted to 0 for " +
                                    std::to_string(missing) + " year(s)");
    }

    data.validate();
    return data;
}

// Byte-stable export mirroring the ingest layouts. Every cell is written
// (empty string for missing) so re-ingest reproduces the dataset exactly.
inline void write_dataset(const PanelDataset& data, const std::string& out_dir, Layout layout) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    if (layout == Layout::long_form) {
        std::ofstream out(fs::path(out_dir) / "panel.csv", std::ios::binary);
        out << "country,year,indicator,value\n";
        for (const auto& c : data.countries)
            for (std::size_t i = 0; i < data.indicator_names.size(); ++i)
                for (int y = data.years.first; y <= data.years.last; ++y) {
                    auto v = c.values.at(i, static_cast<std::size_t>(data.years.index_of(y)));
                    out << csv::quote_field(c.country_id) << ',' << y << ','
                        << csv::quote_field(data.indicator_names[i]) << ','
                        << (v ? csv::format_double(*v) : "") << '\n';
                }
    } else {
        fs::create_directories(fs::path(out_dir) / "countries");
        for (const auto& c : data.countries) {
            std::ofstream out(fs::path(out_dir) / "countries" / (c.country_id + ".csv"),
                              std::ios::binary);
            out << "indicator";
            for (int y = data.years.first; y <= data.years.last; ++y) out << ',' << y;
            out << '\n';
            for (std::size_t i = 0; i < data.indicator_names.size(); ++i) {
                out << csv::quote_field(data.indicator_names[i]);
                for (int y = data.years.first; y <= data.years.last; ++y) {
                    auto v = c.values.at(i, static_cast<std::size_t>(data.years.index_of(y)));
                    out << ',' << (v ? csv::format_double(*v) : "");
                }
                out << '\n';
            }
        }
    }

    std::ofstream lab(fs::path(out_dir) / "labels.csv", std::ios::binary);
    lab << "country,year,label\n";
    for (const auto& c : data.countries)
        for (int y = data.years.first; y <= data.years.last; ++y)
            lab << csv::quote_field(c.country_id) << ',' << y << ','
                << c.label[static_cast<std::size_t>(data.years.index_of(y))] << '\n';
}

inline PanelDataset read_dataset(const std::string& dir, Layout layout) {
    namespace fs = std::filesystem;
    std::string panel_path = layout == Layout::long_form
                                 ? (fs::path(dir) / "panel.csv").string()
                                 : (fs::path(dir) / "countries").string();
    return ingest(panel_path, layout, (fs::path(dir) / "labels.csv").string());
}

}  // namespace causalpanel
