#include "jointrank/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "jointrank/csv.hpp"
#include "jointrank/errors.hpp"

namespace jointrank {

Dataset Dataset::from_observations(std::vector<double> values,
                                   const std::vector<std::string>& labels,
                                   std::optional<std::vector<std::string>> group_order) {
    if (values.size() != labels.size())
        throw ValidationError("values and group labels differ in length");
    Dataset ds;
    ds.values_ = std::move(values);
    for (double v : ds.values_)
        if (!std::isfinite(v)) throw ValidationError("non-finite observation value");

    std::unordered_map<std::string, int> index;
    if (group_order) {
        for (const auto& g : *group_order) {
            if (index.count(g)) throw ValidationError("duplicate label in group order: " + g);
            index.emplace(g, static_cast<int>(ds.group_labels_.size()));
            ds.group_labels_.push_back(g);
        }
    }
    ds.group_index_.reserve(labels.size());
    for (const auto& g : labels) {
        auto it = index.find(g);
        if (it == index.end()) {
            if (group_order)
                throw ValidationError("observation group '" + g + "' not in group order");
            it = index.emplace(g, static_cast<int>(ds.group_labels_.size())).first;
            ds.group_labels_.push_back(g);
        }
        ds.group_index_.push_back(it->second);
    }
    ds.group_sizes_.assign(ds.group_labels_.size(), 0);
    for (int gi : ds.group_index_) ds.group_sizes_[static_cast<std::size_t>(gi)]++;

    if (ds.group_labels_.size() < 2)
        throw ValidationError("need at least 2 distinct groups, got " +
                              std::to_string(ds.group_labels_.size()));
    for (std::size_t g = 0; g < ds.group_sizes_.size(); ++g)
        if (ds.group_sizes_[g] < 2)
            throw ValidationError("group '" + ds.group_labels_[g] +
                                  "' has fewer than 2 observations");
    return ds;
}

Dataset Dataset::load_csv(std::istream& in, const std::string& value_column,
                          const std::string& group_column,
                          std::optional<std::vector<std::string>> group_order) {
    const csv::Table table = csv::read(in);
    const std::size_t vcol = table.column(value_column);
    const std::size_t gcol = table.column(group_column);
    std::vector<double> values;
    std::vector<std::string> labels;
    values.reserve(table.rows.size());
    labels.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::string& cell = table.rows[r][vcol];
        const char* begin = cell.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || (end && *end != '\0'))
            throw ParseError("non-numeric value '" + cell + "' in column '" + value_column + "'",
                             r + 1);
        if (!std::isfinite(v))
            throw ParseError("non-finite value in column '" + value_column + "'", r + 1);
        values.push_back(v);
        labels.push_back(table.rows[r][gcol]);
    }
    return from_observations(std::move(values), labels, std::move(group_order));
}

std::vector<double> Dataset::values_of_group(std::size_t g) const {
    std::vector<double> out;
    out.reserve(group_sizes_[g]);
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (group_index_[i] == static_cast<int>(g)) out.push_back(values_[i]);
    return out;
}

void Dataset::to_csv(std::ostream& out, const std::string& value_column,
                     const std::string& group_column) const {
    csv::write_row(out, {value_column, group_column});
    std::ostringstream num;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        num.str("");
        num.precision(17);
        num << values_[i];
        csv::write_row(out, {num.str(), group_labels_[group_index_[i]]});
    }
}

std::vector<GroupSummary> summarize(const Dataset& ds) {
    std::vector<GroupSummary> out(ds.n_groups());
    for (std::size_t g = 0; g < ds.n_groups(); ++g) {
        out[g].label = ds.group_labels()[g];
        out[g].n = ds.group_sizes()[g];
    }
    for (std::size_t i = 0; i < ds.size(); ++i)
        out[ds.group_index()[i]].mean += ds.values()[i];
    for (auto& s : out) s.mean /= static_cast<double>(s.n);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto g = static_cast<std::size_t>(ds.group_index()[i]);
        const double d = ds.values()[i] - out[g].mean;
        out[g].variance += d * d;
    }
    for (auto& s : out) s.variance /= static_cast<double>(s.n - 1);
    return out;
}

}  // namespace jointrank
