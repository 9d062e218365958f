#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace jointrank {

struct GroupSummary {
    std::string label;
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;  // unbiased
};

// Immutable one-way layout: observations in input order plus an ordered list of
// distinct group labels. The first label in group_order acts as the control for
// many-to-one contrasts.
class Dataset {
public:
    static Dataset from_observations(std::vector<double> values,
                                     const std::vector<std::string>& labels,
                                     std::optional<std::vector<std::string>> group_order = {});

    static Dataset load_csv(std::istream& in, const std::string& value_column,
                            const std::string& group_column,
                            std::optional<std::vector<std::string>> group_order = {});

    std::size_t size() const { return values_.size(); }
    std::size_t n_groups() const { return group_labels_.size(); }
    std::span<const double> values() const { return values_; }
    std::span<const int> group_index() const { return group_index_; }
    const std::vector<std::string>& group_labels() const { return group_labels_; }
    const std::vector<std::size_t>& group_sizes() const { return group_sizes_; }

    std::vector<double> values_of_group(std::size_t g) const;

    void to_csv(std::ostream& out, const std::string& value_column = "value",
                const std::string& group_column = "group") const;

private:
    Dataset() = default;

    std::vector<double> values_;
    std::vector<int> group_index_;
    std::vector<std::string> group_labels_;
    std::vector<std::size_t> group_sizes_;
};

std::vector<GroupSummary> summarize(const Dataset& ds);

}  // namespace jointrank
