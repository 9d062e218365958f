#include "jointrank/contrasts.hpp"

#include <numeric>

#include "jointrank/errors.hpp"

namespace jointrank {

namespace {

std::string label_of(const std::vector<std::string>& labels, std::size_t j) {
    return j < labels.size() ? labels[j] : "g" + std::to_string(j);
}

}  // namespace

ContrastMatrix grand_mean_contrasts(std::size_t k, const std::vector<std::string>& group_labels) {
    if (k < 2) throw ValidationError("grand_mean_contrasts: need k >= 2 groups");
    ContrastMatrix cm;
    cm.kind = ContrastKind::grand_mean;
    cm.rows = Matrix(k, k, -1.0 / static_cast<double>(k));
    for (std::size_t j = 0; j < k; ++j) {
        cm.rows(j, j) += 1.0;
        cm.row_labels.push_back(label_of(group_labels, j) + " vs GM");
    }
    return cm;
}

ContrastMatrix grand_mean_contrasts_weighted(const std::vector<std::size_t>& group_sizes,
                                             const std::vector<std::string>& group_labels) {
    const std::size_t k = group_sizes.size();
    if (k < 2) throw ValidationError("grand_mean_contrasts_weighted: need k >= 2 groups");
    const double total = static_cast<double>(
        std::accumulate(group_sizes.begin(), group_sizes.end(), std::size_t{0}));
    if (total <= 0.0) throw ValidationError("grand_mean_contrasts_weighted: empty design");
    ContrastMatrix cm;
    cm.kind = ContrastKind::grand_mean;
    cm.rows = Matrix(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < k; ++l)
            cm.rows(j, l) = (j == l ? 1.0 : 0.0) - static_cast<double>(group_sizes[l]) / total;
        cm.row_labels.push_back(label_of(group_labels, j) + " vs GM");
    }
    return cm;
}

ContrastMatrix dunnett_contrasts(std::size_t k, const std::vector<std::string>& group_labels) {
    if (k < 2) throw ValidationError("dunnett_contrasts: need k >= 2 groups");
    ContrastMatrix cm;
    cm.kind = ContrastKind::dunnett;
    cm.rows = Matrix(k - 1, k);
    for (std::size_t j = 1; j < k; ++j) {
        cm.rows(j - 1, 0) = -1.0;
        cm.rows(j - 1, j) = 1.0;
        cm.row_labels.push_back(label_of(group_labels, j) + " - " + label_of(group_labels, 0));
    }
    return cm;
}

}  // namespace jointrank
