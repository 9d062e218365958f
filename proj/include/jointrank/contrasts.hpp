#pragma once

#include <string>
#include <vector>

#include "jointrank/linalg.hpp"

namespace jointrank {

enum class ContrastKind { grand_mean, dunnett };

struct ContrastMatrix {
    Matrix rows;                          // m x k, every row sums to 0
    std::vector<std::string> row_labels;  // hypothesis names
    ContrastKind kind = ContrastKind::grand_mean;

    std::size_t m() const { return rows.rows(); }
    std::size_t k() const { return rows.cols(); }
};

// Each group against the unweighted average of all k groups; m = k.
ContrastMatrix grand_mean_contrasts(std::size_t k,
                                    const std::vector<std::string>& group_labels = {});

// Size-weighted variant (weights n_j / N); equal to the unweighted version for
// balanced designs.
ContrastMatrix grand_mean_contrasts_weighted(const std::vector<std::size_t>& group_sizes,
                                             const std::vector<std::string>& group_labels = {});

// Each treatment against the first (control) group; m = k - 1.
ContrastMatrix dunnett_contrasts(std::size_t k,
                                 const std::vector<std::string>& group_labels = {});

}  // namespace jointrank
