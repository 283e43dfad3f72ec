#pragma once

#include "wittdiv/densities.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wittdiv {

// Multiplicity vector of a generalized partition, kept in descending order.
class PartitionLambda {
public:
    PartitionLambda() = default;
    explicit PartitionLambda(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // |lambda|
    int count() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

// Grammar: comma-separated parts, e.g. "2,1,1"; the empty string is the empty partition.
PartitionLambda parse_lambda(const std::string& text);

// [C^{lambda *^d}(X)]: colored points with multiplicities lambda plus d unmarked points.
WittDivisor conf_lambda_star_divisor(const VarietyClass& x, const PartitionLambda& lambda, int d);
// The same for d = 0..d_max in one expansion.
std::vector<WittDivisor> conf_lambda_star_divisors(const VarietyClass& x, const PartitionLambda& lambda, int d_max);

// s-coefficients c_0..c_J of the t^lambda coefficient of prod_x (1 + f_x(s)(t_1 + ... + t_k)),
// with f(s) = sum_j a_j s^j (a_0 = 1).
std::vector<WittDivisor> conf_lambda_series(const VarietyClass& x, const PartitionLambda& lambda, const std::vector<long>& f);
// The same coefficients assembled from colored configuration classes, one color per
// (part, label) pair, summed over all ways of distributing each part among the labels.
std::vector<WittDivisor> conf_lambda_series_expansion(const VarietyClass& x, const PartitionLambda& lambda,
                                                      const std::vector<long>& f);

// C^lambda_X(1/(1 + L^{dim X})) under the zeta measure, normalized by L^{-dim X |lambda|}.
WittDivisor conf_label_value(const VarietyClass& x, const PartitionLambda& lambda, int cutoff);

struct TheoremBRow {
    int d = 0;
    WittDivisor quotient;
    int agreement_depth = 0;
    std::optional<mpq_class> hadamard_distance;
};

struct TheoremBReport {
    WittDivisor limit;
    std::vector<TheoremBRow> rows;
    bool depth_nondecreasing = true;
};

TheoremBReport theoremB_check(const VarietyClass& x, const PartitionLambda& lambda, int d_max, int cutoff,
                              std::optional<mpq_class> q = std::nullopt);

}  // namespace wittdiv
