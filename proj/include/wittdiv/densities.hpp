#pragma once

#include "wittdiv/patterns.hpp"
#include "wittdiv/prelambda.hpp"
#include "wittdiv/zoo.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittdiv {

class LabelScheme {
public:
    enum class Kind { Full, FiniteConf, PatternComplement, ExplicitFinite };

    static LabelScheme full(int k);
    static LabelScheme finite_conf(int k);
    static LabelScheme pattern_complement(PatternSet v);
    static LabelScheme explicit_finite(int k, std::vector<Exponents> labels);

    Kind kind() const { return kind_; }
    int k() const { return k_; }
    const std::optional<PatternSet>& patterns() const { return patterns_; }
    const std::vector<Exponents>& labels() const { return labels_; }
    bool contains(const Exponents& a) const;
    // Q = (1 - t_1)...(1 - t_k)(1 + sum_{a in A} t^a) as exact terms; Q = 1 for Full.
    const std::map<Exponents, mpz_class>& normalized_poly() const { return q_; }
    int q_degree() const;
    std::string describe() const;

private:
    Kind kind_ = Kind::Full;
    int k_ = 1;
    std::optional<PatternSet> patterns_;
    std::vector<Exponents> labels_;
    std::map<Exponents, mpz_class> q_;

    void finish();
};

// Grammar: "full:k", "conf:k", "explicit:a;b;...". Pattern complements come from --patterns.
LabelScheme parse_label_scheme(const std::string& text);

// Q restricted to a truncation.
TruncSeries<mpz_class> normalized_series(const LabelScheme& a, const SetPtr& set);

TruncSeries<ZLaurent> zerocycle_series(const VarietyClass& x, const LabelScheme& a, const Exponents& box);
// The single coefficient of zerocycle_series at d.
WittDivisor zerocycle_class(const VarietyClass& x, const LabelScheme& a, const Exponents& d);
WittDivisor sym_divisor(const VarietyClass& x, const Exponents& d);

WittDivisor density_finite(const VarietyClass& x, const LabelScheme& a, const Exponents& d, int cutoff);
WittDivisor density_limit(const VarietyClass& x, const LabelScheme& a, int horizon);
WittDivisor orthogonal_limit_closed_form(const VarietyClass& x, const PatternSet& v, int cutoff);

mpz_class point_count_oracle(const VarietyClass& x, const LabelScheme& a, const Exponents& d, long q);

struct ConvergenceRow {
    Exponents d;
    WittDivisor finite;
    mpq_class hadamard_distance;
    int agreement_depth = 0;
    std::vector<mpq_class> pc_gaps;  // j = 1, 2, 3
};

struct ConvergenceReport {
    WittDivisor limit;
    std::vector<ConvergenceRow> rows;
};

ConvergenceReport convergence_report(const VarietyClass& x, const LabelScheme& a, const std::vector<Exponents>& ds,
                                     const mpq_class& q, int horizon);

}  // namespace wittdiv
