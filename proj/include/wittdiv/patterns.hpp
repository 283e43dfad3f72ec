#pragma once

#include "wittdiv/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittdiv {

// Finite set V of forbidden patterns in Z_{>=0}^k, reduced to its minimal elements.
class PatternSet {
public:
    PatternSet(int k, std::vector<Exponents> vectors);

    int k() const { return k_; }
    const std::vector<Exponents>& vectors() const { return vectors_; }
    // Vectors dropped on construction because they dominate another vector.
    const std::vector<Exponents>& removed() const { return removed_; }
    Exponents box() const;  // componentwise maximum
    // n lies in A(V): nonzero and not >= any v.
    bool allows(const Exponents& n) const;
    bool orthogonal() const;
    std::string to_string() const;

private:
    int k_;
    std::vector<Exponents> vectors_;
    std::vector<Exponents> removed_;
};

// Grammar: semicolon-separated comma vectors, e.g. "2,1;1,2".
PatternSet parse_pattern_set(const std::string& text);
Exponents parse_vector(const std::string& text);

struct MobiusTable {
    Exponents box;
    std::map<Exponents, long> values;  // every n with 0 <= n <= box
    long total_mass = 0;               // M = sum_{n != 0} |mu(n)|
    int min_norm = 0;                  // e = min_v |v|
    long support_bound = 0;            // |P_V|

    long at(const Exponents& n) const;
};

MobiusTable mobius_table(const PatternSet& v);
// mu_V on an arbitrary box, from the defining recursion.
std::map<Exponents, long> mobius_values(const PatternSet& v, const Exponents& box);

TruncSeries<mpz_class> pattern_generating_poly(const PatternSet& v);

struct PatternReport {
    bool orthogonal = false;
    bool nondegenerate = false;
    int e = 0;
    long m = 0;
    long pv_size = 0;
    mpq_class threshold;  // q^{e dimX}
    bool hadamard_criterion = false;
    std::optional<bool> finite_label_criterion;  // k < q^{dimX}
};

PatternReport pattern_stats(const PatternSet& v, const mpq_class& q, int dim_x, bool finite_label_mode = false);

std::vector<Exponents> allowed_labels_in_box(const PatternSet& v, const Exponents& box);

// All vectors 0 <= n <= box in lexicographic order.
std::vector<Exponents> box_points(const Exponents& box);

}  // namespace wittdiv
