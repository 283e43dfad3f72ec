#include "wittdiv/labeledconf.hpp"

#include <algorithm>
#include <numeric>

namespace wittdiv {

PartitionLambda::PartitionLambda(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw DomainError("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int PartitionLambda::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string PartitionLambda::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return "(" + s + ")";
}

PartitionLambda parse_lambda(const std::string& text) {
    if (text.empty()) return {};
    Exponents parts = parse_vector(text);
    try {
        return PartitionLambda(parts);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

namespace {

// Exponent vector (lambda, j) for the variables t_1..t_k, s.
Exponents lambda_with(const PartitionLambda& lambda, int j) {
    Exponents e(lambda.parts().begin(), lambda.parts().end());
    e.push_back(j);
    return e;
}

}  // namespace

std::vector<WittDivisor> conf_lambda_star_divisors(const VarietyClass& x, const PartitionLambda& lambda, int d_max) {
    if (d_max < 0) throw DomainError("d must be nonnegative");
    const int k = lambda.count();
    auto set = MonomialSet::make(k + 1, lambda.size() + d_max, lambda_with(lambda, d_max));
    TruncSeries<mpz_class> f = TruncSeries<mpz_class>::one(set);
    for (int i = 0; i <= k; ++i) {
        Exponents e(static_cast<std::size_t>(k) + 1, 0);
        e[static_cast<std::size_t>(i)] = 1;
        f.add_if_kept(e, 1);
    }
    TruncSeries<ZLaurent> power = prelambda_power(f, x.zeta);
    std::vector<WittDivisor> out;
    for (int d = 0; d <= d_max; ++d) out.emplace_back(power.coeff(lambda_with(lambda, d)));
    return out;
}

WittDivisor conf_lambda_star_divisor(const VarietyClass& x, const PartitionLambda& lambda, int d) {
    return conf_lambda_star_divisors(x, lambda, d).back();
}

std::vector<WittDivisor> conf_lambda_series(const VarietyClass& x, const PartitionLambda& lambda, const std::vector<long>& f) {
    if (f.empty() || f[0] != 1) throw PreconditionError("label series must start with 1");
    const int k = lambda.count();
    const int j_max = static_cast<int>(f.size()) - 1;
    auto set = MonomialSet::make(k + 1, lambda.size() + j_max, lambda_with(lambda, j_max));
    TruncSeries<mpz_class> poly = TruncSeries<mpz_class>::one(set);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= j_max; ++j) {
            Exponents e(static_cast<std::size_t>(k) + 1, 0);
            e[static_cast<std::size_t>(i)] = 1;
            e[static_cast<std::size_t>(k)] = j;
            poly.add_if_kept(e, f[static_cast<std::size_t>(j)]);
        }
    TruncSeries<ZLaurent> power = prelambda_power(poly, x.zeta);
    std::vector<WittDivisor> out;
    for (int j = 0; j <= j_max; ++j) out.emplace_back(power.coeff(lambda_with(lambda, j)));
    return out;
}

std::vector<WittDivisor> conf_lambda_series_expansion(const VarietyClass& x, const PartitionLambda& lambda,
                                                      const std::vector<long>& f) {
    if (f.empty() || f[0] != 1) throw PreconditionError("label series must start with 1");
    const int k = lambda.count();
    const int labels = static_cast<int>(f.size());
    std::vector<WittDivisor> out(static_cast<std::size_t>(labels));
    if (k == 0) {
        out[0] = WittDivisor::unit();
        return out;
    }
    // One variable u_{p,j} per (part p, label j), capped at the part's multiplicity.
    std::vector<int> caps;
    for (int p : lambda.parts()) caps.insert(caps.end(), static_cast<std::size_t>(labels), p);
    const int nv = static_cast<int>(caps.size());
    auto set = MonomialSet::make(nv, lambda.size(), caps);
    TruncSeries<mpz_class> poly = TruncSeries<mpz_class>::one(set);
    for (int v = 0; v < nv; ++v) {
        Exponents e(static_cast<std::size_t>(nv), 0);
        e[static_cast<std::size_t>(v)] = 1;
        poly.add_if_kept(e, f[static_cast<std::size_t>(v % labels)]);
    }
    TruncSeries<ZLaurent> colored = prelambda_power(poly, x.zeta);
    for (std::size_t i = 0; i < set->size(); ++i) {
        auto n = set->exps(i);
        bool distributes = true;
        int s_degree = 0;
        for (int p = 0; p < k && distributes; ++p) {
            int used = 0;
            for (int j = 0; j < labels; ++j) {
                int c = n[static_cast<std::size_t>(p * labels + j)];
                used += c;
                s_degree += j * c;
            }
            distributes = used == lambda.parts()[static_cast<std::size_t>(p)];
        }
        if (!distributes || s_degree >= labels) continue;
        out[static_cast<std::size_t>(s_degree)] = witt_add(out[static_cast<std::size_t>(s_degree)], WittDivisor(colored.at(i)));
    }
    return out;
}

WittDivisor conf_label_value(const VarietyClass& x, const PartitionLambda& lambda, int cutoff) {
    if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
    if (lambda.empty()) return WittDivisor::unit().with_horizon(cutoff);
    if (x.dim < 1) throw PreconditionError("label value needs dim X >= 1");
    // Terms with s^j, j > cutoff/dim, land below -cutoff after normalization.
    const int j_max = cutoff / x.dim + 1;
    std::vector<long> f(static_cast<std::size_t>(j_max) + 1);
    for (int j = 0; j <= j_max; ++j) f[static_cast<std::size_t>(j)] = j % 2 == 0 ? 1 : -1;
    std::vector<WittDivisor> c = conf_lambda_series(x, lambda, f);
    const int top = lambda.size() * x.dim;
    WittDivisor acc;
    for (int j = 0; j <= j_max; ++j) {
        const WittDivisor& cj = c[static_cast<std::size_t>(j)];
        if (!cj.is_zero() && cj.top() > top) throw ConsistencyError("label coefficient exceeds the configuration dimension");
        acc = witt_add(acc, tate_twist(cj, -j * x.dim));
    }
    return truncate_to_horizon(tate_twist(acc, -top), cutoff);
}

TheoremBReport theoremB_check(const VarietyClass& x, const PartitionLambda& lambda, int d_max, int cutoff,
                              std::optional<mpq_class> q) {
    TheoremBReport rep;
    rep.limit = conf_label_value(x, lambda, cutoff);
    std::vector<WittDivisor> nums = conf_lambda_star_divisors(x, lambda, d_max);
    std::vector<WittDivisor> confs = conf_lambda_star_divisors(x, PartitionLambda(), lambda.size() + d_max);
    int prev = -1;
    for (int d = 0; d <= d_max; ++d) {
        const int shift = -x.dim * (lambda.size() + d);
        WittDivisor num = tate_twist(nums[static_cast<std::size_t>(d)], shift);
        WittDivisor den = tate_twist(confs[static_cast<std::size_t>(lambda.size() + d)], shift);
        TheoremBRow row;
        row.d = d;
        row.quotient = witt_mul(num, witt_inverse(den, cutoff), cutoff);
        row.agreement_depth = weight_agreement_depth(row.quotient, rep.limit);
        if (q) row.hadamard_distance = hadamard_norm(truncate_to_horizon(witt_sub(row.quotient, rep.limit), cutoff), *q);
        if (d > 0 && row.agreement_depth < prev) rep.depth_nondecreasing = false;
        prev = row.agreement_depth;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace wittdiv
