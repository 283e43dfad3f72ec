#pragma once

#include "wittdiv/series.hpp"
#include "wittdiv/witt.hpp"
#include "wittdiv/zoo.hpp"

#include <map>
#include <mutex>

namespace wittdiv {

// p_m: exponent scaling e -> m e.
WittDivisor adams(const WittDivisor& d, int m);
// p'_m = (1/m) sum_{d | m} mu(m/d) p_d
QLaurent adams_mobius(const WittDivisor& d, int m);

// Per-divisor cache of m * p'_m (an integer divisor) and p'_m.
class AdamsCache {
public:
    explicit AdamsCache(WittDivisor base);
    const WittDivisor& base() const { return base_; }
    // m * p'_m(base)
    ZLaurent scaled(int m) const;
    QLaurent mobius(int m) const;

private:
    WittDivisor base_;
    mutable std::mutex mu_;
    mutable std::map<int, ZLaurent> table_;
};

// f^D for the power structure log(f^D) = sum_m p'_m(D) log f(t^m); the constant
// coefficient of f must be 1. Evaluated through the Euler operator so every
// intermediate stays integral; inexact divisions raise IntegralityError.
TruncSeries<ZLaurent> prelambda_power(const TruncSeries<mpz_class>& f, const WittDivisor& d);
TruncSeries<ZLaurent> prelambda_power(const TruncSeries<mpz_class>& f, const AdamsCache& cache);

// The same power through rational ts_log / ts_exp, term by term as in the defining formula.
TruncSeries<QLaurent> prelambda_power_rational(const TruncSeries<mpz_class>& f, const WittDivisor& d);

struct PowerShape {
    enum class Kind { Generic, ConfNormalized };
    Kind kind = Kind::Generic;
    std::vector<long> a;  // Generic: 1 + sum a_i u_i
    int k = 1;            // ConfNormalized: (1 - t_1)...(1 - t_k)(1 + t_1 + ... + t_k)

    static PowerShape generic(std::vector<long> a) {
        int n = static_cast<int>(a.size());
        return {Kind::Generic, std::move(a), n};
    }
    static PowerShape conf(int k) { return {Kind::ConfNormalized, {}, k}; }
    int nvars() const { return kind == Kind::Generic ? static_cast<int>(a.size()) : k; }
};

// Closed-form coefficient of u^d in log(shape^D).
QLaurent log_power_coeff(const PowerShape& shape, const WittDivisor& d, const Exponents& dvec);

// zeta^Kap_X(m) = sum_{j >= 0} Sym^j X twisted by q^{-mj}, to the given horizon.
WittDivisor zeta_special_value(const VarietyClass& x, int m, int cutoff);

}  // namespace wittdiv
