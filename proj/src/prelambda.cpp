#include "wittdiv/prelambda.hpp"

#include <numeric>

namespace wittdiv {

WittDivisor adams(const WittDivisor& d, int m) {
    if (m <= 0) throw DomainError("Adams operation index must be positive");
    if (!d.finite()) throw PreconditionError("Adams operations need a finite divisor");
    return WittDivisor(d.body().scaled_exponents(m));
}

namespace {

ZLaurent scaled_mobius(const WittDivisor& d, int m) {
    ZLaurent acc;
    for (int e : divisors(m)) {
        int mu = mobius(m / e);
        if (mu == 0) continue;
        acc.add_scaled(adams(d, e).body(), mpz_class(mu));
    }
    return acc;
}

QLaurent divide(const ZLaurent& z, int m) {
    QLaurent r = to_rational(z);
    r *= mpq_class(1, m);
    return r;
}

}  // namespace

QLaurent adams_mobius(const WittDivisor& d, int m) {
    if (m <= 0) throw DomainError("Adams operation index must be positive");
    return divide(scaled_mobius(d, m), m);
}

AdamsCache::AdamsCache(WittDivisor base) : base_(std::move(base)) {
    if (!base_.finite()) throw PreconditionError("power structure needs a finite divisor");
}

ZLaurent AdamsCache::scaled(int m) const {
    if (m <= 0) throw DomainError("Adams operation index must be positive");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = table_.find(m);
        if (it != table_.end()) return it->second;
    }
    ZLaurent v = scaled_mobius(base_, m);
    std::lock_guard<std::mutex> lock(mu_);
    return table_.emplace(m, std::move(v)).first->second;
}

QLaurent AdamsCache::mobius(int m) const { return divide(scaled(m), m); }

TruncSeries<ZLaurent> prelambda_power(const TruncSeries<mpz_class>& f, const WittDivisor& d) {
    return prelambda_power(f, AdamsCache(d));
}

TruncSeries<ZLaurent> prelambda_power(const TruncSeries<mpz_class>& f, const AdamsCache& cache) {
    if (f.at(0) != 1) throw PreconditionError("power structure needs constant coefficient 1");
    const MonomialSet& s = f.monomials();
    // E log f^D = sum_m (m p'_m(D)) * (E log f)(t^m), E the Euler operator.
    TruncSeries<mpz_class> dl = ts_dlog(f);
    std::vector<ZLaurent> weights(static_cast<std::size_t>(s.bound()) + 1);
    for (int m = 1; m <= s.bound(); ++m) weights[static_cast<std::size_t>(m)] = cache.scaled(m);

    TruncSeries<ZLaurent> g(f.set_ptr());
    Exponents beta(static_cast<std::size_t>(s.nvars()));
    for (std::size_t i = 1; i < s.size(); ++i) {
        auto alpha = s.exps(i);
        int gcd = 0;
        for (int a : alpha) gcd = std::gcd(gcd, a);
        ZLaurent acc;
        for (int m : divisors(gcd)) {
            for (std::size_t v = 0; v < beta.size(); ++v) beta[v] = alpha[v] / m;
            const mpz_class& c = dl.coeff(beta);
            if (c != 0) acc.add_scaled(weights[static_cast<std::size_t>(m)], c);
        }
        g.at(i) = std::move(acc);
    }
    return ts_exp_from_dlog(g);
}

TruncSeries<QLaurent> prelambda_power_rational(const TruncSeries<mpz_class>& f, const WittDivisor& d) {
    if (f.at(0) != 1) throw PreconditionError("power structure needs constant coefficient 1");
    if (!d.finite()) throw PreconditionError("power structure needs a finite divisor");
    auto fq = f.map([](const mpz_class& c) { return QLaurent(mpq_class(c)); });
    TruncSeries<QLaurent> h(f.set_ptr());
    for (int m = 1; m <= f.bound(); ++m) {
        QLaurent w = adams_mobius(d, m);
        if (w.is_zero()) continue;
        h = h + ts_log(ts_raise(fq, m)).scaled(w);
    }
    TruncSeries<QLaurent> r = ts_exp(h);
    for (const auto& c : r.coeffs()) to_integral(c);  // throws on residual denominators
    return r;
}

QLaurent log_power_coeff(const PowerShape& shape, const WittDivisor& d, const Exponents& dvec) {
    if (static_cast<int>(dvec.size()) != shape.nvars()) throw PreconditionError("exponent vector has the wrong arity");
    if (shape.kind == PowerShape::Kind::ConfNormalized && shape.k < 1) throw PreconditionError("shape needs k >= 1");
    int total = 0;
    for (int x : dvec) {
        if (x < 0) throw PreconditionError("exponents must be nonnegative");
        total += x;
    }
    if (total == 0) throw PreconditionError("exponent vector must be nonzero");
    const int nonzero = static_cast<int>(std::count_if(dvec.begin(), dvec.end(), [](int x) { return x != 0; }));

    QLaurent out;
    Exponents part(dvec.size());
    for (int m : divisors(gcd_all(dvec))) {
        for (std::size_t i = 0; i < dvec.size(); ++i) part[i] = dvec[i] / m;
        const int n = total / m;
        mpq_class c;
        if (shape.kind == PowerShape::Kind::ConfNormalized && nonzero == 1) {
            c = mpq_class(1 + (n % 2 == 0 ? 1 : -1), n);
        } else {
            mpz_class w = multinomial(part);
            if (shape.kind == PowerShape::Kind::Generic)
                for (std::size_t i = 0; i < part.size(); ++i) w *= pow_z(mpz_class(shape.a[i]), static_cast<unsigned long>(part[i]));
            if (n % 2 == 1) w = -w;
            c = mpq_class(w, n);
        }
        c.canonicalize();
        if (c == 0) continue;
        QLaurent term = adams_mobius(d, m);
        term *= mpq_class(-c);
        out += term;
    }
    return out;
}

WittDivisor zeta_special_value(const VarietyClass& x, int m, int cutoff) {
    if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
    if (m <= x.dim) throw DivergenceError("zeta special value diverges for m <= dim X");
    if (x.zeta.is_zero()) return WittDivisor::unit().with_horizon(cutoff);
    const int top = x.zeta.top();
    if (top >= m) throw DivergenceError("zeta special value diverges: top exponent reaches m");
    const int j_max = cutoff / (m - top);
    std::vector<WittDivisor> sym = sigma_series(x.zeta, j_max);
    WittDivisor acc;
    for (int j = 0; j <= j_max; ++j) acc = witt_add(acc, tate_twist(sym[static_cast<std::size_t>(j)], -m * j));
    return truncate_to_horizon(acc, cutoff);
}

}  // namespace wittdiv
