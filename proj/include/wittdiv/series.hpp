#pragma once

#include "wittdiv/arith.hpp"
#include "wittdiv/qlaurent.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace wittdiv {

using Exponents = std::vector<int>;

// The set of exponent vectors kept by a truncation: total degree <= bound and,
// optionally, e_i <= caps[i]. Always a lower set, indexed in graded order.
class MonomialSet {
public:
    MonomialSet(int nvars, int bound, std::vector<int> caps = {});

    static std::shared_ptr<const MonomialSet> make(int nvars, int bound, std::vector<int> caps = {}) {
        return std::make_shared<const MonomialSet>(nvars, bound, std::move(caps));
    }

    int nvars() const { return nvars_; }
    int bound() const { return bound_; }
    const std::vector<int>& caps() const { return caps_; }
    // True when some cap is tighter than the total-degree bound.
    bool boxed() const;
    std::size_t size() const { return deg_.size(); }
    std::span<const int> exps(std::size_t i) const {
        return {flat_.data() + i * static_cast<std::size_t>(nvars_), static_cast<std::size_t>(nvars_)};
    }
    int degree(std::size_t i) const { return deg_[i]; }
    // Index of e, or -1 if e lies outside the set.
    long index_of(std::span<const int> e) const;
    bool same_shape(const MonomialSet& o) const { return nvars_ == o.nvars_ && bound_ == o.bound_ && caps_ == o.caps_; }

    // Calls f(j, k) for every split exps(i) = exps(j) + exps(k).
    template <class F>
    void for_each_split(std::size_t i, F&& f) const {
        auto a = exps(i);
        std::int64_t ka = key_of(a);
        std::vector<int> b(static_cast<std::size_t>(nvars_), 0);
        std::int64_t kb = 0;
        while (true) {
            f(static_cast<std::size_t>(lookup_[static_cast<std::size_t>(kb)]),
              static_cast<std::size_t>(lookup_[static_cast<std::size_t>(ka - kb)]));
            int v = 0;
            while (v < nvars_) {
                if (b[static_cast<std::size_t>(v)] < a[static_cast<std::size_t>(v)]) {
                    ++b[static_cast<std::size_t>(v)];
                    kb += stride_[static_cast<std::size_t>(v)];
                    break;
                }
                kb -= stride_[static_cast<std::size_t>(v)] * b[static_cast<std::size_t>(v)];
                b[static_cast<std::size_t>(v)] = 0;
                ++v;
            }
            if (v == nvars_) return;
        }
    }

private:
    int nvars_;
    int bound_;
    std::vector<int> caps_;
    std::vector<int> flat_;
    std::vector<int> deg_;
    std::vector<std::int64_t> stride_;
    std::vector<std::int32_t> lookup_;

    std::int64_t key_of(std::span<const int> e) const {
        std::int64_t k = 0;
        for (int v = 0; v < nvars_; ++v) k += stride_[static_cast<std::size_t>(v)] * e[static_cast<std::size_t>(v)];
        return k;
    }
};

using SetPtr = std::shared_ptr<const MonomialSet>;

// Intersection of two truncations with the same number of variables.
SetPtr meet(const SetPtr& a, const SetPtr& b);

namespace ring {

template <class R>
bool is_zero(const R& x) {
    if constexpr (std::is_same_v<R, mpz_class> || std::is_same_v<R, mpq_class>)
        return x == 0;
    else
        return x.is_zero();
}

// x / n where the quotient is required to stay in R.
inline mpz_class divide_exact(const mpz_class& x, long n) {
    if (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(n)) == 0)
        throw IntegralityError("inexact integer division by " + std::to_string(n));
    mpz_class r;
    mpz_divexact_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}
inline mpq_class divide_exact(const mpq_class& x, long n) { return x / n; }
template <class C>
Laurent<C> divide_exact(const Laurent<C>& x, long n) {
    if (x.is_zero()) return x;
    std::vector<C> v;
    v.reserve(x.span());
    for (const auto& c : x.dense()) v.push_back(divide_exact(c, n));
    return Laurent<C>(x.min_exp(), std::move(v));
}

template <class R>
constexpr bool is_field_like = std::is_same_v<R, mpq_class> || std::is_same_v<R, QLaurent>;

}  // namespace ring

// Multivariate power series truncated to a MonomialSet, dense over that set.
template <class R>
class TruncSeries {
public:
    using ring_type = R;

    explicit TruncSeries(SetPtr set) : set_(std::move(set)), c_(set_->size()) {}
    TruncSeries(SetPtr set, std::vector<R> coeffs) : set_(std::move(set)), c_(std::move(coeffs)) {
        if (c_.size() != set_->size()) throw PreconditionError("coefficient count does not match truncation");
    }
    TruncSeries(int nvars, int bound) : TruncSeries(MonomialSet::make(nvars, bound)) {}

    static TruncSeries one(SetPtr set) {
        TruncSeries r(std::move(set));
        r.c_[0] = R(1);
        return r;
    }

    const MonomialSet& monomials() const { return *set_; }
    const SetPtr& set_ptr() const { return set_; }
    int nvars() const { return set_->nvars(); }
    int bound() const { return set_->bound(); }
    std::size_t size() const { return c_.size(); }

    const R& at(std::size_t i) const { return c_[i]; }
    R& at(std::size_t i) { return c_[i]; }
    const std::vector<R>& coeffs() const { return c_; }

    // Coefficient of t^e; exponent vectors outside the truncation are an error.
    const R& coeff(std::span<const int> e) const {
        long i = set_->index_of(e);
        if (i < 0) throw TruncationError("exponent vector lies outside the truncation");
        return c_[static_cast<std::size_t>(i)];
    }
    const R& coeff(std::initializer_list<int> e) const { return coeff(std::span<const int>(e.begin(), e.size())); }
    void set(std::span<const int> e, R value) {
        long i = set_->index_of(e);
        if (i < 0) throw TruncationError("exponent vector lies outside the truncation");
        c_[static_cast<std::size_t>(i)] = std::move(value);
    }
    void set(std::initializer_list<int> e, R value) { set(std::span<const int>(e.begin(), e.size()), std::move(value)); }
    // Adds value at e if e is inside the truncation; returns whether it was kept.
    bool add_if_kept(std::span<const int> e, const R& value) {
        long i = set_->index_of(e);
        if (i < 0) return false;
        c_[static_cast<std::size_t>(i)] += value;
        return true;
    }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& x : c_) n += ring::is_zero(x) ? 0 : 1;
        return n;
    }

    // Re-truncate to a smaller set.
    TruncSeries restricted(const SetPtr& target) const {
        if (target->same_shape(*set_)) return TruncSeries(target, c_);
        TruncSeries r(target);
        for (std::size_t i = 0; i < target->size(); ++i) {
            long j = set_->index_of(target->exps(i));
            if (j < 0) throw TruncationError("re-truncation target is not contained in the source truncation");
            r.c_[i] = c_[static_cast<std::size_t>(j)];
        }
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using S = std::decay_t<decltype(f(c_[0]))>;
        std::vector<S> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(f(x));
        return TruncSeries<S>(set_, std::move(v));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, 1); }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return combine(a, b, -1); }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        SetPtr s = meet(a.set_, b.set_);
        TruncSeries x = a.restricted(s), y = b.restricted(s);
        TruncSeries r(s);
        for (std::size_t i = 0; i < s->size(); ++i) {
            R acc{};
            s->for_each_split(i, [&](std::size_t j, std::size_t k) {
                if (!ring::is_zero(x.c_[j]) && !ring::is_zero(y.c_[k])) acc += x.c_[j] * y.c_[k];
            });
            r.c_[i] = std::move(acc);
        }
        return r;
    }
    template <class S>
    TruncSeries scaled(const S& s) const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.set_->same_shape(*b.set_) && a.c_ == b.c_;
    }

private:
    SetPtr set_;
    std::vector<R> c_;

    static TruncSeries combine(const TruncSeries& a, const TruncSeries& b, int sign) {
        SetPtr s = meet(a.set_, b.set_);
        TruncSeries r = a.restricted(s);
        TruncSeries y = b.restricted(s);
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (sign > 0)
                r.c_[i] += y.c_[i];
            else
                r.c_[i] -= y.c_[i];
        }
        return r;
    }
};

// Integer ring specialization of the exp recurrence (Kronecker-packed dot products).
std::vector<ZLaurent> exp_from_dlog_packed(const MonomialSet& set, const std::vector<ZLaurent>& g);

// Euler-operator logarithm: coefficient alpha of the result is |alpha| * (log f)_alpha.
// Stays inside R, so it works over the integer rings as well.
template <class R>
TruncSeries<R> ts_dlog(const TruncSeries<R>& f) {
    if (!(f.at(0) == R(1))) throw PreconditionError("log: constant coefficient must be 1");
    const MonomialSet& s = f.monomials();
    TruncSeries<R> m(f.set_ptr());
    for (std::size_t i = 1; i < s.size(); ++i) {
        R acc = f.at(i) * R(s.degree(i));
        s.for_each_split(i, [&](std::size_t j, std::size_t k) {
            if (j == 0 || k == 0) return;
            if (!ring::is_zero(m.at(j)) && !ring::is_zero(f.at(k))) acc -= m.at(j) * f.at(k);
        });
        m.at(i) = std::move(acc);
    }
    return m;
}

// Inverse of ts_dlog: solves |alpha| F_alpha = sum_{0 < beta <= alpha} G_beta F_{alpha - beta}.
// Over the integer rings every division must be exact; otherwise IntegralityError.
template <class R>
TruncSeries<R> ts_exp_from_dlog(const TruncSeries<R>& g) {
    if (!ring::is_zero(g.at(0))) throw PreconditionError("exp: constant coefficient must be 0");
    if constexpr (std::is_same_v<R, ZLaurent>) {
        return TruncSeries<R>(g.set_ptr(), exp_from_dlog_packed(g.monomials(), g.coeffs()));
    } else {
        const MonomialSet& s = g.monomials();
        TruncSeries<R> f = TruncSeries<R>::one(g.set_ptr());
        for (std::size_t i = 1; i < s.size(); ++i) {
            R acc{};
            s.for_each_split(i, [&](std::size_t j, std::size_t k) {
                if (j == 0) return;
                if (!ring::is_zero(g.at(j)) && !ring::is_zero(f.at(k))) acc += g.at(j) * f.at(k);
            });
            f.at(i) = ring::divide_exact(acc, s.degree(i));
        }
        return f;
    }
}

template <class R>
TruncSeries<R> ts_log(const TruncSeries<R>& f) {
    static_assert(ring::is_field_like<R>, "ts_log needs a ring containing the rationals");
    TruncSeries<R> m = ts_dlog(f);
    for (std::size_t i = 1; i < m.size(); ++i) m.at(i) = ring::divide_exact(m.at(i), m.monomials().degree(i));
    return m;
}

template <class R>
TruncSeries<R> ts_exp(const TruncSeries<R>& h) {
    static_assert(ring::is_field_like<R>, "ts_exp needs a ring containing the rationals");
    if (!ring::is_zero(h.at(0))) throw PreconditionError("exp: constant coefficient must be 0");
    TruncSeries<R> g = h;
    for (std::size_t i = 1; i < g.size(); ++i) g.at(i) *= R(g.monomials().degree(i));
    return ts_exp_from_dlog(g);
}

// Multiplicative inverse; the constant coefficient must be +1 or -1.
template <class R>
TruncSeries<R> ts_inverse(const TruncSeries<R>& f) {
    const R& c0 = f.at(0);
    int sign;
    if (c0 == R(1))
        sign = 1;
    else if (c0 == R(-1))
        sign = -1;
    else
        throw PreconditionError("inverse: constant coefficient must be a unit");
    const MonomialSet& s = f.monomials();
    TruncSeries<R> g(f.set_ptr());
    g.at(0) = R(sign);
    for (std::size_t i = 1; i < s.size(); ++i) {
        R acc{};
        s.for_each_split(i, [&](std::size_t j, std::size_t k) {
            if (j == 0) return;
            if (!ring::is_zero(f.at(j)) && !ring::is_zero(g.at(k))) acc += f.at(j) * g.at(k);
        });
        g.at(i) = sign > 0 ? R(-acc) : acc;
    }
    return g;
}

// Image of one variable under a monomial substitution.
struct MonomialImage {
    Exponents exps;
    long coeff = 1;
};

// Substitute variable i by images[i]; the result is truncated to `out`.
template <class R>
TruncSeries<R> ts_mono_subst(const TruncSeries<R>& f, const std::vector<MonomialImage>& images, const SetPtr& out) {
    if (static_cast<int>(images.size()) != f.nvars()) throw PreconditionError("one image per variable is required");
    for (const auto& im : images) {
        if (im.coeff != 1) throw UnsupportedError("monomial images must have coefficient 1");
        if (static_cast<int>(im.exps.size()) != out->nvars()) throw PreconditionError("image has the wrong arity");
        int d = 0;
        for (int e : im.exps) {
            if (e < 0) throw PreconditionError("image exponents must be nonnegative");
            d += e;
        }
        if (d < 1) throw PreconditionError("images must have degree at least 1");
    }
    if (f.monomials().boxed()) throw PreconditionError("substitution needs a total-degree truncation on the input");
    if (out->bound() > f.bound()) throw TruncationError("output bound exceeds the input bound");
    const MonomialSet& s = f.monomials();
    TruncSeries<R> r(out);
    Exponents e(static_cast<std::size_t>(out->nvars()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (ring::is_zero(f.at(i))) continue;
        std::fill(e.begin(), e.end(), 0);
        auto a = s.exps(i);
        for (std::size_t v = 0; v < a.size(); ++v)
            for (std::size_t w = 0; w < e.size(); ++w) e[w] += a[v] * images[v].exps[w];
        r.add_if_kept(e, f.at(i));
    }
    return r;
}

// f(t_1^m, ..., t_k^m) on the same truncation.
template <class R>
TruncSeries<R> ts_raise(const TruncSeries<R>& f, int m) {
    if (m <= 0) throw DomainError("ts_raise: power must be positive");
    const MonomialSet& s = f.monomials();
    TruncSeries<R> r(f.set_ptr());
    Exponents e(static_cast<std::size_t>(s.nvars()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (ring::is_zero(f.at(i))) continue;
        auto a = s.exps(i);
        for (std::size_t v = 0; v < e.size(); ++v) e[v] = a[v] * m;
        r.add_if_kept(e, f.at(i));
    }
    return r;
}

// Polynomial from explicit terms, truncated to `set`.
template <class R>
TruncSeries<R> ts_from_terms(const SetPtr& set, const std::vector<std::pair<Exponents, R>>& terms) {
    TruncSeries<R> r(set);
    for (const auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != set->nvars()) throw PreconditionError("term has the wrong arity");
        r.add_if_kept(e, c);
    }
    return r;
}

}  // namespace wittdiv
