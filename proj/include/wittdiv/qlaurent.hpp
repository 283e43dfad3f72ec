#pragma once

#include "wittdiv/arith.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wittdiv {

// Laurent polynomial in q with exact coefficients. Stored densely over the
// exponent range [lo, lo + size), trimmed so both end coefficients are nonzero.
template <class C>
class Laurent {
public:
    using coeff_type = C;

    Laurent() = default;
    Laurent(long c) : Laurent(C(c)) {}  // NOLINT: constants convert implicitly
    Laurent(const C& c) {               // NOLINT
        if (c != 0) c_.push_back(c);
    }
    Laurent(int lo, std::vector<C> coeffs) : lo_(lo), c_(std::move(coeffs)) { normalize(); }

    static Laurent monomial(const C& c, int e) {
        Laurent r;
        if (c != 0) {
            r.lo_ = e;
            r.c_.push_back(c);
        }
        return r;
    }
    static Laurent from_terms(const std::map<int, C>& terms) {
        if (terms.empty()) return {};
        int lo = terms.begin()->first;
        int hi = terms.rbegin()->first;
        std::vector<C> v(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [e, c] : terms) v[static_cast<std::size_t>(e - lo)] += c;
        return Laurent(lo, std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    // Exponent range of the nonzero terms; callers must check is_zero() first.
    int min_exp() const { return lo_; }
    int max_exp() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    std::size_t span() const { return c_.size(); }
    std::size_t term_count() const {
        return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const C& x) { return x != 0; }));
    }
    const std::vector<C>& dense() const { return c_; }

    C coeff(int e) const {
        if (c_.empty() || e < lo_ || e > max_exp()) return C(0);
        return c_[static_cast<std::size_t>(e - lo_)];
    }
    // Nonzero terms in ascending exponent order.
    std::vector<std::pair<int, C>> terms() const {
        std::vector<std::pair<int, C>> out;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) out.emplace_back(lo_ + static_cast<int>(i), c_[i]);
        return out;
    }

    Laurent& operator+=(const Laurent& o) { return accumulate(o, 1); }
    Laurent& operator-=(const Laurent& o) { return accumulate(o, -1); }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent& operator*=(const C& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(Laurent a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Laurent(a.lo_ + b.lo_, std::move(out));
    }
    friend Laurent operator*(Laurent a, const C& s) { return a *= s; }
    friend Laurent operator*(const C& s, Laurent a) { return a *= s; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    // this += s * q^shift * o, without temporaries for the product.
    void add_scaled(const Laurent& o, const C& s, int shift = 0) {
        if (o.is_zero() || s == 0) return;
        reserve_range(o.lo_ + shift, o.max_exp() + shift);
        std::size_t off = static_cast<std::size_t>(o.lo_ + shift - lo_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[off + i] += s * o.c_[i];
        normalize();
    }

    // Multiplication by q^k.
    Laurent shifted(int k) const {
        Laurent r = *this;
        if (!r.is_zero()) r.lo_ += k;
        return r;
    }
    // Substitution q -> q^m (m >= 1).
    Laurent scaled_exponents(int m) const {
        if (m <= 0) throw DomainError("exponent scale must be positive");
        if (is_zero() || m == 1) return *this;
        std::vector<C> v((c_.size() - 1) * static_cast<std::size_t>(m) + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) v[i * static_cast<std::size_t>(m)] = c_[i];
        return Laurent(lo_ * m, std::move(v));
    }
    // Keep only terms with exponent >= e.
    Laurent drop_below(int e) const {
        if (is_zero() || e <= lo_) return *this;
        if (e > max_exp()) return {};
        return Laurent(e, std::vector<C>(c_.begin() + (e - lo_), c_.end()));
    }
    // Keep only terms with exponent <= e.
    Laurent drop_above(int e) const {
        if (is_zero() || e >= max_exp()) return *this;
        if (e < lo_) return {};
        return Laurent(lo_, std::vector<C>(c_.begin(), c_.begin() + (e - lo_ + 1)));
    }

    std::string to_string(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const C& c = c_[i];
            if (c == 0) continue;
            int e = lo_ + static_cast<int>(i);
            C a = c < 0 ? C(-c) : c;
            s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            std::string mag = to_decimal(a);
            if (e == 0) {
                s += mag;
            } else {
                if (a != 1) s += mag + "*";
                s += var;
                if (e != 1) s += "^" + std::to_string(e);
            }
        }
        return s;
    }

private:
    int lo_ = 0;
    std::vector<C> c_;

    void normalize() {
        std::size_t b = 0;
        while (b < c_.size() && c_[b] == 0) ++b;
        if (b == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        std::size_t e = c_.size();
        while (c_[e - 1] == 0) --e;
        if (b > 0 || e < c_.size()) c_ = std::vector<C>(c_.begin() + static_cast<long>(b), c_.begin() + static_cast<long>(e));
        lo_ += static_cast<int>(b);
    }
    void reserve_range(int lo, int hi) {
        if (c_.empty()) {
            lo_ = lo;
            c_.assign(static_cast<std::size_t>(hi - lo + 1), C(0));
            return;
        }
        int cur_hi = max_exp();
        if (lo < lo_) {
            c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - lo), C(0));
            lo_ = lo;
        }
        if (hi > cur_hi) c_.resize(c_.size() + static_cast<std::size_t>(hi - cur_hi), C(0));
    }
    Laurent& accumulate(const Laurent& o, int sign) {
        if (o.is_zero()) return *this;
        reserve_range(o.lo_, o.max_exp());
        std::size_t off = static_cast<std::size_t>(o.lo_ - lo_);
        for (std::size_t i = 0; i < o.c_.size(); ++i) {
            if (sign > 0)
                c_[off + i] += o.c_[i];
            else
                c_[off + i] -= o.c_[i];
        }
        normalize();
        return *this;
    }
};

using ZLaurent = Laurent<mpz_class>;
using QLaurent = Laurent<mpq_class>;

inline ZLaurent ql_mul(const ZLaurent& a, const ZLaurent& b) { return a * b; }
inline QLaurent ql_mul(const QLaurent& a, const QLaurent& b) { return a * b; }

// Exact substitution q := q0.
template <class C>
mpq_class ql_eval(const Laurent<C>& a, const mpq_class& q0) {
    if (a.is_zero()) return 0;
    if (q0 == 0) {
        if (a.min_exp() < 0) throw DomainError("ql_eval: zero base with negative exponent");
        return mpq_class(a.coeff(0));
    }
    // Horner in q0 from the top, then scale by q0^lo.
    mpq_class acc = 0;
    const auto& d = a.dense();
    for (std::size_t i = d.size(); i-- > 0;) acc = acc * q0 + mpq_class(d[i]);
    return acc * pow_q(q0, a.min_exp());
}

QLaurent to_rational(const ZLaurent& a);
// Downcast to the integer variant; throws IntegralityError if any coefficient is fractional.
ZLaurent to_integral(const QLaurent& a);
bool is_integral(const QLaurent& a);

}  // namespace wittdiv
