#include "wittdiv/witt.hpp"

#include "json.hpp"

#include <algorithm>
#include <limits>

namespace wittdiv {

WittDivisor::WittDivisor(ZLaurent body, std::optional<int> horizon)
    : body_(horizon ? body.drop_below(-*horizon) : std::move(body)), horizon_(horizon) {}

mpz_class WittDivisor::coeff(int e) const {
    if (horizon_ && e < -*horizon_) throw TruncationError("coefficient below the exactness horizon");
    return body_.coeff(e);
}

std::string WittDivisor::to_string() const {
    std::string s;
    for (const auto& [e, c] : [&] {
             auto t = body_.terms();
             std::reverse(t.begin(), t.end());
             return t;
         }()) {
        mpz_class a = abs(c);
        s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (a != 1) s += a.get_str();
        if (e == 0)
            s += "[1]";
        else if (e == 1)
            s += "[q]";
        else
            s += "[q^" + std::to_string(e) + "]";
    }
    if (s.empty()) s = "0";
    if (horizon_) s += " + O([q^" + std::to_string(-*horizon_ - 1) + "])";
    return s;
}

std::optional<int> weakest(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

WittDivisor witt_add(const WittDivisor& a, const WittDivisor& b) {
    return WittDivisor(a.body() + b.body(), weakest(a.horizon(), b.horizon()));
}

WittDivisor witt_neg(const WittDivisor& a) { return WittDivisor(-a.body(), a.horizon()); }

WittDivisor witt_sub(const WittDivisor& a, const WittDivisor& b) {
    return WittDivisor(a.body() - b.body(), weakest(a.horizon(), b.horizon()));
}

namespace {

// Upper bound for the true top exponent; nullopt when the divisor is exactly zero.
std::optional<int> top_bound(const WittDivisor& d) {
    if (!d.is_zero()) return d.top();
    if (d.horizon()) return -*d.horizon() - 1;
    return std::nullopt;
}

}  // namespace

WittDivisor witt_mul(const WittDivisor& a, const WittDivisor& b) {
    std::optional<int> h;
    auto ta = top_bound(a), tb = top_bound(b);
    if (!ta || !tb) return WittDivisor();
    // Unknown terms of a sit below -Ha and reach at most -Ha - 1 + top(b).
    if (a.horizon()) h = weakest(h, *a.horizon() - *tb);
    if (b.horizon()) h = weakest(h, *b.horizon() - *ta);
    return WittDivisor(a.body() * b.body(), h);
}

WittDivisor witt_mul(const WittDivisor& a, const WittDivisor& b, int horizon) {
    WittDivisor r = witt_mul(a, b);
    if (r.horizon() && *r.horizon() < horizon)
        throw TruncationError("product is only determined down to exponent " + std::to_string(-*r.horizon()));
    return truncate_to_horizon(r, horizon);
}

WittDivisor witt_inverse(const WittDivisor& d, int cutoff) {
    if (d.is_zero()) throw NonInvertibleError("the zero divisor has no Witt inverse");
    const int m = d.top();
    const mpz_class lead = d.body().coeff(m);
    if (lead != 1 && lead != -1) throw NonInvertibleError("leading coefficient " + lead.get_str() + " is not a unit");
    // Deep enough that d * inverse is exact down to -cutoff.
    int h = cutoff + std::max(m, 0);
    if (d.horizon()) h = std::min(h, *d.horizon() + 2 * m);
    // d = lead * q^m * (1 + sum_k r_k q^-k); invert the bracket as a series in q^-1.
    const int terms = h - m;
    if (terms < 0) return WittDivisor(ZLaurent(), h);
    std::vector<mpz_class> r(static_cast<std::size_t>(terms) + 1);
    for (int k = 1; k <= terms; ++k) r[static_cast<std::size_t>(k)] = lead * d.body().coeff(m - k);
    std::vector<mpz_class> u(static_cast<std::size_t>(terms) + 1);
    u[0] = 1;
    const int reach = d.body().max_exp() - d.body().min_exp();
    for (int k = 1; k <= terms; ++k) {
        mpz_class acc = 0;
        for (int i = 1; i <= std::min(k, reach); ++i) acc += r[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(k - i)];
        u[static_cast<std::size_t>(k)] = -acc;
    }
    // Exponent of u_k is -m - k; store ascending.
    std::vector<mpz_class> asc(u.rbegin(), u.rend());
    for (auto& c : asc) c *= lead;
    return WittDivisor(ZLaurent(-m - terms, std::move(asc)), h);
}

ZLaurent ghost(const WittDivisor& d, int j) {
    if (j <= 0) throw DomainError("ghost index must be positive");
    return d.body().scaled_exponents(j);
}

mpq_class hadamard_norm(const WittDivisor& d, const mpq_class& q0) {
    if (q0 <= 0) throw DomainError("norm base must be positive");
    mpq_class s = 0;
    for (const auto& [e, c] : d.body().terms()) s += mpq_class(abs(c)) * pow_q(q0, e);
    return s;
}

mpq_class weight_norm(const WittDivisor& d, const mpq_class& q0) {
    if (q0 <= 0) throw DomainError("norm base must be positive");
    if (d.is_zero()) return 0;
    return q0 >= 1 ? pow_q(q0, d.top()) : pow_q(q0, d.bottom());
}

mpq_class pc_seminorm(const WittDivisor& d, const mpq_class& q0, int j) {
    if (q0 <= 0) throw DomainError("norm base must be positive");
    return abs(ql_eval(ghost(d, j), q0));
}

WittDivisor tate_twist(const WittDivisor& d, int k) {
    std::optional<int> h = d.horizon();
    if (h) *h -= k;
    return WittDivisor(d.body().shifted(k), h);
}

WittDivisor tau_truncate(const WittDivisor& d, int m, const mpq_class& q0) {
    if (q0 <= 1) throw DomainError("tau truncation needs q0 > 1");
    if (m < 0) throw DomainError("tau truncation depth must be nonnegative");
    // 2e >= -m  <=>  e >= -floor(m/2)
    const int lowest = -(m / 2);
    if (d.horizon() && lowest < -*d.horizon()) throw TruncationError("tau truncation reaches below the exactness horizon");
    return WittDivisor(d.body().drop_below(lowest));
}

std::vector<mpq_class> divisor_to_taylor(const WittDivisor& d, const mpq_class& q0, int n) {
    if (!d.finite()) throw PreconditionError("Taylor expansion needs a finite divisor");
    if (q0 == 0) throw DomainError("Taylor expansion needs q0 != 0");
    if (n < 0) throw DomainError("Taylor order must be nonnegative");
    std::vector<mpq_class> g(static_cast<std::size_t>(n) + 1), a(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) g[static_cast<std::size_t>(j)] = ql_eval(ghost(d, j), q0);
    a[0] = 1;
    for (int k = 1; k <= n; ++k) {
        mpq_class acc = 0;
        for (int j = 1; j <= k; ++j) acc += g[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k - j)];
        a[static_cast<std::size_t>(k)] = acc / k;
    }
    return a;
}

std::vector<WittDivisor> sigma_series(const WittDivisor& d, int j_max) {
    if (!d.finite()) throw PreconditionError("sigma series needs a finite divisor");
    if (j_max < 0) throw DomainError("sigma series length must be nonnegative");
    const std::size_t len = static_cast<std::size_t>(j_max) + 1;
    std::vector<ZLaurent> acc(len);
    acc[0] = ZLaurent(1);
    for (const auto& [e, k] : d.body().terms()) {
        // (1 - [q^e] s)^(-k): coefficient of s^j is binom(k+j-1, j) [q^{ej}] for k > 0,
        // and (-1)^j binom(|k|, j) [q^{ej}] for k < 0.
        std::vector<ZLaurent> factor(len);
        for (std::size_t j = 0; j < len; ++j) {
            mpz_class c = k > 0 ? binomial(k + static_cast<long>(j) - 1, j) : binomial(mpz_class(-k), j);
            if (k < 0 && j % 2 == 1) c = -c;
            factor[j] = ZLaurent::monomial(c, e * static_cast<int>(j));
        }
        std::vector<ZLaurent> next(len);
        for (std::size_t i = 0; i < len; ++i) {
            if (acc[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < len; ++j)
                if (!factor[j].is_zero()) next[i + j] += acc[i] * factor[j];
        }
        acc = std::move(next);
    }
    std::vector<WittDivisor> out;
    out.reserve(len);
    for (auto& c : acc) out.emplace_back(std::move(c));
    return out;
}

WittDivisor truncate_to_horizon(const WittDivisor& d, int h) {
    return WittDivisor(d.body(), weakest(d.horizon(), h));
}

bool agree_to(const WittDivisor& a, const WittDivisor& b, int n) {
    for (const auto* d : {&a, &b})
        if (d->horizon() && *d->horizon() < n) throw TruncationError("comparison reaches below an exactness horizon");
    return a.body().drop_below(-n) == b.body().drop_below(-n);
}

int weight_agreement_depth(const WittDivisor& a, const WittDivisor& b) {
    std::optional<int> h = weakest(a.horizon(), b.horizon());
    ZLaurent diff = a.body() - b.body();
    if (h) diff = diff.drop_below(-*h);
    if (diff.is_zero()) return h ? 2 * *h : std::numeric_limits<int>::max();
    const int e = diff.max_exp();
    return std::max(-1, -2 * e - 2);
}

SigmaRationalForm sigma_rational(const WittDivisor& d) {
    if (!d.finite()) throw PreconditionError("rational form needs a finite divisor");
    SigmaRationalForm f;
    for (const auto& [e, k] : d.body().terms()) {
        if (k > 0)
            f.poles[e] = static_cast<int>(k.get_si());
        else
            f.zeros[e] = static_cast<int>(-k.get_si());
    }
    return f;
}

std::string divisor_to_json(const WittDivisor& d, int indent) {
    nlohmann::json j;
    j["horizon"] = d.horizon() ? nlohmann::json(*d.horizon()) : nlohmann::json(nullptr);
    nlohmann::json terms = nlohmann::json::array();
    auto t = d.body().terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) terms.push_back({{"exp", it->first}, {"coeff", it->second.get_str()}});
    j["terms"] = std::move(terms);
    return j.dump(indent);
}

WittDivisor divisor_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid divisor JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) throw ParseError("divisor JSON needs a terms array");
    std::map<int, mpz_class> terms;
    for (const auto& t : j["terms"]) {
        if (!t.contains("exp") || !t["exp"].is_number_integer() || !t.contains("coeff") || !t["coeff"].is_string())
            throw ParseError("divisor term needs an integer exp and a string coeff");
        terms[t["exp"].get<int>()] += parse_integer(t["coeff"].get<std::string>());
    }
    std::optional<int> h;
    if (j.contains("horizon") && !j["horizon"].is_null()) {
        if (!j["horizon"].is_number_integer()) throw ParseError("horizon must be an integer or null");
        h = j["horizon"].get<int>();
    }
    return WittDivisor(ZLaurent::from_terms(terms), h);
}

}  // namespace wittdiv
