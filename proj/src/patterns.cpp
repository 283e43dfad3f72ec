#include "wittdiv/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace wittdiv {

namespace {

bool dominates(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

int norm(const Exponents& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

PatternSet::PatternSet(int k, std::vector<Exponents> vectors) : k_(k) {
    if (k < 1) throw DomainError("invalid pattern set: k must be positive");
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != k) throw DomainError("invalid pattern set: vector of the wrong length");
        if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }))
            throw DomainError("invalid pattern set: negative entry");
        if (norm(v) <= 1) throw DomainError("invalid pattern set: every vector needs |v| >= 2");
    }
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    for (const auto& v : vectors) {
        bool dominated = std::any_of(vectors.begin(), vectors.end(), [&](const Exponents& w) { return w != v && dominates(v, w); });
        (dominated ? removed_ : vectors_).push_back(v);
    }
}

Exponents PatternSet::box() const {
    Exponents b(static_cast<std::size_t>(k_), 0);
    for (const auto& v : vectors_)
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = std::max(b[i], v[i]);
    return b;
}

bool PatternSet::allows(const Exponents& n) const {
    if (norm(n) == 0) return false;
    return std::none_of(vectors_.begin(), vectors_.end(), [&](const Exponents& v) { return dominates(n, v); });
}

bool PatternSet::orthogonal() const {
    for (int i = 0; i < k_; ++i) {
        int users = 0;
        for (const auto& v : vectors_) users += v[static_cast<std::size_t>(i)] != 0 ? 1 : 0;
        if (users > 1) return false;
    }
    return true;
}

std::string PatternSet::to_string() const {
    std::string s;
    for (const auto& v : vectors_) {
        if (!s.empty()) s += ";";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

Exponents parse_vector(const std::string& text) {
    Exponents v;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(',', start);
        std::string tok = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("bad vector '" + text + "'");
        v.push_back(std::stoi(tok));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return v;
}

PatternSet parse_pattern_set(const std::string& text) {
    std::vector<Exponents> vs;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(';', start);
        vs.push_back(parse_vector(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    const std::size_t k = vs.front().size();
    for (const auto& v : vs)
        if (v.size() != k) throw ParseError("pattern vectors have different lengths in '" + text + "'");
    try {
        return PatternSet(static_cast<int>(k), vs);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::vector<Exponents> box_points(const Exponents& box) {
    std::vector<Exponents> out;
    Exponents n(box.size(), 0);
    while (true) {
        out.push_back(n);
        std::size_t i = box.size();
        while (i-- > 0) {
            if (n[i] < box[i]) {
                ++n[i];
                break;
            }
            n[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) return out;
    }
}

std::map<Exponents, long> mobius_values(const PatternSet& v, const Exponents& box) {
    // Lexicographic order is a linear extension of the componentwise order.
    std::map<Exponents, long> mu;
    for (const auto& n : box_points(box)) {
        long acc = (norm(n) == 0 || v.allows(n)) ? 1 : 0;
        for (const auto& [m, val] : mu)
            if (val != 0 && dominates(n, m)) acc -= val;
        mu[n] = acc;
    }
    return mu;
}

long MobiusTable::at(const Exponents& n) const {
    auto it = values.find(n);
    return it == values.end() ? 0 : it->second;
}

MobiusTable mobius_table(const PatternSet& v) {
    MobiusTable t;
    t.box = v.box();
    t.values = mobius_values(v, t.box);

    // mu vanishes past the box: check one extra cell in every direction.
    Exponents wider = t.box;
    for (auto& x : wider) ++x;
    for (const auto& [n, val] : mobius_values(v, wider)) {
        bool inside = true;
        for (std::size_t i = 0; i < n.size(); ++i) inside = inside && n[i] <= t.box[i];
        if (!inside && val != 0) throw ConsistencyError("Mobius function does not vanish outside the box");
    }

    t.min_norm = v.vectors().empty() ? 0 : norm(v.vectors().front());
    for (const auto& w : v.vectors()) t.min_norm = std::min(t.min_norm, norm(w));
    for (const auto& [n, val] : t.values) {
        if (norm(n) != 0) t.total_mass += std::labs(val);
        bool in_pv = norm(n) == 0 || std::any_of(v.vectors().begin(), v.vectors().end(), [&](const Exponents& w) { return dominates(n, w); });
        t.support_bound += in_pv ? 1 : 0;
    }
    return t;
}

TruncSeries<mpz_class> pattern_generating_poly(const PatternSet& v) {
    MobiusTable t = mobius_table(v);
    const int k = v.k();
    auto set = MonomialSet::make(k, norm(t.box), t.box);
    TruncSeries<mpz_class> poly(set);
    for (const auto& [n, val] : t.values)
        if (val != 0) poly.set(n, mpz_class(val));

    // Cross-check against (1 - t_1)...(1 - t_k)(1 + sum_{a in A(V)} t^a) on box + 1.
    Exponents wider = t.box;
    for (auto& x : wider) ++x;
    auto wide = MonomialSet::make(k, norm(wider), wider);
    TruncSeries<mpz_class> rhs = TruncSeries<mpz_class>::one(wide);
    for (const auto& a : box_points(wider))
        if (v.allows(a)) rhs.set(a, 1);
    for (int i = 0; i < k; ++i) {
        TruncSeries<mpz_class> lin = TruncSeries<mpz_class>::one(wide);
        Exponents e(static_cast<std::size_t>(k), 0);
        e[static_cast<std::size_t>(i)] = 1;
        lin.set(e, -1);
        rhs = rhs * lin;
    }
    for (std::size_t i = 0; i < wide->size(); ++i) {
        Exponents n(wide->exps(i).begin(), wide->exps(i).end());
        if (rhs.at(i) != t.at(n)) throw ConsistencyError("generating polynomial identity fails for " + v.to_string());
    }
    return poly;
}

PatternReport pattern_stats(const PatternSet& v, const mpq_class& q, int dim_x, bool finite_label_mode) {
    if (q <= 0) throw DomainError("q must be positive");
    MobiusTable t = mobius_table(v);
    PatternReport r;
    r.orthogonal = v.orthogonal();
    r.nondegenerate = std::all_of(v.vectors().begin(), v.vectors().end(), [](const Exponents& w) { return norm(w) >= 2; });
    r.e = t.min_norm;
    r.m = t.total_mass;
    r.pv_size = t.support_bound;
    r.threshold = pow_q(q, static_cast<long>(t.min_norm) * dim_x);
    r.hadamard_criterion = mpq_class(t.total_mass) < r.threshold;
    if (finite_label_mode) r.finite_label_criterion = mpq_class(v.k()) < pow_q(q, dim_x);
    return r;
}

std::vector<Exponents> allowed_labels_in_box(const PatternSet& v, const Exponents& box) {
    if (static_cast<int>(box.size()) != v.k()) throw DomainError("box has the wrong length");
    std::vector<Exponents> out;
    for (const auto& n : box_points(box))
        if (v.allows(n)) out.push_back(n);
    return out;
}

}  // namespace wittdiv
