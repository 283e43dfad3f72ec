#include "wittdiv/densities.hpp"

#include <algorithm>
#include <numeric>

namespace wittdiv {

namespace {

using Poly = std::map<Exponents, mpz_class>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r[e] += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

Exponents unit_vector(int k, int i) {
    Exponents e(static_cast<std::size_t>(k), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return e;
}

int norm(const Exponents& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

LabelScheme LabelScheme::full(int k) {
    if (k < 1) throw DomainError("label scheme needs k >= 1");
    LabelScheme s;
    s.kind_ = Kind::Full;
    s.k_ = k;
    s.finish();
    return s;
}

LabelScheme LabelScheme::finite_conf(int k) {
    if (k < 1) throw DomainError("label scheme needs k >= 1");
    LabelScheme s;
    s.kind_ = Kind::FiniteConf;
    s.k_ = k;
    for (int i = 0; i < k; ++i) s.labels_.push_back(unit_vector(k, i));
    s.finish();
    return s;
}

LabelScheme LabelScheme::pattern_complement(PatternSet v) {
    LabelScheme s;
    s.kind_ = Kind::PatternComplement;
    s.k_ = v.k();
    s.patterns_ = std::move(v);
    s.finish();
    return s;
}

LabelScheme LabelScheme::explicit_finite(int k, std::vector<Exponents> labels) {
    if (k < 1) throw DomainError("label scheme needs k >= 1");
    for (const auto& a : labels) {
        if (static_cast<int>(a.size()) != k) throw DomainError("label of the wrong length");
        if (norm(a) == 0 || std::any_of(a.begin(), a.end(), [](int x) { return x < 0; }))
            throw DomainError("labels must be nonzero and nonnegative");
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (int i = 0; i < k; ++i)
        if (!std::binary_search(labels.begin(), labels.end(), unit_vector(k, i)))
            throw DomainError("explicit label sets must contain every basis vector");
    LabelScheme s;
    s.kind_ = Kind::ExplicitFinite;
    s.k_ = k;
    s.labels_ = std::move(labels);
    s.finish();
    return s;
}

void LabelScheme::finish() {
    const Exponents zero(static_cast<std::size_t>(k_), 0);
    q_.clear();
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
    switch (kind_) {
        case Kind::Full:
            q_[zero] = 1;
            break;
        case Kind::PatternComplement: {
            MobiusTable t = mobius_table(*patterns_);
            for (const auto& [n, v] : t.values)
                if (v != 0) q_[n] = v;
            break;
        }
        case Kind::FiniteConf:
        case Kind::ExplicitFinite: {
            Poly p{{zero, 1}};
            for (const auto& a : labels_) p[a] += 1;
            for (int i = 0; i < k_; ++i) p = poly_mul(p, Poly{{zero, 1}, {unit_vector(k_, i), -1}});
            q_ = std::move(p);
            break;
        }
    }
    auto it = q_.find(zero);
    if (it == q_.end() || it->second != 1) throw ConsistencyError("normalized polynomial must have constant term 1");
    for (const auto& [e, c] : q_)
        if (norm(e) == 1) throw PreconditionError("degenerate label scheme: normalized polynomial has a linear term");
}

bool LabelScheme::contains(const Exponents& a) const {
    if (norm(a) == 0) return false;
    switch (kind_) {
        case Kind::Full:
            return true;
        case Kind::PatternComplement:
            return patterns_->allows(a);
        default:
            return std::binary_search(labels_.begin(), labels_.end(), a);
    }
}

int LabelScheme::q_degree() const {
    int d = 0;
    for (const auto& [e, c] : q_) d = std::max(d, norm(e));
    return d;
}

std::string LabelScheme::describe() const {
    switch (kind_) {
        case Kind::Full:
            return "full:" + std::to_string(k_);
        case Kind::FiniteConf:
            return "conf:" + std::to_string(k_);
        case Kind::PatternComplement:
            return "patterns:" + patterns_->to_string();
        default: {
            std::string s = "explicit:";
            for (std::size_t i = 0; i < labels_.size(); ++i) {
                if (i) s += ";";
                for (std::size_t j = 0; j < labels_[i].size(); ++j) s += (j ? "," : "") + std::to_string(labels_[i][j]);
            }
            return s;
        }
    }
}

LabelScheme parse_label_scheme(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("label scheme needs the form kind:argument");
    std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
    try {
        if (kind == "full" || kind == "conf") {
            Exponents k = parse_vector(arg);
            if (k.size() != 1) throw ParseError("expected a single color count in '" + text + "'");
            return kind == "full" ? LabelScheme::full(k[0]) : LabelScheme::finite_conf(k[0]);
        }
        if (kind == "explicit") {
            std::vector<Exponents> labels;
            std::size_t start = 0;
            while (true) {
                std::size_t pos = arg.find(';', start);
                labels.push_back(parse_vector(arg.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
                if (pos == std::string::npos) break;
                start = pos + 1;
            }
            return LabelScheme::explicit_finite(static_cast<int>(labels.front().size()), labels);
        }
        if (kind == "patterns") return LabelScheme::pattern_complement(parse_pattern_set(arg));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown label scheme '" + kind + "'");
}

TruncSeries<mpz_class> normalized_series(const LabelScheme& a, const SetPtr& set) {
    TruncSeries<mpz_class> r(set);
    for (const auto& [e, c] : a.normalized_poly()) r.add_if_kept(e, c);
    return r;
}

namespace {

void check_vector(const LabelScheme& a, const Exponents& d) {
    if (static_cast<int>(d.size()) != a.k()) throw DomainError("degree vector has the wrong length");
    if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) throw DomainError("degrees must be nonnegative");
}

// prod_i Sym^{d_i} X from a precomputed sigma series.
WittDivisor sym_product(const std::vector<WittDivisor>& sym, std::span<const int> d) {
    WittDivisor acc = WittDivisor::unit();
    for (int x : d) acc = witt_mul(acc, sym[static_cast<std::size_t>(x)]);
    return acc;
}

int max_entry(const Exponents& d) { return d.empty() ? 0 : *std::max_element(d.begin(), d.end()); }

}  // namespace

WittDivisor sym_divisor(const VarietyClass& x, const Exponents& d) {
    return sym_product(sigma_series(x.zeta, max_entry(d)), d);
}

TruncSeries<ZLaurent> zerocycle_series(const VarietyClass& x, const LabelScheme& a, const Exponents& box) {
    check_vector(a, box);
    auto set = MonomialSet::make(a.k(), norm(box), box);
    auto sym = sigma_series(x.zeta, max_entry(box));
    TruncSeries<ZLaurent> kap(set);
    for (std::size_t i = 0; i < set->size(); ++i) kap.at(i) = sym_product(sym, set->exps(i)).body();
    if (a.kind() == LabelScheme::Kind::Full) return kap;
    return kap * prelambda_power(normalized_series(a, set), x.zeta);
}

WittDivisor zerocycle_class(const VarietyClass& x, const LabelScheme& a, const Exponents& d) {
    check_vector(a, d);
    auto sym = sigma_series(x.zeta, max_entry(d));
    if (a.kind() == LabelScheme::Kind::Full) return sym_product(sym, d);
    auto set = MonomialSet::make(a.k(), norm(d), d);
    TruncSeries<ZLaurent> f = prelambda_power(normalized_series(a, set), x.zeta);
    ZLaurent acc;
    set->for_each_split(static_cast<std::size_t>(set->index_of(d)), [&](std::size_t j, std::size_t k) {
        if (!f.at(k).is_zero()) acc += sym_product(sym, set->exps(j)).body() * f.at(k);
    });
    return WittDivisor(acc);
}

WittDivisor density_finite(const VarietyClass& x, const LabelScheme& a, const Exponents& d, int cutoff) {
    check_vector(a, d);
    if (cutoff < 0) throw DomainError("cutoff must be nonnegative");
    const int shift = -x.dim * norm(d);
    WittDivisor num = tate_twist(zerocycle_class(x, a, d), shift);
    WittDivisor den = tate_twist(sym_divisor(x, d), shift);
    return witt_mul(num, witt_inverse(den, cutoff), cutoff);
}

WittDivisor density_limit(const VarietyClass& x, const LabelScheme& a, int horizon) {
    if (!x.irreducible) throw PreconditionError("limit needs an irreducible variety");
    if (x.dim < 1) throw PreconditionError("limit needs dim X >= 1");
    if (horizon < 0) throw DomainError("horizon must be nonnegative");
    if (a.kind() == LabelScheme::Kind::Full) return WittDivisor::unit().with_horizon(horizon);

    // Diagonal substitution t_i -> u on the polynomial Q.
    const int qdeg = a.q_degree();
    auto qset = MonomialSet::make(a.k(), qdeg);
    std::vector<MonomialImage> diag(static_cast<std::size_t>(a.k()), MonomialImage{{1}});
    TruncSeries<mpz_class> qdiag = ts_mono_subst(normalized_series(a, qset), diag, MonomialSet::make(1, qdeg));

    const int degree = (2 * horizon + x.dim - 1) / x.dim + 2;
    auto uset = MonomialSet::make(1, degree + 2);
    TruncSeries<mpz_class> q(uset);
    for (int i = 0; i <= std::min(qdeg, degree + 2); ++i) q.at(static_cast<std::size_t>(i)) = qdiag.at(static_cast<std::size_t>(i));

    TruncSeries<ZLaurent> f = prelambda_power(q, x.zeta);
    ZLaurent upto_d, upto_d2;
    for (int d = 0; d <= degree + 2; ++d) {
        const ZLaurent& c = f.at(static_cast<std::size_t>(d));
        if (c.is_zero()) continue;
        if (2 * c.max_exp() > d * x.dim) throw ConsistencyError("dimension bound fails at degree " + std::to_string(d));
        ZLaurent t = c.shifted(-d * x.dim);
        if (d <= degree) upto_d += t;
        upto_d2 += t;
    }
    if (upto_d.drop_below(-horizon) != upto_d2.drop_below(-horizon))
        throw ConsistencyError("limit did not stabilize between degrees D and D+2");
    return WittDivisor(upto_d, horizon);
}

WittDivisor orthogonal_limit_closed_form(const VarietyClass& x, const PatternSet& v, int cutoff) {
    if (!v.orthogonal()) throw PreconditionError("closed form needs an orthogonal pattern set");
    if (x.dim < 1) throw PreconditionError("closed form needs dim X >= 1");
    WittDivisor prod = WittDivisor::unit();
    for (const auto& w : v.vectors()) prod = witt_mul(prod, zeta_special_value(x, norm(w) * x.dim, cutoff), cutoff);
    return witt_inverse(prod, cutoff);
}

mpz_class point_count_oracle(const VarietyClass& x, const LabelScheme& a, const Exponents& d, long q) {
    check_vector(a, d);
    if (q < 2) throw DomainError("point counts need q >= 2");
    const int n = norm(d);
    if (n > 16) throw PreconditionError("point-count oracle is limited to small degrees");

    // Closed points of degree r.
    std::vector<mpz_class> pts(static_cast<std::size_t>(n) + 1);
    for (int r = 1; r <= n; ++r) {
        mpq_class s = 0;
        for (int e : divisors(r)) s += mobius(r / e) * ql_eval(ghost(x.zeta, e), mpq_class(q));
        s /= r;
        if (s.get_den() != 1 || s < 0) throw ConsistencyError("non-integral closed-point count");
        pts[static_cast<std::size_t>(r)] = s.get_num();
    }

    // Dense polynomials over the box 0..d.
    const std::vector<Exponents> cells = box_points(d);
    auto index = [&](const Exponents& e) {
        long i = 0;
        for (std::size_t v = 0; v < d.size(); ++v) i = i * (d[v] + 1) + e[v];
        return static_cast<std::size_t>(i);
    };
    auto mul = [&](const std::vector<mpz_class>& p, const std::vector<mpz_class>& g) {
        std::vector<mpz_class> out(cells.size());
        Exponents e(d.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (p[i] == 0) continue;
            for (std::size_t j = 0; j < cells.size(); ++j) {
                if (g[j] == 0) continue;
                bool fits = true;
                for (std::size_t v = 0; v < d.size() && fits; ++v) {
                    e[v] = cells[i][v] + cells[j][v];
                    fits = e[v] <= d[v];
                }
                if (fits) out[index(e)] += p[i] * g[j];
            }
        }
        return out;
    };

    std::vector<mpz_class> total(cells.size());
    total[0] = 1;
    for (int r = 1; r <= n; ++r) {
        // One closed point of degree r carries a label a; it contributes x^{r a}.
        std::vector<mpz_class> g(cells.size());
        bool any = false;
        for (const auto& c : cells) {
            if (!a.contains(c)) continue;
            Exponents ra(c.size());
            bool fits = true;
            for (std::size_t v = 0; v < c.size(); ++v) {
                ra[v] = r * c[v];
                fits = fits && ra[v] <= d[v];
            }
            if (fits) {
                g[index(ra)] += 1;
                any = true;
            }
        }
        if (!any) continue;
        // (1 + g)^{N_r} = sum_j binom(N_r, j) g^j, and g^j vanishes once j r > |d|.
        std::vector<mpz_class> power(cells.size()), factor(cells.size());
        power[0] = 1;
        factor[0] = 1;
        for (int j = 1; j * r <= n; ++j) {
            power = mul(power, g);
            mpz_class b = binomial(pts[static_cast<std::size_t>(r)], static_cast<unsigned long>(j));
            for (std::size_t i = 0; i < cells.size(); ++i) factor[i] += b * power[i];
        }
        total = mul(total, factor);
    }
    return total[index(d)];
}

ConvergenceReport convergence_report(const VarietyClass& x, const LabelScheme& a, const std::vector<Exponents>& ds,
                                     const mpq_class& q, int horizon) {
    ConvergenceReport rep;
    rep.limit = density_limit(x, a, horizon);
    for (const auto& d : ds) {
        ConvergenceRow row;
        row.d = d;
        row.finite = density_finite(x, a, d, horizon);
        WittDivisor diff = truncate_to_horizon(witt_sub(row.finite, rep.limit), horizon);
        row.hadamard_distance = hadamard_norm(diff, q);
        row.agreement_depth = weight_agreement_depth(row.finite, rep.limit);
        for (int j = 1; j <= 3; ++j) row.pc_gaps.push_back(pc_seminorm(diff, q, j));
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace wittdiv
