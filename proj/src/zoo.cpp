#include "wittdiv/zoo.hpp"

#include <algorithm>
#include <optional>
#include <cctype>

namespace wittdiv {

VarietyClass affine_space(int n) {
    if (n < 0) throw DomainError("A^n needs n >= 0");
    return {n == 0 ? "pt" : "A" + std::to_string(n), n, WittDivisor::basis(n), true};
}

VarietyClass projective_space(int n) {
    if (n < 0) throw DomainError("P^n needs n >= 0");
    std::vector<mpz_class> ones(static_cast<std::size_t>(n) + 1, 1);
    return {"P" + std::to_string(n), n, WittDivisor(ZLaurent(0, ones)), true};
}

VarietyClass split_torus(int r) {
    if (r < 0) throw DomainError("Gm^r needs r >= 0");
    ZLaurent p(1);
    const ZLaurent q_minus_1 = ZLaurent::monomial(1, 1) - ZLaurent(1);
    for (int i = 0; i < r; ++i) p *= q_minus_1;
    return {"Gm^" + std::to_string(r), r, WittDivisor(p), true};
}

VarietyClass general_linear(int n) {
    if (n < 1) throw DomainError("GL_n needs n >= 1");
    ZLaurent p(1);
    for (int i = 0; i < n; ++i) p *= ZLaurent::monomial(1, n) - ZLaurent::monomial(1, i);
    return {"GL" + std::to_string(n), n * n, WittDivisor(p), true};
}

VarietyClass product(const VarietyClass& x, const VarietyClass& y) {
    return {x.name + "x" + y.name, x.dim + y.dim, witt_mul(x.zeta, y.zeta), x.irreducible && y.irreducible};
}

VarietyClass disjoint_union(const VarietyClass& x, const VarietyClass& y) {
    return {x.name + "+" + y.name, std::max(x.dim, y.dim), witt_add(x.zeta, y.zeta), false};
}

namespace {

int parse_count(const std::string& s, const std::string& whole) {
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("bad variety parameter in '" + whole + "'");
    return std::stoi(s);
}

VarietyClass parse_factor(const std::string& f, const std::string& whole) {
    auto starts = [&](const std::string& p) { return f.rfind(p, 0) == 0; };
    auto tail = [&](std::size_t n) { return f.substr(n); };
    if (f == "pt") return affine_space(0);
    if (starts("GLn:")) return general_linear(parse_count(tail(4), whole));
    if (starts("GL")) return general_linear(parse_count(tail(2), whole));
    if (starts("Gm^r:")) return split_torus(parse_count(tail(5), whole));
    if (starts("Gm^")) return split_torus(parse_count(tail(3), whole));
    if (f == "Gm") return split_torus(1);
    if (starts("An:")) return affine_space(parse_count(tail(3), whole));
    if (starts("Pn:")) return projective_space(parse_count(tail(3), whole));
    if (starts("A")) return affine_space(parse_count(tail(1), whole));
    if (starts("P")) return projective_space(parse_count(tail(1), whole));
    throw ParseError("unknown variety '" + f + "' in '" + whole + "'");
}

}  // namespace

VarietyClass variety(const std::string& spec) {
    if (spec.empty()) throw ParseError("empty variety specification");
    std::optional<VarietyClass> acc;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = spec.find('x', start);
        std::string f = spec.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        VarietyClass v = parse_factor(f, spec);
        acc = acc ? product(*acc, v) : v;
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    acc->name = spec;
    return *acc;
}

WittDivisor class_to_divisor(const ZLaurent& c) { return WittDivisor(c); }

WittDivisor sym_power_divisor(const VarietyClass& x, int j) {
    if (j < 0) throw DomainError("symmetric power index must be nonnegative");
    return sigma_series(x.zeta, j).back();
}

}  // namespace wittdiv
