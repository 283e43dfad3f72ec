#pragma once

#include "wittdiv/qlaurent.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittdiv {

// sum_e k_e [q^e] in the Witt ring Z[C^x], restricted to integer powers of q.
// With a horizon H, coefficients at exponents < -H are unknown and are not stored.
class WittDivisor {
public:
    WittDivisor() = default;
    explicit WittDivisor(ZLaurent body, std::optional<int> horizon = std::nullopt);

    // k [q^e]
    static WittDivisor basis(int e, const mpz_class& k = 1) { return WittDivisor(ZLaurent::monomial(k, e)); }
    static WittDivisor unit() { return basis(0); }

    const ZLaurent& body() const { return body_; }
    const std::optional<int>& horizon() const { return horizon_; }
    bool finite() const { return !horizon_.has_value(); }
    bool is_zero() const { return body_.is_zero(); }
    mpz_class coeff(int e) const;
    // Exponent range of the stored terms; the divisor must be nonzero.
    int top() const { return body_.max_exp(); }
    int bottom() const { return body_.min_exp(); }

    WittDivisor with_horizon(std::optional<int> h) const { return WittDivisor(body_, h); }

    std::string to_string() const;

    friend bool operator==(const WittDivisor& a, const WittDivisor& b) {
        return a.horizon_ == b.horizon_ && a.body_ == b.body_;
    }

private:
    ZLaurent body_;
    std::optional<int> horizon_;
};

std::optional<int> weakest(std::optional<int> a, std::optional<int> b);

WittDivisor witt_add(const WittDivisor& a, const WittDivisor& b);
WittDivisor witt_neg(const WittDivisor& a);
WittDivisor witt_sub(const WittDivisor& a, const WittDivisor& b);
// Exponent convolution. Truncated operands need a finite top exponent on the other
// side; the result horizon is the deepest exponent that is still fully determined.
WittDivisor witt_mul(const WittDivisor& a, const WittDivisor& b);
// Same, but the caller demands exactness down to -horizon.
WittDivisor witt_mul(const WittDivisor& a, const WittDivisor& b, int horizon);
WittDivisor witt_inverse(const WittDivisor& d, int cutoff);

inline WittDivisor operator+(const WittDivisor& a, const WittDivisor& b) { return witt_add(a, b); }
inline WittDivisor operator-(const WittDivisor& a, const WittDivisor& b) { return witt_sub(a, b); }
inline WittDivisor operator-(const WittDivisor& a) { return witt_neg(a); }
inline WittDivisor operator*(const WittDivisor& a, const WittDivisor& b) { return witt_mul(a, b); }

ZLaurent ghost(const WittDivisor& d, int j);
mpq_class hadamard_norm(const WittDivisor& d, const mpq_class& q0);
mpq_class weight_norm(const WittDivisor& d, const mpq_class& q0);
mpq_class pc_seminorm(const WittDivisor& d, const mpq_class& q0, int j);
WittDivisor tate_twist(const WittDivisor& d, int k);
WittDivisor tau_truncate(const WittDivisor& d, int m, const mpq_class& q0);
std::vector<mpq_class> divisor_to_taylor(const WittDivisor& d, const mpq_class& q0, int n);
std::vector<WittDivisor> sigma_series(const WittDivisor& d, int j_max);

// Keep exponents >= -h and record horizon h.
WittDivisor truncate_to_horizon(const WittDivisor& d, int h);
// Equality on all exponents >= -n.
bool agree_to(const WittDivisor& a, const WittDivisor& b, int n);
// Largest even m with tau_m(a) = tau_m(b), capped by the horizons; -1 if even tau_0 differs.
int weight_agreement_depth(const WittDivisor& a, const WittDivisor& b);

struct SigmaRationalForm {
    std::map<int, int> zeros;  // exponent -> multiplicity
    std::map<int, int> poles;
    friend bool operator==(const SigmaRationalForm&, const SigmaRationalForm&) = default;
};
SigmaRationalForm sigma_rational(const WittDivisor& d);

// {"horizon": int|null, "terms": [{"exp": int, "coeff": "decimal"}]}, descending exponents.
std::string divisor_to_json(const WittDivisor& d, int indent = -1);
WittDivisor divisor_from_json(const std::string& text);

}  // namespace wittdiv
