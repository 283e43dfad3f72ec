#include "wittdiv/arith.hpp"

#include <algorithm>
#include <numeric>

namespace wittdiv {

int mobius(int n) {
    if (n <= 0) throw DomainError("mobius: argument must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<int> divisors(int n) {
    if (n <= 0) throw DomainError("divisors: argument must be positive");
    std::vector<int> small, large;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int gcd_all(const std::vector<int>& v) {
    int g = 0;
    for (int x : v) g = std::gcd(g, x);
    return g;
}

mpq_class pow_q(const mpq_class& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw DomainError("zero raised to a negative power");
        return pow_q(mpq_class(base.get_den(), base.get_num()), -exp);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

mpz_class pow_z(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

mpz_class multinomial(const std::vector<int>& parts) {
    mpz_class r = 1;
    long total = 0;
    for (int p : parts) {
        total += p;
        r *= binomial(mpz_class(total), static_cast<unsigned long>(p));
    }
    return r;
}

std::string to_decimal(const mpz_class& z) { return z.get_str(10); }

std::string to_decimal(const mpq_class& z) {
    if (z.get_den() == 1) return z.get_num().get_str(10);
    return z.get_str(10);
}

mpz_class parse_integer(const std::string& s) {
    mpz_class z;
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || z.set_str(t, 10) != 0) throw ParseError("not an integer: '" + s + "'");
    return z;
}

namespace {

// floor(log10(x)) for x > 0.
long decimal_exponent(const mpq_class& x) {
    long guess = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
                 static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
    auto ten_pow = [](long e) { return pow_q(mpq_class(10), e); };
    while (ten_pow(guess) > x) --guess;
    while (ten_pow(guess + 1) <= x) ++guess;
    return guess;
}

}  // namespace

std::string format_significant(const mpq_class& x, int digits) {
    if (digits <= 0) throw DomainError("format_significant: digits must be positive");
    if (x == 0) return "0";
    mpq_class a = abs(x);
    long e = decimal_exponent(a);
    long scale = digits - 1 - e;  // a * 10^scale lies in [10^(digits-1), 10^digits)
    mpq_class scaled = a * pow_q(mpq_class(10), scale);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    mpz_class twice = 2 * r;
    int cmp_half = cmp(twice, scaled.get_den());
    if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
    if (q == pow_z(10, static_cast<unsigned long>(digits))) {  // rounding carried a digit
        q /= 10;
        --scale;
    }
    std::string s = q.get_str(10);
    if (scale > 0) {
        if (static_cast<long>(s.size()) <= scale) s.insert(0, static_cast<std::size_t>(scale) - s.size() + 1, '0');
        s.insert(s.size() - static_cast<std::size_t>(scale), ".");
    } else if (scale < 0) {
        s.append(static_cast<std::size_t>(-scale), '0');
    }
    return (x < 0 ? "-" : "") + s;
}

}  // namespace wittdiv
