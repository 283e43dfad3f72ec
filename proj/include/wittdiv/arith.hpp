#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace wittdiv {

// Error kinds. The CLI maps ParseError to exit code 2 and every other Error to 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct TruncationError : Error {
    using Error::Error;
};
struct NonInvertibleError : Error {
    using Error::Error;
};
struct DivergenceError : Error {
    using Error::Error;
};
struct UnsupportedError : Error {
    using Error::Error;
};
// Raised when an exactness assertion fails (e.g. denominators that should cancel).
struct IntegralityError : Error {
    using Error::Error;
};
// Raised when an identity the computation relies on is found to fail at runtime.
struct ConsistencyError : Error {
    using Error::Error;
};

int mobius(int n);
std::vector<int> divisors(int n);  // ascending
int gcd_all(const std::vector<int>& v);

mpq_class pow_q(const mpq_class& base, long exp);
mpz_class pow_z(const mpz_class& base, unsigned long exp);
mpz_class binomial(const mpz_class& n, unsigned long k);
mpz_class multinomial(const std::vector<int>& parts);

// Decimal rendering of an exact rational with `digits` significant digits,
// rounded half-even, in positional notation.
std::string format_significant(const mpq_class& x, int digits = 15);

std::string to_decimal(const mpz_class& z);
std::string to_decimal(const mpq_class& z);  // "p/q" when not integral
mpz_class parse_integer(const std::string& s);

}  // namespace wittdiv
