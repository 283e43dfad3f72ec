#include "doctest.h"
#include "generators.hpp"

using namespace wittdiv;
using wittdiv::testing::Gen;

namespace {
ZLaurent zl(std::map<int, mpz_class> t) { return ZLaurent::from_terms(t); }
}  // namespace

TEST_CASE("products of order polynomials") {
    ZLaurent q2_q = zl({{2, 1}, {1, -1}});
    CHECK(ql_mul(q2_q, zl({{1, 1}, {0, 1}})) == zl({{3, 1}, {1, -1}}));
    CHECK(ql_mul(q2_q, ZLaurent(1)) == q2_q);
    CHECK(ql_mul(zl({{2, 1}, {0, -1}}), q2_q) == zl({{4, 1}, {3, -1}, {2, -1}, {1, 1}}));
}

TEST_CASE("evaluation at a rational point") {
    CHECK(ql_eval(zl({{2, 1}, {1, -1}}), 2) == 2);
    CHECK(ql_eval(ZLaurent(1), mpq_class(7, 3)) == 1);
    // 48 invertible 2x2 matrices over F_3 by enumeration
    CHECK(ql_eval(zl({{4, 1}, {3, -1}, {2, -1}, {1, 1}}), 3) == 48);
    CHECK(ql_eval(zl({{-2, 3}}), 2) == mpq_class(3, 4));
    CHECK_THROWS_AS(ql_eval(zl({{-1, 1}}), 0), DomainError);
    CHECK(ql_eval(zl({{1, 5}}), 0) == 0);
}

TEST_CASE("dense representation stays trimmed") {
    ZLaurent a = zl({{3, 1}, {-2, 4}});
    CHECK(a.min_exp() == -2);
    CHECK(a.max_exp() == 3);
    CHECK(a.term_count() == 2);
    a -= zl({{3, 1}});
    CHECK(a.max_exp() == -2);
    a -= zl({{-2, 4}});
    CHECK(a.is_zero());
    CHECK(a == ZLaurent());
    CHECK(zl({{0, 0}}).is_zero());
}

TEST_CASE("shifts, scaling and clipping") {
    ZLaurent a = zl({{1, 2}, {0, -1}, {-3, 5}});
    CHECK(a.shifted(2) == zl({{3, 2}, {2, -1}, {-1, 5}}));
    CHECK(a.scaled_exponents(3) == zl({{3, 2}, {0, -1}, {-9, 5}}));
    CHECK(a.drop_below(0) == zl({{1, 2}, {0, -1}}));
    CHECK(a.drop_above(0) == zl({{0, -1}, {-3, 5}}));
    CHECK(a.coeff(-3) == 5);
    CHECK(a.coeff(17) == 0);
}

TEST_CASE("integrality round trip") {
    QLaurent r = QLaurent::from_terms({{2, mpq_class(1, 2)}, {1, mpq_class(-1, 2)}});
    CHECK_FALSE(is_integral(r));
    CHECK_THROWS_AS(to_integral(r), IntegralityError);
    QLaurent s = r + r;
    CHECK(is_integral(s));
    CHECK(to_integral(s) == zl({{2, 1}, {1, -1}}));
    CHECK(to_rational(to_integral(s)) == s);
}

TEST_CASE("half-even rendering at fifteen digits") {
    CHECK(format_significant(mpq_class(5, 2)) == "2.50000000000000");
    CHECK(format_significant(mpq_class(0)) == "0");
    CHECK(format_significant(mpq_class(1, 3)) == "0.333333333333333");
    CHECK(format_significant(mpq_class(-2, 3)) == "-0.666666666666667");
    // exactly halfway between two 15-digit values: round to even
    CHECK(format_significant(mpq_class(mpz_class("1000000000000005"), mpz_class(10))) == "100000000000000");
    CHECK(format_significant(mpq_class(mpz_class("1000000000000015"), mpz_class(10))) == "100000000000002");
    CHECK(format_significant(mpq_class(1, 1024), 3) == "0.000977");
}

TEST_CASE("property: Laurent ring axioms and evaluation homomorphism") {
    Gen g(testing::kPropertySeed);
    int failures = 0;
    for (int i = 0; i < testing::kPropertyCases; ++i) {
        ZLaurent a = g.laurent(-3, 3, 5), b = g.laurent(-3, 3, 5), c = g.laurent(-2, 2, 5);
        mpq_class q = g.q0();
        bool ok = a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a + b == b + a;
        ok = ok && ql_eval(a * b, q) == ql_eval(a, q) * ql_eval(b, q) && ql_eval(a + b, q) == ql_eval(a, q) + ql_eval(b, q);
        QLaurent ra = to_rational(a), rb = to_rational(b);
        ok = ok && is_integral(ra * rb) && is_integral(ra - rb) && to_integral(ra * rb) == a * b;
        failures += !ok;
    }
    CHECK(failures == 0);
}
