#include "doctest.h"
#include "frozen_counts.hpp"
#include "generators.hpp"

#include <cstring>

using namespace wittdiv;

namespace {
WittDivisor W(std::map<int, mpz_class> t, std::optional<int> h = std::nullopt) {
    return WittDivisor(ZLaurent::from_terms(t), h);
}
WittDivisor alternating(int n) {
    std::map<int, mpz_class> t;
    for (int i = 0; i <= n; ++i) t[-i] = i % 2 == 0 ? 1 : -1;
    return W(t, n);
}
}  // namespace

TEST_CASE("partitions") {
    CHECK(parse_lambda("1,2,1").parts() == std::vector<int>{2, 1, 1});
    CHECK(parse_lambda("1,2,1").size() == 4);
    CHECK(parse_lambda("").empty());
    CHECK(parse_lambda("3,1").to_string() == "(3,1)");
    CHECK_THROWS_AS(parse_lambda("2,0"), ParseError);
    CHECK_THROWS_AS(parse_lambda("a"), ParseError);
    CHECK_THROWS_AS(PartitionLambda({-1}), DomainError);
}

TEST_CASE("colored configuration classes") {
    VarietyClass a1 = affine_space(1);
    PartitionLambda one({1});
    CHECK(conf_lambda_star_divisor(a1, one, 1) == W({{2, 1}, {1, -1}}));
    CHECK(conf_lambda_star_divisor(a1, one, 0) == W({{1, 1}}));
    for (int d = 0; d <= 6; ++d)
        CHECK(conf_lambda_star_divisor(a1, PartitionLambda(), d) == zerocycle_class(a1, LabelScheme::finite_conf(1), {d}));
    CHECK_THROWS_AS(conf_lambda_star_divisor(a1, one, -1), DomainError);
}

TEST_CASE("class counts match colored configuration counts") {
    for (const char* xname : {"A1", "A2", "P1"}) {
        VarietyClass x = variety(xname);
        for (const char* lam : {"1", "2", "1,1", "2,1"}) {
            PartitionLambda lambda = parse_lambda(lam);
            auto divs = conf_lambda_star_divisors(x, lambda, 3);
            for (int d = 0; d <= 3; ++d) {
                Exponents dv(lambda.parts().begin(), lambda.parts().end());
                dv.push_back(d);
                for (long q : {2L, 3L})
                    CHECK(ql_eval(ghost(divs[static_cast<std::size_t>(d)], 1), q) ==
                          point_count_oracle(x, LabelScheme::finite_conf(lambda.count() + 1), dv, q));
            }
        }
    }
    // brute-force counts on the affine line for lambda = (1, 1)
    VarietyClass a1 = affine_space(1);
    for (const auto& row : frozen_counts()) {
        if (std::strcmp(row.scheme, "conf:3") != 0 || row.d[0] < row.d[1] || row.d[1] == 0) continue;
        PartitionLambda lambda({row.d[0], row.d[1]});
        CHECK(ql_eval(ghost(conf_lambda_star_divisor(a1, lambda, row.d[2]), 1), row.q) == row.count);
    }
}

TEST_CASE("series route and colored expansion agree") {
    testing::Gen g(testing::kPropertySeed + 5);
    for (const char* lam : {"1", "2", "3", "1,1", "2,1", "1,1,1"})
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<long> f{1};
            int len = g.integer(1, 4);
            for (int j = 0; j < len; ++j) f.push_back(g.integer(-2, 2));
            VarietyClass x = g.coin() ? affine_space(1) : variety("P1");
            auto a = conf_lambda_series(x, parse_lambda(lam), f);
            auto b = conf_lambda_series_expansion(x, parse_lambda(lam), f);
            CHECK(a == b);
        }
}

TEST_CASE("label value") {
    VarietyClass a1 = affine_space(1);
    CHECK(conf_label_value(a1, PartitionLambda({1}), 3) == alternating(3));
    CHECK(conf_label_value(a1, PartitionLambda({1}), 12) == alternating(12));
    CHECK(conf_label_value(a1, PartitionLambda(), 5) == W({{0, 1}}, 5));
    CHECK_THROWS_AS(conf_label_value(variety("pt"), PartitionLambda({1}), 3), PreconditionError);
}

TEST_CASE("finite quotients approach the label value") {
    VarietyClass a1 = affine_space(1);
    auto rep = theoremB_check(a1, PartitionLambda({1}), 12, 12, mpq_class(2));
    CHECK(rep.limit == alternating(12));
    CHECK(rep.rows[1].quotient == W({{0, 1}}, 12));
    CHECK(rep.rows[1].agreement_depth == 0);
    CHECK(rep.depth_nondecreasing);
    CHECK(rep.rows[12].agreement_depth >= 16);
    for (std::size_t d = 1; d < rep.rows.size(); ++d)
        CHECK(*rep.rows[d].hadamard_distance <= *rep.rows[d - 1].hadamard_distance);

    auto empty = theoremB_check(a1, PartitionLambda(), 6, 6);
    CHECK(empty.limit == W({{0, 1}}, 6));
    for (const auto& r : empty.rows) CHECK(r.quotient == W({{0, 1}}, 6));

    auto pair = theoremB_check(a1, PartitionLambda({1, 1}), 12, 8);
    CHECK(pair.depth_nondecreasing);
    CHECK(agree_to(pair.rows[12].quotient, pair.limit, 8));
}
