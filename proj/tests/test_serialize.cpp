#include <doctest.h>

#include "stick/error.hpp"
#include "stick/serialize.hpp"

using namespace stick;

TEST_CASE("every verdict in a scan survives a JSON round trip")
{
    for (const auto& table : scan_range(3, 61, ClassNumberTable::builtin()))
        for (const auto& v : table) {
            Json j = to_json(v);
            auto back = verdict_from_json(Json::parse(dump(j)));
            CHECK(back == v);
            CHECK(dump(to_json(back)) == dump(j));
        }
}

TEST_CASE("solve outcomes round trip")
{
    std::vector<SolveOutcome> cases{
        Solution{{1, -2, mpz_class("123456789012345678901234567890", 10)}},
        RationalInfeasible{{0, 1, -1}},
        NonIntegral{3, mpq_class(-11, 3), {1, 0, 2}, 3},
    };
    for (const auto& o : cases)
        CHECK(solve_outcome_from_json(Json::parse(dump(to_json(o)))) == o);
    Json big = to_json(cases[0]);
    CHECK(big["x"][2] == "123456789012345678901234567890");
}

TEST_CASE("norm verdicts round trip")
{
    for (long a : {0L, -4L, 2048L, 32L, 1081L, 45101L}) {
        auto v = norm_solvable(CyclotomicModulus(23), a, ClassNumberTable::builtin().at(23));
        CHECK(norm_verdict_from_json(to_json(v)) == v);
    }
    auto q = norm_solvable(CyclotomicModulus(29), mpq_class(59, 2), ClassNumberTable::builtin().at(29));
    CHECK(norm_verdict_from_json(Json::parse(dump(to_json(q)))) == q);
}

TEST_CASE("malformed JSON is a parse error")
{
    try {
        verdict_from_json(Json{{"ell", 23}});
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
    CHECK_THROWS_AS(solve_outcome_from_json(Json{{"kind", "other"}}), Error);
    CHECK_THROWS_AS(norm_verdict_from_json(Json::parse(R"({"ell":23,"a":{"num":"x","den":"1"}})")), Error);
}
