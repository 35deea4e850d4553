#include "doctest.h"

#include "tsv/verify.hpp"

using namespace tsv;

TEST_CASE("jacobi suite") {
    auto r = run_verify({"jacobi", 5, 1, 10});
    CHECK(r.passed());
    for (const auto &c : r.checks)
        CHECK(c.violations == 0);
}

TEST_CASE("hom-vanishing suite") {
    auto r = run_verify({"hom-vanishing", 6, 1, 10});
    CHECK(r.passed());
}

TEST_CASE("group-law suite") {
    auto r = run_verify({"group-law", std::nullopt, 7, 100});
    CHECK(r.passed());
}

TEST_CASE("verdict table") {
    auto r = run_verify({"lemma36-verdict", std::nullopt, 1, 30});
    CHECK(r.passed());
    REQUIRE(r.verdicts.size() == 9);
    for (const auto &v : r.verdicts) {
        CHECK(v.cases > 0);
        CHECK(v.agree == !v.witness.has_value());
    }
}

TEST_CASE("reports are deterministic") {
    VerifyOptions opts{"group-law", 4, 99, 20};
    CHECK(run_verify(opts).to_json().dump() == run_verify(opts).to_json().dump());
}

TEST_CASE("bad options") {
    CHECK_THROWS_AS(run_verify({"nope", std::nullopt, 1, 10}), std::invalid_argument);
    CHECK_THROWS_AS(run_verify({"jacobi", 0, 1, 10}), std::invalid_argument);
    CHECK_THROWS_AS(run_verify({"group-law", std::nullopt, 1, 0}), std::invalid_argument);
}
