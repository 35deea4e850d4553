#include "doctest.h"

#include "tsv/random.hpp"
#include "tsv/scalar.hpp"

using tsv::Matrix;
using tsv::Scalar;

TEST_CASE("scalar field operations") {
    CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar(2).pow(-3) == Scalar(1, 8));
    CHECK(Scalar(7).pow(0) == Scalar(1));
    CHECK(Scalar(mpq_class(1), mpq_class(1)).inverse() == Scalar(mpq_class(1, 2), mpq_class(-1, 2)));
    CHECK(-Scalar(3, 4) == Scalar(-3, 4));
    CHECK(Scalar(3) - Scalar(5) == Scalar(-2));
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), tsv::DivisionByZero);
    CHECK_THROWS_AS(Scalar(0).inverse(), tsv::DivisionByZero);
    CHECK_THROWS_AS(Scalar(0).pow(-1), tsv::DivisionByZero);
}

TEST_CASE("scalar canonical text") {
    CHECK(Scalar(3, 2).str() == "3/2");
    CHECK(Scalar(0).str() == "0");
    CHECK(Scalar(mpq_class(0), mpq_class(2)).str() == "2i");
    CHECK(Scalar(mpq_class(0), mpq_class(-1)).str() == "-i");
    CHECK(Scalar(mpq_class(1, 2), mpq_class(-3, 4)).str() == "1/2-3/4i");
    CHECK(Scalar::parse("6/4") == Scalar(3, 2));
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("1/2-3/4i") == Scalar(mpq_class(1, 2), mpq_class(-3, 4)));
    CHECK_THROWS_AS(Scalar::parse("1/0"), tsv::ScalarParseError);
    CHECK_THROWS_AS(Scalar::parse("abc"), tsv::ScalarParseError);
    CHECK_THROWS_AS(Scalar::parse(""), tsv::ScalarParseError);
}

TEST_CASE("field axioms on random scalars") {
    for (std::uint64_t k = 0; k < 300; ++k) {
        auto rng = tsv::Rng::for_case(11, k);
        Scalar a = tsv::random_scalar(rng), b = tsv::random_scalar(rng), c = tsv::random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Scalar(0));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b.pow(-2) * b.pow(2) == Scalar(1));
        }
        CHECK(Scalar::parse(a.str()) == a);
    }
}

TEST_CASE("nullspace examples") {
    Matrix id(2, 2);
    id(0, 0) = 1;
    id(1, 1) = 1;
    CHECK(tsv::nullspace(id).empty());
    CHECK(tsv::rank(id) == 2);

    Matrix row(1, 2);
    row(0, 0) = 1;
    row(0, 1) = -1;
    auto ns = tsv::nullspace(row);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == tsv::Vector{Scalar(1), Scalar(1)});

    Matrix zero(2, 3);
    CHECK(tsv::nullspace(zero).size() == 3);
}

TEST_CASE("nullspace vectors are annihilated and independent") {
    for (std::uint64_t k = 0; k < 60; ++k) {
        auto rng = tsv::Rng::for_case(5, k);
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (rng.chance(1, 2))
                    m(i, j) = tsv::random_scalar(rng);
        auto ns = tsv::nullspace(m);
        CHECK(ns.size() + tsv::rank(m) == c);
        for (const auto &v : ns)
            for (const auto &entry : m.apply(v))
                CHECK(entry.is_zero());
        Matrix stacked(ns.size(), c);
        for (std::size_t i = 0; i < ns.size(); ++i)
            for (std::size_t j = 0; j < c; ++j)
                stacked(i, j) = ns[i][j];
        CHECK(tsv::rank(stacked) == ns.size());
    }
}
