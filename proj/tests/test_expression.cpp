#include "doctest.h"

#include "tsv/expression.hpp"
#include "tsv/random.hpp"

#include <algorithm>

using namespace tsv;

TEST_CASE("parse examples") {
    Element a = parse_element("3/2*L[-1] + C");
    CHECK(a.size() == 2);
    CHECK(a.coeff(L(-1)) == Scalar(3, 2));
    CHECK(a.coeff(C()) == Scalar(1));

    Element b = parse_element("(1+2i)*Y[0] - M[3]");
    CHECK(b.size() == 2);
    CHECK(b.coeff(Y(0)) == Scalar(mpq_class(1), mpq_class(2)));
    CHECK(b.coeff(M(3)) == Scalar(-1));

    CHECK(parse_element("0").is_zero());
    CHECK(parse_element("L[1] - L[1]").is_zero());
    CHECK(parse_element(" - 2 * M[ -4 ]") == Element(M(-4), Scalar(-2)));
    CHECK(parse_element("i*Y[2]") == Element(Y(2), Scalar::i()));
    CHECK(parse_element("L[+3]") == Element(L(3)));
    CHECK(parse_basis("Y[-7]") == Y(-7));
    CHECK(parse_basis("C") == C());
}

TEST_CASE("syntax errors carry an offset") {
    auto offset_of = [](const char *src) -> std::size_t {
        try {
            parse_element(src);
        } catch (const SyntaxError &e) {
            return e.offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("L[1") == 3);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("L[1] +") == 6);
    CHECK(offset_of("X[1]") == 0);
    CHECK(offset_of("3") == 1);
    CHECK(offset_of("L[1]]") == 4);
    CHECK(offset_of("L[99999999999999999999]") == 2);

    try {
        parse_element("L[1");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError &e) {
        const auto &exp = e.expected();
        CHECK(std::find(exp.begin(), exp.end(), "']'") != exp.end());
    }
}

TEST_CASE("canonical printing") {
    Element x = Element(L(-1), Scalar(3, 2)) + Element(Y(0), Scalar(mpq_class(1), mpq_class(2))) +
                Element(M(3), Scalar(-1)) + Element(C());
    CHECK(to_string(x) == "3/2*L[-1] + (1+2i)*Y[0] - M[3] + C");
    CHECK(to_string(Element()) == "0");
    CHECK(to_string(Element(L(0), Scalar(-2))) == "-2*L[0]");
    CHECK(to_string(Element(Y(1), -Scalar::i())) == "-i*Y[1]");
    CHECK(to_string(C()) == "C");
}

TEST_CASE("parse and print round trip on random elements") {
    for (std::uint64_t k = 0; k < 600; ++k) {
        auto rng = Rng::for_case(21, k);
        Element x = random_element(rng, 12, 6);
        std::string text = to_string(x);
        Element back = parse_element(text);
        CHECK(back == x);
        CHECK(to_string(back) == text);
    }
}
