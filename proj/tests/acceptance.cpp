// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "oracles.hpp"
#include "tsv/derivations.hpp"
#include "tsv/expression.hpp"
#include "tsv/json_codec.hpp"
#include "tsv/random.hpp"
#include "tsv/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace tsv;

namespace {

constexpr std::uint64_t kSeed = 20260101;

Element E(BasisVector b, Scalar s = Scalar(1)) { return Element(b, s); }

struct Outcome {
    bool ok = true;
    std::string note;
    std::vector<std::string> details;
    void require(bool cond, const std::string &why) {
        if (!cond && ok) {
            ok = false;
            note = why;
        }
    }
};

bool bracket_spot_checks(Outcome &o) {
    o.require(bracket(L(-3), L(3)) == E(L(0), 6) + E(C(), -2), "[L-3,L3]");
    o.require(bracket(L(2), L(-2)) == E(L(0), -4) + E(C(), Scalar(1, 2)), "[L2,L-2]");
    o.require(bracket(L(-1), Y(1)) == E(Y(0), Scalar(3, 2)), "[L-1,Y1]");
    o.require(bracket(Y(-1), Y(1)) == E(M(0), 2), "[Y-1,Y1]");
    o.require(bracket(L(1), L(-1)) == E(L(0), -2), "[L1,L-1]");
    o.note = o.ok ? "5 evaluations" : o.note;
    return o.ok;
}

bool jacobi(Outcome &o) {
    auto gens = Window(5).generators();
    std::size_t triples = 0;
    for (auto a : gens)
        for (auto b : gens)
            for (auto c : gens) {
                ++triples;
                o.require(jacobi_residual(a, b, c).is_zero(),
                          "residual at " + to_string(a) + ", " + to_string(b) + ", " + to_string(c));
            }
    if (o.ok)
        o.note = std::to_string(triples) + " triples";
    return o.ok;
}

bool center(Outcome &o) {
    const std::vector<Element> expected{E(M(0)), E(C())};
    for (int n : {3, 4, 5, 6})
        o.require(centralizer_window(Window(n)) == expected, "N = " + std::to_string(n));
    if (o.ok)
        o.note = "span{M[0], C} for N = 3..6";
    return o.ok;
}

bool derivation_classification(Outcome &o) {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= 3; ++k)
            o.require(leibniz_check(window_map(outer_derivation(k), Window(n))).empty(),
                      "Leibniz D" + std::to_string(k) + " radius " + std::to_string(n));
    for (const auto &rel : outer_relations(Window(3))) {
        o.require(rel.c1.is_zero() && rel.c2.is_zero() && rel.c3.is_zero(), "outer relation found");
        o.require(bracket(rel.inner, E(L(1))).is_zero() && bracket(rel.inner, E(L(-2))).is_zero() &&
                      bracket(rel.inner, E(Y(1))).is_zero(),
                  "noncentral inner relation");
    }
    const int cases = 60;
    for (int t = 0; t < cases; ++t) {
        auto rng = Rng::for_case(kSeed, static_cast<std::uint64_t>(t));
        auto d = random_classified(rng, 3);
        auto got = decompose(window_map(d, Window(5)));
        Element expected = d.inner;
        expected.add(M(0), -d.inner.coeff(M(0)));
        expected.add(C(), -d.inner.coeff(C()));
        o.require(got.c1 == d.c1 && got.c2 == d.c2 && got.c3 == d.c3 && got.inner == expected,
                  "decompose case " + std::to_string(t));
    }
    if (o.ok)
        o.note = "Leibniz radius 1..8, trivial outer relations, " + std::to_string(cases) + " round trips";
    return o.ok;
}

bool degree0(Outcome &o) {
    const int cases = 60;
    for (int t = 0; t < cases; ++t) {
        auto rng = Rng::for_case(kSeed + 1, static_cast<std::uint64_t>(t));
        auto p = random_derivation_params(rng);
        o.require(classify_degree0(window_map(from_params(p), Window(4))) == p, "case " + std::to_string(t));
        Scalar c1 = random_nonzero_scalar(rng);
        Scalar c0 = random_scalar(rng);
        auto bad = WindowMap::tabulate(Window(3), [&](const BasisVector &g) {
            return g.kind == Kind::L ? E(Y(g.index), g.index == 1 ? c1 : c0) : Element();
        });
        bool rejected = false;
        try {
            classify_degree0(bad);
        } catch (const ClassificationError &) {
            rejected = true;
        }
        o.require(rejected, "c_1 != 0 accepted in case " + std::to_string(t));
    }
    if (o.ok)
        o.note = std::to_string(cases) + " recoveries, " + std::to_string(cases) + " rejections";
    return o.ok;
}

bool hom_vanishing(Outcome &o) {
    for (int n = 2; n <= 8; ++n)
        o.require(equivariant_hom_nullity(Window(n)) == 0, "nonzero nullity at N = " + std::to_string(n));
    if (o.ok)
        o.note = "nullity 0 for N = 2..8";
    return o.ok;
}

bool group_law(Outcome &o) {
    const int pairs = 120, others = 60;
    for (int t = 0; t < pairs; ++t) {
        auto rng = Rng::for_case(kSeed + 2, static_cast<std::uint64_t>(t));
        auto p = random_params(rng), q = random_params(rng);
        auto pq = compose(p, q);
        for (auto g : Window(4).generators())
            o.require(apply(pq, Element(g)) == oracle::apply(p, oracle::apply(q, Element(g))),
                      "compose pair " + std::to_string(t) + " on " + to_string(g));
    }
    for (int t = 0; t < others; ++t) {
        auto rng = Rng::for_case(kSeed + 3, static_cast<std::uint64_t>(t));
        auto p = random_params(rng), q = random_params(rng), r = random_params(rng);
        o.require(compose(compose(p, q), r) == compose(p, compose(q, r)), "associativity " + std::to_string(t));
        auto inv = invert(p);
        o.require(compose(p, inv) == identity() && compose(inv, p) == identity(), "inverse " + std::to_string(t));
        o.require(factorize(window_map(p, Window(4))) == p, "factorize " + std::to_string(t));
    }
    if (o.ok)
        o.note = std::to_string(pairs) + " compose pairs at radius 4, " + std::to_string(others) +
                 " associativity/inverse/factorize cases";
    return o.ok;
}

bool verdict_table(Outcome &o) {
    auto report = run_verify({"lemma36-verdict", 4, kSeed, 100});
    o.require(report.passed(), "oracle-side identity failed");
    o.require(report.verdicts.size() == 9, "expected 9 relations");
    std::size_t disagree = 0;
    for (const auto &v : report.verdicts) {
        o.require(v.agree || v.witness.has_value(), v.relation + " has no witness");
        disagree += v.agree ? 0 : 1;
    }
    if (o.ok)
        o.note = std::to_string(report.verdicts.size() - disagree) + " AGREE, " + std::to_string(disagree) +
                 " DISAGREE with witnesses";
    for (const auto &v : report.verdicts) {
        std::string line = v.relation + ": " + (v.agree ? "AGREE" : "DISAGREE");
        if (v.witness)
            line += "  witness " + v.witness->dump();
        o.details.push_back(std::move(line));
    }
    return o.ok;
}

bool central_character(Outcome &o) {
    const int cases = 100;
    for (int t = 0; t < cases; ++t) {
        auto rng = Rng::for_case(kSeed + 4, static_cast<std::uint64_t>(t));
        auto p = random_params(rng);
        o.require(apply(p, E(C())) == E(C(), p.i == 0 ? 1 : -1), "C image " + std::to_string(t));
        for (std::int64_t n = -4; n <= 4; ++n) {
            Element y = apply(p, E(Y(n))), m = apply(p, E(M(n)));
            o.require(y.part(Kind::L).is_zero() && y.part(Kind::C).is_zero(), "Y ideal " + std::to_string(t));
            o.require(m == m.part(Kind::M), "M ideal " + std::to_string(t));
        }
    }
    if (o.ok)
        o.note = std::to_string(cases) + " parameter sets at radius 4";
    return o.ok;
}

bool codec(Outcome &o) {
    const int cases = 600;
    for (int t = 0; t < cases; ++t) {
        auto rng = Rng::for_case(kSeed + 5, static_cast<std::uint64_t>(t));
        Element x = random_element(rng, 10, 6);
        o.require(parse_element(to_string(x)) == x, "element " + to_string(x));
        auto p = random_params(rng);
        o.require(automorphism_from_json(nlohmann::json::parse(to_json(p).dump())) == p, "automorphism json");
        auto d = random_classified(rng, 5);
        o.require(derivation_from_json(nlohmann::json::parse(to_json(d).dump())) == d, "derivation json");
    }
    if (o.ok)
        o.note = std::to_string(3 * cases) + " round trips";
    return o.ok;
}

} // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<bool(Outcome &)> run;
    };
    const Criterion criteria[] = {
        {"bracket spot checks", bracket_spot_checks},
        {"Jacobi identity, all triples |index| <= 5", jacobi},
        {"center of windows N = 3..6", center},
        {"derivation classification", derivation_classification},
        {"degree-0 derivation oracle", degree0},
        {"equivariant hom vanishing", hom_vanishing},
        {"automorphism group law", group_law},
        {"composition relation verdicts", verdict_table},
        {"central character and ideal preservation", central_character},
        {"codec round trips", codec},
    };
    int failed = 0, index = 0;
    for (const auto &c : criteria) {
        ++index;
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(o);
        } catch (const std::exception &e) {
            o.note = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::printf("%s  %2d  %s  (%s; %lld ms)\n", ok ? "PASS" : "FAIL", index, c.name, o.note.c_str(),
                    static_cast<long long>(ms.count()));
        for (const auto &d : o.details)
            std::printf("          %s\n", d.c_str());
        failed += ok ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
