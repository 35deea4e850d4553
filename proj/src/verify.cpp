#include "tsv/verify.hpp"

#include "tsv/autgroup.hpp"
#include "tsv/derivations.hpp"
#include "tsv/expression.hpp"
#include "tsv/json_codec.hpp"
#include "tsv/random.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace tsv {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxDetails = 5;

void record(CheckResult &check, bool ok, const std::function<std::string()> &detail) {
    ++check.cases;
    if (ok)
        return;
    ++check.violations;
    if (check.details.size() < kMaxDetails)
        check.details.push_back(detail());
}

std::string params_str(const AutomorphismParams &p) { return to_json(p).dump(); }

int default_radius(const std::string &suite) {
    if (suite == "jacobi")
        return 5;
    if (suite == "center")
        return 6;
    if (suite == "derivations")
        return 8;
    if (suite == "hom-vanishing")
        return 8;
    return 4;
}

// --- jacobi -----------------------------------------------------------------

void run_jacobi(Report &rep, int radius) {
    CheckResult check{"jacobi identity on all generator triples", 0, 0, {}, json::object()};
    const auto gens = Window(radius).generators();
    for (const auto &x : gens)
        for (const auto &y : gens)
            for (const auto &z : gens) {
                Element r = jacobi_residual(x, y, z);
                record(check, r.is_zero(), [&] {
                    return "(" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) + "): " + to_string(r);
                });
            }
    rep.checks.push_back(std::move(check));
}

// --- center -----------------------------------------------------------------

bool spans_center(const std::vector<Element> &basis) {
    if (basis.size() != 2)
        return false;
    for (const auto &x : basis)
        for (const auto &[b, c] : x)
            if (!(b == M(0) || b == C()))
                return false;
    // Two vectors supported on {M_0, C}: independent iff the 2x2 determinant is nonzero.
    Scalar det = basis[0].coeff(M(0)) * basis[1].coeff(C()) - basis[0].coeff(C()) * basis[1].coeff(M(0));
    return !det.is_zero();
}

void run_center(Report &rep, int radius) {
    CheckResult check{"centralizer of the window is span{M[0], C}", 0, 0, {}, json::object()};
    auto basis = centralizer_window(Window(radius));
    json list = json::array();
    for (const auto &x : basis)
        list.push_back(to_string(x));
    check.data["basis"] = list;
    record(check, spans_center(basis), [&] { return "kernel basis " + list.dump(); });
    rep.checks.push_back(std::move(check));
}

// --- derivations ------------------------------------------------------------

void run_derivations(Report &rep, int radius, std::uint64_t seed, int cases) {
    const int big = std::max(3, radius);

    CheckResult leibniz{"D1, D2, D3 satisfy Leibniz at every radius up to " + std::to_string(radius), 0, 0, {},
                        json::object()};
    for (int r = 1; r <= radius; ++r)
        for (int k = 1; k <= 3; ++k) {
            auto v = leibniz_check(window_map(outer_derivation(k), Window(r)));
            record(leibniz, v.empty(), [&] {
                return "D" + std::to_string(k) + " at radius " + std::to_string(r) + ": " + to_string(v.front());
            });
        }
    rep.checks.push_back(std::move(leibniz));

    CheckResult indep{"c1 D1 + c2 D2 + c3 D3 = ad z forces c = 0 and z central (radius " + std::to_string(big) +
                          ")",
                      0, 0, {}, json::object()};
    {
        auto kernel = outer_relations(Window(big));
        std::vector<Element> inner;
        bool ok = true;
        for (const auto &d : kernel) {
            ok = ok && d.c1.is_zero() && d.c2.is_zero() && d.c3.is_zero();
            inner.push_back(d.inner);
        }
        ok = ok && spans_center(inner);
        indep.data["kernel_dimension"] = kernel.size();
        record(indep, ok, [&] { return "kernel dimension " + std::to_string(kernel.size()); });
    }
    rep.checks.push_back(std::move(indep));

    CheckResult round{"decompose recovers random classified derivations", 0, 0, {}, json::object()};
    const Window w(big);
    for (int t = 0; t < cases; ++t) {
        Rng rng = Rng::for_case(seed, static_cast<std::uint64_t>(t));
        ClassifiedDerivation d = random_classified(rng, big);
        bool ok = true;
        std::string why;
        try {
            ClassifiedDerivation got = decompose(window_map(d, w));
            ok = got.c1 == d.c1 && got.c2 == d.c2 && got.c3 == d.c3 && got.inner.coeff(M(0)).is_zero() &&
                 got.inner.coeff(C()).is_zero();
            for (const auto &g : w.generators())
                ok = ok && apply_classified(got, g) == apply_classified(d, g);
            if (!ok)
                why = to_json(got).dump();
        } catch (const std::exception &e) {
            ok = false;
            why = e.what();
        }
        record(round, ok, [&] { return "case " + std::to_string(t) + " " + to_json(d).dump() + ": " + why; });
    }
    rep.checks.push_back(std::move(round));

    CheckResult fit{"classify_degree0 recovers (d, d1, g0)", 0, 0, {}, json::object()};
    CheckResult reject{"classify_degree0 rejects L_n -> c_n Y_n with c_1 != 0", 0, 0, {}, json::object()};
    for (int t = 0; t < cases; ++t) {
        Rng rng = Rng::for_case(seed ^ 0x5bd1e995u, static_cast<std::uint64_t>(t));
        DerivationParams p = random_derivation_params(rng);
        bool ok = false;
        try {
            ok = classify_degree0(window_map(from_params(p), w)) == p;
        } catch (const std::exception &) {
        }
        record(fit, ok, [&] { return "case " + std::to_string(t); });

        // Add a Y-component to the L images; c_1 is forced nonzero.
        std::map<std::int64_t, Scalar> cn;
        for (std::int64_t n = -big; n <= big; ++n)
            cn[n] = random_scalar(rng);
        cn[1] = random_nonzero_scalar(rng);
        auto base = from_params(p);
        auto m = WindowMap::tabulate(w, [&](const BasisVector &g) {
            Element img = apply_classified(base, g);
            if (g.kind == Kind::L)
                img.add(Y(g.index), cn[g.index]);
            return img;
        });
        bool rejected = false;
        try {
            classify_degree0(m);
        } catch (const ClassificationError &) {
            rejected = true;
        }
        record(reject, rejected, [&] { return "case " + std::to_string(t) + " accepted"; });
    }
    rep.checks.push_back(std::move(fit));
    rep.checks.push_back(std::move(reject));
}

// --- hom-vanishing ------------------------------------------------------------

void run_hom_vanishing(Report &rep, int radius) {
    CheckResult check{"equivariant hom S/[S,S] -> V vanishes for radius 2.." + std::to_string(radius), 0, 0, {},
                      json::object()};
    json nullities = json::object();
    for (int n = 2; n <= radius; ++n) {
        std::size_t k = equivariant_hom_nullity(Window(n));
        nullities[std::to_string(n)] = k;
        record(check, k == 0, [&] { return "radius " + std::to_string(n) + ": nullity " + std::to_string(k); });
    }
    check.data["nullity"] = nullities;
    rep.checks.push_back(std::move(check));
}

// --- group-law ----------------------------------------------------------------

bool agree_on(const Window &w, const std::function<Element(const BasisVector &)> &f,
              const std::function<Element(const BasisVector &)> &g) {
    for (const auto &b : w.generators())
        if (f(b) != g(b))
            return false;
    return true;
}

void run_group_law(Report &rep, int radius, std::uint64_t seed, int cases) {
    const Window w(radius);
    const Window fw(std::max(3, radius));
    CheckResult generatorwise{"apply(compose(p,q), g) = apply(p, apply(q, g))", 0, 0, {}, json::object()};
    CheckResult oracle{"compose(p,q) equals factorize of the generator-wise composite", 0, 0, {}, json::object()};
    CheckResult assoc{"compose is associative", 0, 0, {}, json::object()};
    CheckResult ident{"identity is a two-sided unit", 0, 0, {}, json::object()};
    CheckResult inv{"invert is a two-sided inverse", 0, 0, {}, json::object()};
    CheckResult fact{"factorize(apply(p)) = p", 0, 0, {}, json::object()};
    CheckResult faithful{"distinct parameters act differently", 0, 0, {}, json::object()};
    CheckResult autom{"apply(p) preserves brackets", 0, 0, {}, json::object()};
    CheckResult central{"apply(p, C) = (-1)^i C", 0, 0, {}, json::object()};
    CheckResult ideals{"ideals span{Y,M,C} and span{M,C} are preserved", 0, 0, {}, json::object()};

    for (int t = 0; t < cases; ++t) {
        Rng rng = Rng::for_case(seed, static_cast<std::uint64_t>(t));
        AutomorphismParams p = random_params(rng);
        AutomorphismParams q = random_params(rng);
        AutomorphismParams r = random_params(rng);
        auto tag = [&] { return "case " + std::to_string(t) + " p=" + params_str(p) + " q=" + params_str(q); };

        AutomorphismParams pq = compose(p, q);
        record(generatorwise,
               agree_on(w, [&](const BasisVector &g) { return apply(pq, g); },
                        [&](const BasisVector &g) { return apply(p, apply(q, g)); }),
               tag);
        bool ok = false;
        try {
            ok = compose_oracle(p, q, fw) == pq;
        } catch (const std::exception &) {
        }
        record(oracle, ok, tag);
        record(assoc, compose(pq, r) == compose(p, compose(q, r)), tag);
        record(ident, compose(p, identity()) == p && compose(identity(), p) == p, tag);
        AutomorphismParams pi = invert(p);
        record(inv, compose(p, pi) == identity() && compose(pi, p) == identity(), tag);
        ok = false;
        try {
            ok = factorize(window_map(p, fw)) == p;
        } catch (const std::exception &) {
        }
        record(fact, ok, tag);
        if (!(p == q))
            record(faithful,
                   !agree_on(Window(3), [&](const BasisVector &g) { return apply(p, g); },
                             [&](const BasisVector &g) { return apply(q, g); }),
                   tag);
        auto v = is_automorphism_window(window_map(p, w));
        record(autom, v.empty(), [&] { return tag() + ": " + to_string(v.front()); });
        record(central, apply(p, C()) == Element(C(), Scalar(p.i ? -1 : 1)), tag);
        bool kept = true;
        for (const auto &g : w.generators()) {
            if (g.kind == Kind::L)
                continue;
            Element img = apply(p, g);
            kept = kept && img.part(Kind::L).is_zero();
            if (g.kind != Kind::Y)
                kept = kept && img.part(Kind::Y).is_zero();
        }
        record(ideals, kept, tag);
    }
    for (auto *c : {&generatorwise, &oracle, &assoc, &ident, &inv, &fact, &faithful, &autom, &central, &ideals})
        rep.checks.push_back(std::move(*c));
}

// --- composition relations as printed ----------------------------------------

struct Printed {
    int i = 0;
    Scalar u, w, alpha, beta, gamma;
    FiniteSupportSeq b, c;
};

// The relations exactly as printed, with p = (b,c,i,u,w,alpha,beta,gamma)
// acting after q = (b',c',i',u',w',alpha',beta',gamma').
Printed printed_compose(const AutomorphismParams &p, const AutomorphismParams &q) {
    Printed r;
    const std::int64_t s = p.i ? -1 : 1;
    const Scalar ss(s);
    const Scalar w2 = p.w * p.w;
    const Scalar inv_w2 = (q.w * q.w).inverse();
    r.w = p.w * q.w;
    r.i = (p.i + q.i) % 2;
    r.u = p.u.pow(q.i ? -1 : 1) * q.u;
    r.gamma = inv_w2 * p.gamma + q.gamma;
    r.alpha = (p.alpha * q.w.inverse() + q.alpha) / Scalar(2);
    r.beta = inv_w2 * p.beta + q.alpha * q.alpha + q.beta + q.gamma;

    const std::int64_t reach = std::max({p.b.reach(), q.b.reach(), p.c.reach(), q.c.reach(), std::int64_t{1}});
    for (std::int64_t j = -reach; j <= reach; ++j) {
        if (j == 0)
            continue;
        r.b.set(j, p.b.get(j) + ss * p.w * q.b.get(s * j) * p.u.pow(s * j));
    }
    const std::int64_t kreach = 2 * reach;
    for (std::int64_t k = -kreach; k <= kreach; ++k) {
        if (k == 0)
            continue;
        Scalar v = p.c.get(k) + w2 * ss * q.c.get(s * k) * p.u.pow(s * k) +
                   Scalar(2) * p.alpha * w2 * Scalar(k) * q.b.get(s * k) * p.u.pow(s * k);
        Scalar sum;
        for (std::int64_t j = -kreach; j <= kreach; ++j) {
            if (j == 0)
                continue;
            Scalar inner = p.u.pow(s * j) * q.b.get(s * j) * p.b.get(k - j) -
                           p.u.pow(s * (k - j)) * p.b.get(j) * q.b.get(s * (k - j));
            if (inner.is_zero())
                continue;
            sum += ss * p.w * Scalar(k).inverse() * Scalar(k - j) * Scalar(k - 2 * j) * inner;
        }
        r.c.set(k, v - sum / Scalar(2));
    }
    return r;
}

bool is_pure_delta(const AutomorphismParams &p) {
    return p.b.empty() && p.c.empty() && p.i == 0 && p.u.is_one() && p.w.is_one();
}

std::string seq_str(const FiniteSupportSeq &s) {
    json j = json::object();
    for (const auto &[k, v] : s)
        j[std::to_string(k)] = v.str();
    return j.dump();
}

struct Relation {
    std::string name;
    std::string printed;
    // Returns (applicable, printed value, oracle value) as strings.
    std::function<std::optional<std::pair<std::string, std::string>>(
        const AutomorphismParams &, const AutomorphismParams &, const Printed &, const AutomorphismParams &)>
        eval;
};

std::vector<Relation> relations() {
    using Opt = std::optional<std::pair<std::string, std::string>>;
    using P = const AutomorphismParams &;
    return {
        {"w''", "w'' = w w'", [](P, P, const Printed &pr, P o) -> Opt { return {{pr.w.str(), o.w.str()}}; }},
        {"i''", "i'' = i + i'",
         [](P, P, const Printed &pr, P o) -> Opt { return {{std::to_string(pr.i), std::to_string(o.i)}}; }},
        {"u''", "u'' = u^((-1)^i') u'",
         [](P, P, const Printed &pr, P o) -> Opt { return {{pr.u.str(), o.u.str()}}; }},
        {"gamma''", "gamma'' = w'^-2 gamma + gamma'",
         [](P, P, const Printed &pr, P o) -> Opt { return {{pr.gamma.str(), o.gamma.str()}}; }},
        {"alpha''", "alpha'' = (alpha w'^-1 + alpha') / 2",
         [](P, P, const Printed &pr, P o) -> Opt { return {{pr.alpha.str(), o.alpha.str()}}; }},
        {"beta''", "beta'' = w'^-2 beta + alpha'^2 + beta' + gamma'",
         [](P, P, const Printed &pr, P o) -> Opt { return {{pr.beta.str(), o.beta.str()}}; }},
        {"b''", "b''_j = b_j + (-1)^i w b'_((-1)^i j) u^((-1)^i j)",
         [](P, P, const Printed &pr, P o) -> Opt { return {{seq_str(pr.b), seq_str(o.b)}}; }},
        {"c''",
         "c''_k = c_k + w^2 (-1)^i c'_((-1)^i k) u^((-1)^i k) + 2 alpha w^2 k b'_((-1)^i k) u^((-1)^i k)"
         " - sum_j (-1)^i w k^-1 (k-j)(k-2j) (u^((-1)^i j) b'_((-1)^i j) b_(k-j)"
         " - u^((-1)^i (k-j)) b_j b'_((-1)^i (k-j))) / 2",
         [](P, P, const Printed &pr, P o) -> Opt { return {{seq_str(pr.c), seq_str(o.c)}}; }},
        {"delta o delta'", "delta(a,b,g) delta(a',b',g') = delta(a+a', b+b', g+g'+2aa')",
         [](P p, P q, const Printed &, P o) -> Opt {
             if (!is_pure_delta(p) || !is_pure_delta(q))
                 return std::nullopt;
             AutomorphismParams pred =
                 delta(p.alpha + q.alpha, p.beta + q.beta, p.gamma + q.gamma + Scalar(2) * p.alpha * q.alpha);
             return {{params_str(pred), params_str(o)}};
         }},
    };
}

std::vector<AutomorphismParams> elementary() {
    return {identity(),
            epsilon(),
            sigma(Scalar(2)),
            psi(Scalar(2)),
            delta(1, 0, 0),
            delta(0, 1, 0),
            delta(0, 0, 1),
            xi({{1, Scalar(1)}}, {}),
            xi({{-1, Scalar(1)}}, {}),
            xi({{2, Scalar(1)}}, {}),
            xi({}, {{1, Scalar(1)}}),
            xi({}, {{-1, Scalar(1)}})};
}

void run_lemma36(Report &rep, int radius, std::uint64_t seed, int cases) {
    const Window fw(std::max(3, radius));
    // Elementary pairs first, simplest first, then seeded random pairs.
    std::vector<std::pair<AutomorphismParams, AutomorphismParams>> pairs;
    const auto gens = elementary();
    const std::size_t n = gens.size();
    for (std::size_t total = 0; total <= 2 * (n - 1); ++total)
        for (std::size_t a = 0; a < n; ++a)
            if (total >= a && total - a < n)
                pairs.emplace_back(gens[a], gens[total - a]);
    for (int t = 0; t < cases; ++t) {
        Rng rng = Rng::for_case(seed, static_cast<std::uint64_t>(t));
        AutomorphismParams p = random_params(rng);
        AutomorphismParams q = random_params(rng);
        pairs.emplace_back(std::move(p), std::move(q));
    }

    CheckResult closed{"closed-form compose equals the generator-wise oracle", 0, 0, {}, json::object()};
    CheckResult composite{"oracle composite agrees with p(q(g)) on the window", 0, 0, {}, json::object()};
    auto rels = relations();
    std::vector<VerdictRow> rows;
    for (const auto &rel : rels)
        rows.push_back({rel.name, rel.printed, true, 0, std::nullopt});

    for (const auto &[p, q] : pairs) {
        auto tag = [&, &p = p, &q = q] { return "p=" + params_str(p) + " q=" + params_str(q); };
        AutomorphismParams o;
        try {
            o = compose_oracle(p, q, fw);
        } catch (const std::exception &e) {
            record(closed, false, [&] { return tag() + ": " + e.what(); });
            continue;
        }
        record(closed, compose(p, q) == o, tag);
        record(composite,
               agree_on(fw, [&](const BasisVector &g) { return apply(o, g); },
                        [&, &p = p, &q = q](const BasisVector &g) { return apply(p, apply(q, g)); }),
               tag);
        Printed pr = printed_compose(p, q);
        for (std::size_t r = 0; r < rels.size(); ++r) {
            auto res = rels[r].eval(p, q, pr, o);
            if (!res)
                continue;
            ++rows[r].cases;
            if (res->first != res->second && rows[r].agree) {
                rows[r].agree = false;
                rows[r].witness = json{{"p", to_json(p)}, {"q", to_json(q)}, {"printed", res->first},
                                       {"oracle", res->second}};
            }
        }
    }
    rep.checks.push_back(std::move(closed));
    rep.checks.push_back(std::move(composite));
    rep.verdicts = std::move(rows);
}

} // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"jacobi",      "center",         "derivations", "hom-vanishing",
                                                "group-law",   "lemma36-verdict", "all"};
    return names;
}

bool Report::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed(); });
}

json Report::to_json() const {
    json j;
    j["suite"] = suite;
    j["radius"] = radius;
    j["seed"] = seed;
    j["cases"] = cases;
    j["passed"] = passed();
    json cs = json::array();
    for (const auto &c : checks)
        cs.push_back(json{{"name", c.name},
                          {"cases", c.cases},
                          {"violations", c.violations},
                          {"details", c.details},
                          {"data", c.data}});
    j["checks"] = cs;
    if (!verdicts.empty()) {
        json vs = json::array();
        for (const auto &v : verdicts) {
            json row{{"relation", v.relation},
                     {"printed", v.printed},
                     {"verdict", v.agree ? "AGREE" : "DISAGREE"},
                     {"cases", v.cases}};
            if (v.witness)
                row["witness"] = *v.witness;
            vs.push_back(row);
        }
        j["verdicts"] = vs;
    }
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (radius " << radius << ", seed " << seed << ", cases " << cases << ")\n";
    for (const auto &c : checks) {
        os << (c.passed() ? "  PASS  " : "  FAIL  ") << c.name << ": " << c.cases << " cases, " << c.violations
           << " violations\n";
        if (!c.data.empty())
            os << "        " << c.data.dump() << "\n";
        for (const auto &d : c.details)
            os << "        " << d << "\n";
    }
    if (!verdicts.empty()) {
        os << "  composition relations as printed vs oracle:\n";
        for (const auto &v : verdicts) {
            os << "    " << (v.agree ? "AGREE     " : "DISAGREE  ") << v.relation << "  [" << v.cases
               << " cases]  " << v.printed << "\n";
            if (v.witness)
                os << "              witness: " << v.witness->dump() << "\n";
        }
    }
    os << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

Report run_verify(const VerifyOptions &opts) {
    const auto &names = suite_names();
    if (std::find(names.begin(), names.end(), opts.suite) == names.end())
        throw std::invalid_argument("unknown suite \"" + opts.suite + "\"");
    if (opts.radius && *opts.radius < 1)
        throw std::invalid_argument("radius must be >= 1");
    if (opts.cases < 1)
        throw std::invalid_argument("cases must be >= 1");

    Report rep;
    rep.suite = opts.suite;
    rep.radius = opts.radius.value_or(default_radius(opts.suite));
    rep.seed = opts.seed;
    rep.cases = opts.cases;

    auto wants = [&](const char *s) { return opts.suite == "all" || opts.suite == s; };
    auto radius_for = [&](const char *s) { return opts.radius.value_or(default_radius(s)); };
    if (wants("jacobi"))
        run_jacobi(rep, radius_for("jacobi"));
    if (wants("center"))
        run_center(rep, radius_for("center"));
    if (wants("derivations"))
        run_derivations(rep, radius_for("derivations"), opts.seed, opts.cases);
    if (wants("hom-vanishing")) {
        if (radius_for("hom-vanishing") < 2)
            throw std::invalid_argument("hom-vanishing needs radius >= 2");
        run_hom_vanishing(rep, radius_for("hom-vanishing"));
    }
    if (wants("group-law"))
        run_group_law(rep, radius_for("group-law"), opts.seed, opts.cases);
    if (wants("lemma36-verdict"))
        run_lemma36(rep, radius_for("lemma36-verdict"), opts.seed, opts.cases);
    return rep;
}

} // namespace tsv
