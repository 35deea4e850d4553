#include "tsv/derivations.hpp"

#include "tsv/expression.hpp"

#include <cstdlib>

namespace tsv {

ClassifiedDerivation outer_derivation(int which) {
    ClassifiedDerivation D;
    switch (which) {
    case 1:
        D.c1 = 1;
        break;
    case 2:
        D.c2 = 1;
        break;
    case 3:
        D.c3 = 1;
        break;
    default:
        throw std::invalid_argument("outer derivation index must be 1, 2 or 3");
    }
    return D;
}

ClassifiedDerivation from_params(const DerivationParams &p) { return {p.d1, p.d, p.g0, {}}; }

namespace {

Element apply_outer(const ClassifiedDerivation &D, const BasisVector &b) {
    Element out;
    switch (b.kind) {
    case Kind::L:
        out.add(M(b.index), D.c1 + D.c2 * Scalar(b.index));
        break;
    case Kind::Y:
        out.add(b, D.c3);
        break;
    case Kind::M:
        out.add(b, D.c3 * Scalar(2));
        break;
    case Kind::C:
        break;
    }
    return out;
}

} // namespace

Element apply_classified(const ClassifiedDerivation &D, const Element &x) {
    Element out;
    for (const auto &[b, c] : x)
        out.add(apply_outer(D, b), c);
    out += bracket(D.inner, x);
    return out;
}

WindowMap window_map(const ClassifiedDerivation &D, const Window &w) {
    return WindowMap::tabulate(w, [&](const BasisVector &g) { return apply_classified(D, g); });
}

std::vector<Violation> leibniz_check(const WindowMap &D) {
    std::vector<Violation> out;
    const auto gens = D.window().generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const auto &x = gens[i];
            const auto &y = gens[j];
            Element xy = bracket(x, y);
            if (!D.window().contains(xy))
                continue;
            Element residual = D.apply(xy);
            residual -= bracket(D.image(x), Element(y));
            residual -= bracket(Element(x), D.image(y));
            if (!residual.is_zero())
                out.push_back({x, y, std::move(residual)});
        }
    return out;
}

DerivationParams classify_degree0(const WindowMap &D) {
    for (const auto &g : D.window().generators()) {
        if (g.kind == Kind::C)
            continue;
        for (const auto &[b, c] : D.image(g))
            if (b.kind == Kind::L || b.kind == Kind::C || b.index != g.index)
                throw ClassificationError("not degree-0 into S at " + to_string(g), g);
    }
    DerivationParams p;
    p.d1 = D.image(L(0)).coeff(M(0));
    p.d = D.image(L(1)).coeff(M(1)) - p.d1;
    p.g0 = D.image(Y(0)).coeff(Y(0));
    const auto expected = from_params(p);
    for (const auto &g : D.window().generators())
        if (D.image(g) != apply_classified(expected, g))
            throw ClassificationError("not a derivation of the stated form at " + to_string(g), g);
    return p;
}

ClassifiedDerivation decompose(const WindowMap &D) {
    if (D.window().radius() < 3)
        throw std::invalid_argument("decompose needs window radius >= 3");

    // ad z_n (L_0) = [z_n, L_0] = -n z_n for z_n homogeneous of degree n.
    Element z;
    for (const auto &[b, c] : D.image(L(0))) {
        std::int64_t n = degree(b);
        if (n != 0)
            z.add(b, -c / Scalar(n));
    }
    auto reduced = [&](const BasisVector &g) { return D.image(g) - bracket(z, Element(g)); };

    // What remains is degree 0: c1*D1 + c2*D2 + c3*D3 + ad(lambda L_0 + mu Y_0), so
    //   L_0 -> c1 M_0
    //   L_1 -> lambda L_1 + mu/2 Y_1 + (c1 + c2) M_1
    //   Y_1 -> (lambda + c3) Y_1 + mu M_1
    const Element rl0 = reduced(L(0));
    const Element rl1 = reduced(L(1));
    const Element ry1 = reduced(Y(1));
    ClassifiedDerivation out;
    Scalar lambda = rl1.coeff(L(1));
    Scalar mu = rl1.coeff(Y(1)) * Scalar(2);
    out.c1 = rl0.coeff(M(0));
    out.c2 = rl1.coeff(M(1)) - out.c1;
    out.c3 = ry1.coeff(Y(1)) - lambda;
    z.add(L(0), lambda);
    z.add(Y(0), mu);
    out.inner = std::move(z);

    for (const auto &g : D.window().generators())
        if (D.image(g) != apply_classified(out, g))
            throw ClassificationError("residual not in classified span at " + to_string(g), g);
    return out;
}

std::vector<ClassifiedDerivation> outer_relations(const Window &w) {
    const auto gens = w.generators();
    const std::size_t cols = 3 + gens.size();
    std::map<std::pair<std::size_t, BasisVector>, std::size_t> row_of;
    Matrix m(0, cols);
    auto entry = [&](std::size_t gi, const BasisVector &b, std::size_t col) -> Scalar & {
        auto key = std::make_pair(gi, b);
        auto it = row_of.find(key);
        if (it == row_of.end())
            it = row_of.emplace(key, m.add_row()).first;
        return m(it->second, col);
    };
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        for (int k = 1; k <= 3; ++k)
            for (const auto &[b, c] : apply_outer(outer_derivation(k), gens[gi]))
                entry(gi, b, static_cast<std::size_t>(k - 1)) += c;
        for (std::size_t ui = 0; ui < gens.size(); ++ui)
            for (const auto &[b, c] : bracket(gens[ui], gens[gi]))
                entry(gi, b, 3 + ui) -= c;
    }
    std::vector<ClassifiedDerivation> out;
    for (const auto &v : nullspace(m)) {
        ClassifiedDerivation D{v[0], v[1], v[2], {}};
        for (std::size_t ui = 0; ui < gens.size(); ++ui)
            D.inner.add(gens[ui], v[3 + ui]);
        out.push_back(std::move(D));
    }
    return out;
}

std::size_t equivariant_hom_nullity(const Window &w) {
    const std::int64_t N = w.radius();
    if (N < 2)
        throw std::invalid_argument("equivariant_hom_nullity needs window radius >= 2");
    const std::int64_t span = 2 * N + 1;
    auto inside = [N](std::int64_t v) { return std::llabs(v) <= N; };
    // p_k^(n) at (n+N)*span + (k+N); c^(n) after all p.
    auto p = [&](std::int64_t n, std::int64_t k) { return static_cast<std::size_t>((n + N) * span + (k + N)); };
    auto c = [&](std::int64_t n) { return static_cast<std::size_t>(span * span + (n + N)); };
    Matrix m(0, static_cast<std::size_t>(span * span + span));

    for (std::int64_t mm = -N; mm <= N; ++mm)
        for (std::int64_t n = -N; n <= N; ++n) {
            if (!inside(mm + n))
                continue;
            // (n - m/2) f(Y_{m+n}) = [L_m, f(Y_n)]
            const Scalar weight(2 * n - mm, 2);
            {
                std::size_t r = m.add_row();
                m(r, c(mm + n)) += weight;
                mpz_class z(static_cast<long>(mm));
                m(r, p(n, -mm)) -= Scalar(mpq_class(z * z * z - z, 12));
            }
            for (std::int64_t t = -N + std::min<std::int64_t>(mm, 0); t <= N + std::max<std::int64_t>(mm, 0); ++t) {
                std::size_t r = m.add_row();
                if (inside(t))
                    m(r, p(mm + n, t)) += weight;
                if (inside(t - mm))
                    m(r, p(n, t - mm)) -= Scalar(t - 2 * mm);
            }
        }
    return nullspace(m).size();
}

} // namespace tsv
