#include "tsv/autgroup.hpp"

#include "tsv/expression.hpp"

#include <cstdlib>

namespace tsv {

FiniteSupportSeq::FiniteSupportSeq(std::initializer_list<std::pair<const std::int64_t, Scalar>> init) {
    for (const auto &[k, v] : init)
        add(k, v);
}

Scalar FiniteSupportSeq::get(std::int64_t k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Scalar() : it->second;
}

void FiniteSupportSeq::set(std::int64_t k, const Scalar &v) {
    if (k == 0)
        throw std::invalid_argument("sequence index 0 is not allowed");
    if (v.is_zero())
        entries_.erase(k);
    else
        entries_[k] = v;
}

void FiniteSupportSeq::add(std::int64_t k, const Scalar &v) { set(k, get(k) + v); }

std::int64_t FiniteSupportSeq::reach() const {
    std::int64_t r = 0;
    for (const auto &[k, v] : entries_)
        r = std::max<std::int64_t>(r, std::llabs(k));
    return r;
}

void AutomorphismParams::validate() const {
    if (u.is_zero())
        throw std::invalid_argument("u must be nonzero");
    if (w.is_zero())
        throw std::invalid_argument("w must be nonzero");
    if (i != 0 && i != 1)
        throw std::invalid_argument("i must be 0 or 1");
}

Element AutomorphismParams::inner_generator() const {
    Element x;
    for (const auto &[j, v] : b)
        x.add(Y(j), v);
    for (const auto &[k, v] : c)
        x.add(M(k), v);
    return x;
}

AutomorphismParams identity() { return {}; }

AutomorphismParams sigma(Scalar u) {
    AutomorphismParams p;
    p.u = std::move(u);
    p.validate();
    return p;
}

AutomorphismParams epsilon() {
    AutomorphismParams p;
    p.i = 1;
    return p;
}

AutomorphismParams psi(Scalar w) {
    AutomorphismParams p;
    p.w = std::move(w);
    p.validate();
    return p;
}

AutomorphismParams delta(Scalar alpha, Scalar beta, Scalar gamma) {
    AutomorphismParams p;
    p.alpha = std::move(alpha);
    p.beta = std::move(beta);
    p.gamma = std::move(gamma);
    return p;
}

AutomorphismParams xi(FiniteSupportSeq b, FiniteSupportSeq c) {
    AutomorphismParams p;
    p.b = std::move(b);
    p.c = std::move(c);
    return p;
}

namespace {

int sign_of(int i) { return i ? -1 : 1; }

// eps^i o sigma_u o psi_w o delta on a single basis vector.
Element apply_graded(const AutomorphismParams &p, const BasisVector &g) {
    const Scalar s(sign_of(p.i));
    Element out;
    if (g.kind == Kind::C) {
        out.add(C(), s);
        return out;
    }
    const std::int64_t n = g.index;
    const std::int64_t t = p.i ? -n : n;
    const Scalar nn(n);
    const Scalar su = s * p.u.pow(n);
    const Scalar w2 = p.w * p.w;
    switch (g.kind) {
    case Kind::L:
        out.add(L(t), su);
        out.add(Y(t), su * p.alpha * nn * p.w);
        out.add(M(t), su * (p.alpha * p.alpha * nn * nn + p.beta * nn + p.gamma) * w2);
        break;
    case Kind::Y:
        out.add(Y(t), su * p.w);
        out.add(M(t), su * Scalar(2) * p.alpha * nn * w2);
        break;
    case Kind::M:
        out.add(M(t), su * w2);
        break;
    default:
        break;
    }
    return out;
}

// Coefficients of (eps^i o sigma_u o psi_w o delta)(sum b_l Y_l + sum c_l M_l).
std::pair<FiniteSupportSeq, FiniteSupportSeq> conjugate_inner(const AutomorphismParams &p,
                                                              const FiniteSupportSeq &b,
                                                              const FiniteSupportSeq &c) {
    const int s = sign_of(p.i);
    const Scalar w2 = p.w * p.w;
    FiniteSupportSeq bt, ct;
    for (const auto &[l, v] : b) {
        const Scalar su = Scalar(s) * p.u.pow(l) * v;
        bt.add(s * l, su * p.w);
        ct.add(s * l, su * Scalar(2) * p.alpha * Scalar(l) * w2);
    }
    for (const auto &[l, v] : c)
        ct.add(s * l, Scalar(s) * p.u.pow(l) * v * w2);
    return {bt, ct};
}

// M_k coefficients (k != 0) of 1/2 [sum b_j Y_j, sum b'_l Y_l]. The M_0 part
// is central and drops out of exp(ad .).
FiniteSupportSeq half_commutator(const FiniteSupportSeq &b, const FiniteSupportSeq &bp) {
    FiniteSupportSeq out;
    for (const auto &[j, x] : b)
        for (const auto &[l, y] : bp)
            if (j + l != 0)
                out.add(j + l, Scalar(l - j, 2) * x * y);
    return out;
}

} // namespace

Element apply(const AutomorphismParams &p, const Element &x) {
    Element graded;
    for (const auto &[g, coeff] : x)
        graded.add(apply_graded(p, g), coeff);
    if (p.b.empty() && p.c.empty())
        return graded;
    return exp_ad(p.inner_generator(), graded);
}

WindowMap window_map(const AutomorphismParams &p, const Window &w) {
    return WindowMap::tabulate(w, [&](const BasisVector &g) { return apply(p, g); });
}

// p o q = xi_p H_p xi_q H_q = xi_p exp(ad H_p(x_q)) H_p H_q.
//   xi_p exp(ad y) = exp(ad(x_p + y + 1/2 [x_p, y]))   ([x_p, y] is central in span{Y, M})
//   H_p H_q: moving delta_p right past eps^i' sigma_u' psi_w' rescales
//   (alpha, beta, gamma) by (s'/w', s'/w'^2, 1/w'^2); sigma_u eps = eps sigma_{1/u}.
AutomorphismParams compose(const AutomorphismParams &p, const AutomorphismParams &q) {
    p.validate();
    q.validate();
    const Scalar sq(sign_of(q.i));
    const Scalar inv_w = q.w.inverse();
    const Scalar inv_w2 = inv_w * inv_w;

    AutomorphismParams r;
    r.i = (p.i + q.i) % 2;
    r.u = (q.i ? p.u.inverse() : p.u) * q.u;
    r.w = p.w * q.w;
    r.alpha = sq * p.alpha * inv_w + q.alpha;
    r.beta = sq * p.beta * inv_w2 + q.beta;
    r.gamma = p.gamma * inv_w2 + q.gamma;

    auto [bt, ct] = conjugate_inner(p, q.b, q.c);
    r.b = p.b;
    for (const auto &[j, v] : bt)
        r.b.add(j, v);
    r.c = p.c;
    for (const auto &[k, v] : ct)
        r.c.add(k, v);
    for (const auto &[k, v] : half_commutator(p.b, bt))
        r.c.add(k, v);
    return r;
}

// p^{-1} = H_p^{-1} exp(-ad x_p) = exp(-ad H_p^{-1}(x_p)) H_p^{-1}, with
// H_p^{-1} = eps^i sigma_{u^{-s}} psi_{1/w} delta_{-s alpha w, -s beta w^2, -gamma w^2}.
AutomorphismParams invert(const AutomorphismParams &p) {
    p.validate();
    const Scalar s(sign_of(p.i));
    AutomorphismParams r;
    r.i = p.i;
    r.u = p.i ? p.u : p.u.inverse();
    r.w = p.w.inverse();
    r.alpha = -s * p.alpha * p.w;
    r.beta = -s * p.beta * p.w * p.w;
    r.gamma = -p.gamma * p.w * p.w;
    auto [bt, ct] = conjugate_inner(r, p.b, p.c);
    for (const auto &[j, v] : bt)
        r.b.set(j, -v);
    for (const auto &[k, v] : ct)
        r.c.set(k, -v);
    return r;
}

AutomorphismParams factorize(const WindowMap &m) {
    if (m.window().radius() < 3)
        throw std::invalid_argument("factorize needs window radius >= 3");
    auto fail = [](const BasisVector &g) -> FactorizationError {
        return FactorizationError("not an automorphism of canonical shape at " + to_string(g), g);
    };

    AutomorphismParams p;
    // L_0 -> s xi(L_0) + s gamma w^2 M_0 with s = +-1 the sign of the L_0 term.
    const Element &l0 = m.image(L(0));
    const Scalar lead = l0.coeff(L(0));
    if (lead == Scalar(-1))
        p.i = 1;
    else if (lead != Scalar(1))
        throw fail(L(0));
    const Scalar s(sign_of(p.i));
    const std::int64_t e = p.i ? -1 : 1;

    // [Y_j, L_0] = -j Y_j and [M_k, L_0] = -k M_k; Y and M parts of xi commute.
    for (const auto &[g, v] : l0)
        if (g.kind == Kind::Y && g.index != 0)
            p.b.set(g.index, -s * v / Scalar(g.index));
    Element partial = exp_ad(-p.inner_generator(), l0);
    for (const auto &[g, v] : partial)
        if (g.kind == Kind::M && g.index != 0)
            p.c.set(g.index, -s * v / Scalar(g.index));

    // Peel xi off; what is left is eps^i sigma_u psi_w delta.
    const Element x = p.inner_generator();
    auto graded = [&](const BasisVector &g) { return exp_ad(-x, m.image(g)); };

    p.w = s * graded(Y(0)).coeff(Y(0));
    if (p.w.is_zero())
        throw fail(Y(0));
    const Scalar w2 = p.w * p.w;
    p.u = s * graded(M(1)).coeff(M(e)) / w2;
    if (p.u.is_zero())
        throw fail(M(1));
    const Scalar uw2 = p.u * w2;
    p.alpha = s * graded(Y(1)).coeff(M(e)) / (Scalar(2) * uw2);
    p.gamma = s * graded(L(0)).coeff(M(0)) / w2;
    p.beta = s * graded(L(1)).coeff(M(e)) / uw2 - p.alpha * p.alpha - p.gamma;

    for (const auto &g : m.window().generators())
        if (apply(p, g) != m.image(g))
            throw fail(g);
    return p;
}

std::vector<Violation> is_automorphism_window(const WindowMap &m) {
    std::vector<Violation> out;
    const auto gens = m.window().generators();
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            Element xy = bracket(gens[a], gens[b]);
            if (!m.window().contains(xy))
                continue;
            Element residual = m.apply(xy) - bracket(m.image(gens[a]), m.image(gens[b]));
            if (!residual.is_zero())
                out.push_back({gens[a], gens[b], std::move(residual)});
        }
    return out;
}

AutomorphismParams compose_oracle(const AutomorphismParams &p, const AutomorphismParams &q, const Window &w) {
    return factorize(WindowMap::tabulate(w, [&](const BasisVector &g) { return apply(p, apply(q, g)); }));
}

} // namespace tsv
