#pragma once

// Reference implementations used only by tests. They are written directly
// from the defining formulas and share no code paths with the library beyond
// the bracket and Element arithmetic.

#include "tsv/autgroup.hpp"

#include <functional>

namespace oracle {

using tsv::BasisVector;
using tsv::Element;
using tsv::Kind;
using tsv::Scalar;

inline Element linear(const std::function<Element(const BasisVector &)> &f, const Element &x) {
    Element out;
    for (const auto &[b, s] : x)
        out.add(f(b), s);
    return out;
}

/// sum_k (ad x)^k / k! applied to t, summed until a term vanishes.
inline Element series_exp_ad(const Element &x, const Element &t, int max_order = 12) {
    Element out = t, term = t;
    Scalar fact(1);
    for (int k = 1; k <= max_order && !term.is_zero(); ++k) {
        term = tsv::bracket(x, term);
        fact *= Scalar(k);
        out.add(term, fact.inverse());
    }
    return out;
}

inline Element delta_gen(const Scalar &a, const Scalar &b, const Scalar &g, const BasisVector &v) {
    Scalar n(static_cast<long>(v.index));
    Element out(v);
    if (v.kind == Kind::L) {
        out.add(tsv::Y(v.index), a * n);
        out.add(tsv::M(v.index), a * a * n * n + b * n + g);
    } else if (v.kind == Kind::Y) {
        out.add(tsv::M(v.index), Scalar(2) * a * n);
    }
    return out;
}

inline Element psi_gen(const Scalar &w, const BasisVector &v) {
    if (v.kind == Kind::Y)
        return Element(v, w);
    if (v.kind == Kind::M)
        return Element(v, w * w);
    return Element(v);
}

inline Element sigma_gen(const Scalar &u, const BasisVector &v) {
    if (v.kind == Kind::C)
        return Element(v);
    Scalar f(1);
    for (std::int64_t k = 0; k < (v.index < 0 ? -v.index : v.index); ++k)
        f *= u;
    return Element(v, v.index < 0 ? f.inverse() : f);
}

inline Element epsilon_gen(const BasisVector &v) {
    if (v.kind == Kind::C)
        return Element(v, Scalar(-1));
    return Element(BasisVector{v.kind, -v.index}, Scalar(-1));
}

/// xi o eps^i o sigma_u o psi_w o delta, one factor at a time.
inline Element apply(const tsv::AutomorphismParams &p, const Element &x) {
    Element y = linear([&](const BasisVector &v) { return delta_gen(p.alpha, p.beta, p.gamma, v); }, x);
    y = linear([&](const BasisVector &v) { return psi_gen(p.w, v); }, y);
    y = linear([&](const BasisVector &v) { return sigma_gen(p.u, v); }, y);
    if (p.i == 1)
        y = linear(epsilon_gen, y);
    return series_exp_ad(p.inner_generator(), y);
}

} // namespace oracle
