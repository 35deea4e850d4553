#include "tsv/algebra.hpp"

#include <cstdlib>

namespace tsv {

char kind_letter(Kind k) {
    switch (k) {
    case Kind::L:
        return 'L';
    case Kind::Y:
        return 'Y';
    case Kind::M:
        return 'M';
    case Kind::C:
        return 'C';
    }
    return '?';
}

std::int64_t degree(const BasisVector &b) { return b.kind == Kind::C ? 0 : b.index; }

Scalar Element::coeff(const BasisVector &b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add(const BasisVector &b, const Scalar &coeff) {
    if (coeff.is_zero())
        return;
    BasisVector key = b;
    if (key.kind == Kind::C)
        key.index = 0;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Element::add(const Element &other, const Scalar &coeff) {
    if (coeff.is_zero())
        return;
    if (coeff.is_one()) {
        for (const auto &[b, c] : other.terms_)
            add(b, c);
        return;
    }
    for (const auto &[b, c] : other.terms_)
        add(b, c * coeff);
}

Element Element::component(std::int64_t deg) const {
    Element out;
    for (const auto &[b, c] : terms_)
        if (degree(b) == deg)
            out.terms_.emplace(b, c);
    return out;
}

Element Element::part(Kind k) const {
    Element out;
    for (const auto &[b, c] : terms_)
        if (b.kind == k)
            out.terms_.emplace(b, c);
    return out;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto &[b, c] : out.terms_)
        c = -c;
    return out;
}

Element &Element::operator+=(const Element &o) {
    add(o);
    return *this;
}

Element &Element::operator-=(const Element &o) {
    add(o, Scalar(-1));
    return *this;
}

Element &Element::operator*=(const Scalar &s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[b, c] : terms_)
        c *= s;
    return *this;
}

Element bracket(const BasisVector &a, const BasisVector &b) {
    Element out;
    if (a.kind == Kind::C || b.kind == Kind::C)
        return out;
    const std::int64_t n = a.index;
    const std::int64_t m = b.index;
    switch (a.kind) {
    case Kind::L:
        switch (b.kind) {
        case Kind::L:
            out.add(L(n + m), Scalar(m - n));
            if (n == -m && n != 0) {
                mpz_class nn(static_cast<long>(n));
                out.add(C(), Scalar(mpq_class(nn * nn * nn - nn, 12)));
            }
            break;
        case Kind::Y:
            out.add(Y(n + m), Scalar(2 * m - n, 2));
            break;
        case Kind::M:
            out.add(M(n + m), Scalar(m));
            break;
        default:
            break;
        }
        break;
    case Kind::Y:
        if (b.kind == Kind::L)
            out.add(Y(n + m), Scalar(m - 2 * n, 2));
        else if (b.kind == Kind::Y)
            out.add(M(n + m), Scalar(m - n));
        break;
    case Kind::M:
        if (b.kind == Kind::L)
            out.add(M(n + m), Scalar(-n));
        break;
    default:
        break;
    }
    return out;
}

Element bracket(const Element &x, const Element &y) {
    Element out;
    for (const auto &[a, ca] : x)
        for (const auto &[b, cb] : y) {
            Element t = bracket(a, b);
            if (!t.is_zero())
                out.add(t, ca * cb);
        }
    return out;
}

bool in_inner_radical(const Element &x) {
    for (const auto &[b, c] : x)
        if (b.kind == Kind::L || b.kind == Kind::C)
            return false;
    return true;
}

Element exp_ad(const Element &x, const Element &target) {
    if (!in_inner_radical(x))
        throw NotNilpotent();
    Element once = bracket(x, target);
    Element twice = bracket(x, once);
    Element out = target;
    out += once;
    out.add(twice, Scalar(1, 2));
    return out;
}

Element jacobi_residual(const Element &x, const Element &y, const Element &z) {
    Element out = bracket(bracket(x, y), z);
    out += bracket(bracket(y, z), x);
    out += bracket(bracket(z, x), y);
    return out;
}

Window::Window(int radius) : radius_(radius) {
    if (radius < 1)
        throw std::invalid_argument("window radius must be >= 1");
}

bool Window::contains(const BasisVector &b) const {
    return b.kind == Kind::C || std::llabs(b.index) <= radius_;
}

bool Window::contains(const Element &x) const {
    for (const auto &[b, c] : x)
        if (!contains(b))
            return false;
    return true;
}

std::vector<BasisVector> Window::generators() const {
    std::vector<BasisVector> out;
    for (Kind k : {Kind::L, Kind::Y, Kind::M})
        for (std::int64_t n = -radius_; n <= radius_; ++n)
            out.push_back({k, n});
    out.push_back(C());
    return out;
}

std::vector<Element> centralizer_window(const Window &w) {
    const auto gens = w.generators();
    // Unknowns: coefficients of x on each window generator. One row per
    // (g, basis vector of [x, g]).
    std::map<std::pair<std::size_t, BasisVector>, std::size_t> row_of;
    Matrix m(0, gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (std::size_t ui = 0; ui < gens.size(); ++ui)
            for (const auto &[b, c] : bracket(gens[ui], gens[gi])) {
                auto key = std::make_pair(gi, b);
                auto it = row_of.find(key);
                if (it == row_of.end())
                    it = row_of.emplace(key, m.add_row()).first;
                m(it->second, ui) += c;
            }
    std::vector<Element> basis;
    for (const auto &v : nullspace(m)) {
        Element x;
        for (std::size_t i = 0; i < gens.size(); ++i)
            x.add(gens[i], v[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace tsv
