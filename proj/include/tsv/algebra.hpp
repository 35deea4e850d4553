#pragma once

// The twisted Schrodinger-Virasoro algebra: basis {L_n, Y_n, M_n, C},
// finitely supported elements over Q(i), and the Lie bracket.

#include "tsv/scalar.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <vector>

namespace tsv {

enum class Kind : std::uint8_t { L = 0, Y = 1, M = 2, C = 3 };

char kind_letter(Kind k);

/// A basis vector. C carries no index; it is stored as 0 so that the total
/// order (kind first, then index) is well defined.
struct BasisVector {
    Kind kind = Kind::C;
    std::int64_t index = 0;

    friend auto operator<=>(const BasisVector &, const BasisVector &) = default;
};

inline BasisVector L(std::int64_t n) { return {Kind::L, n}; }
inline BasisVector Y(std::int64_t n) { return {Kind::Y, n}; }
inline BasisVector M(std::int64_t n) { return {Kind::M, n}; }
inline BasisVector C() { return {Kind::C, 0}; }

/// deg L_n = deg Y_n = deg M_n = n, deg C = 0.
std::int64_t degree(const BasisVector &b);

/// Finite linear combination of basis vectors. No stored coefficient is zero,
/// so structural equality is equality in the algebra.
class Element {
  public:
    using Terms = std::map<BasisVector, Scalar>;

    Element() = default;
    Element(const BasisVector &b) { terms_.emplace(b, Scalar(1)); }
    Element(const BasisVector &b, Scalar coeff) { add(b, std::move(coeff)); }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coeff(const BasisVector &b) const;

    /// this += coeff * b
    void add(const BasisVector &b, const Scalar &coeff);
    /// this += coeff * other
    void add(const Element &other, const Scalar &coeff = Scalar(1));

    /// Terms of a single degree (C counts as degree 0).
    Element component(std::int64_t deg) const;
    /// Terms of a single kind.
    Element part(Kind k) const;

    Element operator-() const;
    Element &operator+=(const Element &o);
    Element &operator-=(const Element &o);
    Element &operator*=(const Scalar &s);

    friend Element operator+(Element a, const Element &b) { return a += b; }
    friend Element operator-(Element a, const Element &b) { return a -= b; }
    friend Element operator*(const Scalar &s, Element a) { return a *= s; }
    friend Element operator*(Element a, const Scalar &s) { return a *= s; }

    friend bool operator==(const Element &, const Element &) = default;

    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

  private:
    Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const Element &x);

/// [a, b] on basis vectors.
Element bracket(const BasisVector &a, const BasisVector &b);
/// Bilinear extension of the basis bracket.
Element bracket(const Element &x, const Element &y);

class NotNilpotent : public std::invalid_argument {
  public:
    NotNilpotent() : std::invalid_argument("ad not nilpotent / not in inner radical") {}
};

/// True iff x lies in span{Y_j, M_k}, where (ad x)^3 = 0 on the whole algebra.
bool in_inner_radical(const Element &x);

/// exp(ad x)(target) = target + [x,target] + 1/2 [x,[x,target]].
/// Throws NotNilpotent if x has an L or C term.
Element exp_ad(const Element &x, const Element &target);

/// [[x,y],z] + [[y,z],x] + [[z,x],y]
Element jacobi_residual(const Element &x, const Element &y, const Element &z);

/// Enumeration bound |index| <= radius for test sweeps.
class Window {
  public:
    explicit Window(int radius);
    int radius() const { return radius_; }

    bool contains(const BasisVector &b) const;
    bool contains(const Element &x) const;

    /// All L_n, Y_n, M_n with |n| <= radius, then C, in basis order.
    std::vector<BasisVector> generators() const;

  private:
    int radius_;
};

/// Exact basis of {x inside the window : [x, g] = 0 for every window generator g}.
std::vector<Element> centralizer_window(const Window &w);

} // namespace tsv
