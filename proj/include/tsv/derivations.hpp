#pragma once

// Derivations of the algebra. Every derivation is c1*D1 + c2*D2 + c3*D3 + ad z
// where
//   D1: L_n -> M_n
//   D2: L_n -> n M_n
//   D3: Y_n -> Y_n, M_n -> 2 M_n
// and each D_i kills the remaining basis vectors (including C).

#include "tsv/window_map.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tsv {

/// Degree-0 derivation into span{Y, M}:
/// L_n -> (d n + d1) M_n, Y_n -> g0 Y_n, M_n -> 2 g0 M_n, C -> 0.
struct DerivationParams {
    Scalar d;
    Scalar d1;
    Scalar g0;

    friend bool operator==(const DerivationParams &, const DerivationParams &) = default;
};

struct ClassifiedDerivation {
    Scalar c1;
    Scalar c2;
    Scalar c3;
    Element inner;

    friend bool operator==(const ClassifiedDerivation &, const ClassifiedDerivation &) = default;
};

/// D1 = (1,0,0), D2 = (0,1,0), D3 = (0,0,1) with zero inner part.
ClassifiedDerivation outer_derivation(int which);

/// (d, d1, g0) corresponds to d1*D1 + d*D2 + g0*D3.
ClassifiedDerivation from_params(const DerivationParams &p);

Element apply_classified(const ClassifiedDerivation &D, const Element &x);

WindowMap window_map(const ClassifiedDerivation &D, const Window &w);

class ClassificationError : public std::runtime_error {
  public:
    ClassificationError(const std::string &what, std::optional<BasisVector> at = std::nullopt)
        : std::runtime_error(what), at_(at) {}
    /// First generator on which the check failed, if any.
    const std::optional<BasisVector> &at() const { return at_; }

  private:
    std::optional<BasisVector> at_;
};

/// Checks D([x,y]) = [D x, y] + [x, D y] for every pair of window generators
/// whose bracket lies inside the window. Empty iff no violation.
std::vector<Violation> leibniz_check(const WindowMap &D);

/// Fits a degree-0 map into span{Y, M} to the form above and verifies it on
/// every window generator.
/// Throws ClassificationError("not degree-0 into S") or
/// ClassificationError("not a derivation of the stated form").
DerivationParams classify_degree0(const WindowMap &D);

/// Splits a windowed derivation into outer coefficients and an inner part.
/// The inner representative has zero M_0 and C coefficients. Requires
/// radius >= 3. Throws ClassificationError("residual not in classified span").
ClassifiedDerivation decompose(const WindowMap &D);

/// Solutions of c1*D1 + c2*D2 + c3*D3 = ad z on the window generators, with z
/// supported inside the window. Returned as a kernel basis.
std::vector<ClassifiedDerivation> outer_relations(const Window &w);

/// Kernel dimension of the linear system for f(Y_n) = sum_k p_k^(n) L_k + c^(n) C
/// (unknowns inside the window) subject to f([L_m, Y_n]) = [L_m, f(Y_n)] for
/// |m|, |n|, |m+n| <= radius. Requires radius >= 2.
std::size_t equivariant_hom_nullity(const Window &w);

} // namespace tsv
