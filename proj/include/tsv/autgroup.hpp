#pragma once

// Automorphisms in canonical factored form
//
//     xi_{b,c} o eps^i o sigma_u o psi_w o delta_{alpha,beta,gamma}
//
// where the rightmost factor acts first:
//   delta: L_n -> L_n + alpha n Y_n + (alpha^2 n^2 + beta n + gamma) M_n,
//          Y_n -> Y_n + 2 alpha n M_n, M_n -> M_n, C -> C
//   psi_w: L_n -> L_n, Y_n -> w Y_n, M_n -> w^2 M_n, C -> C
//   sigma_u: X_n -> u^n X_n, C -> C
//   eps: X_n -> -X_{-n}, C -> -C
//   xi_{b,c} = exp(ad(sum_j b_j Y_j + sum_k c_k M_k)), j, k != 0

#include "tsv/window_map.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tsv {

/// Finitely supported sequence indexed by nonzero integers.
class FiniteSupportSeq {
  public:
    using Entries = std::map<std::int64_t, Scalar>;

    FiniteSupportSeq() = default;
    FiniteSupportSeq(std::initializer_list<std::pair<const std::int64_t, Scalar>> init);

    const Entries &entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    Scalar get(std::int64_t k) const;
    /// Throws std::invalid_argument for k == 0. Setting zero erases.
    void set(std::int64_t k, const Scalar &v);
    void add(std::int64_t k, const Scalar &v);

    /// Largest |k| in the support, 0 when empty.
    std::int64_t reach() const;

    friend bool operator==(const FiniteSupportSeq &, const FiniteSupportSeq &) = default;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

  private:
    Entries entries_;
};

struct AutomorphismParams {
    FiniteSupportSeq b;
    FiniteSupportSeq c;
    int i = 0;
    Scalar u{1};
    Scalar w{1};
    Scalar alpha;
    Scalar beta;
    Scalar gamma;

    /// Throws std::invalid_argument unless u != 0, w != 0, i in {0, 1}.
    void validate() const;

    /// sum_j b_j Y_j + sum_k c_k M_k
    Element inner_generator() const;

    friend bool operator==(const AutomorphismParams &, const AutomorphismParams &) = default;
};

AutomorphismParams identity();
AutomorphismParams sigma(Scalar u);
AutomorphismParams epsilon();
AutomorphismParams psi(Scalar w);
AutomorphismParams delta(Scalar alpha, Scalar beta, Scalar gamma);
AutomorphismParams xi(FiniteSupportSeq b, FiniteSupportSeq c);

Element apply(const AutomorphismParams &p, const Element &x);

WindowMap window_map(const AutomorphismParams &p, const Window &w);

/// Closed-form group law: apply(compose(p, q), x) = apply(p, apply(q, x)).
AutomorphismParams compose(const AutomorphismParams &p, const AutomorphismParams &q);

/// Closed-form inverse.
AutomorphismParams invert(const AutomorphismParams &p);

class FactorizationError : public std::runtime_error {
  public:
    FactorizationError(const std::string &what, std::optional<BasisVector> at = std::nullopt)
        : std::runtime_error(what), at_(at) {}
    const std::optional<BasisVector> &at() const { return at_; }

  private:
    std::optional<BasisVector> at_;
};

/// Recovers canonical parameters from a windowed automorphism and checks them
/// against every window generator. Requires radius >= 3.
/// Throws FactorizationError("not an automorphism of canonical shape").
AutomorphismParams factorize(const WindowMap &m);

/// m([x,y]) = [m(x), m(y)] for window generator pairs whose bracket stays in
/// the window. Empty iff no violation.
std::vector<Violation> is_automorphism_window(const WindowMap &m);

/// Generator-wise composition: tabulate g -> p(q(g)) on the window, then factorize.
AutomorphismParams compose_oracle(const AutomorphismParams &p, const AutomorphismParams &q,
                                  const Window &w = Window(3));

} // namespace tsv
