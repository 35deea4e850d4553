#pragma once

// Seeded generators for randomized checks. The engine is std::mt19937_64,
// whose output sequence is fixed by the standard; ranges are reduced by
// modulo so results do not depend on the standard library's distributions.

#include "tsv/autgroup.hpp"
#include "tsv/derivations.hpp"

#include <cstdint>
#include <random>

namespace tsv {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Independent stream for case number `index` of a run seeded with `seed`.
    static Rng for_case(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return gen_(); }
    /// Uniform-ish integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

  private:
    std::mt19937_64 gen_;
};

/// Small rational, complex with probability 1/4.
Scalar random_scalar(Rng &rng);
Scalar random_nonzero_scalar(Rng &rng);
/// Up to `max_terms` terms with |index| <= reach, including C.
Element random_element(Rng &rng, int reach, int max_terms);
/// Element of span{Y_j, M_k}.
Element random_radical_element(Rng &rng, int reach, int max_terms);
AutomorphismParams random_params(Rng &rng);
ClassifiedDerivation random_classified(Rng &rng, int reach);
DerivationParams random_derivation_params(Rng &rng);

} // namespace tsv
