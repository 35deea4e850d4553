#include "tsv/random.hpp"

namespace tsv {

Rng Rng::for_case(std::uint64_t seed, std::uint64_t index) {
    return Rng(seed * 0x9E3779B97F4A7C15ull + index * 0xBF58476D1CE4E5B9ull + 1);
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

mpq_class small_rational(Rng &rng) {
    mpq_class q(static_cast<long>(rng.uniform(-6, 6)), static_cast<unsigned long>(rng.uniform(1, 4)));
    q.canonicalize();
    return q;
}

BasisVector random_basis(Rng &rng, int reach, bool with_c) {
    auto k = rng.uniform(0, with_c ? 3 : 2);
    if (k == 3)
        return C();
    return {static_cast<Kind>(k), rng.uniform(-reach, reach)};
}

FiniteSupportSeq random_seq(Rng &rng) {
    FiniteSupportSeq s;
    auto count = rng.uniform(0, 2);
    for (std::int64_t t = 0; t < count; ++t) {
        std::int64_t k = rng.uniform(1, 3) * (rng.chance(1, 2) ? 1 : -1);
        s.set(k, random_scalar(rng));
    }
    return s;
}

Scalar small_unit(Rng &rng) {
    for (;;) {
        mpq_class q(static_cast<long>(rng.uniform(-3, 3)), static_cast<unsigned long>(rng.uniform(1, 3)));
        q.canonicalize();
        if (sgn(q) == 0)
            continue;
        if (rng.chance(1, 6))
            return Scalar(q, mpq_class(rng.uniform(-1, 1) == 0 ? 1 : -1));
        return Scalar(q);
    }
}

} // namespace

Scalar random_scalar(Rng &rng) {
    mpq_class re = small_rational(rng);
    if (rng.chance(1, 4))
        return Scalar(re, small_rational(rng));
    return Scalar(re);
}

Scalar random_nonzero_scalar(Rng &rng) {
    for (;;) {
        Scalar s = random_scalar(rng);
        if (!s.is_zero())
            return s;
    }
}

Element random_element(Rng &rng, int reach, int max_terms) {
    Element x;
    auto count = rng.uniform(0, max_terms);
    for (std::int64_t t = 0; t < count; ++t)
        x.add(random_basis(rng, reach, true), random_nonzero_scalar(rng));
    return x;
}

Element random_radical_element(Rng &rng, int reach, int max_terms) {
    Element x;
    auto count = rng.uniform(1, max_terms);
    for (std::int64_t t = 0; t < count; ++t)
        x.add(BasisVector{rng.chance(1, 2) ? Kind::Y : Kind::M, rng.uniform(-reach, reach)},
              random_nonzero_scalar(rng));
    return x;
}

AutomorphismParams random_params(Rng &rng) {
    AutomorphismParams p;
    p.b = random_seq(rng);
    p.c = random_seq(rng);
    p.i = static_cast<int>(rng.uniform(0, 1));
    p.u = small_unit(rng);
    p.w = small_unit(rng);
    p.alpha = random_scalar(rng);
    p.beta = random_scalar(rng);
    p.gamma = random_scalar(rng);
    return p;
}

ClassifiedDerivation random_classified(Rng &rng, int reach) {
    ClassifiedDerivation d;
    d.c1 = random_scalar(rng);
    d.c2 = random_scalar(rng);
    d.c3 = random_scalar(rng);
    d.inner = random_element(rng, reach, 4);
    return d;
}

DerivationParams random_derivation_params(Rng &rng) {
    return {random_scalar(rng), random_scalar(rng), random_scalar(rng)};
}

} // namespace tsv
