#pragma once

#include <cstdint>
#include <vector>

#include "polygauss/bigint.hpp"
#include "polygauss/poly.hpp"

namespace polygauss {

struct PrimePower {
    Poly prime;  // monic irreducible
    uint32_t exponent;
};

/// Canonical factorization f = unit * prod prime_i^{e_i}, primes pairwise
/// distinct and ordered by (degree, encoding).
struct Factorization {
    FieldElem unit;
    std::vector<PrimePower> factors;

    uint32_t prime_count() const { return static_cast<uint32_t>(factors.size()); }
};

/// True iff f has no nonconstant proper divisor. Trial division by all monic
/// polynomials of degree <= deg f / 2; requires deg f >= 1.
bool is_irreducible(const Poly& f);

/// All monic irreducible polynomials of degree <= max_degree in
/// (degree, encoding) order.
std::vector<Poly> enumerate_primes(const FieldCtx& ctx, int max_degree);

/// Deterministic trial-division factorization; requires deg f >= 1.
Factorization factor(const Poly& f);

/// Order of the unit group of A/fA, computed from the factorization as
/// prod q^{(e_i - 1) deg P_i} (q^{deg P_i} - 1). Requires deg f >= 1.
BigInt euler_phi(const Poly& f);

}  // namespace polygauss
