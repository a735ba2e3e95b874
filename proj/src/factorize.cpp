#include "polygauss/factorize.hpp"

#include <algorithm>

#include "polygauss/errors.hpp"

namespace polygauss {

bool is_irreducible(const Poly& f) {
    if (f.is_constant()) throw Error(errc::constant_input, "irreducibility needs deg f >= 1");
    const FieldCtx& ctx = f.ctx();
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        const uint64_t qd = pow_u64_checked(ctx.q(), static_cast<uint32_t>(d));
        for (uint64_t enc = qd; enc < 2 * qd; ++enc) {
            const Poly divisor = poly_from_encoding(ctx, enc);
            if (divrem(f, divisor).remainder.is_zero()) return false;
        }
    }
    return true;
}

std::vector<Poly> enumerate_primes(const FieldCtx& ctx, int max_degree) {
    if (max_degree < 1) throw Error(errc::bad_range, "max_degree must be >= 1");
    std::vector<Poly> primes;
    for (int d = 1; d <= max_degree; ++d)
        for (const Poly& f : enumerate_polys(ctx, d, /*monic_only=*/true))
            if (is_irreducible(f)) primes.push_back(f);
    return primes;
}

Factorization factor(const Poly& f) {
    if (f.is_constant()) throw Error(errc::constant_input, "factorization needs deg f >= 1");
    const FieldCtx& ctx = f.ctx();
    Factorization out{f.leading(), {}};
    Poly work = f.made_monic();
    // Trial division in (degree, encoding) order. Any monic divisor found is
    // irreducible because every smaller-degree divisor was already removed.
    for (int d = 1; 2 * d <= work.degree(); ++d) {
        const uint64_t qd = pow_u64_checked(ctx.q(), static_cast<uint32_t>(d));
        for (uint64_t enc = qd; enc < 2 * qd && 2 * d <= work.degree(); ++enc) {
            const Poly candidate = poly_from_encoding(ctx, enc);
            uint32_t multiplicity = 0;
            for (;;) {
                const DivRem dr = divrem(work, candidate);
                if (!dr.remainder.is_zero()) break;
                work = dr.quotient;
                ++multiplicity;
            }
            if (multiplicity) out.factors.push_back({candidate, multiplicity});
        }
    }
    if (work.degree() >= 1) out.factors.push_back({work, 1});
    std::sort(out.factors.begin(), out.factors.end(), [](const PrimePower& a, const PrimePower& b) {
        if (a.prime.degree() != b.prime.degree()) return a.prime.degree() < b.prime.degree();
        return poly_encoding(a.prime) < poly_encoding(b.prime);
    });
    return out;
}

BigInt euler_phi(const Poly& f) {
    if (f.is_constant())
        throw Error(errc::constant_input, "phi needs deg f >= 1 (zero or constant input)");
    const BigInt q = f.ctx().q();
    BigInt phi = 1;
    for (const PrimePower& pp : factor(f).factors) {
        const unsigned d = static_cast<unsigned>(pp.prime.degree());
        const BigInt qd = boost::multiprecision::pow(q, d);
        phi *= boost::multiprecision::pow(qd, pp.exponent - 1) * (qd - 1);
    }
    return phi;
}

}  // namespace polygauss
