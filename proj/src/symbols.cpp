#include "polygauss/symbols.hpp"

#include "polygauss/errors.hpp"
#include "polygauss/factorize.hpp"

namespace polygauss {

SymbolValue::SymbolValue(int value) : value_(value) {
    if (value != 1 && value != -1)
        throw Error(errc::bad_range, "a symbol value is exactly +1 or -1");
}

namespace {

void require_odd_q(const FieldCtx& ctx, const char* what) {
    if (ctx.p() == 2)
        throw Error(errc::even_characteristic, std::string(what) + " requires odd q");
}

// Euler's criterion without the precondition checks; callers guarantee P is
// a monic prime coprime to g.
SymbolValue legendre_unchecked(const Poly& g, const Poly& prime) {
    const Poly r = powmod(g, (norm(prime) - 1) / 2, prime);
    if (r.is_one()) return SymbolValue(1);
    if (r == Poly::minus_one(prime.ctx())) return SymbolValue(-1);
    // Impossible when the preconditions hold; never folded into data.
    throw Error(errc::internal_non_unit, "Euler power is neither +1 nor -1");
}

void require_prime_poly(const Poly& prime, const char* what) {
    if (!prime.is_monic() || !is_irreducible(prime))
        throw Error(errc::not_prime_poly, std::string(what) + " needs a monic irreducible P");
}

}  // namespace

SymbolValue legendre_symbol(const Poly& g, const Poly& prime) {
    require_odd_q(prime.ctx(), "the Legendre symbol");
    require_prime_poly(prime, "the Legendre symbol");
    if (g.is_zero()) throw Error(errc::not_coprime, "the numerator must be nonzero");
    if (!gcd_monic(g, prime).is_one())
        throw Error(errc::not_coprime, "numerator shares a factor with P");
    return legendre_unchecked(g, prime);
}

SymbolValue kronecker_symbol(const Poly& g, const Poly& f) {
    require_odd_q(f.ctx(), "the Kronecker symbol");
    if (f.is_constant())
        throw Error(errc::constant_input, "the Kronecker symbol needs deg f >= 1");
    if (g.is_zero()) throw Error(errc::not_coprime, "the numerator must be nonzero");
    if (!gcd_monic(g, f).is_one())
        throw Error(errc::not_coprime, "numerator shares a factor with f");
    SymbolValue out(1);
    for (const PrimePower& pp : factor(f).factors)
        if (pp.exponent % 2 == 1) out = out * legendre_unchecked(g, pp.prime);
    return out;
}

ReciprocityCheck reciprocity_check(const Poly& f, const Poly& g) {
    require_odd_q(f.ctx(), "reciprocity");
    if (!f.is_monic() || !g.is_monic())
        throw Error(errc::not_monic, "reciprocity is stated for monic polynomials");
    if (f.is_constant() || g.is_constant())
        throw Error(errc::constant_input, "reciprocity needs nonconstant polynomials");
    if (!gcd_monic(f, g).is_one())
        throw Error(errc::not_coprime, "reciprocity needs coprime polynomials");
    const SymbolValue lhs = kronecker_symbol(g, f);
    const bool odd_sign = ((f.ctx().q() - 1) / 2 % 2 == 1) && (f.degree() % 2 == 1) &&
                          (g.degree() % 2 == 1);
    SymbolValue rhs = kronecker_symbol(f, g);
    if (odd_sign) rhs = rhs * SymbolValue(-1);
    return {lhs, rhs, lhs == rhs};
}

BigInt class_number(const Poly& prime) {
    const FieldCtx& ctx = prime.ctx();
    require_odd_q(ctx, "the class number");
    require_prime_poly(prime, "the class number");
    if (prime.degree() % 2 == 0)
        throw Error(errc::even_degree, "h(-P) is defined here for odd deg P only");
    BigInt h = 0;
    for (int n = 0; n < prime.degree(); ++n) {
        const uint64_t qn = pow_u64_checked(ctx.q(), static_cast<uint32_t>(n));
        for (uint64_t enc = qn; enc < 2 * qn; ++enc)
            h += legendre_unchecked(poly_from_encoding(ctx, enc), prime).value();
    }
    if (h <= 0) throw Error(errc::internal_error, "class number must be positive");
    return h;
}

BigInt count_monic_nonresidues(const Poly& prime) {
    const BigInt total = (norm(prime) - 1) / (prime.ctx().q() - 1);  // 1 + q + ... + q^{d-1}
    const BigInt n2 = total - class_number(prime);
    if (n2 % 2 != 0) throw Error(errc::internal_error, "nonresidue count must be integral");
    return n2 / 2;
}

}  // namespace polygauss
