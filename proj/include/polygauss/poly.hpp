#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "polygauss/bigint.hpp"
#include "polygauss/field.hpp"

namespace polygauss {

/// Degree of the zero polynomial. A sentinel far below any real degree, so
/// comparisons behave, but distinct enough that arithmetic on it is a bug
/// you notice.
inline constexpr int deg_neg_inf = std::numeric_limits<int>::min();

/// A canonical polynomial over a FieldCtx: coefficient codes, constant term
/// first, with a nonzero leading coefficient (zero is the empty sequence).
/// Immutable value type; all operations are pure.
class Poly {
  public:
    static Poly zero(const FieldCtx& ctx);
    static Poly one(const FieldCtx& ctx);
    static Poly constant(const FieldCtx& ctx, uint32_t code);
    static Poly minus_one(const FieldCtx& ctx);
    static Poly variable(const FieldCtx& ctx);  // X
    /// Canonicalizes (trims trailing zeros); codes must be < q.
    static Poly from_codes(const FieldCtx& ctx, std::vector<uint32_t> coeffs);

    const FieldCtx& ctx() const { return *ctx_; }
    const std::vector<uint32_t>& codes() const { return coeffs_; }

    int degree() const { return coeffs_.empty() ? deg_neg_inf : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of X^i (zero beyond the degree).
    FieldElem coeff(size_t i) const;
    /// Leading coefficient of a nonzero polynomial; this is the sign sgn(g).
    FieldElem leading() const;

    Poly made_monic() const;  // requires nonzero

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    Poly(const FieldCtx& ctx, std::vector<uint32_t> coeffs);

    const FieldCtx* ctx_;
    std::vector<uint32_t> coeffs_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division: a = q*b + r with r = 0 or deg r < deg b.
DivRem divrem(const Poly& a, const Poly& b);

/// (a*b) reduced mod f. The workhorse of every brute-force product.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f);

/// Monic greatest common divisor; gcd(a, 0) is the monic scaling of a.
Poly gcd_monic(const Poly& a, const Poly& b);

/// g^k mod f by square-and-multiply, reducing at every step. k >= 0,
/// arbitrary precision; f must be nonconstant.
Poly powmod(const Poly& g, const BigInt& k, const Poly& f);

/// |f| = q^{deg f} for nonzero f, 0 for the zero polynomial.
BigInt norm(const Poly& f);

/// Integer encoding sum code(c_i) * q^i; the canonical ordering key.
BigInt poly_encoding(const Poly& f);

/// Inverse of poly_encoding for encodings that fit a machine word.
Poly poly_from_encoding(const FieldCtx& ctx, uint64_t enc);

/// q^d as uint64, throwing too_large on overflow. Encoding-loop bound.
uint64_t pow_u64_checked(uint64_t q, uint32_t d);

/// All polynomials of exactly the given degree, encoding order.
std::vector<Poly> enumerate_polys(const FieldCtx& ctx, int degree, bool monic_only);

/// Text grammar: terms `c*X^k`, `X^k`, or a bare code `c`, joined by `+`,
/// coefficients as element codes in [0, q); or the exact form
/// `coeffs:c0,c1,...,cd` (constant first). Repeated powers accumulate.
Poly parse_poly(std::string_view text, const FieldCtx& ctx);

/// Canonical text: symbolic form, descending powers, zero terms omitted.
std::string format_poly(const Poly& f);

std::ostream& operator<<(std::ostream& os, const Poly& f);

}  // namespace polygauss
