#pragma once

#include "polygauss/bigint.hpp"
#include "polygauss/poly.hpp"

namespace polygauss {

/// A residue symbol value, exactly +1 or -1.
class SymbolValue {
  public:
    explicit SymbolValue(int value);

    int value() const { return value_; }

    friend SymbolValue operator*(SymbolValue a, SymbolValue b) {
        return SymbolValue(a.value_ * b.value_);
    }
    friend bool operator==(SymbolValue a, SymbolValue b) { return a.value_ == b.value_; }
    friend bool operator!=(SymbolValue a, SymbolValue b) { return a.value_ != b.value_; }

  private:
    int value_;
};

/// Legendre symbol (g/P) for odd q, monic irreducible P and g coprime to P:
/// the sign of g^{(|P|-1)/2} mod P.
SymbolValue legendre_symbol(const Poly& g, const Poly& prime);

/// Kronecker symbol (g/f): the product of Legendre symbols over the prime
/// factorization of f, with exponent multiplicities. Multiplicative in g.
SymbolValue kronecker_symbol(const Poly& g, const Poly& f);

struct ReciprocityCheck {
    SymbolValue lhs;    // (g/f)
    SymbolValue rhs;    // sign factor times (f/g)
    bool holds;
};

/// Evaluates both sides of the reciprocity law for monic nonconstant coprime
/// f, g over odd q. holds == false would mean a library bug, not new math.
ReciprocityCheck reciprocity_check(const Poly& f, const Poly& g);

/// Class number h(-P) of the imaginary quadratic function field attached to
/// a monic irreducible P of odd degree (q odd): the sum of (g/P) over all
/// monic g with deg g < deg P. Always strictly positive.
BigInt class_number(const Poly& prime);

/// Number of monic quadratic non-residues of degree < deg P modulo P,
/// derived from the class number: ((1 + q + ... + q^{deg P - 1}) - h) / 2.
BigInt count_monic_nonresidues(const Poly& prime);

}  // namespace polygauss
