#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polygauss/bigint.hpp"
#include "polygauss/factorize.hpp"
#include "polygauss/poly.hpp"

namespace polygauss {

/// A half-system: one element chosen from each pair {a, -a} of F_q^*, so
/// |S| = (q-1)/2 and S never contains both a and -a. Requires odd q.
/// Degenerate input is rejected at construction, never repaired.
class HalfSystem {
  public:
    static HalfSystem make(const FieldCtx& ctx, std::vector<uint32_t> members);

    const FieldCtx& ctx() const { return *ctx_; }
    const std::vector<uint32_t>& members() const { return members_; }  // sorted codes
    bool contains(uint32_t code) const;
    std::string to_string() const;  // "1,2"

  private:
    HalfSystem(const FieldCtx& ctx, std::vector<uint32_t> members);

    const FieldCtx* ctx_;
    std::vector<uint32_t> members_;
};

/// All 2^{(q-1)/2} half-systems, ordered lexicographically by their sorted
/// member codes.
std::vector<HalfSystem> enumerate_half_systems(const FieldCtx& ctx);

/// delta(S): the field product of the members of S. Its square is
/// (-1)^{(q+1)/2}, so it is +-1 exactly when q = 3 (mod 4).
FieldElem half_system_product(const HalfSystem& s);

/// G(f): product of all nonzero g with deg g < deg f and gcd(g, f) = 1,
/// reduced mod f after every factor. Constants give 1 by convention.
Poly gauss_factorial(const Poly& f);

/// G(n, f): the same product over all nonzero coprime g with deg g <= n.
Poly gauss_factorial_upto(int n, const Poly& f);

/// Closed form for G(f): for odd p, -1 when f has a single prime divisor and
/// 1 otherwise; in characteristic 2, f/P + 1 in the one branch (q = 2, a
/// degree-1 prime P with exponent 2 or 3, every other exponent 1) and 1
/// otherwise.
Poly predict_gauss_factorial(const Poly& f);

/// Closed form for G(n, f) with n >= deg f: -1 when p is odd and f has one
/// prime divisor, else 1. n < deg f is out of the theorem's range.
Poly predict_gauss_factorial_upto(int n, const Poly& f);

/// M(f): the product of all monic coprime g with deg g < deg f, raised to
/// the power (q-1)/2 and reduced mod f. Requires odd q.
Poly monic_half_product(const Poly& f);

/// G(f, S): the Gauss factorial restricted to g with sgn(g) in S.
Poly gauss_half(const Poly& f, const HalfSystem& s);

/// G(f, S) by the algebraic route delta(S)^{Phi(f)/(q-1)} * M(f); must agree
/// with gauss_half everywhere.
Poly gauss_half_via_monic(const Poly& f, const HalfSystem& s);

/// Least k >= 1 with g^k = 1 mod f; requires gcd(g, f) = 1.
BigInt multiplicative_order(const Poly& g, const Poly& f);

/// i_n: number of monic g of degree exactly n with gcd(g, f) = 1. Summed
/// over n < deg f this is Phi(f)/(q-1).
BigInt count_monic_coprime(int n, const Poly& f);

enum class LiftSign { plus_one, minus_one, not_plus_minus_one };

/// Given x with x^2 = 1 mod g^e, decides x = +-1 mod g^e by looking only
/// mod g (the signs correspond), or reports that x is neither.
LiftSign lift_sign(const Poly& x, const Poly& g, uint32_t e);

/// Inputs the order classification consulted, kept for reporting.
struct OrderWitness {
    uint32_t t = 0;
    uint32_t q_mod_4 = 0;
    std::vector<int> prime_degrees;            // canonical factor order
    uint32_t delta_code = 0;
    uint32_t e1 = 0;
    std::optional<BigInt> class_number_p1;     // when consulted
    std::optional<int> p1_symbol_p2;           // (P1/P2), when consulted
};

struct OrderClassification {
    int order;            // 1, 2 or 4
    std::string clause;   // "1", "2a".."2e", "3"
    OrderWitness witness;
};

/// The complete classification of ord_f G(f, S) by the shape of f's
/// factorization, q mod 4, degree parities, delta(S), the class number
/// h(-P1) and the symbol (P1/P2). Exactly one clause fires.
OrderClassification classify_order(const Poly& f, const HalfSystem& s);

/// The two branches where G(f, S) mod f has no closed-form residue, only a
/// proved constraint on it.
enum class ConstraintTag { square_is_minus_one, not_plus_minus_one_square_one };

const char* constraint_name(ConstraintTag tag);

using HalfValuePrediction = std::variant<Poly, ConstraintTag>;

/// Exact residue of G(f, S) mod f where one is proved (t >= 3 gives 1; t = 2
/// with q = 1 (mod 4) or two even degrees gives the constant (P1/P2); t = 1
/// with q = 3 (mod 4) and odd degree gives (-1)^{e1 + (h(-P1)-3)/2} delta(S));
/// otherwise the constraint the brute value must satisfy.
HalfValuePrediction predict_half_value(const Poly& f, const HalfSystem& s);

enum class Theorem { con1, con2, con3, extension, half_value, gpe, p1p2, p1p2p3 };

const char* theorem_name(Theorem t);
std::optional<Theorem> theorem_from_name(std::string_view name);
bool theorem_needs_half_system(Theorem t);

/// Throws when the field's characteristic rules the theorem out wholesale
/// (e.g. the half-system theorems need odd q).
void check_theorem_field(Theorem t, const FieldCtx& ctx);

/// Per-instance hypothesis filter (e.g. gpe covers only t = 1 with odd
/// prime degree). Sweeps skip instances this rejects.
bool theorem_applies_to(Theorem t, const Factorization& fac);

/// One sweep row: a brute-force value next to a theorem prediction.
struct VerdictRecord {
    std::string field_spec;
    uint32_t q = 0;
    std::string f_text;
    BigInt f_encoding;                  // sort key, not serialized
    std::string s_text;                 // empty when the theorem has no S
    std::vector<uint32_t> s_members;    // sort key
    std::string theorem;
    std::string brute;
    std::string predicted;
    bool matches = false;
    std::optional<int> order;           // extension rows
    std::optional<std::string> clause;  // extension rows
};

/// Runs one (f, S, theorem) instance: brute force on one side, the theorem's
/// prediction on the other, compared exactly (or as constraint satisfaction
/// for the tag branches).
VerdictRecord verify_instance(const Poly& f, const std::optional<HalfSystem>& s, Theorem t);

}  // namespace polygauss
