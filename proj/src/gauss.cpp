#include "polygauss/gauss.hpp"

#include <algorithm>
#include <sstream>

#include "polygauss/errors.hpp"
#include "polygauss/symbols.hpp"

namespace polygauss {

namespace {

void require_odd_q(const FieldCtx& ctx, const char* what) {
    if (ctx.p() == 2)
        throw Error(errc::even_characteristic, std::string(what) + " requires odd q");
}

void require_nonconstant(const Poly& f, const char* what) {
    if (f.is_constant())
        throw Error(errc::constant_input, std::string(what) + " needs deg f >= 1");
}

bool coprime(const Poly& a, const Poly& b) { return gcd_monic(a, b).is_one(); }

// Parity of an integer that may be negative (cpp_int % keeps the sign).
int parity(const BigInt& x) { return static_cast<int>((x % 2 + 2) % 2); }

}  // namespace

HalfSystem::HalfSystem(const FieldCtx& ctx, std::vector<uint32_t> members)
    : ctx_(&ctx), members_(std::move(members)) {}

HalfSystem HalfSystem::make(const FieldCtx& ctx, std::vector<uint32_t> members) {
    require_odd_q(ctx, "a half-system");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.size() != (ctx.q() - 1) / 2)
        throw Error(errc::bad_half_system, "a half-system has exactly (q-1)/2 distinct members");
    for (uint32_t m : members) {
        if (m == 0 || m >= ctx.q())
            throw Error(errc::bad_half_system, "members must be nonzero element codes");
        if (std::binary_search(members.begin(), members.end(), ctx.neg(m)))
            throw Error(errc::bad_half_system, "a half-system never contains both a and -a");
    }
    return HalfSystem(ctx, std::move(members));
}

bool HalfSystem::contains(uint32_t code) const {
    return std::binary_search(members_.begin(), members_.end(), code);
}

std::string HalfSystem::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < members_.size(); ++i) {
        if (i) os << ',';
        os << members_[i];
    }
    return os.str();
}

std::vector<HalfSystem> enumerate_half_systems(const FieldCtx& ctx) {
    require_odd_q(ctx, "half-system enumeration");
    const uint32_t k = (ctx.q() - 1) / 2;
    if (k > 24)
        throw Error(errc::too_large, "2^{(q-1)/2} half-systems is beyond enumeration");
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    for (uint32_t c = 1; c < ctx.q(); ++c) {
        const uint32_t n = ctx.neg(c);
        if (c < n) pairs.emplace_back(c, n);
    }
    std::vector<std::vector<uint32_t>> all;
    all.reserve(uint64_t(1) << k);
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
        std::vector<uint32_t> members(k);
        for (uint32_t i = 0; i < k; ++i)
            members[i] = (mask >> i) & 1 ? pairs[i].second : pairs[i].first;
        std::sort(members.begin(), members.end());
        all.push_back(std::move(members));
    }
    std::sort(all.begin(), all.end());
    std::vector<HalfSystem> out;
    out.reserve(all.size());
    for (auto& members : all) out.push_back(HalfSystem::make(ctx, std::move(members)));
    return out;
}

FieldElem half_system_product(const HalfSystem& s) {
    const FieldCtx& ctx = s.ctx();
    uint32_t acc = 1;
    for (uint32_t m : s.members()) acc = ctx.mul(acc, m);
    return FieldElem(ctx, acc);
}

Poly gauss_factorial(const Poly& f) {
    const FieldCtx& ctx = f.ctx();
    if (f.degree() < 1) return Poly::one(ctx);  // G = 1 on F_q by convention
    const uint64_t bound = pow_u64_checked(ctx.q(), static_cast<uint32_t>(f.degree()));
    Poly acc = Poly::one(ctx);
    for (uint64_t enc = 1; enc < bound; ++enc) {
        const Poly g = poly_from_encoding(ctx, enc);
        if (coprime(g, f)) acc = mulmod(acc, g, f);
    }
    return acc;
}

Poly gauss_factorial_upto(int n, const Poly& f) {
    require_nonconstant(f, "G(n, f)");
    if (n < 0) throw Error(errc::bad_range, "n must be >= 0");
    const FieldCtx& ctx = f.ctx();
    const uint64_t bound = pow_u64_checked(ctx.q(), static_cast<uint32_t>(n) + 1);
    Poly acc = Poly::one(ctx);
    for (uint64_t enc = 1; enc < bound; ++enc) {
        const Poly g = poly_from_encoding(ctx, enc);
        if (coprime(g, f)) acc = mulmod(acc, g, f);
    }
    return acc;
}

Poly predict_gauss_factorial(const Poly& f) {
    require_nonconstant(f, "the G(f) closed form");
    const FieldCtx& ctx = f.ctx();
    const Factorization fac = factor(f);
    if (ctx.p() != 2)
        return fac.prime_count() == 1 ? Poly::minus_one(ctx) : Poly::one(ctx);
    if (ctx.q() == 2) {
        // The exceptional branch needs exactly one exponent above 1, sitting
        // on a degree-1 prime with exponent 2 or 3.
        const PrimePower* special = nullptr;
        bool others_flat = true;
        for (const PrimePower& pp : fac.factors) {
            if (pp.exponent == 1) continue;
            if (special) others_flat = false;
            special = &pp;
        }
        if (special && others_flat && special->prime.degree() == 1 &&
            (special->exponent == 2 || special->exponent == 3))
            return divrem(f, special->prime).quotient + Poly::one(ctx);
    }
    return Poly::one(ctx);
}

Poly predict_gauss_factorial_upto(int n, const Poly& f) {
    require_nonconstant(f, "the G(n, f) closed form");
    if (n < f.degree())
        throw Error(errc::bad_range, "the closed form covers n >= deg f only");
    const FieldCtx& ctx = f.ctx();
    if (ctx.p() != 2 && factor(f).prime_count() == 1) return Poly::minus_one(ctx);
    return Poly::one(ctx);
}

Poly monic_half_product(const Poly& f) {
    require_odd_q(f.ctx(), "M(f)");
    require_nonconstant(f, "M(f)");
    const FieldCtx& ctx = f.ctx();
    Poly acc = Poly::one(ctx);
    for (int d = 0; d < f.degree(); ++d) {
        const uint64_t qd = pow_u64_checked(ctx.q(), static_cast<uint32_t>(d));
        for (uint64_t enc = qd; enc < 2 * qd; ++enc) {
            const Poly g = poly_from_encoding(ctx, enc);
            if (coprime(g, f)) acc = mulmod(acc, g, f);
        }
    }
    return powmod(acc, BigInt(ctx.q() - 1) / 2, f);
}

Poly gauss_half(const Poly& f, const HalfSystem& s) {
    require_odd_q(f.ctx(), "G(f, S)");
    require_nonconstant(f, "G(f, S)");
    if (&f.ctx() != &s.ctx())
        throw Error(errc::ctx_mismatch, "f and S come from different field contexts");
    const FieldCtx& ctx = f.ctx();
    const uint64_t bound = pow_u64_checked(ctx.q(), static_cast<uint32_t>(f.degree()));
    Poly acc = Poly::one(ctx);
    for (uint64_t enc = 1; enc < bound; ++enc) {
        const Poly g = poly_from_encoding(ctx, enc);
        if (!s.contains(g.leading().code())) continue;
        if (coprime(g, f)) acc = mulmod(acc, g, f);
    }
    return acc;
}

Poly gauss_half_via_monic(const Poly& f, const HalfSystem& s) {
    require_odd_q(f.ctx(), "G(f, S)");
    require_nonconstant(f, "G(f, S)");
    if (&f.ctx() != &s.ctx())
        throw Error(errc::ctx_mismatch, "f and S come from different field contexts");
    const FieldCtx& ctx = f.ctx();
    const BigInt phi = euler_phi(f);
    if (phi % (ctx.q() - 1) != 0)
        throw Error(errc::internal_error, "Phi(f) must be divisible by q-1");
    const uint32_t scale = ctx.pow(half_system_product(s).code(), phi / (ctx.q() - 1));
    return divrem(Poly::constant(ctx, scale) * monic_half_product(f), f).remainder;
}

BigInt multiplicative_order(const Poly& g, const Poly& f) {
    require_nonconstant(f, "the multiplicative order");
    const Poly r = divrem(g, f).remainder;
    if (r.is_zero() || !coprime(r, f))
        throw Error(errc::not_coprime, "order is defined for units mod f only");
    const BigInt bound = euler_phi(f);
    Poly x = r;
    BigInt k = 1;
    while (!x.is_one()) {
        x = mulmod(x, r, f);
        ++k;
        if (k > bound) throw Error(errc::internal_error, "order exceeded Phi(f)");
    }
    return k;
}

BigInt count_monic_coprime(int n, const Poly& f) {
    require_nonconstant(f, "the monic coprime count");
    if (n < 0) throw Error(errc::bad_range, "n must be >= 0");
    const FieldCtx& ctx = f.ctx();
    const uint64_t qn = pow_u64_checked(ctx.q(), static_cast<uint32_t>(n));
    BigInt count = 0;
    for (uint64_t enc = qn; enc < 2 * qn; ++enc)
        if (coprime(poly_from_encoding(ctx, enc), f)) ++count;
    return count;
}

LiftSign lift_sign(const Poly& x, const Poly& g, uint32_t e) {
    require_odd_q(x.ctx(), "sign lifting");
    if (g.is_constant()) throw Error(errc::bad_modulus_poly, "g must be nonconstant");
    if (e < 1) throw Error(errc::bad_range, "e must be >= 1");
    Poly ge = g;
    for (uint32_t i = 1; i < e; ++i) ge = ge * g;
    if (!mulmod(x, x, ge).is_one())
        throw Error(errc::precondition_square_not_one, "x^2 must be 1 mod g^e");
    const Poly r = divrem(x, g).remainder;
    if (r.is_one()) return LiftSign::plus_one;
    if (r == Poly::minus_one(x.ctx())) return LiftSign::minus_one;
    return LiftSign::not_plus_minus_one;
}

OrderClassification classify_order(const Poly& f, const HalfSystem& s) {
    require_odd_q(f.ctx(), "the order classification");
    require_nonconstant(f, "the order classification");
    if (&f.ctx() != &s.ctx())
        throw Error(errc::ctx_mismatch, "f and S come from different field contexts");
    const FieldCtx& ctx = f.ctx();
    const Factorization fac = factor(f);

    OrderWitness w;
    w.t = fac.prime_count();
    w.q_mod_4 = ctx.q() % 4;
    for (const PrimePower& pp : fac.factors) w.prime_degrees.push_back(pp.prime.degree());
    w.delta_code = half_system_product(s).code();
    w.e1 = fac.factors.front().exponent;

    const bool d1_odd = w.prime_degrees[0] % 2 == 1;
    if (w.t == 1) {
        if (w.q_mod_4 == 1 || !d1_odd) return {4, "1", w};
        // q = 3 (mod 4), odd degree: the residue is a sign times delta(S).
        const BigInt h = class_number(fac.factors[0].prime);
        w.class_number_p1 = h;
        const int exp_parity = parity(BigInt(w.e1) + (h - 3) / 2);
        const bool delta_plus = w.delta_code == 1;
        const bool delta_minus = w.delta_code == ctx.neg(1);
        if (delta_plus && exp_parity == 1) return {2, "2a", w};
        if (delta_minus && exp_parity == 0) return {2, "2b", w};
        return {1, "3", w};
    }
    if (w.t == 2) {
        const bool both_even = w.prime_degrees[0] % 2 == 0 && w.prime_degrees[1] % 2 == 0;
        if (w.q_mod_4 == 3 && !both_even) return {2, "2e", w};
        // (P1/P2) = (P2/P1) in the remaining branches, so the canonical
        // factor order is label-independent here.
        const SymbolValue sym = legendre_symbol(fac.factors[0].prime, fac.factors[1].prime);
        w.p1_symbol_p2 = sym.value();
        if (sym.value() == -1) return {2, w.q_mod_4 == 1 ? "2c" : "2d", w};
        return {1, "3", w};
    }
    return {1, "3", w};
}

const char* constraint_name(ConstraintTag tag) {
    switch (tag) {
        case ConstraintTag::square_is_minus_one: return "SQUARE_IS_MINUS_ONE";
        case ConstraintTag::not_plus_minus_one_square_one: return "NOT_PLUS_MINUS_ONE_SQUARE_ONE";
    }
    return "unknown";
}

HalfValuePrediction predict_half_value(const Poly& f, const HalfSystem& s) {
    require_odd_q(f.ctx(), "the G(f, S) prediction");
    require_nonconstant(f, "the G(f, S) prediction");
    if (&f.ctx() != &s.ctx())
        throw Error(errc::ctx_mismatch, "f and S come from different field contexts");
    const FieldCtx& ctx = f.ctx();
    const Factorization fac = factor(f);
    const uint32_t t = fac.prime_count();

    if (t >= 3) return Poly::one(ctx);
    if (t == 2) {
        const bool both_even =
            fac.factors[0].prime.degree() % 2 == 0 && fac.factors[1].prime.degree() % 2 == 0;
        if (ctx.q() % 4 == 1 || both_even) {
            const SymbolValue sym =
                legendre_symbol(fac.factors[0].prime, fac.factors[1].prime);
            return sym.value() == 1 ? Poly::one(ctx) : Poly::minus_one(ctx);
        }
        return ConstraintTag::not_plus_minus_one_square_one;
    }
    const int d1 = fac.factors[0].prime.degree();
    if (ctx.q() % 4 == 3 && d1 % 2 == 1) {
        const BigInt h = class_number(fac.factors[0].prime);
        const int sign = parity(BigInt(fac.factors[0].exponent) + (h - 3) / 2);
        uint32_t value = half_system_product(s).code();
        if (sign == 1) value = ctx.neg(value);
        return Poly::constant(ctx, value);
    }
    return ConstraintTag::square_is_minus_one;
}

const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::con1: return "con1";
        case Theorem::con2: return "con2";
        case Theorem::con3: return "con3";
        case Theorem::extension: return "extension";
        case Theorem::half_value: return "half_value";
        case Theorem::gpe: return "gpe";
        case Theorem::p1p2: return "p1p2";
        case Theorem::p1p2p3: return "p1p2p3";
    }
    return "unknown";
}

std::optional<Theorem> theorem_from_name(std::string_view name) {
    for (Theorem t : {Theorem::con1, Theorem::con2, Theorem::con3, Theorem::extension,
                      Theorem::half_value, Theorem::gpe, Theorem::p1p2, Theorem::p1p2p3})
        if (name == theorem_name(t)) return t;
    return std::nullopt;
}

bool theorem_needs_half_system(Theorem t) {
    switch (t) {
        case Theorem::con1:
        case Theorem::con2:
        case Theorem::con3: return false;
        default: return true;
    }
}

void check_theorem_field(Theorem t, const FieldCtx& ctx) {
    switch (t) {
        case Theorem::con1:
            if (ctx.p() == 2)
                throw Error(errc::even_characteristic, "con1 requires odd characteristic");
            break;
        case Theorem::con2:
            if (ctx.p() != 2)
                throw Error(errc::odd_characteristic, "con2 requires characteristic 2");
            break;
        case Theorem::con3: break;
        case Theorem::gpe:
            require_odd_q(ctx, "gpe");
            if (ctx.q() % 4 != 3) throw Error(errc::bad_range, "gpe requires q = 3 (mod 4)");
            break;
        default: require_odd_q(ctx, theorem_name(t));
    }
}

bool theorem_applies_to(Theorem t, const Factorization& fac) {
    switch (t) {
        case Theorem::gpe:
            return fac.prime_count() == 1 && fac.factors[0].prime.degree() % 2 == 1;
        case Theorem::p1p2: return fac.prime_count() == 2;
        case Theorem::p1p2p3: return fac.prime_count() >= 3;
        default: return true;
    }
}

namespace {

bool satisfies_constraint(const Poly& value, ConstraintTag tag, const Poly& f) {
    const Poly square = mulmod(value, value, f);
    switch (tag) {
        case ConstraintTag::square_is_minus_one:
            return square == divrem(Poly::minus_one(f.ctx()), f).remainder;
        case ConstraintTag::not_plus_minus_one_square_one:
            return square.is_one() && !value.is_one() &&
                   value != divrem(Poly::minus_one(f.ctx()), f).remainder;
    }
    return false;
}

}  // namespace

VerdictRecord verify_instance(const Poly& f, const std::optional<HalfSystem>& s, Theorem t) {
    const FieldCtx& ctx = f.ctx();
    check_theorem_field(t, ctx);
    if (theorem_needs_half_system(t) && !s)
        throw Error(errc::bad_range,
                    std::string(theorem_name(t)) + " needs a half-system argument");
    require_nonconstant(f, "theorem verification");
    const Factorization fac = factor(f);
    if (!theorem_applies_to(t, fac))
        throw Error(errc::bad_range,
                    std::string(theorem_name(t)) + " does not cover this factorization shape");

    VerdictRecord row;
    row.field_spec = ctx.spec_string();
    row.q = ctx.q();
    row.f_text = format_poly(f);
    row.f_encoding = poly_encoding(f);
    if (s && theorem_needs_half_system(t)) {
        row.s_text = s->to_string();
        row.s_members = s->members();
    }
    row.theorem = theorem_name(t);

    switch (t) {
        case Theorem::con1:
        case Theorem::con2: {
            const Poly brute = gauss_factorial(f);
            const Poly predicted = predict_gauss_factorial(f);
            row.brute = format_poly(brute);
            row.predicted = format_poly(predicted);
            row.matches = brute == predicted;
            break;
        }
        case Theorem::con3: {
            // n sweeps a window over the theorem's range; the closed form and
            // the G(f)^{q^{n+1-deg f}} identity must both hold at every n.
            const Poly predicted = predict_gauss_factorial_upto(f.degree(), f);
            const Poly base = gauss_factorial(f);
            bool all = true;
            std::ostringstream brute_text;
            for (int n = f.degree(); n <= f.degree() + 2; ++n) {
                const Poly brute = gauss_factorial_upto(n, f);
                const BigInt e = boost::multiprecision::pow(
                    BigInt(ctx.q()), static_cast<unsigned>(n + 1 - f.degree()));
                if (n > f.degree()) brute_text << ';';
                brute_text << format_poly(brute);
                all = all && brute == predicted && brute == powmod(base, e, f);
            }
            row.brute = brute_text.str();
            row.predicted = format_poly(predicted);
            row.matches = all;
            break;
        }
        case Theorem::extension: {
            const BigInt brute_order = multiplicative_order(gauss_half(f, *s), f);
            const OrderClassification cls = classify_order(f, *s);
            row.brute = brute_order.str();
            row.predicted = std::to_string(cls.order);
            row.order = cls.order;
            row.clause = cls.clause;
            row.matches = brute_order == cls.order;
            break;
        }
        case Theorem::half_value:
        case Theorem::gpe:
        case Theorem::p1p2:
        case Theorem::p1p2p3: {
            const Poly brute = gauss_half(f, *s);
            const HalfValuePrediction pred = predict_half_value(f, *s);
            row.brute = format_poly(brute);
            if (const Poly* residue = std::get_if<Poly>(&pred)) {
                row.predicted = format_poly(*residue);
                row.matches = brute == *residue;
            } else {
                const ConstraintTag tag = std::get<ConstraintTag>(pred);
                row.predicted = constraint_name(tag);
                row.matches = satisfies_constraint(brute, tag, f);
            }
            break;
        }
    }
    return row;
}

}  // namespace polygauss
