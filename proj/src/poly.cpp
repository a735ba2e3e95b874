#include "polygauss/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "polygauss/errors.hpp"

namespace polygauss {

namespace {

void require_same_ctx(const Poly& a, const Poly& b) {
    if (&a.ctx() != &b.ctx())
        throw Error(errc::ctx_mismatch, "polynomials come from different field contexts");
}

void trim(std::vector<uint32_t>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

Poly::Poly(const FieldCtx& ctx, std::vector<uint32_t> coeffs)
    : ctx_(&ctx), coeffs_(std::move(coeffs)) {}

Poly Poly::zero(const FieldCtx& ctx) { return Poly(ctx, {}); }

Poly Poly::one(const FieldCtx& ctx) { return Poly(ctx, {1}); }

Poly Poly::constant(const FieldCtx& ctx, uint32_t code) {
    if (code >= ctx.q()) throw Error(errc::coefficient_out_of_range, "code >= q");
    if (code == 0) return zero(ctx);
    return Poly(ctx, {code});
}

Poly Poly::minus_one(const FieldCtx& ctx) { return constant(ctx, ctx.neg(1)); }

Poly Poly::variable(const FieldCtx& ctx) { return Poly(ctx, {0, 1}); }

Poly Poly::from_codes(const FieldCtx& ctx, std::vector<uint32_t> coeffs) {
    for (uint32_t c : coeffs)
        if (c >= ctx.q()) throw Error(errc::coefficient_out_of_range, "code >= q");
    trim(coeffs);
    return Poly(ctx, std::move(coeffs));
}

FieldElem Poly::coeff(size_t i) const {
    return FieldElem(*ctx_, i < coeffs_.size() ? coeffs_[i] : 0u);
}

FieldElem Poly::leading() const {
    if (coeffs_.empty()) throw Error(errc::bad_range, "the zero polynomial has no sign");
    return FieldElem(*ctx_, coeffs_.back());
}

Poly Poly::made_monic() const {
    if (coeffs_.empty()) throw Error(errc::bad_range, "cannot normalize the zero polynomial");
    if (coeffs_.back() == 1) return *this;
    const uint32_t scale = ctx_->inv(coeffs_.back());
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = ctx_->mul(coeffs_[i], scale);
    return Poly(*ctx_, std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    const FieldCtx& ctx = a.ctx();
    std::vector<uint32_t> out(std::max(a.codes().size(), b.codes().size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        const uint32_t ca = i < a.codes().size() ? a.codes()[i] : 0;
        const uint32_t cb = i < b.codes().size() ? b.codes()[i] : 0;
        out[i] = ctx.add(ca, cb);
    }
    trim(out);
    return Poly::from_codes(ctx, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = ctx_->neg(coeffs_[i]);
    return Poly(*ctx_, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    const FieldCtx& ctx = a.ctx();
    if (a.is_zero() || b.is_zero()) return Poly::zero(ctx);
    std::vector<uint32_t> out(a.codes().size() + b.codes().size() - 1, 0);
    for (size_t i = 0; i < a.codes().size(); ++i) {
        const uint32_t ca = a.codes()[i];
        if (ca == 0) continue;
        for (size_t j = 0; j < b.codes().size(); ++j)
            out[i + j] = ctx.add(out[i + j], ctx.mul(ca, b.codes()[j]));
    }
    return Poly::from_codes(ctx, std::move(out));
}

DivRem divrem(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    const FieldCtx& ctx = a.ctx();
    if (b.is_zero()) throw Error(errc::division_by_zero, "division by the zero polynomial");
    if (a.is_zero() || a.degree() < b.degree())
        return {Poly::zero(ctx), a};
    const int da = a.degree();
    const int db = b.degree();
    std::vector<uint32_t> rem = a.codes();
    std::vector<uint32_t> quot(static_cast<size_t>(da - db) + 1, 0);
    const uint32_t lead_inv = ctx.inv(b.codes().back());
    for (int i = da; i >= db; --i) {
        const uint32_t c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        const uint32_t factor = ctx.mul(c, lead_inv);
        quot[static_cast<size_t>(i - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            const size_t k = static_cast<size_t>(i - db + j);
            rem[k] = ctx.sub(rem[k], ctx.mul(factor, b.codes()[static_cast<size_t>(j)]));
        }
    }
    return {Poly::from_codes(ctx, std::move(quot)), Poly::from_codes(ctx, std::move(rem))};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& f) {
    return divrem(a * b, f).remainder;
}

Poly gcd_monic(const Poly& a, const Poly& b) {
    require_same_ctx(a, b);
    if (a.is_zero() && b.is_zero())
        throw Error(errc::both_zero, "gcd(0, 0) is undefined");
    // Remainders are renormalized to monic at every step, so prime divisors
    // stay in the monic convention throughout.
    Poly x = a.is_zero() ? a : a.made_monic();
    Poly y = b.is_zero() ? b : b.made_monic();
    while (!y.is_zero()) {
        Poly r = divrem(x, y).remainder;
        if (!r.is_zero()) r = r.made_monic();
        x = y;
        y = r;
    }
    return x;
}

Poly powmod(const Poly& g, const BigInt& k, const Poly& f) {
    if (f.is_constant()) throw Error(errc::bad_modulus_poly, "modulus must be nonconstant");
    if (k < 0) throw Error(errc::bad_range, "exponent must be nonnegative");
    if (k == 0) return Poly::one(g.ctx());
    Poly base = divrem(g, f).remainder;
    Poly acc = base;
    for (int i = static_cast<int>(boost::multiprecision::msb(k)) - 1; i >= 0; --i) {
        acc = mulmod(acc, acc, f);
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(i)))
            acc = mulmod(acc, base, f);
    }
    return acc;
}

BigInt norm(const Poly& f) {
    if (f.is_zero()) return 0;
    return boost::multiprecision::pow(BigInt(f.ctx().q()), static_cast<unsigned>(f.degree()));
}

BigInt poly_encoding(const Poly& f) {
    BigInt enc = 0;
    const BigInt q = f.ctx().q();
    for (size_t i = f.codes().size(); i-- > 0;) enc = enc * q + f.codes()[i];
    return enc;
}

Poly poly_from_encoding(const FieldCtx& ctx, uint64_t enc) {
    std::vector<uint32_t> coeffs;
    while (enc) {
        coeffs.push_back(static_cast<uint32_t>(enc % ctx.q()));
        enc /= ctx.q();
    }
    return Poly::from_codes(ctx, std::move(coeffs));
}

uint64_t pow_u64_checked(uint64_t q, uint32_t d) {
    uint64_t out = 1;
    for (uint32_t i = 0; i < d; ++i) {
        if (out > (uint64_t(1) << 62) / q)
            throw Error(errc::too_large, "q^d does not fit in a machine word");
        out *= q;
    }
    return out;
}

std::vector<Poly> enumerate_polys(const FieldCtx& ctx, int degree, bool monic_only) {
    if (degree < 0) throw Error(errc::bad_range, "degree must be >= 0");
    const uint64_t qd = pow_u64_checked(ctx.q(), static_cast<uint32_t>(degree));
    const uint64_t lo = qd;
    const uint64_t hi =
        monic_only ? 2 * qd : pow_u64_checked(ctx.q(), static_cast<uint32_t>(degree) + 1);
    if (hi - lo > (uint64_t(1) << 22))
        throw Error(errc::too_large, "enumeration would materialize too many polynomials");
    std::vector<Poly> out;
    out.reserve(hi - lo);
    for (uint64_t enc = lo; enc < hi; ++enc) out.push_back(poly_from_encoding(ctx, enc));
    return out;
}

namespace {

struct Scanner {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error(errc::parse_error, msg + " at position " + std::to_string(pos));
    }
    uint64_t integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        uint64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<uint64_t>(text[pos] - '0');
            if (value > (uint64_t(1) << 32)) fail("integer too large");
            ++pos;
        }
        return value;
    }
};

Poly parse_coeff_list(std::string_view body, const FieldCtx& ctx) {
    std::vector<uint32_t> coeffs;
    Scanner sc{body};
    if (sc.eof()) sc.fail("empty coefficient list");
    for (;;) {
        const uint64_t c = sc.integer();
        if (c >= ctx.q())
            throw Error(errc::coefficient_out_of_range,
                        "coefficient code " + std::to_string(c) + " >= q");
        coeffs.push_back(static_cast<uint32_t>(c));
        if (sc.eof()) break;
        if (!sc.accept(',')) sc.fail("expected ','");
    }
    return Poly::from_codes(ctx, std::move(coeffs));
}

}  // namespace

Poly parse_poly(std::string_view text, const FieldCtx& ctx) {
    constexpr std::string_view coeff_prefix = "coeffs:";
    {
        Scanner probe{text};
        probe.skip_ws();
        if (text.substr(probe.pos, coeff_prefix.size()) == coeff_prefix)
            return parse_coeff_list(text.substr(probe.pos + coeff_prefix.size()), ctx);
    }
    Scanner sc{text};
    if (sc.eof()) sc.fail("empty polynomial");
    std::vector<uint32_t> coeffs;
    const auto add_term = [&](uint32_t code, uint64_t power) {
        if (power > 65536) sc.fail("exponent too large");
        if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
        coeffs[power] = ctx.add(coeffs[power], code);
    };
    for (;;) {
        uint32_t code = 1;
        uint64_t power = 0;
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            const uint64_t c = sc.integer();
            if (c >= ctx.q())
                throw Error(errc::coefficient_out_of_range,
                            "coefficient code " + std::to_string(c) + " >= q");
            code = static_cast<uint32_t>(c);
            saw_coeff = true;
        }
        bool saw_var = false;
        if (saw_coeff) {
            if (sc.accept('*')) {
                if (!sc.accept('X')) sc.fail("expected 'X'");
                saw_var = true;
            }
        } else if (sc.accept('X')) {
            saw_var = true;
        } else {
            sc.fail("expected a term");
        }
        if (saw_var) {
            power = 1;
            if (sc.accept('^')) power = sc.integer();
        }
        add_term(code, power);
        if (sc.eof()) break;
        if (!sc.accept('+')) sc.fail("expected '+'");
    }
    return Poly::from_codes(ctx, std::move(coeffs));
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const uint32_t c = f.codes()[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << '*';
            os << 'X';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << format_poly(f); }

}  // namespace polygauss
