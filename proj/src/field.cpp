#include "polygauss/field.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "polygauss/errors.hpp"

namespace polygauss {

namespace {

constexpr uint32_t lut_threshold = 256;

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense coefficient vectors over F_p, constant term first, used only for
// modulus validation and the default-modulus search.
int fp_deg(const std::vector<uint32_t>& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

uint32_t fp_pow(uint32_t base, uint32_t e, uint32_t p) {
    uint64_t acc = 1, b = base % p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

// Remainder of a by monic-or-not b (b nonzero), coefficients mod p.
std::vector<uint32_t> fp_rem(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    const int db = fp_deg(b);
    const uint32_t lead_inv = fp_pow(b[static_cast<size_t>(db)], p - 2, p);
    for (int i = fp_deg(a); i >= db; --i) {
        const uint64_t c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        const uint64_t factor = c * lead_inv % p;
        for (int j = 0; j <= db; ++j) {
            const size_t k = static_cast<size_t>(i - db + j);
            const uint64_t sub = factor * b[static_cast<size_t>(j)] % p;
            a[k] = static_cast<uint32_t>((a[k] + p - sub) % p);
        }
    }
    return a;
}

// Trial division by every monic polynomial of degree <= deg f / 2.
bool fp_is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    const int deg = fp_deg(f);
    for (int d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (uint64_t k = 0; k < count; ++k) {
            std::vector<uint32_t> div(static_cast<size_t>(d) + 1, 0);
            uint64_t rest = k;
            for (int i = 0; i < d; ++i) {
                div[static_cast<size_t>(i)] = static_cast<uint32_t>(rest % p);
                rest /= p;
            }
            div[static_cast<size_t>(d)] = 1;
            if (fp_deg(fp_rem(f, div, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<uint32_t> find_default_modulus(uint32_t p, uint32_t s) {
    if (!is_prime_u32(p)) throw Error(errc::not_prime, std::to_string(p) + " is not prime");
    if (s < 2) throw Error(errc::bad_range, "default modulus search needs s >= 2");
    uint64_t count = 1;
    for (uint32_t i = 0; i < s; ++i) {
        count *= p;
        if (count > FieldCtx::max_q) throw Error(errc::too_large, "q = p^s exceeds 2^16");
    }
    for (uint64_t k = 0; k < count; ++k) {
        std::vector<uint32_t> cand(s + 1, 0);
        uint64_t rest = k;
        for (uint32_t i = 0; i < s; ++i) {
            cand[i] = static_cast<uint32_t>(rest % p);
            rest /= p;
        }
        cand[s] = 1;
        if (fp_is_irreducible(cand, p)) return cand;
    }
    throw Error(errc::internal_error, "no irreducible polynomial found");  // unreachable
}

FieldCtx::FieldCtx(uint32_t p, uint32_t s, std::vector<uint32_t> modulus, bool defaulted)
    : p_(p), s_(s), modulus_(std::move(modulus)), modulus_is_default_(defaulted) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < s_; ++i) q *= p_;
    q_ = static_cast<uint32_t>(q);
    if (q_ <= lut_threshold) {
        mul_lut_.resize(static_cast<size_t>(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b <= a; ++b) {
                const uint16_t v = static_cast<uint16_t>(mul_direct(a, b));
                mul_lut_[static_cast<size_t>(a) * q_ + b] = v;
                mul_lut_[static_cast<size_t>(b) * q_ + a] = v;
            }
        inv_lut_.assign(q_, 0);
        for (uint32_t a = 1; a < q_; ++a)
            inv_lut_[a] = static_cast<uint16_t>(pow_u64(a, q_ - 2));
    }
}

std::shared_ptr<const FieldCtx> FieldCtx::make(
    uint32_t p, uint32_t s, const std::optional<std::vector<uint32_t>>& modulus) {
    if (!is_prime_u32(p)) throw Error(errc::not_prime, std::to_string(p) + " is not prime");
    if (s < 1) throw Error(errc::bad_range, "s must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < s; ++i) {
        q *= p;
        if (q > max_q) throw Error(errc::too_large, "q = p^s exceeds 2^16");
    }
    if (s == 1) {
        if (modulus) throw Error(errc::bad_modulus, "prime fields take no modulus");
        return std::shared_ptr<const FieldCtx>(new FieldCtx(p, s, {}, false));
    }
    std::vector<uint32_t> mod;
    bool defaulted = false;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != static_cast<size_t>(s) + 1)
            throw Error(errc::bad_modulus, "modulus must have degree s");
        for (uint32_t c : mod)
            if (c >= p) throw Error(errc::bad_modulus, "modulus coefficient out of range");
        if (mod.back() != 1) throw Error(errc::bad_modulus, "modulus must be monic");
        if (!fp_is_irreducible(mod, p))
            throw Error(errc::bad_modulus, "modulus is reducible over F_p");
        defaulted = (mod == find_default_modulus(p, s));
    } else {
        mod = find_default_modulus(p, s);
        defaulted = true;
    }
    return std::shared_ptr<const FieldCtx>(new FieldCtx(p, s, std::move(mod), defaulted));
}

uint32_t FieldCtx::add(uint32_t a, uint32_t b) const {
    if (s_ == 1) return (a + b) % p_;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t FieldCtx::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldCtx::neg(uint32_t a) const {
    if (s_ == 1) return a == 0 ? 0 : p_ - a;
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        const uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t FieldCtx::mul_direct(uint32_t a, uint32_t b) const {
    if (s_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    std::array<uint32_t, 32> prod{};  // s <= 16, so 2s-1 <= 31
    std::array<uint32_t, 16> da{}, db{};
    for (uint32_t i = 0; i < s_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    for (uint32_t i = 0; i < s_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < s_; ++j)
            prod[i + j] = static_cast<uint32_t>(
                (prod[i + j] + static_cast<uint64_t>(da[i]) * db[j]) % p_);
    }
    // Reduce by the monic modulus.
    for (uint32_t i = 2 * s_ - 2; i >= s_; --i) {
        const uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (uint32_t j = 0; j < s_; ++j) {
            const uint64_t sub = c * modulus_[j] % p_;
            prod[i - s_ + j] = static_cast<uint32_t>((prod[i - s_ + j] + p_ - sub) % p_);
        }
        if (i == s_) break;
    }
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        out += prod[i] * mult;
        mult *= p_;
    }
    return out;
}

uint32_t FieldCtx::mul(uint32_t a, uint32_t b) const {
    if (!mul_lut_.empty()) return mul_lut_[static_cast<size_t>(a) * q_ + b];
    return mul_direct(a, b);
}

uint32_t FieldCtx::inv(uint32_t a) const {
    if (a == 0) throw Error(errc::zero_inverse, "0 has no multiplicative inverse");
    if (!inv_lut_.empty()) return inv_lut_[a];
    return pow_u64(a, q_ - 2);
}

uint32_t FieldCtx::pow_u64(uint32_t base, uint64_t e) const {
    uint32_t acc = 1, b = base;
    while (e) {
        if (e & 1) acc = mul_direct(acc, b);
        b = mul_direct(b, b);
        e >>= 1;
    }
    return acc;
}

uint32_t FieldCtx::pow(uint32_t base, const BigInt& e) const {
    if (e < 0) throw Error(errc::bad_range, "exponent must be nonnegative");
    if (base == 0) return e == 0 ? 1u : 0u;
    const BigInt reduced = e % (q_ - 1);
    uint64_t ee = reduced.convert_to<uint64_t>();
    uint32_t acc = 1, b = base;
    while (ee) {
        if (ee & 1) acc = mul(acc, b);
        b = mul(b, b);
        ee >>= 1;
    }
    return acc;
}

std::vector<uint32_t> FieldCtx::decode(uint32_t code) const {
    std::vector<uint32_t> digits(s_);
    for (uint32_t i = 0; i < s_; ++i) {
        digits[i] = code % p_;
        code /= p_;
    }
    return digits;
}

uint32_t FieldCtx::encode(const std::vector<uint32_t>& digits) const {
    if (digits.size() != s_) throw Error(errc::bad_range, "digit count must equal s");
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < s_; ++i) {
        if (digits[i] >= p_) throw Error(errc::coefficient_out_of_range, "digit >= p");
        out += digits[i] * mult;
        mult *= p_;
    }
    return out;
}

std::string FieldCtx::spec_string() const {
    std::ostringstream os;
    os << "p=" << p_;
    if (s_ > 1) {
        os << ",s=" << s_;
        if (!modulus_is_default_) {
            os << ",mod=";
            for (size_t i = 0; i < modulus_.size(); ++i) {
                if (i) os << ',';
                os << modulus_[i];
            }
        }
    }
    return os.str();
}

namespace {

uint32_t parse_u32(std::string_view text, std::string_view what) {
    uint32_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw Error(errc::parse_error, "bad " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

}  // namespace

std::shared_ptr<const FieldCtx> parse_field_spec(std::string_view spec) {
    std::vector<std::string_view> items;
    size_t start = 0;
    while (start <= spec.size()) {
        const size_t comma = spec.find(',', start);
        const size_t end = comma == std::string_view::npos ? spec.size() : comma;
        items.push_back(spec.substr(start, end - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (items.empty() || items[0].substr(0, 2) != "p=")
        throw Error(errc::parse_error, "field spec must start with p=<prime>");
    const uint32_t p = parse_u32(items[0].substr(2), "p");
    uint32_t s = 1;
    std::optional<std::vector<uint32_t>> modulus;
    size_t i = 1;
    if (i < items.size() && items[i].substr(0, 2) == "s=") {
        s = parse_u32(items[i].substr(2), "s");
        ++i;
    }
    if (i < items.size() && items[i].substr(0, 4) == "mod=") {
        std::vector<uint32_t> coeffs;
        coeffs.push_back(parse_u32(items[i].substr(4), "modulus coefficient"));
        for (++i; i < items.size(); ++i)
            coeffs.push_back(parse_u32(items[i], "modulus coefficient"));
        modulus = std::move(coeffs);
    } else if (i < items.size()) {
        throw Error(errc::parse_error, "unexpected field spec item '" + std::string(items[i]) + "'");
    }
    return FieldCtx::make(p, s, modulus);
}

FieldElem::FieldElem(const FieldCtx& ctx, uint32_t code) : ctx_(&ctx), code_(code) {
    if (code >= ctx.q()) throw Error(errc::bad_range, "element code out of [0, q)");
}

namespace {
void require_same_ctx(const FieldElem& a, const FieldElem& b) {
    if (&a.ctx() != &b.ctx())
        throw Error(errc::ctx_mismatch, "operands come from different field contexts");
}
}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    return FieldElem(a.ctx(), a.ctx().add(a.code(), b.code()));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    return FieldElem(a.ctx(), a.ctx().sub(a.code(), b.code()));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same_ctx(a, b);
    return FieldElem(a.ctx(), a.ctx().mul(a.code(), b.code()));
}

FieldElem FieldElem::operator-() const { return FieldElem(*ctx_, ctx_->neg(code_)); }

FieldElem inv(const FieldElem& x) { return FieldElem(x.ctx(), x.ctx().inv(x.code())); }

FieldElem pow(const FieldElem& x, const BigInt& e) {
    return FieldElem(x.ctx(), x.ctx().pow(x.code(), e));
}

std::vector<FieldElem> enumerate_elements(const FieldCtx& ctx, bool nonzero_only) {
    std::vector<FieldElem> out;
    out.reserve(ctx.q() - (nonzero_only ? 1 : 0));
    for (uint32_t code = nonzero_only ? 1 : 0; code < ctx.q(); ++code)
        out.emplace_back(ctx, code);
    return out;
}

}  // namespace polygauss
