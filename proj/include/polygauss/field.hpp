#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polygauss/bigint.hpp"

namespace polygauss {

/// Immutable description of a finite field F_q with q = p^s.
///
/// Elements travel as integer codes in [0, q): the element sum c_i Y^i is
/// encoded as sum c_i p^i with digits c_i in [0, p). For s = 1 the code is
/// the residue itself. For s >= 2 the field is F_p[Y]/(m(Y)) for a monic
/// irreducible modulus m of degree s; when no modulus is supplied the one
/// with the smallest coefficient encoding is chosen, so a (p, s) pair always
/// names the same field.
///
/// A FieldCtx never changes after construction and may be shared freely
/// across threads. Elements and polynomials keep a plain pointer to their
/// context; the owning shared_ptr must outlive them.
class FieldCtx {
  public:
    // Size guard: half-system enumeration and brute-force products are
    // exponential in q, so anything past 2^16 is rejected up front.
    static constexpr uint32_t max_q = 1u << 16;

    static std::shared_ptr<const FieldCtx> make(
        uint32_t p, uint32_t s,
        const std::optional<std::vector<uint32_t>>& modulus = std::nullopt);

    uint32_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint32_t q() const { return q_; }
    bool prime_field() const { return s_ == 1; }

    /// Modulus coefficients over F_p, constant term first, monic of degree s.
    /// Empty for prime fields.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    bool modulus_is_default() const { return modulus_is_default_; }

    // Arithmetic on element codes.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // throws zero_inverse on 0
    uint32_t pow(uint32_t base, const BigInt& e) const;

    std::vector<uint32_t> decode(uint32_t code) const;  // s base-p digits
    uint32_t encode(const std::vector<uint32_t>& digits) const;

    /// Canonical CLI/config form: "p=3", "p=3,s=2" (defaulted modulus) or
    /// "p=3,s=2,mod=1,0,1" (explicit non-default modulus, constant first).
    std::string spec_string() const;

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

  private:
    FieldCtx(uint32_t p, uint32_t s, std::vector<uint32_t> modulus, bool defaulted);

    uint32_t mul_direct(uint32_t a, uint32_t b) const;
    uint32_t pow_u64(uint32_t base, uint64_t e) const;

    uint32_t p_;
    uint32_t s_;
    uint32_t q_;
    std::vector<uint32_t> modulus_;
    bool modulus_is_default_;
    // Multiplication / inverse tables for small fields; empty beyond 256
    // elements, in which case mul_direct runs per call.
    std::vector<uint16_t> mul_lut_;
    std::vector<uint16_t> inv_lut_;
};

/// The monic irreducible degree-s polynomial over F_p whose coefficient
/// encoding sum c_i p^i is minimal. Deterministic; requires s >= 2.
std::vector<uint32_t> find_default_modulus(uint32_t p, uint32_t s);

std::shared_ptr<const FieldCtx> parse_field_spec(std::string_view spec);

/// A field element: a context pointer plus its code. Binary operators insist
/// that both operands come from the same context object.
class FieldElem {
  public:
    FieldElem(const FieldCtx& ctx, uint32_t code);

    const FieldCtx& ctx() const { return *ctx_; }
    uint32_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    FieldElem operator-() const;

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.ctx_ == b.ctx_ && a.code_ == b.code_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  private:
    const FieldCtx* ctx_;
    uint32_t code_;
};

FieldElem inv(const FieldElem& x);
FieldElem pow(const FieldElem& x, const BigInt& e);

/// All elements (or all nonzero elements) in increasing code order.
std::vector<FieldElem> enumerate_elements(const FieldCtx& ctx, bool nonzero_only = false);

}  // namespace polygauss
