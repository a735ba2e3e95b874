#include "doctest.h"

#include <vector>

#include "polygauss/errors.hpp"
#include "polygauss/gauss.hpp"
#include "polygauss/symbols.hpp"
#include "test_util.hpp"

using namespace polygauss;
using testutil::code_of;
using testutil::field;

namespace {

std::vector<Poly> monic_up_to(const FieldCtx& ctx, int max_degree) {
    std::vector<Poly> out;
    for (int d = 1; d <= max_degree; ++d)
        for (const Poly& f : enumerate_polys(ctx, d, true)) out.push_back(f);
    return out;
}

// Inverse of a unit mod m via Euler's theorem; test-side helper.
Poly invmod(const Poly& x, const Poly& m) {
    return powmod(x, euler_phi(m) - 1, m);
}

int parity_of(const BigInt& x) { return static_cast<int>((x % 2 + 2) % 2); }

}  // namespace

TEST_CASE("gauss_factorial examples") {
    const auto f3 = field(3);
    CHECK(format_poly(gauss_factorial(Poly::variable(*f3))) == "2");
    CHECK(format_poly(gauss_factorial(parse_poly("X^2", *field(2)))) == "X+1");
    CHECK(gauss_factorial(parse_poly("X^2+X", *f3)).is_one());
    // Constants give 1 by convention.
    CHECK(gauss_factorial(Poly::constant(*f3, 2)).is_one());
    CHECK(gauss_factorial(Poly::zero(*f3)).is_one());
}

TEST_CASE("gauss_factorial_upto examples") {
    const auto f3 = field(3);
    CHECK(format_poly(gauss_factorial_upto(0, parse_poly("X^2", *f3))) == "2");
    CHECK(format_poly(gauss_factorial_upto(1, Poly::variable(*f3))) == "2");
    CHECK(code_of([&] { gauss_factorial_upto(2, Poly::one(*f3)); }) == errc::constant_input);

    // G(deg f - 1, f) = G(f) definitionally.
    for (const Poly& f : monic_up_to(*f3, 3))
        CHECK(gauss_factorial_upto(f.degree() - 1, f) == gauss_factorial(f));
}

TEST_CASE("predict_gauss_factorial examples") {
    const auto f3 = field(3);
    CHECK(format_poly(predict_gauss_factorial(parse_poly("X^3+2*X+2", *f3))) == "2");
    const auto f2 = field(2);
    CHECK(format_poly(predict_gauss_factorial(parse_poly("X^3", *f2))) == "X^2+1");
    CHECK(predict_gauss_factorial(parse_poly("X^4", *f2)).is_one());
    // Two stacked degree-1 primes spoil the exceptional branch.
    CHECK(predict_gauss_factorial(parse_poly("coeffs:0,0,1,0,1", *f2)).is_one());  // X^2(X+1)^2
}

TEST_CASE("G(f) closed form matches brute force on odd characteristic") {
    for (uint32_t q : {3u, 5u}) {
        const auto ctx = field(q);
        for (const Poly& f : monic_up_to(*ctx, 3))
            CHECK(gauss_factorial(f) == predict_gauss_factorial(f));
    }
}

TEST_CASE("G(f) closed form matches brute force in characteristic 2") {
    const auto f2 = field(2);
    for (const Poly& f : monic_up_to(*f2, 4))
        CHECK(gauss_factorial(f) == predict_gauss_factorial(f));
    const auto f4 = field(2, 2);
    for (const Poly& f : monic_up_to(*f4, 2))
        CHECK(gauss_factorial(f) == predict_gauss_factorial(f));
}

TEST_CASE("Wilson analogue: G(P) = -1 mod P") {
    for (uint32_t q : {2u, 3u, 5u}) {
        const auto ctx = field(q);
        for (const Poly& prime : enumerate_primes(*ctx, 4))
            CHECK(gauss_factorial(prime) == Poly::minus_one(*ctx));
    }
}

TEST_CASE("G is invariant under unit scaling of f") {
    const auto f3 = field(3);
    for (const Poly& f : monic_up_to(*f3, 3)) {
        const Poly g = Poly::constant(*f3, 2) * f;
        CHECK(gauss_factorial(g) == gauss_factorial(f));
    }
}

TEST_CASE("predict_gauss_factorial_upto examples") {
    const auto f3 = field(3);
    CHECK(format_poly(predict_gauss_factorial_upto(2, Poly::variable(*f3))) == "2");
    CHECK(predict_gauss_factorial_upto(2, parse_poly("X^2", *field(2))).is_one());
    CHECK(predict_gauss_factorial_upto(5, parse_poly("X^2+X", *f3)).is_one());
    CHECK(code_of([&] { predict_gauss_factorial_upto(1, parse_poly("X^2", *f3)); }) ==
          errc::bad_range);
}

TEST_CASE("G(n, f) closed form and power identity") {
    for (uint32_t q : {2u, 3u}) {
        const auto ctx = field(q);
        for (const Poly& f : monic_up_to(*ctx, 2)) {
            const Poly base = gauss_factorial(f);
            for (int n = f.degree(); n <= f.degree() + 2; ++n) {
                const Poly brute = gauss_factorial_upto(n, f);
                CHECK(brute == predict_gauss_factorial_upto(n, f));
                const BigInt e = boost::multiprecision::pow(
                    BigInt(q), static_cast<unsigned>(n + 1 - f.degree()));
                CHECK(brute == powmod(base, e, f));
            }
        }
    }
}

TEST_CASE("half-system construction and enumeration") {
    const auto f3 = field(3);
    const auto systems3 = enumerate_half_systems(*f3);
    REQUIRE(systems3.size() == 2);
    CHECK(systems3[0].members() == std::vector<uint32_t>{1});
    CHECK(systems3[1].members() == std::vector<uint32_t>{2});

    CHECK(enumerate_half_systems(*field(5)).size() == 4);
    CHECK(enumerate_half_systems(*field(7)).size() == 8);

    CHECK(code_of([&] { HalfSystem::make(*f3, {1, 2}); }) == errc::bad_half_system);
    CHECK(code_of([&] { HalfSystem::make(*field(5), {1, 4}); }) == errc::bad_half_system);
    CHECK(code_of([&] { HalfSystem::make(*field(5), {1}); }) == errc::bad_half_system);
    CHECK(code_of([&] { HalfSystem::make(*field(5), {0, 1}); }) == errc::bad_half_system);
    CHECK(code_of([&] { HalfSystem::make(*field(2), {1}); }) == errc::even_characteristic);
    CHECK(code_of([&] { enumerate_half_systems(*field(2)); }) == errc::even_characteristic);
}

TEST_CASE("delta examples and its square") {
    const auto f3 = field(3);
    CHECK(half_system_product(HalfSystem::make(*f3, {1})).code() == 1);
    CHECK(half_system_product(HalfSystem::make(*f3, {2})).code() == 2);

    const auto f5 = field(5);
    const FieldElem d = half_system_product(HalfSystem::make(*f5, {1, 2}));
    CHECK(d.code() == 2);
    CHECK((d * d).code() == 4);  // -1

    // delta(S)^2 = (-1)^{(q+1)/2} for every S.
    const std::pair<uint32_t, uint32_t> fields[] = {{3, 1}, {5, 1}, {7, 1}, {3, 2}};
    for (auto [p, s] : fields) {
        const auto ctx = field(p, s);
        const uint32_t expected =
            (ctx->q() + 1) / 2 % 2 == 1 ? ctx->neg(1) : 1u;
        for (const HalfSystem& sys : enumerate_half_systems(*ctx)) {
            const FieldElem dd = half_system_product(sys);
            CHECK((dd * dd).code() == expected);
        }
    }
}

TEST_CASE("monic_half_product examples") {
    const auto f3 = field(3);
    CHECK(monic_half_product(Poly::variable(*f3)).is_one());
    const Poly p = parse_poly("X^3+2*X+2", *f3);
    CHECK(monic_half_product(p) == Poly::minus_one(*f3));
    const Poly even = parse_poly("X^2+1", *f3);
    const Poly m = monic_half_product(even);
    CHECK(mulmod(m, m, even) == divrem(Poly::minus_one(*f3), even).remainder);
    CHECK(code_of([&] { monic_half_product(Poly::variable(*field(2))); }) ==
          errc::even_characteristic);
}

TEST_CASE("M(P) is a sign determined by the class number") {
    const auto f3 = field(3);
    for (const Poly& prime : enumerate_primes(*f3, 3)) {
        if (prime.degree() % 2 == 0) continue;
        const BigInt h = class_number(prime);
        const Poly expected = parity_of((h - 1) / 2) == 1 ? Poly::minus_one(*f3) : Poly::one(*f3);
        CHECK(monic_half_product(prime) == expected);
    }
}

TEST_CASE("M(aP^e) reduces to M(P) with an explicit sign") {
    const auto f3 = field(3);
    for (const Poly& prime : enumerate_primes(*f3, 3)) {
        const int d = prime.degree();
        const Poly mp = monic_half_product(prime);
        for (uint32_t e = 1; e <= 3; ++e) {
            if (d * static_cast<int>(e) > 6) continue;
            for (uint32_t a : {1u, 2u}) {
                Poly f = Poly::constant(*f3, a);
                for (uint32_t i = 0; i < e; ++i) f = f * prime;
                const int sign = static_cast<int>((e - 1)) * d % 2;  // (q-1)/2 = 1 here
                const Poly expected =
                    sign == 1 ? divrem(-mp, prime).remainder : divrem(mp, prime).remainder;
                CHECK(divrem(monic_half_product(f), prime).remainder == expected);
            }
        }
    }
}

TEST_CASE("M reduction congruences for two and three prime divisors") {
    const auto f3 = field(3);
    for (const Poly& f : monic_up_to(*f3, 4)) {
        const Factorization fac = factor(f);
        if (fac.prime_count() == 2) {
            const Poly& p1 = fac.factors[0].prime;
            const Poly& p2 = fac.factors[1].prime;
            Poly m1 = Poly::one(*f3);
            for (uint32_t i = 0; i < fac.factors[0].exponent; ++i) m1 = m1 * p1;
            const BigInt k = euler_phi(m1) / 2;
            const Poly p2_pow = powmod(p2, k, m1);
            Poly rhs = invmod(p2_pow, m1);
            if (p2.degree() % 2 == 1)  // (q-1)/2 = 1, so the sign is (-1)^{deg P2}
                rhs = divrem(-rhs, m1).remainder;
            CHECK(divrem(monic_half_product(f), m1).remainder == rhs);
        } else if (fac.prime_count() >= 3) {
            for (const PrimePower& pp : fac.factors) {
                Poly m = Poly::one(*f3);
                for (uint32_t i = 0; i < pp.exponent; ++i) m = m * pp.prime;
                CHECK(divrem(monic_half_product(f), m).remainder.is_one());
            }
        }
    }
}

TEST_CASE("gauss_half examples") {
    const auto f3 = field(3);
    const Poly p = parse_poly("X^3+2*X+2", *f3);
    CHECK(gauss_half(p, HalfSystem::make(*f3, {1})) == Poly::minus_one(*f3));
    CHECK(gauss_half(p, HalfSystem::make(*f3, {2})).is_one());

    const Poly f = parse_poly("X^2+X", *f3);
    CHECK(format_poly(gauss_half(f, HalfSystem::make(*f3, {1}))) == "X+2");
}

TEST_CASE("gauss_half_via_monic examples") {
    const auto f3 = field(3);
    const Poly p = parse_poly("X^3+2*X+2", *f3);
    const HalfSystem s1 = HalfSystem::make(*f3, {1});
    CHECK(gauss_half_via_monic(p, s1) == Poly::minus_one(*f3));
    // delta(S) = 1 collapses the route to M(f) itself.
    CHECK(gauss_half_via_monic(p, s1) == monic_half_product(p));

    const auto f5 = field(5);
    CHECK(format_poly(gauss_half_via_monic(Poly::variable(*f5),
                                           HalfSystem::make(*f5, {1, 2}))) == "2");
}

TEST_CASE("the two routes to G(f, S) agree") {
    for (uint32_t q : {3u, 5u}) {
        const auto ctx = field(q);
        const auto systems = enumerate_half_systems(*ctx);
        for (const Poly& f : monic_up_to(*ctx, 3))
            for (const HalfSystem& s : systems)
                CHECK(gauss_half(f, s) == gauss_half_via_monic(f, s));
    }
}

TEST_CASE("G(f) factors through G(f, S) squared") {
    for (uint32_t q : {3u, 5u}) {
        const auto ctx = field(q);
        const auto systems = enumerate_half_systems(*ctx);
        for (const Poly& f : monic_up_to(*ctx, 3)) {
            const int sign = parity_of(euler_phi(f) / 2);
            for (const HalfSystem& s : systems) {
                const Poly half = gauss_half(f, s);
                Poly rhs = mulmod(half, half, f);
                if (sign == 1) rhs = divrem(-rhs, f).remainder;
                CHECK(gauss_factorial(f) == rhs);
            }
        }
    }
}

TEST_CASE("squares of G(f, S) and M(f) land on the proved signs") {
    for (uint32_t q : {3u, 5u}) {
        const auto ctx = field(q);
        const auto systems = enumerate_half_systems(*ctx);
        for (const Poly& f : monic_up_to(*ctx, 3)) {
            const Factorization fac = factor(f);
            const bool t1 = fac.prime_count() == 1;
            const int d1 = fac.factors[0].prime.degree();
            const Poly minus_one = divrem(Poly::minus_one(*ctx), f).remainder;

            const bool g2_minus = t1 && (q % 4 == 1 || d1 % 2 == 0);
            for (const HalfSystem& s : systems) {
                const Poly half = gauss_half(f, s);
                CHECK(mulmod(half, half, f) == (g2_minus ? minus_one : Poly::one(*ctx)));
            }
            const Poly m = monic_half_product(f);
            const bool m2_minus = t1 && d1 % 2 == 0;
            CHECK(mulmod(m, m, f) == (m2_minus ? minus_one : Poly::one(*ctx)));
        }
    }
}

TEST_CASE("gauss_half is invariant under unit scaling of f") {
    const auto f3 = field(3);
    const auto systems = enumerate_half_systems(*f3);
    for (const Poly& f : monic_up_to(*f3, 3))
        for (const HalfSystem& s : systems)
            CHECK(gauss_half(Poly::constant(*f3, 2) * f, s) == gauss_half(f, s));
}

TEST_CASE("multiplicative_order") {
    const auto f3 = field(3);
    const Poly f = parse_poly("X^2+1", *f3);
    CHECK(multiplicative_order(Poly::one(*f3), f) == 1);
    CHECK(multiplicative_order(Poly::variable(*f3), f) == 4);
    const Poly p = parse_poly("X^3+2*X+2", *f3);
    CHECK(multiplicative_order(gauss_half(p, HalfSystem::make(*f3, {1})), p) == 2);
    CHECK(code_of([&] { multiplicative_order(Poly::variable(*f3), parse_poly("X^2", *f3)); }) ==
          errc::not_coprime);
    CHECK(code_of([&] { multiplicative_order(Poly::zero(*f3), f); }) == errc::not_coprime);
}

TEST_CASE("classify_order on the worked example") {
    const auto f3 = field(3);
    const Poly p = parse_poly("X^3+2*X+2", *f3);

    const OrderClassification plus = classify_order(p, HalfSystem::make(*f3, {1}));
    CHECK(plus.order == 2);
    CHECK(plus.clause == "2a");
    CHECK(plus.witness.t == 1);
    CHECK(plus.witness.q_mod_4 == 3);
    REQUIRE(plus.witness.class_number_p1.has_value());
    CHECK(*plus.witness.class_number_p1 == 7);

    const OrderClassification minus = classify_order(p, HalfSystem::make(*f3, {2}));
    CHECK(minus.order == 1);
    CHECK(minus.clause == "3");

    const auto f5 = field(5);
    for (const Poly& prime : enumerate_primes(*f5, 2))
        for (const HalfSystem& s : enumerate_half_systems(*f5)) {
            const OrderClassification cls = classify_order(prime, s);
            CHECK(cls.order == 4);
            CHECK(cls.clause == "1");
        }
}

TEST_CASE("clause/order pairing is structural") {
    for (uint32_t q : {3u, 5u}) {
        const auto ctx = field(q);
        for (const Poly& f : monic_up_to(*ctx, 3))
            for (const HalfSystem& s : enumerate_half_systems(*ctx)) {
                const OrderClassification cls = classify_order(f, s);
                if (cls.clause == "1") CHECK(cls.order == 4);
                else if (cls.clause == "3") CHECK(cls.order == 1);
                else CHECK(cls.order == 2);
            }
    }
}

TEST_CASE("the two-prime symbol is label-independent where consulted") {
    for (uint32_t q : {3u, 5u}) {
        const auto ctx = field(q);
        for (const Poly& f : monic_up_to(*ctx, 4)) {
            const Factorization fac = factor(f);
            if (fac.prime_count() != 2) continue;
            const Poly& p1 = fac.factors[0].prime;
            const Poly& p2 = fac.factors[1].prime;
            const bool both_even = p1.degree() % 2 == 0 && p2.degree() % 2 == 0;
            if (q % 4 == 1 || both_even)
                CHECK(legendre_symbol(p1, p2) == legendre_symbol(p2, p1));
        }
    }
}

TEST_CASE("predict_half_value") {
    const auto f3 = field(3);
    const Poly p = parse_poly("X^3+2*X+2", *f3);
    const auto one_prime = predict_half_value(p, HalfSystem::make(*f3, {1}));
    REQUIRE(std::holds_alternative<Poly>(one_prime));
    CHECK(format_poly(std::get<Poly>(one_prime)) == "2");

    const Poly three = Poly::variable(*f3) * parse_poly("X+1", *f3) * parse_poly("X+2", *f3);
    const auto t3 = predict_half_value(three, HalfSystem::make(*f3, {1}));
    REQUIRE(std::holds_alternative<Poly>(t3));
    CHECK(std::get<Poly>(t3).is_one());

    const auto f5 = field(5);
    const Poly f = Poly::variable(*f5) * parse_poly("X+1", *f5);
    for (const HalfSystem& s : enumerate_half_systems(*f5)) {
        const auto pred = predict_half_value(f, s);
        REQUIRE(std::holds_alternative<Poly>(pred));
        CHECK(std::get<Poly>(pred).is_one());  // (X/(X+1)) = +1 over F_5
    }

    // Constraint branches: t = 1 with even degree, and mixed-parity t = 2.
    const auto even_case = predict_half_value(parse_poly("X^2+1", *f3), HalfSystem::make(*f3, {1}));
    REQUIRE(std::holds_alternative<ConstraintTag>(even_case));
    CHECK(std::get<ConstraintTag>(even_case) == ConstraintTag::square_is_minus_one);

    const Poly mixed = Poly::variable(*f3) * parse_poly("X^2+1", *f3);
    const auto mixed_case = predict_half_value(mixed, HalfSystem::make(*f3, {1}));
    REQUIRE(std::holds_alternative<ConstraintTag>(mixed_case));
    CHECK(std::get<ConstraintTag>(mixed_case) == ConstraintTag::not_plus_minus_one_square_one);
}

TEST_CASE("G(f, S) for a prime power is the predicted sign times delta") {
    const auto f3 = field(3);
    const auto systems = enumerate_half_systems(*f3);
    for (const Poly& prime : enumerate_primes(*f3, 3)) {
        if (prime.degree() % 2 == 0) continue;
        const BigInt h = class_number(prime);
        for (uint32_t e = 1; e <= 2; ++e) {
            if (prime.degree() * static_cast<int>(e) > 6) continue;
            Poly f = Poly::one(*f3);
            for (uint32_t i = 0; i < e; ++i) f = f * prime;
            for (const HalfSystem& s : systems) {
                const int sign = parity_of(BigInt(e) + (h - 3) / 2);
                uint32_t value = half_system_product(s).code();
                if (sign == 1) value = f3->neg(value);
                CHECK(gauss_half(f, s) == Poly::constant(*f3, value));
            }
        }
    }
}

TEST_CASE("lift_sign") {
    const auto f3 = field(3);
    const Poly g = parse_poly("X^2+1", *f3);
    CHECK(lift_sign(Poly::one(*f3), g, 2) == LiftSign::plus_one);
    CHECK(lift_sign(Poly::minus_one(*f3), g, 2) == LiftSign::minus_one);

    const Poly f = parse_poly("X^2+X", *f3);  // X(X+1)
    CHECK(lift_sign(parse_poly("X+2", *f3), f, 1) == LiftSign::not_plus_minus_one);

    CHECK(code_of([&] { lift_sign(Poly::variable(*f3), Poly::variable(*f3), 2); }) ==
          errc::precondition_square_not_one);
    CHECK(code_of([&] { lift_sign(Poly::one(*f3), Poly::constant(*f3, 2), 1); }) ==
          errc::bad_modulus_poly);

    // A value that is -1 mod g lifts to -1 mod g^e as well.
    const Poly p = parse_poly("X+1", *f3);
    Poly pe = p * p * p;
    const Poly x = divrem(Poly::minus_one(*f3) + pe, pe).remainder;  // -1 mod p^3
    CHECK(lift_sign(x, p, 3) == LiftSign::minus_one);
}

TEST_CASE("count_monic_coprime") {
    const auto f3 = field(3);
    const Poly f = parse_poly("X^2+X", *f3);
    CHECK(count_monic_coprime(0, f) == 1);
    CHECK(count_monic_coprime(1, f) == 1);  // only X+2
    CHECK(count_monic_coprime(1, parse_poly("X^3+2*X+2", *f3)) == 3);

    for (uint32_t q : {3u, 5u}) {
        const auto ctx = field(q);
        for (const Poly& g : monic_up_to(*ctx, 3)) {
            BigInt sum = 0;
            for (int n = 0; n < g.degree(); ++n) sum += count_monic_coprime(n, g);
            CHECK(sum == euler_phi(g) / (q - 1));
        }
    }
}

TEST_CASE("verify_instance on representative instances") {
    const auto f3 = field(3);
    const Poly p = parse_poly("X^3+2*X+2", *f3);
    const auto row1 = verify_instance(p, HalfSystem::make(*f3, {1}), Theorem::extension);
    CHECK(row1.matches);
    CHECK(row1.order == 2);
    CHECK(row1.clause == "2a");

    const auto f2 = field(2);
    const auto row2 = verify_instance(parse_poly("X^2", *f2), std::nullopt, Theorem::con2);
    CHECK(row2.matches);
    CHECK(row2.brute == "X+1");

    const Poly f = parse_poly("X^2+X", *f3);
    const auto row3 = verify_instance(f, HalfSystem::make(*f3, {1}), Theorem::extension);
    CHECK(row3.matches);
    CHECK(row3.order == 2);
    CHECK(row3.clause == "2e");

    CHECK(code_of([&] { verify_instance(p, std::nullopt, Theorem::extension); }) ==
          errc::bad_range);
    CHECK(code_of([&] { verify_instance(f, HalfSystem::make(*f3, {1}), Theorem::gpe); }) ==
          errc::bad_range);  // t = 2 is outside gpe's hypothesis
    CHECK(code_of([&] { verify_instance(parse_poly("X^2", *f2), std::nullopt, Theorem::con1); }) ==
          errc::even_characteristic);
}
