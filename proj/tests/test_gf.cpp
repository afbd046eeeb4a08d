#include <doctest.h>

#include <random>

#include "orecode/gf.hpp"

using namespace orecode;

namespace {

// Table-free oracle: schoolbook polynomial product mod the modulus, working
// on digit vectors only. Independent of the exp/log path under test.
std::vector<int> naive_mul(const std::vector<int>& a, const std::vector<int>& b,
                           const std::vector<int>& modulus, int p) {
    int m = static_cast<int>(modulus.size()) - 1;
    std::vector<int> prod(2 * m - 1, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (int d = 2 * m - 2; d >= m; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int i = 0; i <= m; ++i)
            prod[d - m + i] = ((prod[d - m + i] - c * modulus[i]) % p + p) % p;
    }
    prod.resize(m);
    return prod;
}

FieldSpecPtr f8() { return FieldSpec::create(2, 3); }

}  // namespace

TEST_SUITE("gf") {

TEST_CASE("shipped moduli build and w generates the multiplicative group") {
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 2}, {7, 2}, {2, 1}, {5, 1}}) {
        auto spec = FieldSpec::create(p, m);
        uint32_t q = 1;
        for (int i = 0; i < m; ++i) q *= static_cast<uint32_t>(p);
        CHECK(spec->order() == q);
        // every nonzero element is some w^k
        for (uint32_t rep = 1; rep < spec->order(); ++rep)
            CHECK(spec->exp_of(spec->log_of(rep)) == rep);
    }
}

TEST_CASE("construction rejects bad moduli") {
    CHECK_THROWS_AS(FieldSpec::create(4, 1), InvalidParameters);  // not prime
    CHECK_THROWS_AS(FieldSpec::create(3, 2, {1, 2, 1}), InvalidParameters);  // (x+1)^2
    CHECK_THROWS_AS(FieldSpec::create(3, 2, {1, 0, 1}), NotPrimitive);  // x has order 4
}

TEST_CASE("F_8 products against the schoolbook oracle") {
    auto spec = f8();
    FieldElement w = spec->generator();
    // w * w^2 = w^3 = w + 1
    CHECK((w * w.pow(2)).coeffs() == std::vector<int>{1, 1, 0});
    CHECK((w * w.pow(2)) == spec->from_power_of_w(3));
    // w^5 = w^2 + w + 1
    CHECK(spec->from_power_of_w(5).coeffs() == std::vector<int>{1, 1, 1});

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t ar = rng() % spec->order(), br = rng() % spec->order();
        FieldElement a = spec->element_from_rep(ar), b = spec->element_from_rep(br);
        CHECK((a * b).coeffs() == naive_mul(a.coeffs(), b.coeffs(), spec->modulus(), 2));
        CHECK((a * spec->one()) == a);
    }
}

TEST_CASE("field axioms on random elements") {
    for (uint64_t q : {4u, 9u, 25u, 49u}) {
        auto spec = FieldSpec::from_order(q);
        std::mt19937 rng(11 + q);
        for (int trial = 0; trial < 100; ++trial) {
            FieldElement a = spec->element_from_rep(rng() % spec->order());
            FieldElement b = spec->element_from_rep(rng() % spec->order());
            FieldElement c = spec->element_from_rep(rng() % spec->order());
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a - a == spec->zero());
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
        CHECK_THROWS_AS(spec->one() / spec->zero(), DivisionByZero);
        CHECK_THROWS_AS(spec->zero().inverse(), DivisionByZero);
    }
}

TEST_CASE("mixing fields raises SpecMismatch") {
    auto a = FieldSpec::create(2, 3)->one();
    auto b = FieldSpec::create(3, 2)->one();
    CHECK_THROWS_AS(a + b, SpecMismatch);
}

TEST_CASE("frobenius is the p^t power map and a ring automorphism") {
    auto f49 = FieldSpec::create(7, 2);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        FieldElement a = f49->element_from_rep(rng() % f49->order());
        FieldElement b = f49->element_from_rep(rng() % f49->order());
        // oracle: 7-fold product
        FieldElement prod = f49->one();
        for (int i = 0; i < 7; ++i) prod = prod * a;
        CHECK(frobenius(a, 1) == prod);
        CHECK(frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1));
        CHECK(frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1));
    }
    CHECK(frobenius(f49->zero(), 1) == f49->zero());
    CHECK(frobenius(f49->one(), 1) == f49->one());
    auto spec = f8();
    CHECK(frobenius(spec->generator(), 1) == spec->from_power_of_w(2));  // theta(w) = w^2
    CHECK(frobenius(spec->generator(), 0) == spec->generator());
}

TEST_CASE("theta^m is the identity, exhaustively") {
    for (uint64_t q : {4u, 8u, 9u, 16u, 25u, 49u, 64u}) {
        auto spec = FieldSpec::from_order(q);
        for (uint32_t rep = 0; rep < spec->order(); ++rep) {
            FieldElement a = spec->element_from_rep(rep);
            CHECK(frobenius(a, spec->m()) == a);
        }
    }
}

TEST_CASE("derivation: prime subfield killed, twisted Leibniz rule") {
    auto spec = f8();
    DerivationSpec d(1, spec->generator());  // im(a) = w(theta(a) - a)
    for (int c = 0; c < 2; ++c) CHECK(d.apply(spec->from_int(c)).is_zero());
    // im(w) = w(w^2 + w) = w^2 + w + 1 = w^5
    CHECK(d.apply(spec->generator()) == spec->from_power_of_w(5));
    CHECK(d.apply(spec->generator()).coeffs() == std::vector<int>{1, 1, 1});

    // exhaustive additivity + Leibniz for q <= 64
    for (uint64_t q : {4u, 8u, 9u, 16u, 25u, 49u, 64u}) {
        auto F = FieldSpec::from_order(q);
        DerivationSpec dq(1, F->generator());
        for (uint32_t ar = 0; ar < F->order(); ++ar) {
            for (uint32_t br = 0; br < F->order(); ++br) {
                FieldElement a = F->element_from_rep(ar), b = F->element_from_rep(br);
                REQUIRE(dq.apply(a + b) == dq.apply(a) + dq.apply(b));
                REQUIRE(dq.apply(a * b) == dq.apply(a) * b + dq.theta(a) * dq.apply(b));
            }
        }
    }
    // randomized Leibniz with beta = w^2 over F_49
    auto f49 = FieldSpec::create(7, 2);
    DerivationSpec d49(1, f49->from_power_of_w(2));
    std::mt19937 rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        FieldElement a = f49->element_from_rep(rng() % 49);
        FieldElement b = f49->element_from_rep(rng() % 49);
        CHECK(d49.apply(a * b) == d49.apply(a) * b + d49.theta(a) * d49.apply(b));
    }
    // beta = 0 is the zero derivation
    DerivationSpec dz(1, spec->zero());
    CHECK(dz.is_zero_derivation());
    CHECK(dz.apply(spec->generator()).is_zero());
}

TEST_CASE("field trace lands in F_p and is F_p-linear") {
    auto f4 = FieldSpec::create(2, 2);
    CHECK(field_trace(f4->generator()) == f4->one());  // Tr(w) = w + w^2 = 1
    CHECK(field_trace(f4->zero()).is_zero());
    // On the prime subfield Tr(b) = m*b; that collapses to Tr(b) = b
    // exactly when m = 1 (mod p), e.g. in F_8.
    auto f8spec = FieldSpec::create(2, 3);
    for (int b = 0; b < 2; ++b)
        CHECK(field_trace(f8spec->from_int(b)) == f8spec->from_int(b));
    CHECK(field_trace(f4->one()).is_zero());  // m = 2, char 2: Tr(1) = 2 = 0
    for (uint64_t q : {4u, 8u, 9u, 25u, 49u}) {
        auto F = FieldSpec::from_order(q);
        for (int b = 0; b < F->p(); ++b)
            CHECK(field_trace(F->from_int(b)) == F->from_int(F->m() * b));
        std::mt19937 rng(23 + q);
        for (int trial = 0; trial < 200; ++trial) {
            FieldElement a = F->element_from_rep(rng() % F->order());
            FieldElement b = F->element_from_rep(rng() % F->order());
            CHECK(field_trace(a).in_prime_subfield());
            CHECK(field_trace(a + b) == field_trace(a) + field_trace(b));
            FieldElement lambda = F->from_int(static_cast<int>(rng() % F->p()));
            CHECK(field_trace(lambda * a) == lambda * field_trace(a));
        }
    }
}

TEST_CASE("w-power logarithms round-trip") {
    for (uint64_t q : {8u, 9u, 25u}) {
        auto F = FieldSpec::from_order(q);
        for (uint32_t k = 0; k + 1 < F->order(); ++k)
            CHECK(F->from_power_of_w(k).as_power_of_w() == static_cast<int>(k));
        CHECK_THROWS_AS(F->zero().as_power_of_w(), DivisionByZero);
    }
}

TEST_CASE("field literal parse/print round-trips bit-exactly") {
    auto spec = FieldSpec::create(5, 2);
    for (uint32_t rep = 0; rep < spec->order(); ++rep) {
        FieldElement x = spec->element_from_rep(rep);
        CHECK(spec->parse_literal(x.str()) == x);
    }
    CHECK(spec->parse_literal("0").is_zero());
    CHECK(spec->parse_literal("3") == spec->from_int(3));
    CHECK(spec->parse_literal("7") == spec->from_int(2));  // decimal means n * 1
    CHECK(spec->parse_literal("w") == spec->generator());
    CHECK(spec->parse_literal("w^24") == spec->one());
    CHECK(spec->zero().str() == "0");
    CHECK(spec->one().str() == "1");
    CHECK(spec->from_int(4).str() == "4");  // prime-subfield values print as decimal
    CHECK(spec->generator().str() == "w");
    CHECK_THROWS_AS(spec->parse_literal("v^2"), UnknownSymbol);
    CHECK_THROWS_AS(spec->parse_literal("w^99999999999999"), ExponentOverflow);
}

}  // TEST_SUITE
