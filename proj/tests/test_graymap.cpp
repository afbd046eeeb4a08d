#include <doctest.h>

#include <random>

#include "orecode/graymap.hpp"

using namespace orecode;

namespace {

// Example-style 4x4 matrix over F_8 with G G^T = I_4.
MatrixOverFq f8_gray(const FieldSpecPtr& f) {
    auto w = [&](int k) { return f->from_power_of_w(k); };
    return MatrixOverFq::from_rows(
        f, {{f->one(), w(1), w(3), f->one()},
            {w(1), f->one(), f->one(), w(3)},
            {w(3), f->one(), f->one(), w(1)},
            {f->one(), w(3), w(1), f->one()}});
}

// +-1 matrix over an odd-characteristic field with G G^T = 4 I_4.
MatrixOverFq pm1_gray(const FieldSpecPtr& f) {
    FieldElement one = f->one(), neg = -f->one();
    return MatrixOverFq::from_rows(f, {{neg, one, one, one},
                                       {one, one, one, neg},
                                       {one, neg, one, one},
                                       {one, one, neg, one}});
}

GammaCyclicCode example1_code() {
    auto f = FieldSpec::create(2, 3);
    SkewRing ring = make_skew_ring(f, 1, f->generator());
    auto rqs = RqsSpec::create(f, 3, ring.derivation);
    std::vector<SkewPoly> gens{
        SkewPoly::one(ring),
        SkewPoly::parse(ring, "w*x^2 + w^4*x + w^6"),
        SkewPoly::parse(ring, "w^4*x^2 + w^3*x + w"),
        SkewPoly::parse(ring, "x^2 + w^2*x + w^4"),
    };
    return GammaCyclicCode::build(rqs, 30, gens);
}

}  // namespace

TEST_SUITE("graymap") {

TEST_CASE("Gray matrix gate: G G^T must be a nonzero scalar times I") {
    auto f8 = FieldSpec::create(2, 3);
    GrayMatrix gm = GrayMatrix::create(f8_gray(f8));
    CHECK(gm.scalar() == f8->one());
    CHECK(gm.dim() == 4);

    auto f25 = FieldSpec::create(5, 2);
    GrayMatrix pm = GrayMatrix::create(pm1_gray(f25));
    CHECK(pm.scalar() == f25->from_int(4));

    GrayMatrix id = GrayMatrix::create(MatrixOverFq::identity(f8, 4));
    CHECK(id.scalar() == f8->one());

    // broken matrix: G G^T not scalar
    MatrixOverFq bad = MatrixOverFq::identity(f8, 4);
    bad.set(0, 1, f8->generator());
    CHECK_THROWS_AS(GrayMatrix::create(bad), InvalidParameters);
}

TEST_CASE("gray_apply: identity matrix flattens CRT coordinates") {
    auto f = FieldSpec::create(2, 3);
    auto rqs = RqsSpec::create(f, 3, DerivationSpec(1, f->generator()));
    GrayMatrix id = GrayMatrix::create(MatrixOverFq::identity(f, 4));
    std::mt19937 rng(3);
    std::vector<RqsElement> v;
    for (int j = 0; j < 5; ++j) {
        std::vector<FieldElement> crt;
        for (int i = 0; i < 4; ++i) crt.push_back(f->element_from_rep(rng() % 8));
        v.push_back(rqs->from_crt(crt));
    }
    auto image = gray_apply(v, id);
    REQUIRE(image.size() == 20);
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 4; ++i) REQUIRE(image[4 * j + i] == v[j].crt(i));
}

TEST_CASE("phi is F_q-linear and weight-transporting") {
    auto f = FieldSpec::create(2, 3);
    auto rqs = RqsSpec::create(f, 3, DerivationSpec(1, f->generator()));
    GrayMatrix gm = GrayMatrix::create(f8_gray(f));
    std::mt19937 rng(11);
    auto random_vec = [&](int n) {
        std::vector<RqsElement> v;
        for (int j = 0; j < n; ++j) {
            std::vector<FieldElement> crt;
            for (int i = 0; i < 4; ++i) crt.push_back(f->element_from_rep(rng() % 8));
            v.push_back(rqs->from_crt(crt));
        }
        return v;
    };
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_vec(6), b = random_vec(6);
        std::vector<RqsElement> sum;
        for (int j = 0; j < 6; ++j) sum.push_back(a[j] + b[j]);
        auto phi_sum = gray_apply(sum, gm);
        auto phi_a = gray_apply(a, gm), phi_b = gray_apply(b, gm);
        for (size_t i = 0; i < phi_sum.size(); ++i) REQUIRE(phi_sum[i] == phi_a[i] + phi_b[i]);

        FieldElement lambda = f->element_from_rep(rng() % 8);
        std::vector<RqsElement> scaled;
        for (int j = 0; j < 6; ++j)
            scaled.push_back(rqs->from_crt(std::vector<FieldElement>{
                lambda * a[j].crt(0), lambda * a[j].crt(1), lambda * a[j].crt(2),
                lambda * a[j].crt(3)}));
        auto phi_scaled = gray_apply(scaled, gm);
        for (size_t i = 0; i < phi_scaled.size(); ++i) REQUIRE(phi_scaled[i] == lambda * phi_a[i]);

        // injectivity on nonzero vectors (weight transport)
        bool a_zero = true;
        for (const auto& r : a) a_zero = a_zero && r.is_zero();
        bool image_zero = true;
        for (const auto& x : phi_a) image_zero = image_zero && x.is_zero();
        REQUIRE(a_zero == image_zero);
    }
}

TEST_CASE("orthogonality transport: a.b = 0 implies phi(a).phi(b) = 0") {
    auto f = FieldSpec::create(2, 3);
    auto rqs = RqsSpec::create(f, 3, DerivationSpec(1, f->generator()));
    GrayMatrix gm = GrayMatrix::create(f8_gray(f));
    std::mt19937 rng(13);
    int checked = 0;
    while (checked < 200) {
        std::vector<RqsElement> a, b;
        for (int j = 0; j < 4; ++j) {
            std::vector<FieldElement> crt1, crt2;
            for (int i = 0; i < 4; ++i) {
                crt1.push_back(f->element_from_rep(rng() % 8));
                crt2.push_back(f->element_from_rep(rng() % 8));
            }
            a.push_back(rqs->from_crt(crt1));
            b.push_back(rqs->from_crt(crt2));
        }
        // force orthogonality: adjust the last coordinate of b
        RqsElement inner = rqs->zero();
        for (int j = 0; j < 3; ++j) inner = inner + a[j] * b[j];
        if (!a[3].is_unit()) continue;
        std::vector<FieldElement> fix;
        for (int i = 0; i < 4; ++i) fix.push_back((-inner.crt(i)) / a[3].crt(i));
        b[3] = rqs->from_crt(fix);
        inner = rqs->zero();
        for (int j = 0; j < 4; ++j) inner = inner + a[j] * b[j];
        REQUIRE(inner.is_zero());
        CHECK(dot(gray_apply(a, gm), gray_apply(b, gm)).is_zero());
        ++checked;
    }
}

TEST_CASE("gray_image_code reproduces the worked [120,114] image") {
    GammaCyclicCode code = example1_code();
    GrayMatrix gm = GrayMatrix::create(f8_gray(code.rqs()->field()));
    MatrixOverFq image = gray_image_code(code, gm);
    CHECK(image.cols() == 120);
    CHECK(image.rows() == 114);
    CHECK(image.rank() == 114);
}

TEST_CASE("duality commutes with the Gray map") {
    SUBCASE("worked configuration") {
        GammaCyclicCode code = example1_code();
        GrayMatrix gm = GrayMatrix::create(f8_gray(code.rqs()->field()));
        CHECK(duality_commutes_check(code, gm));
    }
    SUBCASE("brute-force toy: s=1, n=4, trivial theta") {
        auto f = FieldSpec::create(2, 2);
        SkewRing ring = make_skew_ring(f, 0, f->zero());
        auto rqs = RqsSpec::create(f, 1, ring.derivation);
        // x^4 - 1 = (x+1)^4 over F_4; use g = x + 1 twice
        std::vector<SkewPoly> gens{SkewPoly::parse(ring, "x + 1"), SkewPoly::parse(ring, "x + 1")};
        GammaCyclicCode code = GammaCyclicCode::build(rqs, 4, gens);
        GrayMatrix id = GrayMatrix::create(MatrixOverFq::identity(f, 2));
        CHECK(duality_commutes_check(code, id));
    }
}

TEST_CASE("dimension mismatches are rejected") {
    GammaCyclicCode code = example1_code();  // s = 3
    auto f = code.rqs()->field();
    GrayMatrix small = GrayMatrix::create(MatrixOverFq::identity(f, 2));
    CHECK_THROWS_AS(gray_image_code(code, small), DimensionMismatch);
}

}  // TEST_SUITE
