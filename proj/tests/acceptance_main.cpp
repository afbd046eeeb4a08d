// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 1-4 run the shipped reproduction configs; 5-10 exercise
// the library directly. Known-irreproducible published values fail here
// honestly; the config comments document the verified obstructions.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "orecode/codes.hpp"
#include "orecode/config.hpp"
#include "orecode/css.hpp"
#include "orecode/distance.hpp"
#include "orecode/graymap.hpp"
#include "orecode/repro.hpp"

using namespace orecode;

namespace {

int g_failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {
        start_ = std::chrono::steady_clock::now();
    }

    void check(bool ok, const std::string& what) {
        if (!ok) {
            ok_ = false;
            details_.push_back(what);
        }
    }

    void note(const std::string& what) { notes_.push_back(what); }

    ~Criterion() {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start_)
                           .count();
        std::printf("CRITERION %2d %s  (%lld ms)  %s\n", number_, ok_ ? "PASS" : "FAIL",
                    static_cast<long long>(elapsed), title_.c_str());
        for (const auto& d : details_) std::printf("             - FAIL: %s\n", d.c_str());
        for (const auto& n : notes_) std::printf("             - %s\n", n.c_str());
        if (!ok_) ++g_failures;
    }

  private:
    int number_;
    std::string title_;
    bool ok_ = true;
    std::vector<std::string> details_;
    std::vector<std::string> notes_;
    std::chrono::steady_clock::time_point start_;
};

std::string config_dir() {
#ifdef ORECODE_CONFIG_DIR
    return ORECODE_CONFIG_DIR;
#else
    return "configs";
#endif
}

const CheckResult* find_check(const RowReport& row, const std::string& key_prefix) {
    for (const auto& c : row.checks)
        if (c.key.rfind(key_prefix, 0) == 0) return &c;
    return nullptr;
}

SkewPoly random_poly(const SkewRing& ring, int max_deg, std::mt19937& rng) {
    int deg = static_cast<int>(rng() % (max_deg + 1));
    std::vector<FieldElement> coeffs;
    for (int i = 0; i <= deg; ++i)
        coeffs.push_back(ring.field->element_from_rep(rng() % ring.field->order()));
    return SkewPoly(ring, std::move(coeffs));
}

MatrixOverFq hamming7_parity(const FieldSpecPtr& f2) {
    MatrixOverFq h(f2, 3, 7);
    for (int col = 1; col <= 7; ++col)
        for (int bit = 0; bit < 3; ++bit)
            if (col & (1 << bit)) h.set_rep(bit, col - 1, 1);
    return h;
}

// 1. Factorization fidelity: every printed cofactor pair reproduces x^n - 1
//    exactly in the worked examples.
void criterion1(const ReproReport& examples) {
    Criterion c(1, "factorization fidelity for the three worked examples (exact, < 5 s)");
    int checked = 0;
    for (const auto& row : examples.rows) {
        c.check(row.error.empty(), row.label + ": " + row.error);
        for (const auto& chk : row.checks) {
            if (chk.key.rfind("factorization", 0) == 0 || chk.key.rfind("printed_h", 0) == 0) {
                c.check(chk.pass, row.label + " " + chk.key);
                ++checked;
            }
        }
    }
    // 9 factorizations and 18 printed-cofactor comparisons across the rows
    c.check(checked == 27, "expected 27 printed factorization checks, saw " +
                               std::to_string(checked));
}

// 2. Dual-containment for all components of the worked examples and all nine
//    table rows, via the right-cofactor condition.
void criterion2(const ReproReport& examples, const ReproReport& table) {
    Criterion c(2, "dual-containment h'h' = 0 mod x^n-1 everywhere (exact, < 30 s)");
    int checked = 0;
    for (const ReproReport* rep : {&examples, &table}) {
        for (const auto& row : rep->rows) {
            c.check(row.error.empty(), row.label + ": " + row.error);
            for (const auto& chk : row.checks) {
                if (chk.key.rfind("dual_containing", 0) == 0) {
                    c.check(chk.pass, row.label + " " + chk.key);
                    ++checked;
                }
            }
        }
    }
    // examples: 1+4+4 components; table: three s=2 rows and six s=3 rows
    c.check(checked == 9 + 33, "expected 42 component dual checks, saw " +
                                   std::to_string(checked));
}

// 3. Gray-image parameters: the published classical triples.
void criterion3(const ReproReport& table) {
    Criterion c(3, "Gray-image classical triples for all nine table rows");
    for (const auto& row : table.rows) {
        c.check(row.error.empty(), row.label + ": " + row.error);
        if (!row.error.empty()) continue;
        const CheckResult* classical = find_check(row, "classical");
        const CheckResult* distance = find_check(row, "distance");
        c.check(classical && classical->pass,
                row.label + " classical = " + (classical ? classical->computed : "missing") +
                    " vs published " + (classical ? classical->expected : "?"));
        c.check(distance && distance->pass,
                row.label + " distance = " + (distance ? distance->computed : "missing") +
                    " vs published " + (distance ? distance->expected : "?"));
    }
    c.note("the [N,K] parts reproduce; the published distance column is certified");
    c.note("unattainable for these parameters (see configs/table1.cfg notes)");
}

// 4. Quantum parameters for the nine table rows.
void criterion4(const ReproReport& table) {
    Criterion c(4, "quantum triples [[N,2K-N,d]]_q for all nine table rows");
    for (const auto& row : table.rows) {
        if (!row.error.empty()) {
            c.check(false, row.label + ": " + row.error);
            continue;
        }
        const CheckResult* quantum = find_check(row, "quantum");
        const CheckResult* slack = find_check(row, "singleton_slack");
        c.check(quantum && quantum->pass,
                row.label + " quantum = " + (quantum ? quantum->computed : "missing") +
                    " vs published " + (quantum ? quantum->expected : "?"));
        c.check(slack && slack->pass, row.label + " singleton slack");
    }
    c.note("k_q = 2K - N holds for every row; the failures are the distance component,");
    c.note("and for (32,9)/(42,9) the intrinsic dual-containment of a component also");
    c.note("fails (see the intrinsic_dual lines of the reproduction report)");
}

// 5. Division-algorithm property suite.
void criterion5() {
    Criterion c(5, "1000 random right divisions per field config, exact reconstruction");
    for (uint64_t q : {4u, 8u, 9u, 25u, 49u}) {
        auto f = FieldSpec::from_order(q);
        for (int beta_case = 0; beta_case < 3; ++beta_case) {
            FieldElement beta = beta_case == 0 ? f->zero() : f->generator().pow(beta_case);
            SkewRing ring = make_skew_ring(f, 1, beta);
            std::mt19937 rng(1000 + static_cast<unsigned>(q) * 7 + beta_case);
            int failures = 0;
            for (int trial = 0; trial < 1000; ++trial) {
                SkewPoly fp = random_poly(ring, 14, rng);
                SkewPoly gp = random_poly(ring, 7, rng);
                if (gp.is_zero()) continue;
                DivModResult r = right_divmod(fp, gp);
                if (skew_mul(r.quotient, gp) + r.remainder != fp) ++failures;
                if (r.remainder.degree() >= gp.degree()) ++failures;
            }
            c.check(failures == 0, "q=" + std::to_string(q) + " beta case " +
                                       std::to_string(beta_case) + ": " +
                                       std::to_string(failures) + " failures");
        }
    }
}

// 6. Derivation/automorphism laws.
void criterion6() {
    Criterion c(6, "exhaustive theta/im laws (q <= 64), Delta laws over R_{q,s}");
    for (uint64_t q : {4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        auto f = FieldSpec::from_order(q);
        DerivationSpec d(1, f->generator());
        int bad = 0;
        for (uint32_t a = 0; a < f->order(); ++a) {
            FieldElement ea = f->element_from_rep(a);
            if (frobenius(ea, f->m()) != ea) ++bad;  // theta^m = id
            for (uint32_t b = 0; b < f->order(); ++b) {
                FieldElement eb = f->element_from_rep(b);
                if (d.apply(ea + eb) != d.apply(ea) + d.apply(eb)) ++bad;
                if (d.apply(ea * eb) != d.apply(ea) * eb + d.theta(ea) * d.apply(eb)) ++bad;
            }
        }
        c.check(bad == 0, "q=" + std::to_string(q) + ": " + std::to_string(bad) + " law failures");
    }
    for (int s : {1, 2, 3}) {
        auto f = FieldSpec::create(2, 3);
        auto rqs = RqsSpec::create(f, s, DerivationSpec(1, f->generator()));
        std::mt19937 rng(600 + s);
        int bad = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<FieldElement> c1, c2;
            for (int i = 0; i <= s; ++i) {
                c1.push_back(f->element_from_rep(rng() % 8));
                c2.push_back(f->element_from_rep(rng() % 8));
            }
            RqsElement r = rqs->from_crt(c1), t = rqs->from_crt(c2);
            if (delta(r + t) != delta(r) + delta(t)) ++bad;
            if (delta(r * t) != delta(r) * t + gamma(r) * delta(t)) ++bad;
            if (delta_literal(r * t) != delta_literal(r) * t + gamma(r) * delta_literal(t)) ++bad;
        }
        c.check(bad == 0, "s=" + std::to_string(s) + ": " + std::to_string(bad) + " Delta failures");
    }
}

// 7. Decomposition equivalence on the toy grid.
void criterion7() {
    Criterion c(7, "decomposition equivalence at q=4, s=2, n=6");
    auto f = FieldSpec::create(2, 2);
    SkewRing ring = make_skew_ring(f, 1, f->generator());
    auto rqs = RqsSpec::create(f, 2, ring.derivation);
    const int n = 6;

    DivisorEnumeration divisors = enumerate_right_divisors(ring, n, 2, false);
    std::vector<SkewPoly> usable;
    for (const auto& g : divisors.divisors) {
        try {
            ThetaCyclicCode::build(g, n);
            usable.push_back(g);
        } catch (const Error&) {
        }
    }
    c.check(usable.size() >= 3, "need at least three usable divisors of x^6 - 1");
    if (usable.size() < 3) return;

    std::mt19937 rng(7777);
    std::vector<SkewPoly> gens{usable[0], usable[1], usable[2]};
    GammaCyclicCode code = GammaCyclicCode::build(rqs, n, gens);
    int closure_failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<FieldElement>> parts;
        for (const auto& comp : code.components()) {
            MatrixOverFq gen = comp.generator_matrix();
            std::vector<FieldElement> word(n, f->zero());
            for (int r = 0; r < gen.rows(); ++r) {
                FieldElement coeff = f->element_from_rep(rng() % 4);
                for (int j = 0; j < n; ++j) word[j] = word[j] + coeff * gen.at(r, j);
            }
            parts.push_back(std::move(word));
        }
        auto ring_word = code.assemble(parts);
        if (!code.contains(pseudo_linear_apply(ring_word))) ++closure_failures;
    }
    c.check(closure_failures == 0,
            std::to_string(closure_failures) + " T-closure failures out of 200");

    int vec_failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<FieldElement> v;
        for (int i = 0; i < n; ++i) v.push_back(f->element_from_rep(rng() % 4));
        SkewPoly cp = SkewPoly::from_vector(ring, v);
        SkewPoly x = SkewPoly::monomial(ring, f->one(), 1);
        if (reduce_mod_xn_minus_1(skew_mul(x, cp), n).to_vector(n) !=
            apply_pseudo_linear(v, ring.derivation))
            ++vec_failures;
    }
    c.check(vec_failures == 0,
            std::to_string(vec_failures) + " coefficient-vector identity failures out of 500");
}

// 8. Duality transport through the Gray map.
void criterion8() {
    Criterion c(8, "phi(C)^perp = phi(C^perp) for the worked config and a brute-force toy");
    {
        auto f = FieldSpec::create(2, 3);
        SkewRing ring = make_skew_ring(f, 1, f->generator());
        auto rqs = RqsSpec::create(f, 3, ring.derivation);
        std::vector<SkewPoly> gens{
            SkewPoly::parse(ring, "w^2*x + 1"),
            SkewPoly::parse(ring, "w*x^2 + w^4*x + w^6"),
            SkewPoly::parse(ring, "w^4*x^2 + w^3*x + w"),
            SkewPoly::parse(ring, "x^2 + w^2*x + w^4"),
        };
        GammaCyclicCode code = GammaCyclicCode::build(rqs, 30, gens);
        auto wk = [&](int k) { return f->from_power_of_w(k); };
        GrayMatrix gm = GrayMatrix::create(MatrixOverFq::from_rows(
            f, {{f->one(), wk(1), wk(3), f->one()},
                {wk(1), f->one(), f->one(), wk(3)},
                {wk(3), f->one(), f->one(), wk(1)},
                {f->one(), wk(3), wk(1), f->one()}}));
        c.check(duality_commutes_check(code, gm), "worked length-30 configuration");
    }
    {
        auto f = FieldSpec::create(2, 2);
        SkewRing ring = make_skew_ring(f, 0, f->zero());
        auto rqs = RqsSpec::create(f, 1, ring.derivation);
        std::vector<SkewPoly> gens{SkewPoly::parse(ring, "x + 1"), SkewPoly::parse(ring, "x + 1")};
        GammaCyclicCode code = GammaCyclicCode::build(rqs, 4, gens);
        GrayMatrix id = GrayMatrix::create(MatrixOverFq::identity(f, 2));
        c.check(duality_commutes_check(code, id), "s=1, n=4, trivial theta toy");
    }
}

// 9. CSS machinery at desk scale.
void criterion9() {
    Criterion c(9, "[7,4,3] self-CSS syndromes/decode and qudit operator algebra");
    auto f2 = FieldSpec::create(2, 1);
    MatrixOverFq h = hamming7_parity(f2);
    CssCode css = CssCode::build(h, h);
    c.check(css.build_syndrome_table(1), "syndrome table build");

    std::set<std::vector<int>> x_syn, z_syn;
    bool roundtrip = true;
    for (int pos = 0; pos < 7; ++pos) {
        for (int type = 1; type < 4; ++type) {
            std::vector<FieldElement> a(7, f2->zero()), b(7, f2->zero());
            if (type & 1) a[pos] = f2->one();
            if (type & 2) b[pos] = f2->one();
            PauliVector e(a, b);
            auto s = css.syndrome(e);
            if (type == 1) x_syn.insert(s);
            if (type == 2) z_syn.insert(s);
            auto decoded = css.decode_basis_error(s);
            if (!decoded || *decoded != e) roundtrip = false;
        }
    }
    c.check(x_syn.size() == 7,
            "7 distinct X-error syndromes (got " + std::to_string(x_syn.size()) + ")");
    c.check(z_syn.size() == 7,
            "7 distinct Z-error syndromes (got " + std::to_string(z_syn.size()) + ")");
    c.check(roundtrip, "weight-1 decode round-trip");

    for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        OperatorAlgebraReport rep = verify_operator_algebra(p, m);
        std::ostringstream what;
        what << "operator algebra p^m = " << p << "^" << m << " residual " << rep.max_residual;
        c.check(rep.ok && rep.max_residual < 1e-10, what.str());
    }
}

// 10. Negative controls: typed errors, never aborts.
void criterion10() {
    Criterion c(10, "negative controls surface typed errors");
    auto f8 = FieldSpec::create(2, 3);
    SkewRing ring = make_skew_ring(f8, 1, f8->generator());

    bool not_a_factor = false;
    try {
        ThetaCyclicCode::build(SkewPoly::parse(ring, "x^2 + w"), 30);
    } catch (const NotAFactor&) {
        not_a_factor = true;
    }
    c.check(not_a_factor, "corrupted generator raises NotAFactor");

    bool gray_rejected = false;
    try {
        MatrixOverFq bad = MatrixOverFq::identity(f8, 4);
        bad.set(0, 1, f8->generator());
        GrayMatrix::create(bad);
    } catch (const InvalidParameters&) {
        gray_rejected = true;
    }
    c.check(gray_rejected, "non-scalar G*G^T rejected at construction");

    bool css_rejected = false;
    try {
        auto f2 = FieldSpec::create(2, 1);
        MatrixOverFq h1(f2, 1, 4);
        h1.set_rep(0, 0, 1);
        CssCode::build(h1, h1);
    } catch (const NotDualContaining&) {
        css_rejected = true;
    }
    c.check(css_rejected, "H2 H1^T != 0 raises NotDualContaining");

    bool config_error = false;
    try {
        parse_config_text("[row]\nbogus = 1\n");
    } catch (const SyntaxError&) {
        config_error = true;
    }
    c.check(config_error, "config parse errors are SyntaxError with location");
}

}  // namespace

int main() {
    std::string dir = config_dir();
    ReproReport examples, table;
    try {
        examples = reproduce(parse_config_file(dir + "/examples.cfg"));
        table = reproduce(parse_config_file(dir + "/table1.cfg"));
    } catch (const Error& e) {
        std::fprintf(stderr, "cannot run configs: %s\n", e.what());
        return 2;
    }

    criterion1(examples);
    criterion2(examples, table);
    criterion3(table);
    criterion4(table);
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();

    std::printf("ACCEPTANCE %s (%d criteria failed)\n", g_failures == 0 ? "PASS" : "FAIL",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
