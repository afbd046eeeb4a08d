#include "orecode/codes.hpp"

#include <thread>

#include "orecode/util.hpp"

namespace orecode {

namespace {

/// Rows T^j(vec(g)), j = 0..(n - deg g - 1), for any monic right divisor g.
MatrixOverFq generator_matrix_for(const SkewRing& ring, const SkewPoly& g_monic, int n) {
    const int k = n - g_monic.degree();
    MatrixOverFq m(ring.field, 0, 0);
    std::vector<FieldElement> v = g_monic.to_vector(n);
    for (int j = 0; j < k; ++j) {
        if (j > 0) v = apply_pseudo_linear(v, ring.derivation);
        m.append_row(v);
    }
    return m;
}

bool dual_containing_by_rank_for(const MatrixOverFq& gen) {
    MatrixOverFq parity = gen.kernel_basis();
    if (parity.rows() == 0) return true;
    return MatrixOverFq::stack(gen, parity).rank() == gen.rank();
}

}  // namespace

ThetaCyclicCode ThetaCyclicCode::build(const SkewPoly& g, int n) {
    if (g.is_zero()) throw ZeroDivisor("code generator must be nonzero");
    if (n < 1) throw InvalidParameters("code length must be >= 1");
    if (g.degree() >= n)
        throw NotACode("generator of degree >= n yields the zero code");
    TwoSidedFactors factors = two_sided_factor_check(g, n);
    ThetaCyclicCode code;
    code.n_ = n;
    code.g_ = g;
    code.g_monic_ = g.monicized();
    code.h_ = std::move(factors.h);
    code.h_prime_ = std::move(factors.h_prime);
    return code;
}

MatrixOverFq ThetaCyclicCode::generator_matrix() const {
    return generator_matrix_for(ring(), g_monic_, n_);
}

MatrixOverFq ThetaCyclicCode::parity_basis() const { return generator_matrix().kernel_basis(); }

MatrixOverFq ThetaCyclicCode::parity_via_cofactor_columns() const {
    const SkewRing& rg = ring();
    // Stack T^j(h') for j = 0..n-1; the independent columns span the dual.
    MatrixOverFq h_matrix(rg.field, 0, 0);
    std::vector<FieldElement> v = h_prime_.to_vector(n_);
    for (int j = 0; j < n_; ++j) {
        if (j > 0) v = apply_pseudo_linear(v, rg.derivation);
        h_matrix.append_row(v);
    }
    // Lexicographically first maximal independent column set.
    MatrixOverFq selected(rg.field, 0, 0);
    int current_rank = 0;
    for (int c = 0; c < n_; ++c) {
        std::vector<FieldElement> col;
        col.reserve(n_);
        for (int r2 = 0; r2 < n_; ++r2) col.push_back(h_matrix.at(r2, c));
        MatrixOverFq trial = selected;
        trial.append_row(col);
        int rank = trial.rank();
        if (rank > current_rank) {
            selected = std::move(trial);
            current_rank = rank;
        }
    }
    return selected;
}

bool ThetaCyclicCode::membership(const std::vector<FieldElement>& word) const {
    if (static_cast<int>(word.size()) != n_) throw DimensionMismatch("word length must be n");
    SkewPoly c = SkewPoly::from_vector(ring(), word);
    return reduce_mod_xn_minus_1(skew_mul(c, h_prime_), n_).is_zero();
}

bool ThetaCyclicCode::membership_by_rank(const std::vector<FieldElement>& word) const {
    if (static_cast<int>(word.size()) != n_) throw DimensionMismatch("word length must be n");
    return generator_matrix().row_space_contains(word);
}

bool ThetaCyclicCode::dual_containing() const {
    return reduce_mod_xn_minus_1(skew_mul(h_prime_, h_prime_), n_).is_zero();
}

bool ThetaCyclicCode::dual_containing_by_rank() const {
    return dual_containing_by_rank_for(generator_matrix());
}

GammaCyclicCode GammaCyclicCode::build(RqsSpecPtr rqs, int n,
                                       const std::vector<SkewPoly>& generators) {
    if (static_cast<int>(generators.size()) != rqs->components())
        throw DimensionMismatch("need exactly s+1 = " + std::to_string(rqs->components()) +
                                " component generators");
    SkewRing component_ring{rqs->field(), rqs->derivation()};
    GammaCyclicCode code;
    code.rqs_ = std::move(rqs);
    code.n_ = n;
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].ring() != component_ring)
            throw RingTagMismatch("component generator " + std::to_string(i) +
                                  " has the wrong ring tag");
        try {
            code.components_.push_back(ThetaCyclicCode::build(generators[i], n));
        } catch (const Error& e) {
            throw NotAFactor("component " + std::to_string(i) + ": " + e.what());
        }
    }
    return code;
}

int GammaCyclicCode::total_dimension() const {
    int k = 0;
    for (const auto& c : components_) k += c.k();
    return k;
}

std::string GammaCyclicCode::cardinality_power() const {
    return std::to_string(rqs_->field()->order()) + "^" + std::to_string(total_dimension());
}

std::string GammaCyclicCode::cardinality_decimal() const {
    return pow_decimal(rqs_->field()->order(), static_cast<uint64_t>(total_dimension()));
}

bool GammaCyclicCode::dual_containing(int* failing_component) const {
    for (size_t i = 0; i < components_.size(); ++i) {
        if (!components_[i].dual_containing()) {
            if (failing_component) *failing_component = static_cast<int>(i);
            return false;
        }
    }
    if (failing_component) *failing_component = -1;
    return true;
}

std::vector<RqsElement> GammaCyclicCode::assemble(
    const std::vector<std::vector<FieldElement>>& parts) const {
    if (static_cast<int>(parts.size()) != rqs_->components())
        throw DimensionMismatch("need s+1 component words");
    for (const auto& p : parts)
        if (static_cast<int>(p.size()) != n_) throw DimensionMismatch("component word length must be n");
    std::vector<RqsElement> word;
    word.reserve(n_);
    for (int j = 0; j < n_; ++j) {
        std::vector<FieldElement> crt;
        crt.reserve(parts.size());
        for (const auto& p : parts) crt.push_back(p[j]);
        word.push_back(rqs_->from_crt(std::move(crt)));
    }
    return word;
}

bool GammaCyclicCode::contains(const std::vector<RqsElement>& word) const {
    if (static_cast<int>(word.size()) != n_) throw DimensionMismatch("ring word length must be n");
    for (int i = 0; i < rqs_->components(); ++i) {
        std::vector<FieldElement> component;
        component.reserve(n_);
        for (const auto& r : word) component.push_back(r.crt(i));
        if (!components_[i].membership(component)) return false;
    }
    return true;
}

SkewPoly extract_generator(const SkewRing& ring, int n,
                           const std::vector<std::vector<FieldElement>>& words) {
    if (words.empty()) throw ZeroCode("empty word list");
    for (const auto& w : words)
        if (static_cast<int>(w.size()) != n) throw DimensionMismatch("word length must be n");

    MatrixOverFq span = MatrixOverFq::from_rows(ring.field, words);
    // Close under T until the dimension stabilizes (at most n rounds).
    int rank = span.rank();
    for (int round = 0; round < n; ++round) {
        MatrixOverFq shifted(ring.field, 0, 0);
        for (int r = 0; r < span.rows(); ++r)
            shifted.append_row(apply_pseudo_linear(span.row(r), ring.derivation));
        MatrixOverFq merged = MatrixOverFq::stack(span, shifted);
        int new_rank = merged.rank();
        if (new_rank == rank) break;
        span = merged.rref();
        rank = new_rank;
    }
    if (rank == 0) throw ZeroCode("words span the zero module");

    // Row-reduce with pivots at the high-degree end; the row with the lowest
    // pivot is the minimal-degree element, already monic after normalization.
    MatrixOverFq m = span;
    const FieldSpec& F = *ring.field;
    int lead = 0;
    for (int c = n - 1; c >= 0 && lead < m.rows(); --c) {
        int pivot = -1;
        for (int r = lead; r < m.rows(); ++r) {
            if (m.rep_at(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < n; ++j) {
                uint32_t tmp = m.rep_at(pivot, j);
                m.set_rep(pivot, j, m.rep_at(lead, j));
                m.set_rep(lead, j, tmp);
            }
        uint32_t inv = F.inv_rep(m.rep_at(lead, c));
        for (int j = 0; j < n; ++j) m.set_rep(lead, j, F.mul_rep(inv, m.rep_at(lead, j)));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            uint32_t f = m.rep_at(r, c);
            if (!f) continue;
            for (int j = 0; j < n; ++j)
                m.set_rep(r, j, F.sub_rep(m.rep_at(r, j), F.mul_rep(f, m.rep_at(lead, j))));
        }
        ++lead;
    }
    SkewPoly g = SkewPoly::from_vector(ring, m.row(lead - 1));

    if (!right_divides(g, SkewPoly::x_pow_n_minus_1(ring, n)))
        throw NotAFactor("closure generator does not right-divide x^n - 1");
    MatrixOverFq regenerated = generator_matrix_for(ring, g, n);
    if (!MatrixOverFq::row_spaces_equal(regenerated, span))
        throw InvalidParameters("extracted generator does not reproduce the closure");
    return g;
}

DivisorEnumeration enumerate_right_divisors(const SkewRing& ring, int n, int max_deg,
                                            bool require_dual_containing, uint64_t budget) {
    if (n < 1) throw InvalidParameters("length must be >= 1");
    if (max_deg > n) max_deg = n;
    if (max_deg < 1) return {};
    const uint64_t q = ring.field->order();
    uint64_t worst = 1;
    for (int d = 0; d < max_deg; ++d) {
        worst *= q;
        if (worst > budget)
            throw BudgetExceeded("q^max_deg exceeds the enumeration budget of " +
                                 std::to_string(budget) + " candidates");
    }

    const SkewPoly target = SkewPoly::x_pow_n_minus_1(ring, n);
    DivisorEnumeration result;

    for (int d = 1; d <= max_deg; ++d) {
        uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= q;
        result.candidates_tested += total;

        auto test_range = [&](uint64_t lo, uint64_t hi, std::vector<SkewPoly>& out) {
            for (uint64_t counter = lo; counter < hi; ++counter) {
                std::vector<FieldElement> coeffs;
                coeffs.reserve(d + 1);
                uint64_t v = counter;
                for (int i = 0; i < d; ++i) {
                    coeffs.push_back(ring.field->element_from_rep(static_cast<uint32_t>(v % q)));
                    v /= q;
                }
                coeffs.push_back(ring.field->one());
                SkewPoly g(ring, std::move(coeffs));
                if (!right_divmod(target, g).remainder.is_zero()) continue;
                if (require_dual_containing &&
                    !dual_containing_by_rank_for(generator_matrix_for(ring, g, n)))
                    continue;
                out.push_back(std::move(g));
            }
        };

        int workers = worker_count();
        if (workers <= 1 || total < 1024) {
            test_range(0, total, result.divisors);
        } else {
            // Deterministic partition: contiguous counter ranges merged in
            // shard order reproduce the serial enumeration order exactly.
            std::vector<std::vector<SkewPoly>> shard_out(workers);
            std::vector<std::thread> threads;
            uint64_t chunk = (total + workers - 1) / workers;
            for (int t = 0; t < workers; ++t) {
                uint64_t lo = chunk * t;
                uint64_t hi = std::min(total, lo + chunk);
                if (lo >= hi) break;
                threads.emplace_back([&, lo, hi, t] { test_range(lo, hi, shard_out[t]); });
            }
            for (auto& th : threads) th.join();
            for (auto& shard : shard_out)
                for (auto& g : shard) result.divisors.push_back(std::move(g));
        }
    }
    return result;
}

}  // namespace orecode
