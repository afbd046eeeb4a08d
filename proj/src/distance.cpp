#include "orecode/distance.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "orecode/util.hpp"

namespace orecode {

namespace {

/// Flat q x q operation tables so the inner search loops are pure lookups.
struct FlatField {
    int q;
    std::vector<uint8_t> add;  // q*q
    std::vector<uint8_t> mul;  // q*q
    std::vector<uint8_t> neg;  // q
    std::vector<uint8_t> inv;  // q (inv[0] unused)

    explicit FlatField(const FieldSpec& F) : q(static_cast<int>(F.order())) {
        if (q > 256) throw BudgetExceeded("distance engines support q <= 256");
        add.resize(q * q);
        mul.resize(q * q);
        neg.resize(q);
        inv.resize(q);
        for (int a = 0; a < q; ++a) {
            neg[a] = static_cast<uint8_t>(F.neg_rep(a));
            if (a) inv[a] = static_cast<uint8_t>(F.inv_rep(a));
            for (int b = 0; b < q; ++b) {
                add[a * q + b] = static_cast<uint8_t>(F.add_rep(a, b));
                mul[a * q + b] = static_cast<uint8_t>(F.mul_rep(a, b));
            }
        }
    }
};

constexpr int kMaxW = 8;

struct Witness {
    std::vector<int> columns;
    std::vector<uint8_t> coefficients;  // coefficient per column, all nonzero
};

/// Depth-first search over index-increasing column subsets of size exactly w,
/// reusing the echelon form of the prefix. Every (w-1)-prefix is known
/// independent because smaller levels ran first, so a zero reduction at depth
/// w-1 is exactly a minimal dependent w-set. Returns the lexicographically
/// first witness with first index in [first_lo, first_hi).
class ColumnSearch {
  public:
    ColumnSearch(const FlatField& ff, const std::vector<std::vector<uint8_t>>& cols, int w)
        : ff_(ff), cols_(cols), rho_(static_cast<int>(cols.empty() ? 0 : cols[0].size())), w_(w) {
        levels_.resize(w);
        for (auto& lv : levels_) lv.vec.resize(rho_);
    }

    std::optional<Witness> run(int first_lo, int first_hi) {
        const int n = static_cast<int>(cols_.size());
        for (int first = first_lo; first < first_hi; ++first) {
            if (descend(0, first)) {
                Witness wit;
                for (int d = 0; d < w_; ++d) wit.columns.push_back(chosen_[d]);
                wit.coefficients = dependency_;
                return wit;
            }
            if (w_ == 1) continue;
            if (n - first - 1 < w_ - 1) break;  // not enough columns left
        }
        return std::nullopt;
    }

  private:
    struct Level {
        std::vector<uint8_t> vec;            // reduced column, pivot normalized to 1
        int pivot = -1;
        std::array<uint8_t, kMaxW> expr{};   // expression in the chosen columns
    };

    // Returns true when a dependent set completing chosen_[0..depth-1] with
    // column `idx` (and deeper picks) was found.
    bool descend(int depth, int idx) {
        const int q = ff_.q;
        Level& lv = levels_[depth];
        lv.vec = cols_[idx];
        lv.expr.fill(0);
        lv.expr[depth] = 1;
        for (int d = 0; d < depth; ++d) {
            const Level& prev = levels_[d];
            uint8_t c = lv.vec[prev.pivot];
            if (!c) continue;
            for (int r = 0; r < rho_; ++r)
                lv.vec[r] = ff_.add[lv.vec[r] * q + ff_.mul[ff_.neg[c] * q + prev.vec[r]]];
            for (int t = 0; t <= d; ++t)
                lv.expr[t] = ff_.add[lv.expr[t] * q + ff_.mul[ff_.neg[c] * q + prev.expr[t]]];
        }
        int pivot = -1;
        for (int r = 0; r < rho_; ++r) {
            if (lv.vec[r]) {
                pivot = r;
                break;
            }
        }
        chosen_[depth] = idx;
        if (pivot < 0) {
            if (depth != w_ - 1) return false;  // smaller dependency: certified impossible
            dependency_.assign(lv.expr.begin(), lv.expr.begin() + w_);
            return true;
        }
        if (depth == w_ - 1) return false;
        uint8_t pinv = ff_.inv[lv.vec[pivot]];
        for (int r = 0; r < rho_; ++r) lv.vec[r] = ff_.mul[pinv * q + lv.vec[r]];
        for (int t = 0; t <= depth; ++t) lv.expr[t] = ff_.mul[pinv * q + lv.expr[t]];
        lv.pivot = pivot;
        const int n = static_cast<int>(cols_.size());
        for (int next = idx + 1; next < n; ++next) {
            if (n - next < w_ - depth - 1) break;
            if (descend(depth + 1, next)) return true;
        }
        return false;
    }

    const FlatField& ff_;
    const std::vector<std::vector<uint8_t>>& cols_;
    int rho_;
    int w_;
    std::vector<Level> levels_;
    std::array<int, kMaxW> chosen_{};
    std::vector<uint8_t> dependency_;
};

}  // namespace

DistanceReport min_distance_columns(const MatrixOverFq& parity, int w_max) {
    if (parity.cols() < 1) throw InvalidParameters("parity matrix must have columns");
    if (w_max < 1 || w_max > kMaxW)
        throw BudgetExceeded("w_max must be in [1, " + std::to_string(kMaxW) + "]");
    const FieldSpecPtr& spec = parity.spec();
    FlatField ff(*spec);
    const int n = parity.cols();
    const int rho = parity.rows();

    std::vector<std::vector<uint8_t>> cols(n, std::vector<uint8_t>(rho));
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < rho; ++r) cols[c][r] = static_cast<uint8_t>(parity.rep_at(r, c));

    DistanceReport report;
    report.method = DistanceMethod::ColumnSearch;

    for (int w = 1; w <= std::min(w_max, n); ++w) {
        int workers = std::min(worker_count(), n);
        std::vector<std::optional<Witness>> results(workers);
        if (workers <= 1) {
            results.resize(1);
            results[0] = ColumnSearch(ff, cols, w).run(0, n);
        } else {
            std::vector<std::thread> threads;
            int chunk = (n + workers - 1) / workers;
            for (int t = 0; t < workers; ++t) {
                int lo = t * chunk, hi = std::min(n, lo + chunk);
                if (lo >= hi) break;
                threads.emplace_back([&, t, lo, hi] {
                    ColumnSearch search(ff, cols, w);
                    results[t] = search.run(lo, hi);
                });
            }
            for (auto& th : threads) th.join();
        }
        std::optional<Witness> best;
        for (const auto& r : results) {
            if (!r) continue;
            if (!best || r->columns < best->columns) best = r;
        }
        if (best) {
            report.d = w;
            report.lower_bound_certified = w - 1;
            report.witness_columns = best->columns;
            // Reconstruct the codeword witness and re-verify it against H.
            report.witness_codeword.assign(n, spec->zero());
            int nonzero = 0;
            for (int t = 0; t < w; ++t) {
                uint8_t coeff = best->coefficients[t];
                if (coeff) ++nonzero;
                report.witness_codeword[best->columns[t]] = spec->element_from_rep(coeff);
            }
            if (nonzero != w)
                throw InvalidParameters("internal: dependent-set witness has a zero coefficient");
            for (int r = 0; r < rho; ++r) {
                uint32_t acc = 0;
                for (int t = 0; t < w; ++t)
                    acc = spec->add_rep(
                        acc, spec->mul_rep(parity.rep_at(r, best->columns[t]),
                                           report.witness_codeword[best->columns[t]].rep()));
                if (acc) throw InvalidParameters("internal: witness fails the parity check");
            }
            return report;
        }
        report.lower_bound_certified = w;
    }
    report.d = -1;  // inconclusive: d > w_max
    return report;
}

DistanceReport min_distance_exhaustive(const MatrixOverFq& generator, uint64_t budget) {
    const int k = generator.rows();
    const int n = generator.cols();
    if (k < 1 || n < 1) throw InvalidParameters("generator matrix must be non-empty");
    const FieldSpecPtr& spec = generator.spec();
    const uint64_t q = spec->order();
    uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        count *= q;
        if (count > budget)
            throw BudgetExceeded("q^k exceeds the exhaustive enumeration budget");
    }
    FlatField ff(*spec);

    std::vector<std::vector<uint8_t>> rows(k, std::vector<uint8_t>(n));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) rows[r][c] = static_cast<uint8_t>(generator.rep_at(r, c));

    int best_weight = n + 1;
    std::vector<uint8_t> best_word;
    // DFS over message digits, sharing codeword prefixes between siblings.
    std::vector<std::vector<uint8_t>> partial(k + 1, std::vector<uint8_t>(n, 0));
    std::vector<int> digit(k, 0);
    int depth = 0;
    std::vector<bool> zero_prefix(k + 1, true);
    while (depth >= 0) {
        if (depth == k) {
            if (!zero_prefix[depth]) {
                int weight = 0;
                for (int c = 0; c < n; ++c)
                    if (partial[depth][c]) ++weight;
                // weight 0 from a nonzero message means dependent generator
                // rows; the zero codeword never counts towards the distance.
                if (weight > 0 && weight < best_weight) {
                    best_weight = weight;
                    best_word = partial[depth];
                }
            }
            --depth;
            continue;
        }
        if (digit[depth] >= static_cast<int>(q)) {
            digit[depth] = 0;
            --depth;
            continue;
        }
        int c = digit[depth]++;
        const std::vector<uint8_t>& src = partial[depth];
        std::vector<uint8_t>& dst = partial[depth + 1];
        if (c == 0) {
            dst = src;
        } else {
            for (int j = 0; j < n; ++j)
                dst[j] = ff.add[src[j] * ff.q + ff.mul[c * ff.q + rows[depth][j]]];
        }
        zero_prefix[depth + 1] = zero_prefix[depth] && (c == 0);
        ++depth;
    }

    DistanceReport report;
    report.method = DistanceMethod::Exhaustive;
    report.d = best_weight <= n ? best_weight : -1;
    report.lower_bound_certified = report.d >= 0 ? report.d - 1 : n;
    if (report.d >= 0) {
        report.witness_codeword.reserve(n);
        for (int c = 0; c < n; ++c)
            report.witness_codeword.push_back(spec->element_from_rep(best_word[c]));
        for (int c = 0; c < n; ++c)
            if (best_word[c]) report.witness_columns.push_back(c);
    }
    return report;
}

BoundClassification classify_bound(int n, int k, int d) {
    if (n < 1 || k < 1 || k > n || d < 1 || d > n)
        throw InvalidParameters("need 0 < k <= n and 1 <= d <= n");
    int slack = n - k + 1 - d;
    if (slack < 0) throw InvalidParameters("d violates the Singleton bound");
    BoundKind kind = slack == 0 ? BoundKind::MDS
                                : (slack == 1 ? BoundKind::AlmostMDS : BoundKind::Neither);
    return {kind, slack};
}

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::MDS: return "MDS";
        case BoundKind::AlmostMDS: return "almost-MDS";
        case BoundKind::Neither: return "neither";
    }
    return "?";
}

}  // namespace orecode
