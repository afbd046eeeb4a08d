#include "orecode/css.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

#include "orecode/util.hpp"

namespace orecode {

std::string QuantumParams::str() const {
    std::ostringstream out;
    out << "[[" << n_q << "," << k_q << "," << d_q << "]]_" << q;
    return out.str();
}

QuantumParams quantum_params_from_classical(int n, int k, int d, uint32_t q) {
    if (n < 1 || k < 1 || k > n || d < 1) throw InvalidParameters("bad classical parameters");
    QuantumParams params;
    params.n_q = n;
    params.k_q = 2 * k - n;
    params.d_q = d;
    params.q = q;
    return params;
}

QuantumParams quantum_params_from_gamma(const GammaCyclicCode& c, int d_h) {
    int failing = -1;
    if (!c.dual_containing(&failing))
        throw NotDualContaining("component " + std::to_string(failing) +
                                " is not dual-containing");
    const int big_n = c.rqs()->components() * c.n();
    return quantum_params_from_classical(big_n, c.total_dimension(), d_h,
                                         c.rqs()->field()->order());
}

std::string coset_count(int n, int k1, int k2, int p, int m) {
    if (k1 + k2 < n) throw InvalidParameters("coset count needs k1 + k2 >= n");
    if (n < 1 || k1 > n || k2 > n || p < 2 || m < 1)
        throw InvalidParameters("bad coset-count parameters");
    return pow_decimal(static_cast<uint64_t>(p),
                       static_cast<uint64_t>(m) * static_cast<uint64_t>(k1 + k2 - n));
}

PauliVector::PauliVector(std::vector<FieldElement> a, std::vector<FieldElement> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) throw DimensionMismatch("X and Z parts must have equal length");
    if (a_.empty()) throw InvalidParameters("Pauli vector needs n >= 1");
}

PauliVector PauliVector::zero(const FieldSpecPtr& spec, int n) {
    return PauliVector(std::vector<FieldElement>(n, spec->zero()),
                       std::vector<FieldElement>(n, spec->zero()));
}

PauliVector PauliVector::parse(const FieldSpecPtr& spec, const std::string& text) {
    size_t open = text.find('[');
    size_t bar = text.find('|');
    size_t close = text.rfind(']');
    if (open == std::string::npos || bar == std::string::npos || close == std::string::npos ||
        !(open < bar && bar < close))
        throw SyntaxError("Pauli literal must look like [a_1,...,a_n | b_1,...,b_n]", 1, 1);
    auto parse_list = [&](const std::string& chunk) {
        std::vector<FieldElement> out;
        std::stringstream ss(chunk);
        std::string item;
        while (std::getline(ss, item, ',')) {
            size_t b = item.find_first_not_of(" \t");
            size_t e = item.find_last_not_of(" \t");
            if (b == std::string::npos) throw SyntaxError("empty entry in Pauli literal", 1, 1);
            out.push_back(spec->parse_literal(item.substr(b, e - b + 1)));
        }
        return out;
    };
    return PauliVector(parse_list(text.substr(open + 1, bar - open - 1)),
                       parse_list(text.substr(bar + 1, close - bar - 1)));
}

int PauliVector::weight() const {
    int w = 0;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!a_[i].is_zero() || !b_[i].is_zero()) ++w;
    return w;
}

PauliVector PauliVector::operator+(const PauliVector& o) const {
    if (n() != o.n()) throw DimensionMismatch("Pauli vector length mismatch");
    std::vector<FieldElement> a, b;
    a.reserve(a_.size());
    b.reserve(b_.size());
    for (size_t i = 0; i < a_.size(); ++i) {
        a.push_back(a_[i] + o.a_[i]);
        b.push_back(b_[i] + o.b_[i]);
    }
    return PauliVector(std::move(a), std::move(b));
}

bool PauliVector::operator==(const PauliVector& o) const {
    if (n() != o.n()) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i] || b_[i] != o.b_[i]) return false;
    return true;
}

std::string PauliVector::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < a_.size(); ++i) {
        if (i) out << ",";
        out << a_[i].str();
    }
    out << " | ";
    for (size_t i = 0; i < b_.size(); ++i) {
        if (i) out << ",";
        out << b_[i].str();
    }
    out << "]";
    return out.str();
}

namespace {

MatrixOverFq block_check_matrix(const MatrixOverFq& h1, const MatrixOverFq& h2) {
    const int n = h1.cols();
    MatrixOverFq check(h1.spec(), h1.rows() + h2.rows(), 2 * n);
    for (int r = 0; r < h1.rows(); ++r)
        for (int c = 0; c < n; ++c) check.set_rep(r, c, h1.rep_at(r, c));
    for (int r = 0; r < h2.rows(); ++r)
        for (int c = 0; c < n; ++c) check.set_rep(h1.rows() + r, n + c, h2.rep_at(r, c));
    return check;
}

MatrixOverFq expand_block(const MatrixOverFq& h, const FieldElement& alpha, int m) {
    MatrixOverFq out(h.spec(), 0, 0);
    FieldElement scale = h.spec()->one();
    for (int i = 0; i < m; ++i) {
        for (int r = 0; r < h.rows(); ++r) {
            std::vector<FieldElement> row;
            row.reserve(h.cols());
            for (int c = 0; c < h.cols(); ++c) row.push_back(scale * h.at(r, c));
            out.append_row(row);
        }
        scale = scale * alpha;
    }
    return out;
}

}  // namespace

CssCode CssCode::build(MatrixOverFq h1, MatrixOverFq h2) {
    if (h1.cols() != h2.cols()) throw DimensionMismatch("H1 and H2 must share the code length");
    if (h1.rows() < 1 || h2.rows() < 1) throw InvalidParameters("parity matrices must be non-empty");
    if (!(h2 * h1.transpose()).is_zero())
        throw NotDualContaining("H2 * H1^T != 0: the dual-containing condition fails");
    if (h1.rank() != h1.rows() || h2.rank() != h2.rows())
        throw InvalidParameters("parity matrices must have full row rank");
    CssCode css;
    css.check_ = block_check_matrix(h1, h2);
    const int m = h1.spec()->m();
    if (m == 1) {
        css.expanded_ = css.check_;
        css.expanded_h1_rows_ = h1.rows();
    } else {
        FieldElement alpha = h1.spec()->generator();
        css.expanded_ = block_check_matrix(expand_block(h1, alpha, m), expand_block(h2, alpha, m));
        css.expanded_h1_rows_ = h1.rows() * m;
    }
    css.h1_ = std::move(h1);
    css.h2_ = std::move(h2);
    return css;
}

std::string CssCode::size_power() const {
    return std::to_string(h1_.spec()->order()) + "^" + std::to_string(k1() + k2() - n());
}

std::string CssCode::size_decimal() const {
    int e = k1() + k2() - n();
    if (e < 0) throw InvalidParameters("negative quantum dimension exponent");
    return pow_decimal(h1_.spec()->order(), static_cast<uint64_t>(e));
}

MatrixOverFq CssCode::expand_check_matrix(const FieldElement& alpha) const {
    const FieldSpecPtr& spec = h1_.spec();
    if (!alpha.spec()->same_as(*spec)) throw SpecMismatch("alpha from the wrong field");
    if (alpha.is_zero()) throw NotPrimitive("alpha must be a primitive element");
    // alpha = w^k generates F_q^* iff gcd(k, q-1) = 1.
    int k = spec->log_of(alpha.rep());
    int qm1 = static_cast<int>(spec->order()) - 1;
    if (qm1 > 1 && std::gcd(k, qm1) != 1) throw NotPrimitive("alpha must be a primitive element");
    const int m = spec->m();
    return block_check_matrix(expand_block(h1_, alpha, m), expand_block(h2_, alpha, m));
}

namespace {

std::vector<int> trace_syndrome(const MatrixOverFq& rows, int n, const PauliVector& e) {
    std::vector<int> out;
    out.reserve(rows.rows());
    const FieldSpecPtr& spec = rows.spec();
    for (int r = 0; r < rows.rows(); ++r) {
        uint32_t acc = 0;
        for (int c = 0; c < n; ++c) {
            // stabilizer row [a|b] against error [kappa|chi]: a.chi - b.kappa
            acc = spec->add_rep(acc, spec->mul_rep(rows.rep_at(r, c), e.b()[c].rep()));
            acc = spec->sub_rep(acc, spec->mul_rep(rows.rep_at(r, n + c), e.a()[c].rep()));
        }
        out.push_back(field_trace_int(spec->element_from_rep(acc)));
    }
    return out;
}

}  // namespace

std::vector<int> CssCode::syndrome(const PauliVector& e) const {
    if (e.n() != n()) throw DimensionMismatch("error length must equal the code length");
    return trace_syndrome(expanded_, n(), e);
}

std::vector<int> CssCode::syndrome_unexpanded(const PauliVector& e) const {
    if (e.n() != n()) throw DimensionMismatch("error length must equal the code length");
    return trace_syndrome(check_, n(), e);
}

std::vector<FieldElement> CssCode::symplectic_syndrome(const PauliVector& e) const {
    if (e.n() != n()) throw DimensionMismatch("error length must equal the code length");
    const FieldSpecPtr& spec = check_.spec();
    std::vector<FieldElement> out;
    out.reserve(check_.rows());
    for (int r = 0; r < check_.rows(); ++r) {
        uint32_t acc = 0;
        for (int c = 0; c < n(); ++c) {
            acc = spec->add_rep(acc, spec->mul_rep(check_.rep_at(r, c), e.b()[c].rep()));
            acc = spec->sub_rep(acc, spec->mul_rep(check_.rep_at(r, n() + c), e.a()[c].rep()));
        }
        out.push_back(spec->element_from_rep(acc));
    }
    return out;
}

bool CssCode::build_syndrome_table(int t, uint64_t budget) {
    const FieldSpecPtr& spec = h1_.spec();
    const uint64_t q = spec->order();
    const int nn = n();
    table_.clear();
    x_table_.clear();
    z_table_.clear();
    collisions_ = 0;
    table_weight_ = t;

    // Entry estimate: sum_{w<=t} C(n,w) (q^2-1)^w.
    long double estimate = 0;
    for (int w = 0; w <= t; ++w) {
        long double binom = 1;
        for (int i = 0; i < w; ++i) binom = binom * (nn - i) / (i + 1);
        long double options = 1;
        for (int i = 0; i < w; ++i) options *= static_cast<long double>(q * q - 1);
        estimate += binom * options;
    }

    if (estimate <= static_cast<long double>(budget)) {
        // Non-decreasing weight order makes the stored error minimal-weight.
        PauliVector zero = PauliVector::zero(spec, nn);
        table_[syndrome(zero)] = zero;
        std::vector<int> positions;
        std::vector<std::pair<uint32_t, uint32_t>> values;  // (a,b) per chosen position
        auto emit = [&]() {
            PauliVector e = PauliVector::zero(spec, nn);
            std::vector<FieldElement> a = e.a(), b = e.b();
            for (size_t i = 0; i < positions.size(); ++i) {
                a[positions[i]] = spec->element_from_rep(values[i].first);
                b[positions[i]] = spec->element_from_rep(values[i].second);
            }
            PauliVector err(std::move(a), std::move(b));
            auto key = syndrome(err);
            auto [it, inserted] = table_.try_emplace(std::move(key), err);
            if (!inserted) ++collisions_;
        };
        // DFS over supports of exact weight w = 1..t, values lexicographic.
        std::function<void(int, int, int)> rec = [&](int w, int start, int chosen) {
            if (chosen == w) {
                emit();
                return;
            }
            for (int pos = start; pos <= nn - (w - chosen); ++pos) {
                positions.push_back(pos);
                for (uint32_t av = 0; av < q; ++av) {
                    for (uint32_t bv = 0; bv < q; ++bv) {
                        if (av == 0 && bv == 0) continue;
                        values.emplace_back(av, bv);
                        rec(w, pos + 1, chosen + 1);
                        values.pop_back();
                    }
                }
                positions.pop_back();
            }
        };
        for (int w = 1; w <= t; ++w) rec(w, 0, 0);
        return true;
    }

    // Degraded mode: classical per-block tables (X errors keyed by the H2
    // rows of the expanded syndrome, Z errors by the H1 rows), when they fit.
    long double classical = 0;
    for (int w = 0; w <= t; ++w) {
        long double binom = 1;
        for (int i = 0; i < w; ++i) binom = binom * (nn - i) / (i + 1);
        long double options = 1;
        for (int i = 0; i < w; ++i) options *= static_cast<long double>(q - 1);
        classical += binom * options;
    }
    if (2 * classical > static_cast<long double>(budget)) return false;

    std::vector<FieldElement> zero_vec(nn, spec->zero());
    auto slice = [&](const std::vector<int>& s, bool h2_part) {
        if (h2_part) return std::vector<int>(s.begin() + expanded_h1_rows_, s.end());
        return std::vector<int>(s.begin(), s.begin() + expanded_h1_rows_);
    };
    std::vector<int> positions;
    std::vector<uint32_t> vals;
    std::function<void(int, int, int, bool)> rec2 = [&](int w, int start, int chosen, bool xpart) {
        if (chosen == w) {
            std::vector<FieldElement> e = zero_vec;
            for (size_t i = 0; i < positions.size(); ++i)
                e[positions[i]] = spec->element_from_rep(vals[i]);
            PauliVector err = xpart ? PauliVector(e, zero_vec) : PauliVector(zero_vec, e);
            auto key = slice(syndrome(err), xpart);
            auto& tab = xpart ? x_table_ : z_table_;
            tab.try_emplace(std::move(key), std::move(e));
            return;
        }
        for (int pos = start; pos <= nn - (w - chosen); ++pos) {
            positions.push_back(pos);
            for (uint32_t v = 1; v < q; ++v) {
                vals.push_back(v);
                rec2(w, pos + 1, chosen + 1, xpart);
                vals.pop_back();
            }
            positions.pop_back();
        }
    };
    for (bool xpart : {true, false})
        for (int w = 0; w <= t; ++w) rec2(w, 0, 0, xpart);
    return false;
}

std::optional<PauliVector> CssCode::decode_basis_error(const std::vector<int>& syndrome) const {
    if (static_cast<int>(syndrome.size()) != expanded_.rows())
        throw DimensionMismatch("syndrome length mismatch");
    if (!table_.empty()) {
        auto it = table_.find(syndrome);
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }
    if (!x_table_.empty() || !z_table_.empty()) {
        std::vector<int> h1_slice(syndrome.begin(), syndrome.begin() + expanded_h1_rows_);
        std::vector<int> h2_slice(syndrome.begin() + expanded_h1_rows_, syndrome.end());
        auto xit = x_table_.find(h2_slice);
        auto zit = z_table_.find(h1_slice);
        if (xit == x_table_.end() || zit == z_table_.end()) return std::nullopt;
        return PauliVector(xit->second, zit->second);
    }
    return std::nullopt;
}

OperatorAlgebraReport verify_operator_algebra(int p, int m) {
    uint64_t q64 = 1;
    for (int i = 0; i < m; ++i) q64 *= static_cast<uint64_t>(p);
    if (q64 > 16) throw BudgetExceeded("operator verification supports p^m <= 16");
    auto spec = FieldSpec::create(p, m);
    const int q = static_cast<int>(q64);

    using Cx = std::complex<double>;
    using Matrix = std::vector<Cx>;  // row-major q x q
    const double tau = 2.0 * std::numbers::pi_v<double> / p;

    auto x_op = [&](uint32_t kappa) {
        Matrix mat(q * q, Cx(0, 0));
        for (int theta = 0; theta < q; ++theta)
            mat[spec->add_rep(kappa, theta) * q + theta] = Cx(1, 0);
        return mat;
    };
    auto z_op = [&](uint32_t chi) {
        Matrix mat(q * q, Cx(0, 0));
        for (int theta = 0; theta < q; ++theta) {
            int tr = field_trace_int(spec->element_from_rep(spec->mul_rep(chi, theta)));
            mat[theta * q + theta] = std::polar(1.0, tau * tr);
        }
        return mat;
    };
    auto mul = [&](const Matrix& a, const Matrix& b) {
        Matrix out(q * q, Cx(0, 0));
        for (int i = 0; i < q; ++i)
            for (int k = 0; k < q; ++k) {
                Cx aik = a[i * q + k];
                if (aik == Cx(0, 0)) continue;
                for (int j = 0; j < q; ++j) out[i * q + j] += aik * b[k * q + j];
            }
        return out;
    };
    auto dagger = [&](const Matrix& a) {
        Matrix out(q * q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) out[j * q + i] = std::conj(a[i * q + j]);
        return out;
    };
    auto max_diff = [&](const Matrix& a, const Matrix& b) {
        double r = 0;
        for (int i = 0; i < q * q; ++i) r = std::max(r, std::abs(a[i] - b[i]));
        return r;
    };
    Matrix identity(q * q, Cx(0, 0));
    for (int i = 0; i < q; ++i) identity[i * q + i] = Cx(1, 0);

    OperatorAlgebraReport report;
    report.p = p;
    report.m = m;
    double residual = 0;

    std::vector<Matrix> xs(q), zs(q);
    for (int a = 0; a < q; ++a) {
        xs[a] = x_op(a);
        zs[a] = z_op(a);
        residual = std::max(residual, max_diff(mul(xs[a], dagger(xs[a])), identity));
        residual = std::max(residual, max_diff(mul(zs[a], dagger(zs[a])), identity));
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            residual = std::max(residual, max_diff(mul(xs[a], xs[b]), xs[spec->add_rep(a, b)]));
            residual = std::max(residual, max_diff(mul(zs[a], zs[b]), zs[spec->add_rep(a, b)]));
            // Z(chi) X(kappa) = omega^{Tr(chi kappa)} X(kappa) Z(chi)
            int tr = field_trace_int(spec->element_from_rep(spec->mul_rep(b, a)));
            Matrix rhs = mul(xs[a], zs[b]);
            Cx phase = std::polar(1.0, tau * tr);
            for (auto& v : rhs) v *= phase;
            residual = std::max(residual, max_diff(mul(zs[b], xs[a]), rhs));
        }
    }
    report.max_residual = residual;
    report.ok = residual < 1e-10;
    return report;
}

}  // namespace orecode
