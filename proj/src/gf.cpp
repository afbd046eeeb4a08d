#include "orecode/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace orecode {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SpecMismatch: return "SpecMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::RingTagMismatch: return "RingTagMismatch";
        case ErrorCode::ZeroDivisor: return "ZeroDivisor";
        case ErrorCode::NotAFactor: return "NotAFactor";
        case ErrorCode::NotACode: return "NotACode";
        case ErrorCode::ZeroCode: return "ZeroCode";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InvalidParameters: return "InvalidParameters";
        case ErrorCode::NotDualContaining: return "NotDualContaining";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownSymbol: return "UnknownSymbol";
        case ErrorCode::ExponentOverflow: return "ExponentOverflow";
        case ErrorCode::UnknownSubject: return "UnknownSubject";
    }
    return "Error";
}

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense F_p[y] arithmetic on int vectors (ascending), used only during
// FieldSpec construction.
int poly_deg(const std::vector<int>& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[d] == 0) --d;
    return d;
}

std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
    int dg = poly_deg(g);
    int inv_lead = 1;
    for (int i = 1; i < p; ++i)
        if (g[dg] * i % p == 1) inv_lead = i;
    while (poly_deg(f) >= dg) {
        int df = poly_deg(f);
        int c = f[df] * inv_lead % p;
        for (int i = 0; i <= dg; ++i) {
            f[df - dg + i] = ((f[df - dg + i] - c * g[i]) % p + p) % p;
        }
    }
    return f;
}

bool poly_is_zero(const std::vector<int>& f) { return poly_deg(f) < 0; }

bool modulus_irreducible(const std::vector<int>& modulus, int p, int m) {
    if (m == 1) return true;
    // Trial division by every monic polynomial of degree <= m/2.
    for (int d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<int> g(d + 1, 0);
            uint64_t v = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_mod(modulus, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<int> FieldSpec::default_modulus(int p, int m) {
    // Conway polynomials (ascending coefficients) for the field sizes this
    // artifact works with; callers may always supply their own modulus.
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 1}, {9, 1}},
        {{13, 1}, {11, 1}},
    };
    auto it = table.find({p, m});
    if (it == table.end()) return {};
    return it->second;
}

std::shared_ptr<const FieldSpec> FieldSpec::create(int p, int m, std::vector<int> modulus,
                                                   std::string symbol) {
    if (!is_prime(p)) throw InvalidParameters("characteristic must be prime, got " + std::to_string(p));
    if (m < 1) throw InvalidParameters("extension degree must be >= 1");

    uint64_t q64 = 1;
    for (int i = 0; i < m; ++i) {
        q64 *= static_cast<uint64_t>(p);
        if (q64 > (1u << 20))
            throw InvalidParameters("field order exceeds the 2^20 table budget");
    }

    if (modulus.empty()) {
        modulus = default_modulus(p, m);
        if (modulus.empty())
            throw InvalidParameters("no shipped modulus for p=" + std::to_string(p) + ", m=" +
                                    std::to_string(m) + "; supply one explicitly");
    }
    if (static_cast<int>(modulus.size()) != m + 1 || modulus[m] != 1)
        throw InvalidParameters("modulus must be monic of degree m");
    for (int& c : modulus) c = ((c % p) + p) % p;
    if (modulus[m] != 1) throw InvalidParameters("modulus must be monic of degree m");
    if (!modulus_irreducible(modulus, p, m))
        throw InvalidParameters("modulus is reducible over F_p");

    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p_ = p;
    spec->m_ = m;
    spec->q_ = static_cast<uint32_t>(q64);
    spec->modulus_ = modulus;
    spec->symbol_ = std::move(symbol);
    spec->pow_p_.resize(m + 1);
    spec->pow_p_[0] = 1;
    for (int i = 1; i <= m; ++i) spec->pow_p_[i] = spec->pow_p_[i - 1] * static_cast<uint32_t>(p);

    // exp/log tables by repeated multiplication with w; detects non-primitive
    // moduli (the w^k notation everywhere presumes w generates F_q^*).
    spec->exp_.assign(spec->q_ - 1, 0);
    spec->log_.assign(spec->q_, -1);
    uint32_t w_rep = (m >= 2) ? spec->pow_p_[1] : static_cast<uint32_t>(((-modulus[0] % p) + p) % p);
    uint32_t e = 1;
    for (uint32_t k = 0; k < spec->q_ - 1; ++k) {
        if (spec->log_[e] != -1)
            throw NotPrimitive("the residue class of x does not generate F_q^*");
        spec->exp_[k] = e;
        spec->log_[e] = static_cast<int32_t>(k);
        e = spec->mul_raw(e, w_rep);
    }
    if (e != 1) throw NotPrimitive("the residue class of x does not generate F_q^*");
    return spec;
}

std::shared_ptr<const FieldSpec> FieldSpec::from_order(uint64_t q) {
    if (q < 2) throw InvalidParameters("field order must be >= 2");
    for (int p = 2; static_cast<uint64_t>(p) <= q; ++p) {
        if (!is_prime(p)) continue;
        if (q % p) continue;
        uint64_t v = q;
        int m = 0;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v != 1) throw InvalidParameters(std::to_string(q) + " is not a prime power");
        return create(p, m);
    }
    throw InvalidParameters(std::to_string(q) + " is not a prime power");
}

bool FieldSpec::same_as(const FieldSpec& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

uint32_t FieldSpec::mul_raw(uint32_t a, uint32_t b) const {
    // Schoolbook product of polynomial-basis digit vectors, reduced mod the
    // modulus. Only used to bootstrap the exp table.
    std::vector<int> prod(2 * m_ - 1, 0);
    std::vector<int> da = coeffs_of(a), db = coeffs_of(b);
    for (int i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int d = 2 * m_ - 2; d >= m_; --d) {
        int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int i = 0; i <= m_; ++i) {
            int idx = d - m_ + i;
            prod[idx] = ((prod[idx] - c * modulus_[i]) % p_ + p_) % p_;
        }
    }
    uint32_t rep = 0;
    for (int i = m_ - 1; i >= 0; --i) rep = rep * p_ + static_cast<uint32_t>(prod[i]);
    return rep;
}

std::vector<int> FieldSpec::coeffs_of(uint32_t rep) const {
    std::vector<int> out(m_);
    for (int i = 0; i < m_; ++i) {
        out[i] = static_cast<int>(rep % p_);
        rep /= p_;
    }
    return out;
}

uint32_t FieldSpec::add_rep(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t rep = 0;
    for (int i = 0; i < m_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        rep += ((da + db) % p_) * pow_p_[i];
    }
    return rep;
}

uint32_t FieldSpec::neg_rep(uint32_t a) const {
    if (p_ == 2) return a;
    uint32_t rep = 0;
    for (int i = 0; i < m_; ++i) {
        uint32_t da = a % p_;
        a /= p_;
        rep += ((p_ - da) % p_) * pow_p_[i];
    }
    return rep;
}

uint32_t FieldSpec::sub_rep(uint32_t a, uint32_t b) const { return add_rep(a, neg_rep(b)); }

uint32_t FieldSpec::mul_rep(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t k = static_cast<uint64_t>(log_[a]) + static_cast<uint64_t>(log_[b]);
    return exp_[k % (q_ - 1)];
}

uint32_t FieldSpec::inv_rep(uint32_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    uint32_t k = static_cast<uint32_t>(log_[a]);
    return exp_[(q_ - 1 - k) % (q_ - 1)];
}

uint32_t FieldSpec::div_rep(uint32_t a, uint32_t b) const {
    if (b == 0) throw DivisionByZero("division by zero");
    if (a == 0) return 0;
    uint64_t k = static_cast<uint64_t>(log_[a]) + (q_ - 1 - log_[b]);
    return exp_[k % (q_ - 1)];
}

uint32_t FieldSpec::pow_rep(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t k = (static_cast<uint64_t>(log_[a]) % (q_ - 1)) * (e % (q_ - 1));
    return exp_[k % (q_ - 1)];
}

uint32_t FieldSpec::frobenius_rep(uint32_t a, int t) const {
    if (t < 0) throw InvalidParameters("frobenius power must be non-negative");
    if (a == 0 || t == 0) return a;
    // a = w^k maps to w^{k p^t}; exponents live mod q-1, so theta^m = id
    // falls out of the arithmetic rather than being special-cased.
    uint64_t pt = 1;
    for (int i = 0; i < t; ++i) pt = pt * static_cast<uint64_t>(p_) % (q_ - 1);
    uint64_t k = static_cast<uint64_t>(log_[a]) * pt;
    return exp_[k % (q_ - 1)];
}

int FieldSpec::log_of(uint32_t rep) const {
    if (rep == 0) throw DivisionByZero("as_power_of_w of the zero element");
    return log_[rep];
}

FieldElement FieldSpec::zero() const { return {shared_from_this(), 0}; }
FieldElement FieldSpec::one() const { return {shared_from_this(), 1}; }

FieldElement FieldSpec::generator() const {
    uint32_t w_rep = (m_ >= 2) ? pow_p_[1] : exp_[1 % (q_ - 1)];
    if (q_ == 2) w_rep = 1;
    return {shared_from_this(), w_rep};
}

FieldElement FieldSpec::from_int(int64_t n) const {
    int64_t r = ((n % p_) + p_) % p_;
    return {shared_from_this(), static_cast<uint32_t>(r)};
}

FieldElement FieldSpec::from_coeffs(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > m_)
        throw InvalidParameters("coefficient vector longer than extension degree");
    uint32_t rep = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        int c = ((coeffs[i] % p_) + p_) % p_;
        rep = rep * p_ + static_cast<uint32_t>(c);
    }
    return {shared_from_this(), rep};
}

FieldElement FieldSpec::from_power_of_w(uint64_t k) const {
    return {shared_from_this(), exp_[k % (q_ - 1)]};
}

FieldElement FieldSpec::element_from_rep(uint32_t rep) const {
    if (rep >= q_) throw InvalidParameters("element representation out of range");
    return {shared_from_this(), rep};
}

FieldElement FieldSpec::parse_literal(const std::string& text) const {
    if (text.empty()) throw UnknownSymbol("empty field literal");
    if (text == "0") return zero();
    if (text == symbol_) return generator();
    if (text.size() > symbol_.size() && text.compare(0, symbol_.size(), symbol_) == 0 &&
        text[symbol_.size()] == '^') {
        std::string expstr = text.substr(symbol_.size() + 1);
        if (expstr.empty() || !std::all_of(expstr.begin(), expstr.end(),
                                           [](unsigned char c) { return std::isdigit(c); }))
            throw UnknownSymbol("bad exponent in field literal '" + text + "'");
        if (expstr.size() > 12) throw ExponentOverflow("exponent too large in '" + text + "'");
        return from_power_of_w(std::stoull(expstr));
    }
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
        if (text.size() > 12) throw ExponentOverflow("integer literal too large in '" + text + "'");
        return from_int(static_cast<int64_t>(std::stoll(text)));
    }
    throw UnknownSymbol("unrecognized field literal '" + text + "'");
}

std::string FieldSpec::to_string(const FieldElement& x) const {
    if (x.is_zero()) return "0";
    if (x.rep() < static_cast<uint32_t>(p_)) return std::to_string(x.rep());
    int k = log_[x.rep()];
    if (k == 1) return symbol_;
    return symbol_ + "^" + std::to_string(k);
}

namespace detail {
void require_same_spec(const FieldElement& a, const FieldElement& b) {
    if (!a.spec() || !b.spec()) throw SpecMismatch("uninitialized field element");
    if (!a.spec()->same_as(*b.spec())) throw SpecMismatch("elements from different fields");
}
}  // namespace detail

FieldElement FieldElement::operator+(const FieldElement& o) const {
    detail::require_same_spec(*this, o);
    return {spec_, spec_->add_rep(rep_, o.rep_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    detail::require_same_spec(*this, o);
    return {spec_, spec_->sub_rep(rep_, o.rep_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    detail::require_same_spec(*this, o);
    return {spec_, spec_->mul_rep(rep_, o.rep_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    detail::require_same_spec(*this, o);
    return {spec_, spec_->div_rep(rep_, o.rep_)};
}

FieldElement FieldElement::operator-() const { return {spec_, spec_->neg_rep(rep_)}; }

FieldElement FieldElement::inverse() const { return {spec_, spec_->inv_rep(rep_)}; }

FieldElement FieldElement::pow(uint64_t e) const { return {spec_, spec_->pow_rep(rep_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    detail::require_same_spec(*this, o);
    return rep_ == o.rep_;
}

int FieldElement::as_power_of_w() const { return spec_->log_of(rep_); }

FieldElement frobenius(const FieldElement& a, int t) {
    return {a.spec(), a.spec()->frobenius_rep(a.rep(), t)};
}

DerivationSpec::DerivationSpec(int t, FieldElement beta) : t_(t), beta_(std::move(beta)) {
    if (!beta_.spec()) throw InvalidParameters("derivation beta must carry a field spec");
    if (t_ < 0 || t_ >= beta_.spec()->m())
        throw InvalidParameters("frobenius power t must satisfy 0 <= t < m");
}

FieldElement DerivationSpec::theta_iter(const FieldElement& a, int k) const {
    int m = a.spec()->m();
    int e = static_cast<int>((static_cast<int64_t>(t_) * k) % m);
    return frobenius(a, e);
}

FieldElement DerivationSpec::theta_inv_iter(const FieldElement& a, int k) const {
    int m = a.spec()->m();
    int e = static_cast<int>((static_cast<int64_t>(t_) * k) % m);
    return frobenius(a, (m - e) % m);
}

FieldElement DerivationSpec::apply(const FieldElement& a) const {
    if (beta_.is_zero()) return a.spec()->zero();
    return beta_ * (theta(a) - a);
}

bool DerivationSpec::operator==(const DerivationSpec& o) const {
    if (t_ != o.t_) return false;
    if (!beta_.spec() || !o.beta_.spec()) return !beta_.spec() && !o.beta_.spec();
    return beta_.spec()->same_as(*o.beta_.spec()) && beta_.rep() == o.beta_.rep();
}

FieldElement field_trace(const FieldElement& kappa) {
    const auto& spec = kappa.spec();
    FieldElement acc = spec->zero();
    FieldElement term = kappa;
    for (int i = 0; i < spec->m(); ++i) {
        acc = acc + term;
        term = frobenius(term, 1);
    }
    return acc;
}

int field_trace_int(const FieldElement& kappa) {
    FieldElement t = field_trace(kappa);
    if (!t.in_prime_subfield()) throw InvalidParameters("trace left the prime subfield");
    return static_cast<int>(t.rep());
}

}  // namespace orecode
