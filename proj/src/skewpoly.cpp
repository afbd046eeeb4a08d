#include "orecode/skewpoly.hpp"

#include <cctype>
#include <sstream>

namespace orecode {

SkewRing make_skew_ring(const FieldSpecPtr& field, int theta_power, const FieldElement& beta) {
    if (!beta.spec() || !beta.spec()->same_as(*field))
        throw SpecMismatch("beta must live in the ring's coefficient field");
    return SkewRing{field, DerivationSpec(theta_power, beta)};
}

namespace {
void require_same_ring(const SkewPoly& f, const SkewPoly& g) {
    if (f.ring() != g.ring()) throw RingTagMismatch("polynomials from different skew rings");
}
}  // namespace

SkewPoly::SkewPoly(SkewRing ring, std::vector<FieldElement> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    normalize();
}

void SkewPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::zero(const SkewRing& ring) { return SkewPoly(ring, {}); }

SkewPoly SkewPoly::one(const SkewRing& ring) { return SkewPoly(ring, {ring.field->one()}); }

SkewPoly SkewPoly::constant(const SkewRing& ring, const FieldElement& c) {
    return SkewPoly(ring, {c});
}

SkewPoly SkewPoly::monomial(const SkewRing& ring, const FieldElement& c, int degree) {
    if (degree < 0) throw InvalidParameters("monomial degree must be >= 0");
    std::vector<FieldElement> v(degree + 1, ring.field->zero());
    v[degree] = c;
    return SkewPoly(ring, std::move(v));
}

SkewPoly SkewPoly::x_pow_n_minus_1(const SkewRing& ring, int n) {
    if (n < 1) throw InvalidParameters("length must be >= 1");
    std::vector<FieldElement> v(n + 1, ring.field->zero());
    v[n] = ring.field->one();
    v[0] = -ring.field->one();
    return SkewPoly(ring, std::move(v));
}

FieldElement SkewPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return ring_.field->zero();
    return coeffs_[i];
}

FieldElement SkewPoly::leading_coeff() const {
    if (is_zero()) return ring_.field->zero();
    return coeffs_.back();
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    require_same_ring(*this, o);
    std::vector<FieldElement> out(std::max(coeffs_.size(), o.coeffs_.size()), ring_.field->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = out[i] + o.coeffs_[i];
    return SkewPoly(ring_, std::move(out));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator-() const {
    std::vector<FieldElement> out = coeffs_;
    for (auto& c : out) c = -c;
    return SkewPoly(ring_, std::move(out));
}

bool SkewPoly::operator==(const SkewPoly& o) const {
    if (ring_ != o.ring_) return false;
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

SkewPoly SkewPoly::scaled_left(const FieldElement& c) const {
    std::vector<FieldElement> out = coeffs_;
    for (auto& x : out) x = c * x;
    return SkewPoly(ring_, std::move(out));
}

SkewPoly SkewPoly::monicized() const {
    if (is_zero()) throw ZeroDivisor("cannot monicize the zero polynomial");
    if (is_monic()) return *this;
    return scaled_left(leading_coeff().inverse());
}

std::vector<FieldElement> SkewPoly::to_vector(int n) const {
    if (degree() >= n) throw DimensionMismatch("polynomial degree exceeds vector length");
    std::vector<FieldElement> v(n, ring_.field->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    return v;
}

SkewPoly SkewPoly::from_vector(const SkewRing& ring, const std::vector<FieldElement>& v) {
    return SkewPoly(ring, v);
}

std::string SkewPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const FieldElement& c = coeffs_[d];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        if (d == 0) {
            out << c.str();
        } else {
            if (!c.is_one()) out << c.str() << "*";
            out << "x";
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

SkewPoly x_times(const SkewPoly& f) {
    if (f.is_zero()) return f;
    const SkewRing& ring = f.ring();
    std::vector<FieldElement> out(f.degree() + 2, ring.field->zero());
    for (int i = 0; i <= f.degree(); ++i) {
        const FieldElement& c = f.coeff(i);
        if (c.is_zero()) continue;
        out[i + 1] = out[i + 1] + ring.theta(c);
        out[i] = out[i] + ring.im(c);
    }
    return SkewPoly(ring, std::move(out));
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    const SkewRing& ring = f.ring();
    if (f.is_zero() || g.is_zero()) return SkewPoly::zero(ring);
    // f*g = sum_i f_i * (x^i * g); left scalar multiples are untwisted.
    std::vector<FieldElement> acc(f.degree() + g.degree() + 1, ring.field->zero());
    SkewPoly xig = g;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i > 0) xig = x_times(xig);
        const FieldElement& fi = f.coeff(i);
        if (fi.is_zero()) continue;
        for (int j = 0; j <= xig.degree(); ++j) {
            const FieldElement& c = xig.coeff(j);
            if (!c.is_zero()) acc[j] = acc[j] + fi * c;
        }
    }
    return SkewPoly(ring, std::move(acc));
}

SkewPoly monomial_times_scalar(const SkewRing& ring, int n, const FieldElement& r) {
    if (n < 0) throw InvalidParameters("exponent must be >= 0");
    SkewPoly acc = SkewPoly::constant(ring, r);
    for (int i = 0; i < n; ++i) acc = x_times(acc);
    return acc;
}

DivModResult right_divmod(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    if (g.is_zero()) throw ZeroDivisor("right division by the zero polynomial");
    const SkewRing& ring = f.ring();
    const FieldSpec& F = *ring.field;
    const int dg = g.degree();
    if (f.degree() < dg) return {SkewPoly::zero(ring), f};
    const FieldElement gl_inv = g.leading_coeff().inverse();
    const int kmax = f.degree() - dg;

    // Shift table xg[k] = x^k * g, built incrementally; (c x^k) * g is then a
    // plain left scaling of xg[k]. Work on packed representations.
    std::vector<std::vector<uint32_t>> xg(kmax + 1);
    {
        std::vector<uint32_t> cur(dg + 1);
        for (int i = 0; i <= dg; ++i) cur[i] = g.coeff(i).rep();
        xg[0] = cur;
        for (int k = 1; k <= kmax; ++k) {
            std::vector<uint32_t> next(dg + k + 1, 0);
            for (int i = 0; i <= dg + k - 1; ++i) {
                uint32_t c = xg[k - 1][i];
                if (!c) continue;
                next[i + 1] = F.add_rep(next[i + 1], F.frobenius_rep(c, ring.derivation.t()));
                if (!ring.derivation.beta().is_zero()) {
                    uint32_t im = F.mul_rep(
                        ring.derivation.beta().rep(),
                        F.sub_rep(F.frobenius_rep(c, ring.derivation.t()), c));
                    next[i] = F.add_rep(next[i], im);
                }
            }
            xg[k] = std::move(next);
        }
    }

    std::vector<uint32_t> r(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) r[i] = f.coeff(i).rep();
    std::vector<uint32_t> q(kmax + 1, 0);
    int dr = f.degree();
    auto trim = [&] {
        while (dr >= 0 && r[dr] == 0) --dr;
    };
    trim();
    while (dr >= dg) {
        int k = dr - dg;
        // (c x^k) * g has leading coefficient c * theta^k(lc(g)).
        uint32_t c = F.mul_rep(
            r[dr], F.frobenius_rep(gl_inv.rep(),
                                   (ring.derivation.t() * k) % ring.field->m()));
        q[k] = F.add_rep(q[k], c);
        const std::vector<uint32_t>& term = xg[k];
        for (int i = 0; i <= dg + k; ++i)
            if (term[i]) r[i] = F.sub_rep(r[i], F.mul_rep(c, term[i]));
        trim();
    }

    std::vector<FieldElement> q_elems, r_elems;
    for (uint32_t v : q) q_elems.push_back(ring.field->element_from_rep(v));
    for (int i = 0; i <= dr; ++i) r_elems.push_back(ring.field->element_from_rep(r[i]));
    return {SkewPoly(ring, std::move(q_elems)), SkewPoly(ring, std::move(r_elems))};
}

DivModResult left_divmod(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    if (g.is_zero()) throw ZeroDivisor("left division by the zero polynomial");
    const SkewRing& ring = f.ring();
    const int dg = g.degree();
    const FieldElement gl_inv = g.leading_coeff().inverse();
    SkewPoly r = f;
    SkewPoly q = SkewPoly::zero(ring);
    while (r.degree() >= dg) {
        int k = r.degree() - dg;
        // g * (u x^k) has leading coefficient lc(g) * theta^{deg g}(u), and
        // equals (g * u) shifted by k since x^k commutes with x-powers.
        FieldElement u = ring.derivation.theta_inv_iter(gl_inv * r.leading_coeff(), dg);
        q = q + SkewPoly::monomial(ring, u, k);
        SkewPoly gu = skew_mul(g, SkewPoly::constant(ring, u));
        std::vector<FieldElement> shifted(k, ring.field->zero());
        shifted.insert(shifted.end(), gu.coeffs().begin(), gu.coeffs().end());
        r = r - SkewPoly(ring, std::move(shifted));
    }
    return {q, r};
}

bool right_divides(const SkewPoly& g, const SkewPoly& f) {
    if (g.is_zero()) throw ZeroDivisor("divisibility by the zero polynomial");
    return right_divmod(f, g).remainder.is_zero();
}

SkewPoly reduce_mod_xn_minus_1(const SkewPoly& f, int n) {
    if (f.degree() < n) return f;
    return right_divmod(f, SkewPoly::x_pow_n_minus_1(f.ring(), n)).remainder;
}

TwoSidedFactors two_sided_factor_check(const SkewPoly& g, int n) {
    if (g.is_zero()) throw ZeroDivisor("factor check with the zero polynomial");
    const SkewPoly target = SkewPoly::x_pow_n_minus_1(g.ring(), n);
    DivModResult rd = right_divmod(target, g);
    if (!rd.remainder.is_zero())
        throw NotAFactor("polynomial does not right-divide x^" + std::to_string(n) + " - 1");
    DivModResult ld = left_divmod(target, g);
    if (!ld.remainder.is_zero())
        throw NotAFactor("x^" + std::to_string(n) + " - 1 has no right cofactor for this polynomial");
    if (skew_mul(rd.quotient, g) != target || skew_mul(g, ld.quotient) != target)
        throw NotAFactor("cofactor reconstruction failed");  // unreachable if division is sound
    return {rd.quotient, ld.quotient};
}

bool is_central(const SkewPoly& f) {
    const SkewRing& ring = f.ring();
    SkewPoly x = SkewPoly::monomial(ring, ring.field->one(), 1);
    SkewPoly w = SkewPoly::constant(ring, ring.field->generator());
    return skew_mul(f, x) == skew_mul(x, f) && skew_mul(f, w) == skew_mul(w, f);
}

std::vector<FieldElement> apply_pseudo_linear(const std::vector<FieldElement>& v,
                                              const DerivationSpec& d) {
    const int n = static_cast<int>(v.size());
    std::vector<FieldElement> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        const FieldElement& prev = v[(j - 1 + n) % n];
        out.push_back(frobenius(prev, d.t()) + d.apply(v[j]));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial text grammar.

namespace {

struct PolyParser {
    const SkewRing& ring;
    const std::string& text;
    size_t pos = 0;

    explicit PolyParser(const SkewRing& r, const std::string& t) : ring(r), text(t) {}

    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, 1, static_cast<int>(pos) + 1); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return text.substr(start, pos - start);
    }

    uint64_t read_uint(const char* what) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail(std::string("expected ") + what);
        std::string digits = text.substr(start, pos - start);
        if (digits.size() > 7) throw ExponentOverflow("'" + digits + "' is too large");
        return std::stoull(digits);
    }

    // coeff := INT | SYMBOL ('^' INT)?
    FieldElement read_coeff() {
        skip_ws();
        if (pos >= text.size()) fail("expected coefficient");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return ring.field->from_int(static_cast<int64_t>(read_uint("integer coefficient")));
        }
        const std::string& sym = ring.field->generator_symbol();
        if (text.compare(pos, sym.size(), sym) == 0) {
            pos += sym.size();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                return ring.field->from_power_of_w(read_uint("exponent"));
            }
            return ring.field->generator();
        }
        std::string ident = read_ident();
        throw UnknownSymbol("unknown symbol '" + ident + "' in polynomial");
    }

    bool at_x() {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x') return false;
        if (pos + 1 < text.size()) {
            char next = text[pos + 1];
            if (std::isalnum(static_cast<unsigned char>(next)) || next == '_') return false;
        }
        return true;
    }

    // term := coeff | coeff '*' x-part | x-part
    SkewPoly read_term() {
        if (at_x()) return read_x_part(ring.field->one());
        FieldElement c = read_coeff();
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            if (!at_x()) fail("expected 'x' after '*'");
            return read_x_part(c);
        }
        return SkewPoly::constant(ring, c);
    }

    SkewPoly read_x_part(const FieldElement& c) {
        ++pos;  // consume 'x'
        int deg = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            uint64_t e = read_uint("exponent");
            if (e > 1000000) throw ExponentOverflow("x-exponent " + std::to_string(e) + " too large");
            deg = static_cast<int>(e);
        }
        return SkewPoly::monomial(ring, c, deg);
    }

    SkewPoly parse() {
        if (ring.field->generator_symbol() == "x")
            throw InvalidParameters("field generator symbol 'x' clashes with the indeterminate");
        SkewPoly acc = SkewPoly::zero(ring);
        bool negate = false;
        skip_ws();
        if (peek() == '-') {
            negate = true;
            ++pos;
        }
        while (true) {
            SkewPoly t = read_term();
            acc = negate ? acc - t : acc + t;
            if (eof()) break;
            char op = peek();
            if (op == '+') {
                negate = false;
                ++pos;
            } else if (op == '-') {
                negate = true;
                ++pos;
            } else {
                fail("expected '+' or '-' between terms");
            }
            if (eof()) fail("dangling operator at end of polynomial");
        }
        return acc;
    }
};

}  // namespace

SkewPoly SkewPoly::parse(const SkewRing& ring, const std::string& text) {
    PolyParser parser(ring, text);
    if (parser.eof()) throw SyntaxError("empty polynomial", 1, 1);
    return parser.parse();
}

}  // namespace orecode
