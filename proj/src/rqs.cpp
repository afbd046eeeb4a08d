#include "orecode/rqs.hpp"

#include <sstream>

namespace orecode {

std::shared_ptr<const RqsSpec> RqsSpec::create(FieldSpecPtr field, int s,
                                               DerivationSpec derivation) {
    if (s < 1 || s > kMaxS)
        throw InvalidParameters("s must be in [1, " + std::to_string(kMaxS) + "]");
    if (!derivation.beta().spec() || !derivation.beta().spec()->same_as(*field))
        throw SpecMismatch("derivation beta must live in the component field");
    auto spec = std::shared_ptr<RqsSpec>(new RqsSpec());
    spec->field_ = std::move(field);
    spec->s_ = s;
    spec->derivation_ = std::move(derivation);
    return spec;
}

bool RqsSpec::same_as(const RqsSpec& other) const {
    if (this == &other) return true;
    return s_ == other.s_ && field_->same_as(*other.field_) && derivation_ == other.derivation_;
}

RqsElement RqsSpec::zero() const {
    return RqsElement(shared_from_this(), std::vector<FieldElement>(components(), field_->zero()));
}

RqsElement RqsSpec::one() const {
    return RqsElement(shared_from_this(), std::vector<FieldElement>(components(), field_->one()));
}

RqsElement RqsSpec::idempotent(int i) const {
    if (i < 0 || i > s_) throw InvalidParameters("idempotent index out of range");
    std::vector<FieldElement> crt(components(), field_->zero());
    crt[i] = field_->one();
    return RqsElement(shared_from_this(), std::move(crt));
}

RqsElement RqsSpec::from_crt(std::vector<FieldElement> crt) const {
    return RqsElement(shared_from_this(), std::move(crt));
}

RqsElement RqsSpec::from_v_basis(const std::vector<FieldElement>& a) const {
    if (static_cast<int>(a.size()) != components())
        throw DimensionMismatch("v-basis vector must have s+1 entries");
    std::vector<FieldElement> crt(components(), field_->zero());
    crt[0] = a[0];
    for (int j = 1; j <= s_; ++j) crt[j] = a[0] + a[j];
    return RqsElement(shared_from_this(), std::move(crt));
}

RqsElement RqsSpec::parse_crt_literal(const std::string& text) const {
    size_t open = text.find('(');
    size_t close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw SyntaxError("CRT literal must be parenthesized", 1, 1);
    std::string inner = text.substr(open + 1, close - open - 1);
    std::vector<FieldElement> crt;
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw SyntaxError("empty CRT coordinate", 1, 1);
        crt.push_back(field_->parse_literal(item.substr(b, e - b + 1)));
    }
    if (static_cast<int>(crt.size()) != components())
        throw DimensionMismatch("CRT literal must have s+1 = " + std::to_string(components()) +
                                " coordinates");
    return RqsElement(shared_from_this(), std::move(crt));
}

RqsElement::RqsElement(RqsSpecPtr spec, std::vector<FieldElement> crt)
    : spec_(std::move(spec)), crt_(std::move(crt)) {
    if (static_cast<int>(crt_.size()) != spec_->components())
        throw DimensionMismatch("CRT vector must have s+1 entries");
}

std::vector<FieldElement> RqsElement::v_basis() const {
    std::vector<FieldElement> a(crt_.size(), spec_->field()->zero());
    a[0] = crt_[0];
    for (size_t j = 1; j < crt_.size(); ++j) a[j] = crt_[j] - crt_[0];
    return a;
}

bool RqsElement::is_zero() const {
    for (const auto& c : crt_)
        if (!c.is_zero()) return false;
    return true;
}

bool RqsElement::is_unit() const {
    for (const auto& c : crt_)
        if (c.is_zero()) return false;
    return true;
}

namespace {
void require_same_spec(const RqsElement& a, const RqsElement& b) {
    if (!a.spec() || !b.spec() || !a.spec()->same_as(*b.spec()))
        throw SpecMismatch("elements from different R_{q,s} rings");
}
}  // namespace

RqsElement RqsElement::operator+(const RqsElement& o) const {
    require_same_spec(*this, o);
    std::vector<FieldElement> out;
    out.reserve(crt_.size());
    for (size_t i = 0; i < crt_.size(); ++i) out.push_back(crt_[i] + o.crt_[i]);
    return RqsElement(spec_, std::move(out));
}

RqsElement RqsElement::operator-(const RqsElement& o) const {
    require_same_spec(*this, o);
    std::vector<FieldElement> out;
    out.reserve(crt_.size());
    for (size_t i = 0; i < crt_.size(); ++i) out.push_back(crt_[i] - o.crt_[i]);
    return RqsElement(spec_, std::move(out));
}

RqsElement RqsElement::operator*(const RqsElement& o) const {
    require_same_spec(*this, o);
    std::vector<FieldElement> out;
    out.reserve(crt_.size());
    for (size_t i = 0; i < crt_.size(); ++i) out.push_back(crt_[i] * o.crt_[i]);
    return RqsElement(spec_, std::move(out));
}

RqsElement RqsElement::operator-() const {
    std::vector<FieldElement> out;
    out.reserve(crt_.size());
    for (const auto& c : crt_) out.push_back(-c);
    return RqsElement(spec_, std::move(out));
}

bool RqsElement::operator==(const RqsElement& o) const {
    require_same_spec(*this, o);
    for (size_t i = 0; i < crt_.size(); ++i)
        if (crt_[i] != o.crt_[i]) return false;
    return true;
}

std::string RqsElement::str() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < crt_.size(); ++i) {
        if (i) out << ", ";
        out << crt_[i].str();
    }
    out << ")";
    return out.str();
}

RqsElement gamma(const RqsElement& r) {
    const auto& spec = r.spec();
    std::vector<FieldElement> out;
    out.reserve(r.crt().size());
    for (const auto& c : r.crt()) out.push_back(spec->derivation().theta(c));
    return RqsElement(spec, std::move(out));
}

RqsElement delta_with_multiplier(const RqsElement& r, const RqsElement& u) {
    return u * (gamma(r) - r);
}

RqsElement delta(const RqsElement& r) {
    const auto& spec = r.spec();
    const FieldElement& beta = spec->derivation().beta();
    std::vector<FieldElement> out;
    out.reserve(r.crt().size());
    for (const auto& c : r.crt()) out.push_back(beta * (spec->derivation().theta(c) - c));
    return RqsElement(spec, std::move(out));
}

RqsElement delta_literal(const RqsElement& r) {
    const auto& spec = r.spec();
    std::vector<FieldElement> mult(spec->components(), spec->field()->from_int(2));
    mult[0] = spec->field()->one();
    return delta_with_multiplier(r, spec->from_crt(std::move(mult)));
}

std::vector<RqsElement> pseudo_linear_apply(const std::vector<RqsElement>& v) {
    if (v.empty()) throw InvalidParameters("pseudo-linear transform needs n >= 1");
    const int n = static_cast<int>(v.size());
    std::vector<RqsElement> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) {
        out.push_back(gamma(v[(j - 1 + n) % n]) + delta(v[j]));
    }
    return out;
}

}  // namespace orecode
