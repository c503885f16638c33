#include "certified.hpp"

#include "errors.hpp"

namespace mdyn {

void PrecisionConfig::validate() const {
    if (initial_bits < 64)
        raise(ErrorCode::invalid_map, "initial_bits must be >= 64");
    if (max_bits < initial_bits)
        raise(ErrorCode::invalid_map, "max_bits must be >= initial_bits");
    if (escalation_factor < 2)
        raise(ErrorCode::invalid_map, "escalation_factor must be >= 2");
}

Cmp compare(const CertifiedValue& a, const CertifiedValue& b) {
    if (a.exact && b.exact) {
        int c = cmp(*a.exact, *b.exact);
        return c < 0 ? Cmp::lt : (c > 0 ? Cmp::gt : Cmp::eq);
    }
    if (a.exact) {
        Cmp r = compare(b, *a.exact);
        if (r == Cmp::lt) return Cmp::gt;
        if (r == Cmp::gt) return Cmp::lt;
        return r;
    }
    if (b.exact) return compare(a, *b.exact);
    if (a.enc.certainly_lt(b.enc)) return Cmp::lt;
    if (a.enc.certainly_gt(b.enc)) return Cmp::gt;
    return Cmp::indeterminate;
}

Cmp compare(const CertifiedValue& a, const mpq_class& b) {
    if (a.exact) {
        int c = cmp(*a.exact, b);
        return c < 0 ? Cmp::lt : (c > 0 ? Cmp::gt : Cmp::eq);
    }
    if (a.enc.certainly_lt(b)) return Cmp::lt;
    if (a.enc.certainly_gt(b)) return Cmp::gt;
    return Cmp::indeterminate;
}

Interval distance(const CertifiedValue& a, const CertifiedValue& b) {
    if (a.exact && b.exact) {
        mpq_class d = *a.exact - *b.exact;
        if (d < 0) d = -d;
        mpfr_prec_t p = a.enc.prec() > b.enc.prec() ? a.enc.prec() : b.enc.prec();
        return Interval::from_rational(d, p);
    }
    return (a.enc - b.enc).abs();
}

CertifiedReal::CertifiedReal(mpq_class q) : exact_(std::move(q)), label_(rational_string(*exact_)) {}

CertifiedReal::CertifiedReal(std::function<Interval(mpfr_prec_t)> fn, std::string label)
    : fn_(std::move(fn)), label_(std::move(label)) {}

CertifiedValue CertifiedReal::at(mpfr_prec_t bits) const {
    if (exact_) return CertifiedValue::from_rational(*exact_, bits);
    return CertifiedValue(fn_(bits));
}

} // namespace mdyn
