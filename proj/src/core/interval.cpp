#include "interval.hpp"

#include "errors.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace mdyn {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    lo_[0] = o.lo_[0];
    hi_[0] = o.hi_[0];
    // leave o in a destructible state
    mpfr_init2(o.lo_, 2);
    mpfr_init2(o.hi_, 2);
}

Interval& Interval::operator=(const Interval& o) {
    if (this == &o) return *this;
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    if (this == &o) return *this;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const mpq_class& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_endpoints(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_mpfr(const mpfr_t& lo, const mpfr_t& hi, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    return r;
}

Interval Interval::point_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(join(a, b));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(join(*this, o));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(join(*this, o));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(join(*this, o));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo: min of the four products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi: max of the four products rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero())
        raise(ErrorCode::internal, "interval division by interval containing zero");
    Interval r(join(*this, o));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::add_rational(const mpq_class& q) const {
    Interval r(prec_);
    mpfr_add_q(r.lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(r.hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::mul_rational(const mpq_class& q) const {
    Interval r(prec_);
    if (sgn(q) >= 0) {
        mpfr_mul_q(r.lo_, lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, hi_, q.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(r.lo_, hi_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(r.hi_, lo_, q.get_mpq_t(), MPFR_RNDU);
    }
    return r;
}

Interval Interval::abs() const {
    Interval r(prec_);
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_neg(t, lo_, MPFR_RNDU);
    mpfr_max(r.hi_, t, hi_, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::sqr() const {
    Interval a = abs();
    Interval r(prec_);
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    if (mpfr_sgn(hi_) < 0)
        raise(ErrorCode::internal, "sqrt of negative interval");
    Interval r(prec_);
    if (mpfr_sgn(lo_) <= 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0)
        raise(ErrorCode::internal, "log of interval touching zero");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::exp() const {
    Interval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Interval Interval::mul_2exp(long e) const {
    Interval r(prec_);
    mpfr_mul_2si(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_mul_2si(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

Interval Interval::sin() const {
    // valid for arguments within [0, pi]; max 1 attained at pi/2
    Interval half_pi = pi(prec_).mul_2exp(-1);
    Interval r(prec_);
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_sin(a, lo_, MPFR_RNDD);
    mpfr_sin(b, hi_, MPFR_RNDD);
    mpfr_min(r.lo_, a, b, MPFR_RNDD);
    if (mpfr_sgn(r.lo_) < 0 && mpfr_sgn(lo_) >= 0) mpfr_set_zero(r.lo_, 1);
    bool covers_peak = mpfr_cmp(lo_, half_pi.hi()) <= 0 && mpfr_cmp(hi_, half_pi.lo()) >= 0;
    if (covers_peak) {
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    } else {
        mpfr_sin(a, lo_, MPFR_RNDU);
        mpfr_sin(b, hi_, MPFR_RNDU);
        mpfr_max(r.hi_, a, b, MPFR_RNDU);
    }
    mpfr_clear(a);
    mpfr_clear(b);
    return r;
}

Interval Interval::asin() const {
    Interval r(prec_);
    mpfr_t t;
    mpfr_init2(t, prec_);
    // clamp rounding dust outside [-1, 1]
    mpfr_set_si(t, -1, MPFR_RNDD);
    mpfr_max(t, t, lo_, MPFR_RNDD);
    mpfr_asin(r.lo_, t, MPFR_RNDD);
    mpfr_set_si(t, 1, MPFR_RNDU);
    mpfr_min(t, t, hi_, MPFR_RNDU);
    mpfr_asin(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::nonneg() const {
    if (mpfr_sgn(hi_) < 0)
        raise(ErrorCode::internal, "nonneg clamp of a negative interval");
    if (mpfr_sgn(lo_) >= 0) return *this;
    Interval r(*this);
    mpfr_set_zero(r.lo_, 1);
    return r;
}

bool Interval::contains(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::is_point() const {
    return mpfr_cmp(lo_, hi_) == 0;
}

bool Interval::certainly_lt(const Interval& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Interval::certainly_gt(const Interval& o) const {
    return mpfr_cmp(lo_, o.hi_) > 0;
}

bool Interval::certainly_lt(const mpq_class& q) const {
    return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

bool Interval::certainly_gt(const mpq_class& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

bool Interval::overlaps(const Interval& o) const {
    return !(certainly_lt(o) || certainly_gt(o));
}

bool Interval::intersect(const Interval& o, Interval& out) const {
    if (!overlaps(o)) return false;
    Interval r(join(*this, o));
    mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
    out = std::move(r);
    return true;
}

double Interval::width_double() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    double w = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return w;
}

Interval Interval::width(mpfr_prec_t prec) const {
    Interval r(prec);
    mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
    return r;
}

double Interval::mid_double() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_add(t, lo_, hi_, MPFR_RNDN);
    mpfr_div_2si(t, t, 1, MPFR_RNDN);
    double m = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return m;
}

mpq_class Interval::mid_rational() const {
    mpq_class a = lo_rational(), b = hi_rational();
    mpq_class m = (a + b) / 2;
    m.canonicalize();
    return m;
}

mpq_class Interval::lo_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    q.canonicalize();
    return q;
}

mpq_class Interval::hi_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    q.canonicalize();
    return q;
}

Interval Interval::round_to(mpfr_prec_t prec) const {
    Interval r(prec);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

std::string mpfr_decimal(const mpfr_t& v, int digits) {
    if (mpfr_zero_p(v)) return "0";
    if (!mpfr_number_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string out;
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) {
        out = "-";
        mant = mant.substr(1);
    }
    size_t last = mant.find_last_not_of('0');
    mant = mant.substr(0, std::max<size_t>(last + 1, 1));
    long point = static_cast<long>(e);
    if (point > 0 && point <= static_cast<long>(mant.size())) {
        out += mant.substr(0, point);
        if (point < static_cast<long>(mant.size())) out += "." + mant.substr(point);
    } else if (point > 0 && point <= digits + 4) {
        out += mant + std::string(point - mant.size(), '0');
    } else if (point <= 0 && point > -6) {
        out += "0." + std::string(-point, '0') + mant;
    } else {
        out += mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(point - 1);
    }
    return out;
}

std::string Interval::str(int digits) const {
    if (is_point()) return mpfr_decimal(lo_, digits);
    return "[" + mpfr_decimal(lo_, digits) + ", " + mpfr_decimal(hi_, digits) + "]";
}

} // namespace mdyn
