#pragma once

#include "rational.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace mdyn {

// Outward-rounded interval over MPFR endpoints. Every operation returns an
// enclosure of the exact image; the precision of the result is the max of the
// operand precisions unless stated otherwise. Values are immutable after
// construction apart from assignment.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 64);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval from_rational(const mpq_class& q, mpfr_prec_t prec);
    static Interval from_endpoints(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec);
    static Interval from_mpfr(const mpfr_t& lo, const mpfr_t& hi, mpfr_prec_t prec);
    static Interval point_long(long v, mpfr_prec_t prec);
    static Interval hull(const Interval& a, const Interval& b);
    static Interval pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    // arithmetic
    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const; // requires !contains_zero(o)
    Interval operator-() const;
    Interval add_rational(const mpq_class& q) const;
    Interval mul_rational(const mpq_class& q) const;
    Interval abs() const;
    Interval sqr() const;
    Interval sqrt() const;  // requires hi >= 0; clamps rounding dust below 0
    Interval log() const;   // requires lo > 0
    Interval exp() const;
    Interval mul_2exp(long e) const;
    Interval sin() const;   // argument must lie within [0, pi] (our use case)
    Interval asin() const;  // argument within [-1, 1]; clamps rounding dust
    Interval nonneg() const; // intersection with [0, inf); requires hi >= 0

    // set operations / queries
    bool contains(const mpq_class& q) const;
    bool contains(const Interval& o) const; // o subseteq this
    bool contains_zero() const;
    bool is_point() const;
    bool certainly_lt(const Interval& o) const;  // hi < o.lo
    bool certainly_gt(const Interval& o) const;
    bool certainly_lt(const mpq_class& q) const;
    bool certainly_gt(const mpq_class& q) const;
    bool overlaps(const Interval& o) const;
    bool intersect(const Interval& o, Interval& out) const;

    double width_double() const;
    Interval width(mpfr_prec_t prec) const; // [hi - lo] outward
    double mid_double() const;
    mpq_class mid_rational() const;
    mpq_class lo_rational() const;
    mpq_class hi_rational() const;

    Interval round_to(mpfr_prec_t prec) const; // outward re-rounding

    // decimal rendering of both endpoints, "lo" or "[lo, hi]"
    std::string str(int digits = 20) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
    mpfr_prec_t prec_;

    static mpfr_prec_t join(const Interval& a, const Interval& b) {
        return a.prec_ > b.prec_ ? a.prec_ : b.prec_;
    }
};

std::string mpfr_decimal(const mpfr_t& v, int digits);

} // namespace mdyn
