#pragma once

#include "certified.hpp"
#include "interval.hpp"
#include "rational.hpp"

#include <vector>

namespace mdyn {

// Dense polynomial with exact rational coefficients, ascending degree order.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<mpq_class> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    mpq_class eval_exact(const mpq_class& x) const;
    int sign_at(const mpq_class& x) const;
    Interval eval(const Interval& x) const; // Horner with outward rounding
    RationalPoly derivative() const;

    // Isolating brackets [lo, hi] with a strict sign change, for every root in
    // the open interval (a, b). Roots must be simple (sign-changing); an exact
    // rational root discovered on a scan point is returned as a point bracket.
    struct RootBracket {
        mpq_class lo, hi; // sign(lo) != sign(hi), or lo == hi exact root
        bool exact() const { return lo == hi; }
    };
    std::vector<RootBracket> isolate_roots(const mpq_class& a, const mpq_class& b) const;

    // Shrinks a sign-change bracket until hi - lo <= width. Point brackets
    // pass through.
    RootBracket refine(const RootBracket& br, const mpq_class& width) const;

    // Attempts to identify the bracketed root as a small rational.
    std::optional<mpq_class> snap_rational(const RootBracket& br,
                                           unsigned long max_denominator = 1u << 20) const;

private:
    std::vector<mpq_class> coeffs_;
};

} // namespace mdyn
