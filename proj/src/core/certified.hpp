#pragma once

#include "interval.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace mdyn {

struct PrecisionConfig {
    unsigned initial_bits = 128;
    unsigned max_bits = 16384;
    unsigned escalation_factor = 2;

    void validate() const;
    // bits ladder: initial, initial*f, ... clamped at max
    unsigned next(unsigned bits) const {
        if (bits >= max_bits) return 0;
        unsigned long n = static_cast<unsigned long>(bits) * escalation_factor;
        return static_cast<unsigned>(n > max_bits ? max_bits : n);
    }
};

// A number with a rigorous enclosure and, when representable, its exact value.
struct CertifiedValue {
    Interval enc;
    std::optional<mpq_class> exact;

    CertifiedValue() : enc(64) {}
    explicit CertifiedValue(Interval e) : enc(std::move(e)) {}
    CertifiedValue(Interval e, mpq_class q) : enc(std::move(e)), exact(std::move(q)) {}

    static CertifiedValue from_rational(const mpq_class& q, mpfr_prec_t prec) {
        return CertifiedValue(Interval::from_rational(q, prec), q);
    }

    bool is_exact() const { return exact.has_value(); }
};

enum class Cmp { lt, eq, gt, indeterminate };

Cmp compare(const CertifiedValue& a, const CertifiedValue& b);
Cmp compare(const CertifiedValue& a, const mpq_class& b);
// |a - b| as an enclosure
Interval distance(const CertifiedValue& a, const CertifiedValue& b);

// A real number that can be re-enclosed at any requested precision: an exact
// rational, or a computation (certified root bracket, homeomorphism image,
// map image) captured as a closure.
class CertifiedReal {
public:
    CertifiedReal() : CertifiedReal(mpq_class(0)) {}
    explicit CertifiedReal(mpq_class q);
    CertifiedReal(std::function<Interval(mpfr_prec_t)> fn, std::string label);

    CertifiedValue at(mpfr_prec_t bits) const;
    const std::optional<mpq_class>& exact() const { return exact_; }
    bool is_exact() const { return exact_.has_value(); }
    const std::string& label() const { return label_; }

private:
    std::optional<mpq_class> exact_;
    std::function<Interval(mpfr_prec_t)> fn_;
    std::string label_;
};

} // namespace mdyn
