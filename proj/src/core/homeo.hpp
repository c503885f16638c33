#pragma once

#include "certified.hpp"
#include "interval.hpp"

#include <string>
#include <vector>

namespace mdyn {

// Monotone increasing homeomorphisms of [0,1] with certified evaluation and a
// closed-form certified inverse. h(0)=0 and h(1)=1 for every supported form.
class Homeo {
public:
    enum class Form {
        identity,
        square,      // x^2
        sqrt,        // x^(1/2)
        sine_sq,     // sin^2(pi x / 2)
        arcsine,     // (2/pi) asin(sqrt(x)), inverse of sine_sq
        pw_linear,   // monotone piecewise-linear spline with rational knots
    };

    struct Knot {
        mpq_class x, y;
    };

    Homeo() : form_(Form::identity) {}
    explicit Homeo(Form form, std::vector<Knot> knots = {});

    static Homeo parse(const std::string& name);

    Form form() const { return form_; }
    const std::string& name() const { return name_; }
    bool is_identity() const { return form_ == Form::identity; }
    const std::vector<Knot>& knots() const { return knots_; }

    CertifiedValue eval(const CertifiedValue& x, mpfr_prec_t prec) const;
    CertifiedValue eval_inverse(const CertifiedValue& y, mpfr_prec_t prec) const;
    Homeo inverse() const;

    // Dh over an interval argument within [0,1]; throws NotDifferentiable for
    // pw_linear arguments straddling a knot.
    Interval derivative(const Interval& x) const;

private:
    Form form_;
    std::string name_;
    std::vector<Knot> knots_; // pw_linear only; includes (0,0) and (1,1)

    Interval eval_interval(const Interval& x, mpfr_prec_t prec, bool inverse) const;
};

} // namespace mdyn
