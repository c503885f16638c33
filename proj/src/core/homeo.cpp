#include "homeo.hpp"

#include "errors.hpp"

#include <algorithm>

namespace mdyn {

namespace {

const char* form_name(Homeo::Form f) {
    switch (f) {
        case Homeo::Form::identity: return "identity";
        case Homeo::Form::square: return "square";
        case Homeo::Form::sqrt: return "sqrt";
        case Homeo::Form::sine_sq: return "sine_sq";
        case Homeo::Form::arcsine: return "arcsine";
        case Homeo::Form::pw_linear: return "pw_linear";
    }
    return "?";
}

// y = sin^2(pi x / 2), increasing on [0,1]
Interval sine_sq_eval(const Interval& x, mpfr_prec_t prec) {
    Interval arg = Interval::pi(prec) * x.round_to(prec);
    return arg.mul_2exp(-1).sin().sqr();
}

// x = (2/pi) asin(sqrt(y))
Interval arcsine_eval(const Interval& y, mpfr_prec_t prec) {
    Interval a = y.round_to(prec).sqrt().asin();
    return a.mul_2exp(1) / Interval::pi(prec);
}

} // namespace

Homeo::Homeo(Form form, std::vector<Knot> knots) : form_(form), name_(form_name(form)) {
    if (form == Form::pw_linear) {
        knots_ = std::move(knots);
        if (knots_.size() < 2 || knots_.front().x != 0 || knots_.front().y != 0 ||
            knots_.back().x != 1 || knots_.back().y != 1)
            raise(ErrorCode::invalid_map, "pw_linear knots must run from (0,0) to (1,1)");
        for (size_t i = 1; i < knots_.size(); ++i)
            if (knots_[i].x <= knots_[i - 1].x || knots_[i].y <= knots_[i - 1].y)
                raise(ErrorCode::not_invertible, "pw_linear knots must be strictly increasing");
    }
}

Homeo Homeo::parse(const std::string& name) {
    if (name == "identity") return Homeo(Form::identity);
    if (name == "square") return Homeo(Form::square);
    if (name == "sqrt") return Homeo(Form::sqrt);
    if (name == "sine_sq" || name == "sin2") return Homeo(Form::sine_sq);
    if (name == "arcsine" || name == "asin_sqrt") return Homeo(Form::arcsine);
    raise(ErrorCode::parse_error, "unknown homeomorphism form '" + name + "'");
}

Interval Homeo::eval_interval(const Interval& x, mpfr_prec_t prec, bool inverse) const {
    Form f = form_;
    if (inverse) {
        switch (form_) {
            case Form::identity: f = Form::identity; break;
            case Form::square: f = Form::sqrt; break;
            case Form::sqrt: f = Form::square; break;
            case Form::sine_sq: f = Form::arcsine; break;
            case Form::arcsine: f = Form::sine_sq; break;
            case Form::pw_linear: f = Form::pw_linear; break;
        }
    }
    switch (f) {
        case Form::identity: return x.round_to(prec);
        case Form::square: return x.round_to(prec).sqr();
        case Form::sqrt: return x.round_to(prec).sqrt();
        case Form::sine_sq: return sine_sq_eval(x, prec);
        case Form::arcsine: return arcsine_eval(x, prec);
        case Form::pw_linear: break;
    }
    // pw_linear: hull over the straddled segments (continuity)
    const bool inv = inverse;
    auto seg_val = [&](const Interval& t, size_t i) {
        const mpq_class& x0 = inv ? knots_[i].y : knots_[i].x;
        const mpq_class& y0 = inv ? knots_[i].x : knots_[i].y;
        const mpq_class& x1 = inv ? knots_[i + 1].y : knots_[i + 1].x;
        const mpq_class& y1 = inv ? knots_[i + 1].x : knots_[i + 1].y;
        mpq_class slope = (y1 - y0) / (x1 - x0);
        return t.add_rational(-x0).mul_rational(slope).add_rational(y0);
    };
    Interval t = x.round_to(prec);
    bool any = false;
    Interval out(prec);
    for (size_t i = 0; i + 1 < knots_.size(); ++i) {
        const mpq_class& a = inv ? knots_[i].y : knots_[i].x;
        const mpq_class& b = inv ? knots_[i + 1].y : knots_[i + 1].x;
        Interval seg = Interval::from_endpoints(a, b, prec);
        Interval clipped(prec);
        if (!t.intersect(seg, clipped)) continue;
        Interval v = seg_val(clipped, i);
        out = any ? Interval::hull(out, v) : v;
        any = true;
    }
    if (!any) raise(ErrorCode::internal, "pw_linear argument outside [0,1]");
    return out;
}

CertifiedValue Homeo::eval(const CertifiedValue& x, mpfr_prec_t prec) const {
    if (x.exact) {
        switch (form_) {
            case Form::identity:
                return CertifiedValue::from_rational(*x.exact, prec);
            case Form::square:
                return CertifiedValue::from_rational(mpq_class(*x.exact * *x.exact), prec);
            case Form::pw_linear: {
                for (size_t i = 0; i + 1 < knots_.size(); ++i) {
                    if (*x.exact >= knots_[i].x && *x.exact <= knots_[i + 1].x) {
                        mpq_class slope = (knots_[i + 1].y - knots_[i].y) /
                                          (knots_[i + 1].x - knots_[i].x);
                        mpq_class v = knots_[i].y + slope * (*x.exact - knots_[i].x);
                        v.canonicalize();
                        return CertifiedValue::from_rational(v, prec);
                    }
                }
                break;
            }
            default:
                break;
        }
    }
    return CertifiedValue(eval_interval(x.enc, prec, false));
}

CertifiedValue Homeo::eval_inverse(const CertifiedValue& y, mpfr_prec_t prec) const {
    if (y.exact && (form_ == Form::identity || form_ == Form::pw_linear))
        return inverse().eval(y, prec);
    if (y.exact && form_ == Form::sqrt)
        return CertifiedValue::from_rational(mpq_class(*y.exact * *y.exact), prec);
    return CertifiedValue(eval_interval(y.enc, prec, true));
}

Homeo Homeo::inverse() const {
    switch (form_) {
        case Form::identity: return Homeo(Form::identity);
        case Form::square: return Homeo(Form::sqrt);
        case Form::sqrt: return Homeo(Form::square);
        case Form::sine_sq: return Homeo(Form::arcsine);
        case Form::arcsine: return Homeo(Form::sine_sq);
        case Form::pw_linear: {
            std::vector<Knot> inv(knots_.size());
            for (size_t i = 0; i < knots_.size(); ++i) inv[i] = {knots_[i].y, knots_[i].x};
            return Homeo(Form::pw_linear, std::move(inv));
        }
    }
    raise(ErrorCode::internal, "unreachable");
}

Interval Homeo::derivative(const Interval& x) const {
    mpfr_prec_t prec = x.prec();
    switch (form_) {
        case Form::identity:
            return Interval::point_long(1, prec);
        case Form::square:
            return x.mul_2exp(1);
        case Form::sqrt:
            // 1 / (2 sqrt(x)); requires x bounded away from 0
            return Interval::point_long(1, prec) / x.sqrt().mul_2exp(1);
        case Form::sine_sq:
            // (pi/2) sin(pi x)
            return (Interval::pi(prec) * x).sin() * Interval::pi(prec).mul_2exp(-1);
        case Form::arcsine: {
            // 1 / (pi sqrt(x (1-x)))
            Interval one = Interval::point_long(1, prec);
            Interval prod = x * (one - x);
            return one / (Interval::pi(prec) * prod.sqrt());
        }
        case Form::pw_linear: {
            for (size_t i = 0; i + 1 < knots_.size(); ++i) {
                Interval seg = Interval::from_endpoints(knots_[i].x, knots_[i + 1].x, prec);
                if (seg.contains(x)) {
                    mpq_class slope = (knots_[i + 1].y - knots_[i].y) /
                                      (knots_[i + 1].x - knots_[i].x);
                    return Interval::from_rational(slope, prec);
                }
            }
            raise(ErrorCode::not_differentiable, "pw_linear derivative at a knot");
        }
    }
    raise(ErrorCode::internal, "unreachable");
}

} // namespace mdyn
