#include "map_model.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mdyn {

namespace {

// exact results larger than this (numerator+denominator bits) fall back to
// enclosures; piecewise-linear orbits stay small, polynomial orbits square
constexpr size_t kExactBitCap = 8192;

std::optional<mpq_class> capped(mpq_class v) {
    if (rational_bits(v) > kExactBitCap) return std::nullopt;
    return v;
}

} // namespace

MapSpec MapSpec::make_polynomial(std::string name, std::vector<mpq_class> coeffs,
                                 PrecisionConfig prec, bool negative_schwarzian) {
    MapSpec m;
    m.kind_ = MapKind::polynomial;
    m.name_ = std::move(name);
    m.prec_ = prec;
    m.negative_schwarzian_ = negative_schwarzian;
    m.poly_ = RationalPoly(std::move(coeffs));
    if (m.poly_.degree() < 2)
        raise(ErrorCode::invalid_map, "polynomial map must have degree >= 2");
    m.dpoly_ = m.poly_.derivative();
    m.d2poly_ = m.dpoly_.derivative();
    m.d3poly_ = m.d2poly_.derivative();
    m.finalize();
    return m;
}

MapSpec MapSpec::make_folded_linear(std::string name, std::vector<mpq_class> breakpoints,
                                    PrecisionConfig prec) {
    MapSpec m;
    m.kind_ = MapKind::folded_linear;
    m.name_ = std::move(name);
    m.prec_ = prec;
    m.breakpoints_ = std::move(breakpoints);
    if (m.breakpoints_.empty())
        raise(ErrorCode::invalid_map, "folded_linear needs at least one breakpoint");
    for (size_t i = 0; i < m.breakpoints_.size(); ++i) {
        if (m.breakpoints_[i] <= 0 || m.breakpoints_[i] >= 1)
            raise(ErrorCode::invalid_map, "breakpoints must be strictly interior");
        if (i > 0 && m.breakpoints_[i] <= m.breakpoints_[i - 1])
            raise(ErrorCode::invalid_map, "breakpoints must be strictly increasing");
    }
    m.finalize();
    return m;
}

MapSpec MapSpec::make_pushforward(std::string name, std::shared_ptr<const MapSpec> base,
                                  Homeo h) {
    MapSpec m;
    m.kind_ = MapKind::pushforward;
    m.name_ = std::move(name);
    m.prec_ = base->precision();
    m.base_ = std::move(base);
    m.homeo_ = std::move(h);
    m.finalize();
    return m;
}

mpq_class MapSpec::boundary_image(const mpq_class& b) const {
    if (!boundary_invariant_)
        raise(ErrorCode::invalid_map, "boundary orbit requested on a non-invariant boundary");
    return b == 0 ? f0_ : f1_;
}

void MapSpec::finalize() {
    locate_critical_points();
    edges_.clear();
    edges_.emplace_back(mpq_class(0));
    for (auto& c : criticals_) edges_.push_back(c.location);
    edges_.emplace_back(mpq_class(1));
    // branch orientations: exact derivative sign at a rational interior point
    orientations_.assign(static_cast<size_t>(branch_count()), 0);
    for (int k = 0; k < branch_count(); ++k) {
        int orient = 0;
        switch (kind_) {
            case MapKind::folded_linear:
                orient = (k % 2 == 0) ? 1 : -1;
                break;
            case MapKind::pushforward:
                orient = base_->branch_orientation(k);
                break;
            case MapKind::polynomial: {
                Interval lo = edge(k).at(96).enc, hi = edge(k + 1).at(96).enc;
                mpq_class mid = (lo.hi_rational() + hi.lo_rational()) / 2;
                mid.canonicalize();
                int s = dpoly_.sign_at(mid);
                if (s == 0)
                    raise(ErrorCode::invalid_map, "derivative vanishes inside a branch");
                orient = s;
                break;
            }
        }
        orientations_[static_cast<size_t>(k)] = orient;
    }
    for (size_t k = 1; k < orientations_.size(); ++k)
        if (orientations_[k] == orientations_[k - 1])
            raise(ErrorCode::invalid_map,
                  "critical point " + std::to_string(k) + " is not a turning point");
    validate_boundary_and_range();
}

void MapSpec::locate_critical_points() {
    criticals_.clear();
    switch (kind_) {
        case MapKind::folded_linear:
            for (auto& b : breakpoints_) {
                CriticalPoint cp;
                cp.location = CertifiedReal(b);
                cp.order = std::numeric_limits<double>::quiet_NaN();
                criticals_.push_back(std::move(cp));
            }
            break;
        case MapKind::pushforward:
            for (auto& bc : base_->critical_points()) {
                CriticalPoint cp;
                Homeo h = homeo_;
                CertifiedReal loc = bc.location;
                CertifiedValue img = h.eval(loc.at(96), 96);
                if (img.exact) {
                    cp.location = CertifiedReal(*img.exact);
                } else {
                    cp.location = CertifiedReal(
                        [h, loc](mpfr_prec_t bits) { return h.eval(loc.at(bits), bits).enc; },
                        "h(" + loc.label() + ")");
                }
                cp.order = bc.order;
                cp.nonflat_constant = bc.nonflat_constant;
                cp.neighborhood_radius = bc.neighborhood_radius;
                criticals_.push_back(std::move(cp));
            }
            break;
        case MapKind::polynomial: {
            auto brackets = dpoly_.isolate_roots(mpq_class(0), mpq_class(1));
            if (brackets.empty())
                raise(ErrorCode::invalid_map, "no interior critical point found");
            for (auto& br0 : brackets) {
                auto br = dpoly_.refine(br0, mpq_class(1) >> 64);
                CriticalPoint cp;
                if (auto snapped = dpoly_.snap_rational(br)) {
                    cp.location = CertifiedReal(*snapped);
                } else {
                    RationalPoly dp = dpoly_;
                    auto bracket = br;
                    cp.location = CertifiedReal(
                        [dp, bracket](mpfr_prec_t bits) {
                            auto fine =
                                dp.refine(bracket, mpq_class(1) >> static_cast<unsigned long>(bits + 8));
                            return Interval::from_endpoints(fine.lo, fine.hi, bits);
                        },
                        "root(Df)");
                }
                criticals_.push_back(std::move(cp));
            }
            break;
        }
    }
    // neighbourhood radii: half the distance to the nearest partition edge
    std::vector<mpq_class> approx;
    approx.push_back(0);
    for (auto& c : criticals_)
        approx.push_back(c.location.is_exact() ? *c.location.exact()
                                               : c.location.at(96).enc.mid_rational());
    approx.push_back(1);
    for (size_t i = 0; i < criticals_.size(); ++i) {
        mpq_class left_gap = approx[i + 1] - approx[i];
        mpq_class right_gap = approx[i + 2] - approx[i + 1];
        criticals_[i].neighborhood_radius = (left_gap < right_gap ? left_gap : right_gap) / 2;
    }
}

void MapSpec::validate_boundary_and_range() {
    // boundary policy: f({0,1}) within {0,1}, else certified critical orbits
    // disjoint from the boundary over an audit horizon
    std::optional<mpq_class> f0, f1;
    switch (kind_) {
        case MapKind::polynomial:
            f0 = poly_.eval_exact(mpq_class(0));
            f1 = poly_.eval_exact(mpq_class(1));
            break;
        case MapKind::folded_linear:
            f0 = mpq_class(0);
            f1 = mpq_class(breakpoints_.size() % 2 == 0 ? 1 : 0);
            break;
        case MapKind::pushforward:
            // h fixes {0,1}, so the boundary behaviour is the base map's
            if (base_->boundary_invariant()) {
                f0 = base_->boundary_image(mpq_class(0));
                f1 = base_->boundary_image(mpq_class(1));
            }
            break;
    }
    if (f0 && f1 && (*f0 == 0 || *f0 == 1) && (*f1 == 0 || *f1 == 1)) {
        boundary_invariant_ = true;
        f0_ = *f0;
        f1_ = *f1;
        boundary_policy_ = "boundary_forward_invariant";
    } else {
        const long audit = 64;
        mpfr_prec_t bits = prec_.initial_bits;
        for (int i = 0; i < q(); ++i) {
            CertifiedValue x = critical(i).location.at(bits);
            for (long n = 0; n < audit; ++n) {
                x = evaluate(x, bits);
                bool clear = x.enc.certainly_gt(mpq_class(0)) && x.enc.certainly_lt(mpq_class(1));
                if (!clear)
                    raise(ErrorCode::invalid_map,
                          "critical orbit meets the boundary while f({0,1}) is not within "
                          "{0,1}; rejected by the boundary policy");
            }
        }
        boundary_policy_ = "critical_orbits_off_boundary(audit=64)";
    }
    // range check: extrema of a piecewise-monotone map sit at edges/criticals
    mpfr_prec_t bits = prec_.initial_bits;
    for (size_t k = 0; k < edges_.size(); ++k) {
        CertifiedValue v = evaluate(edges_[k].at(bits), bits);
        bool ok;
        if (v.exact)
            ok = *v.exact >= 0 && *v.exact <= 1;
        else
            ok = !v.enc.certainly_lt(mpq_class(0)) && !v.enc.certainly_gt(mpq_class(1));
        if (!ok)
            raise(ErrorCode::invalid_map, "map does not send [0,1] into [0,1]");
    }
}

CertifiedValue MapSpec::evaluate(const CertifiedValue& x, mpfr_prec_t bits) const {
    switch (kind_) {
        case MapKind::polynomial: {
            if (x.exact) {
                if (auto v = capped(poly_.eval_exact(*x.exact)))
                    return CertifiedValue::from_rational(*v, bits);
            }
            return CertifiedValue(poly_.eval(x.enc.round_to(bits)));
        }
        case MapKind::folded_linear: {
            size_t nb = breakpoints_.size();
            if (x.exact) {
                for (size_t k = 0; k <= nb; ++k) {
                    mpq_class lo = (k == 0) ? mpq_class(0) : breakpoints_[k - 1];
                    mpq_class hi = (k == nb) ? mpq_class(1) : breakpoints_[k];
                    if (*x.exact >= lo && *x.exact <= hi) {
                        mpq_class t = (*x.exact - lo) / (hi - lo);
                        mpq_class r = (k % 2 == 0) ? t : mpq_class(1 - t);
                        r.canonicalize();
                        return CertifiedValue::from_rational(r, bits);
                    }
                }
                raise(ErrorCode::internal, "folded_linear argument outside [0,1]");
            }
            Interval t = x.enc.round_to(bits);
            bool any = false;
            Interval out(bits);
            for (size_t k = 0; k <= nb; ++k) {
                mpq_class lo = (k == 0) ? mpq_class(0) : breakpoints_[k - 1];
                mpq_class hi = (k == nb) ? mpq_class(1) : breakpoints_[k];
                Interval seg = Interval::from_endpoints(lo, hi, bits);
                Interval clipped(bits);
                if (!t.intersect(seg, clipped)) continue;
                Interval v = clipped.add_rational(-lo).mul_rational(1 / (hi - lo));
                if (k % 2 == 1) v = Interval::point_long(1, bits) - v;
                out = any ? Interval::hull(out, v) : v;
                any = true;
            }
            if (!any) raise(ErrorCode::internal, "folded_linear argument outside [0,1]");
            return CertifiedValue(out);
        }
        case MapKind::pushforward: {
            CertifiedValue u = homeo_.eval_inverse(x, bits);
            CertifiedValue v = base_->evaluate(u, bits);
            return homeo_.eval(v, bits);
        }
    }
    raise(ErrorCode::internal, "unreachable");
}

CertifiedValue MapSpec::derivative_value(const CertifiedValue& x, mpfr_prec_t bits) const {
    switch (kind_) {
        case MapKind::polynomial: {
            if (x.exact) {
                if (auto v = capped(dpoly_.eval_exact(*x.exact)))
                    return CertifiedValue::from_rational(*v, bits);
            }
            return CertifiedValue(dpoly_.eval(x.enc.round_to(bits)));
        }
        case MapKind::folded_linear: {
            size_t nb = breakpoints_.size();
            for (size_t k = 0; k <= nb; ++k) {
                mpq_class lo = (k == 0) ? mpq_class(0) : breakpoints_[k - 1];
                mpq_class hi = (k == nb) ? mpq_class(1) : breakpoints_[k];
                bool inside;
                if (x.exact)
                    inside = (*x.exact > lo || (k == 0 && *x.exact == 0)) &&
                             (*x.exact < hi || (k == nb && *x.exact == 1));
                else
                    inside = x.enc.certainly_gt(lo) && x.enc.certainly_lt(hi);
                if (inside) {
                    mpq_class slope = 1 / (hi - lo);
                    if (k % 2 == 1) slope = -slope;
                    return CertifiedValue::from_rational(slope, bits);
                }
            }
            raise(ErrorCode::not_differentiable,
                  "folded_linear derivative at or across a breakpoint");
        }
        case MapKind::pushforward: {
            // Dg(y) = h'(f(u)) Df(u) / h'(u), u = h^{-1}(y)
            CertifiedValue u = homeo_.eval_inverse(x, bits);
            CertifiedValue fu = base_->evaluate(u, bits);
            CertifiedValue dfu = base_->derivative_value(u, bits);
            Interval num = homeo_.derivative(fu.enc.round_to(bits)) * dfu.enc.round_to(bits);
            Interval den = homeo_.derivative(u.enc.round_to(bits));
            return CertifiedValue(num / den);
        }
    }
    raise(ErrorCode::internal, "unreachable");
}

Interval MapSpec::schwarzian(const Interval& x) const {
    if (kind_ != MapKind::polynomial)
        raise(ErrorCode::not_smooth, "Schwarzian requires a polynomial map");
    Interval d1 = dpoly_.eval(x);
    if (d1.contains_zero())
        raise(ErrorCode::at_critical_point, "Schwarzian undefined where Df vanishes");
    Interval d2 = d2poly_.eval(x);
    Interval d3 = d3poly_.eval(x);
    Interval ratio = d2 / d1;
    return d3 / d1 - ratio.sqr().mul_rational(mpq_class(3, 2));
}

CertifiedValue MapSpec::polynomial_branch_inverse(int k, const CertifiedValue& y,
                                                  mpfr_prec_t bits) const {
    if (poly_.degree() == 2) {
        // a2 t^2 + a1 t + a0 = y  ->  t = v +- sqrt((y - f(v))/a2), v = -a1/(2 a2)
        const auto& c = poly_.coeffs();
        mpq_class a2 = c[2];
        mpq_class v = -c[1] / (2 * a2);
        v.canonicalize();
        mpq_class fv = poly_.eval_exact(v);
        bool left = (k == 0);
        if (y.exact) {
            mpq_class s = (*y.exact - fv) / a2;
            s.canonicalize();
            if (s >= 0) {
                if (auto r = exact_sqrt(s)) {
                    mpq_class t = left ? mpq_class(v - *r) : mpq_class(v + *r);
                    t.canonicalize();
                    if (auto cv = capped(t)) return CertifiedValue::from_rational(*cv, bits);
                }
            }
        }
        Interval s = y.enc.round_to(bits).add_rational(-fv).mul_rational(1 / a2);
        Interval r = s.nonneg().sqrt();
        Interval vt = Interval::from_rational(v, bits);
        return CertifiedValue(left ? vt - r : vt + r);
    }
    return newton_branch_inverse(k, y, bits);
}

// General monotone-branch preimage: float Newton for a good center, then an
// inflate-and-certify loop; only certified comparisons decide the enclosure.
CertifiedValue MapSpec::newton_branch_inverse(int k, const CertifiedValue& y,
                                              mpfr_prec_t bits) const {
    Interval bl = edge(k).at(bits).enc, bh = edge(k + 1).at(bits).enc;
    const bool increasing = branch_orientation(k) > 0;
    mpfr_prec_t wp = bits + 32;
    mpfr_t t, lo_br, hi_br, ymid, ft, dft, step, eps, cand;
    mpfr_inits2(wp, t, lo_br, hi_br, ymid, ft, dft, step, eps, cand, (mpfr_ptr) nullptr);
    mpfr_set(lo_br, bl.lo(), MPFR_RNDD);
    mpfr_set(hi_br, bh.hi(), MPFR_RNDU);
    mpfr_add(ymid, y.enc.lo(), y.enc.hi(), MPFR_RNDN);
    mpfr_div_2si(ymid, ymid, 1, MPFR_RNDN);

    auto poly_mid = [&](mpfr_t out, const mpfr_t& at, const RationalPoly& p) {
        mpfr_set_zero(out, 1);
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
            mpfr_mul(out, out, at, MPFR_RNDN);
            mpfr_add_q(out, out, it->get_mpq_t(), MPFR_RNDN);
        }
    };

    // safeguarded Newton on the midpoint values, bracket kept by sign
    mpfr_add(t, lo_br, hi_br, MPFR_RNDN);
    mpfr_div_2si(t, t, 1, MPFR_RNDN);
    for (int it = 0; it < 96; ++it) {
        poly_mid(ft, t, poly_);
        mpfr_sub(ft, ft, ymid, MPFR_RNDN);
        int fsign = mpfr_sgn(ft) * (increasing ? 1 : -1);
        if (fsign > 0)
            mpfr_set(hi_br, t, MPFR_RNDN);
        else
            mpfr_set(lo_br, t, MPFR_RNDN);
        poly_mid(dft, t, dpoly_);
        bool ok = !mpfr_zero_p(dft);
        if (ok) {
            mpfr_div(step, ft, dft, MPFR_RNDN);
            mpfr_sub(cand, t, step, MPFR_RNDN);
            ok = mpfr_cmp(cand, lo_br) > 0 && mpfr_cmp(cand, hi_br) < 0;
        }
        if (!ok) {
            mpfr_add(cand, lo_br, hi_br, MPFR_RNDN);
            mpfr_div_2si(cand, cand, 1, MPFR_RNDN);
        }
        mpfr_sub(step, cand, t, MPFR_RNDN);
        mpfr_abs(step, step, MPFR_RNDN);
        mpfr_set(t, cand, MPFR_RNDN);
        mpfr_mul_2si(eps, t, -static_cast<long>(bits), MPFR_RNDN);
        mpfr_abs(eps, eps, MPFR_RNDN);
        if (mpfr_cmp(step, eps) <= 0 && it > 4) break;
    }

    // inflate around t until [a, b] certifiedly covers the preimage of y.enc
    Interval result(bits);
    mpfr_set_ui_2exp(eps, 1, -static_cast<long>(bits / 2 + bits / 4), MPFR_RNDN);
    bool done = false;
    mpfr_t a, b;
    mpfr_init2(a, wp);
    mpfr_init2(b, wp);
    for (int attempt = 0; attempt < 80 && !done; ++attempt) {
        mpfr_sub(a, t, eps, MPFR_RNDD);
        mpfr_add(b, t, eps, MPFR_RNDU);
        bool clamp_lo = mpfr_cmp(a, bl.lo()) <= 0;
        bool clamp_hi = mpfr_cmp(b, bh.hi()) >= 0;
        if (clamp_lo) mpfr_set(a, bl.lo(), MPFR_RNDD);
        if (clamp_hi) mpfr_set(b, bh.hi(), MPFR_RNDU);
        Interval pa = poly_.eval(Interval::from_mpfr(a, a, wp));
        Interval pb = poly_.eval(Interval::from_mpfr(b, b, wp));
        // increasing: f(a) <= y.lo and f(b) >= y.hi pins every preimage of
        // values in y within [a, b]; decreasing is mirrored; clamped branch
        // ends waive their condition (the preimage cannot leave the branch)
        bool a_ok, b_ok;
        if (increasing) {
            a_ok = clamp_lo || mpfr_cmp(pa.hi(), y.enc.lo()) <= 0;
            b_ok = clamp_hi || mpfr_cmp(pb.lo(), y.enc.hi()) >= 0;
        } else {
            a_ok = clamp_lo || mpfr_cmp(pa.lo(), y.enc.hi()) >= 0;
            b_ok = clamp_hi || mpfr_cmp(pb.hi(), y.enc.lo()) <= 0;
        }
        if (a_ok && b_ok) {
            result = Interval::from_mpfr(a, b, bits);
            done = true;
        }
        mpfr_mul_2si(eps, eps, 2, MPFR_RNDN);
    }
    mpfr_clear(a);
    mpfr_clear(b);
    mpfr_clears(t, lo_br, hi_br, ymid, ft, dft, step, eps, cand, (mpfr_ptr) nullptr);
    if (!done)
        raise(ErrorCode::precision_exhausted, "branch preimage could not be certified");
    return CertifiedValue(result);
}

CertifiedValue MapSpec::branch_inverse(int k, const CertifiedValue& y, mpfr_prec_t bits) const {
    switch (kind_) {
        case MapKind::folded_linear: {
            size_t nb = breakpoints_.size();
            mpq_class lo = (k == 0) ? mpq_class(0) : breakpoints_[static_cast<size_t>(k) - 1];
            mpq_class hi =
                (static_cast<size_t>(k) == nb) ? mpq_class(1) : breakpoints_[static_cast<size_t>(k)];
            // even: y = (t-lo)/(hi-lo); odd: y = 1 - (t-lo)/(hi-lo)
            if (y.exact) {
                mpq_class t = (k % 2 == 0) ? mpq_class(lo + *y.exact * (hi - lo))
                                           : mpq_class(lo + (1 - *y.exact) * (hi - lo));
                t.canonicalize();
                return CertifiedValue::from_rational(t, bits);
            }
            Interval v = (k % 2 == 0) ? y.enc.round_to(bits)
                                      : Interval::point_long(1, bits) - y.enc.round_to(bits);
            return CertifiedValue(v.mul_rational(hi - lo).add_rational(lo));
        }
        case MapKind::polynomial:
            return polynomial_branch_inverse(k, y, bits);
        case MapKind::pushforward: {
            CertifiedValue u = homeo_.eval_inverse(y, bits);
            CertifiedValue t = base_->branch_inverse(k, u, bits);
            return homeo_.eval(t, bits);
        }
    }
    raise(ErrorCode::internal, "unreachable");
}

void MapSpec::override_criticals(std::vector<CriticalPoint> criticals) {
    if (criticals.size() != criticals_.size())
        raise(ErrorCode::invalid_map, "declared critical point count disagrees with the map");
    for (size_t i = 0; i < criticals.size(); ++i) {
        // keep the computed (certified) location; adopt declared metadata
        criticals[i].location = criticals_[i].location;
        criticals[i].declared = true;
    }
    criticals_ = std::move(criticals);
    edges_.clear();
    edges_.emplace_back(mpq_class(0));
    for (auto& c : criticals_) edges_.push_back(c.location);
    edges_.emplace_back(mpq_class(1));
}

} // namespace mdyn
