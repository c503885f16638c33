#pragma once

#include "certified.hpp"
#include "homeo.hpp"
#include "interval.hpp"
#include "polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mdyn {

enum class MapKind { polynomial, folded_linear, pushforward };

struct CriticalPoint {
    CertifiedReal location;
    double order = 0;            // l > 1; NaN/0 when not applicable (non-smooth)
    double nonflat_constant = 0; // L > 1; 0 when unspecified
    mpq_class neighborhood_radius = mpq_class(1, 16);
    bool declared = false; // provided by the map file rather than computed
};

struct NonflatRecord {
    bool applicable = false;
    bool pass = false;
    double fitted_order = 0;
    double fitted_constant = 0;
    double stored_order = 0;
    double stored_constant = 0;
    long samples = 0;
    std::string detail;
};

struct SchwarzianGridRecord {
    bool applicable = false;
    bool pass = false;
    long samples = 0;
    long violations = 0;
};

// Multimodal interval map on [0,1]. Immutable after construction; evaluation
// is pure and reentrant.
class MapSpec {
public:
    static MapSpec make_polynomial(std::string name, std::vector<mpq_class> coeffs,
                                   PrecisionConfig prec, bool negative_schwarzian);
    static MapSpec make_folded_linear(std::string name, std::vector<mpq_class> breakpoints,
                                      PrecisionConfig prec);
    static MapSpec make_pushforward(std::string name, std::shared_ptr<const MapSpec> base,
                                    Homeo h);

    MapKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const PrecisionConfig& precision() const { return prec_; }
    bool negative_schwarzian_flag() const { return negative_schwarzian_; }
    const RationalPoly& poly() const { return poly_; }
    const std::vector<mpq_class>& breakpoints() const { return breakpoints_; }
    const MapSpec* base() const { return base_.get(); }
    const Homeo& homeo() const { return homeo_; }
    const std::string& boundary_policy() const { return boundary_policy_; }

    int q() const { return static_cast<int>(criticals_.size()); }
    const std::vector<CriticalPoint>& critical_points() const { return criticals_; }
    const CriticalPoint& critical(int i) const { return criticals_[static_cast<size_t>(i)]; }
    // partition edges 0, c_1, ..., c_q, 1 (size q+2)
    const CertifiedReal& edge(int k) const { return edges_[static_cast<size_t>(k)]; }
    int branch_count() const { return q() + 1; }
    int branch_orientation(int k) const { return orientations_[static_cast<size_t>(k)]; }
    // f(0), f(1) when the boundary is forward-invariant
    mpq_class boundary_image(const mpq_class& b) const;
    bool boundary_invariant() const { return boundary_invariant_; }

    CertifiedValue evaluate(const CertifiedValue& x, mpfr_prec_t bits) const;
    CertifiedValue derivative_value(const CertifiedValue& x, mpfr_prec_t bits) const;
    Interval schwarzian(const Interval& x) const;
    // certified preimage through the monotone branch k of an enclosure that
    // lies inside the branch image
    CertifiedValue branch_inverse(int k, const CertifiedValue& y, mpfr_prec_t bits) const;

    // Replaces computed critical metadata with declared values (file input).
    void override_criticals(std::vector<CriticalPoint> criticals);

private:
    MapKind kind_ = MapKind::polynomial;
    std::string name_;
    PrecisionConfig prec_;
    bool negative_schwarzian_ = false;

    RationalPoly poly_, dpoly_, d2poly_, d3poly_;
    std::vector<mpq_class> breakpoints_;
    std::shared_ptr<const MapSpec> base_;
    Homeo homeo_;

    std::vector<CriticalPoint> criticals_;
    std::vector<CertifiedReal> edges_;
    std::vector<int> orientations_;
    bool boundary_invariant_ = false;
    mpq_class f0_, f1_; // boundary images when invariant
    std::string boundary_policy_;

    void finalize();
    void locate_critical_points();
    void validate_boundary_and_range();
    CertifiedValue polynomial_branch_inverse(int k, const CertifiedValue& y,
                                             mpfr_prec_t bits) const;
    CertifiedValue newton_branch_inverse(int k, const CertifiedValue& y,
                                         mpfr_prec_t bits) const;
};

// All interior zeros of Df (turning points of folded_linear) in increasing
// order, with the non-flatness order fitted from a log-log slope.
std::vector<CriticalPoint> find_critical_points(const MapSpec& map);

// Tightest (l, L) consistent with the two-sided non-flatness bound over a
// geometric sample grid in V(c), compared against the stored values.
NonflatRecord verify_nonflat(const MapSpec& map, int critical_index, long samples);

// Exact sign check of the Schwarzian numerator on an equispaced rational grid
// off the critical set (polynomial maps).
SchwarzianGridRecord verify_negative_schwarzian(const MapSpec& map, long grid);

} // namespace mdyn
