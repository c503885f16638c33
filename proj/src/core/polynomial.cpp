#include "polynomial.hpp"

#include "errors.hpp"

#include <utility>

namespace mdyn {

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RationalPoly::eval_exact(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    acc.canonicalize();
    return acc;
}

int RationalPoly::sign_at(const mpq_class& x) const {
    return sgn(eval_exact(x));
}

Interval RationalPoly::eval(const Interval& x) const {
    Interval acc(x.prec());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = (acc * x).add_rational(*it);
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return RationalPoly({});
    std::vector<mpq_class> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RationalPoly(std::move(d));
}

std::vector<RationalPoly::RootBracket> RationalPoly::isolate_roots(const mpq_class& a,
                                                                   const mpq_class& b) const {
    std::vector<RootBracket> found;
    if (degree() < 1) return found;
    auto keep_if_interior = [&](const mpq_class& r) {
        if (r > a && r < b) found.push_back({r, r});
    };
    if (degree() == 1) {
        keep_if_interior(mpq_class(-coeffs_[0] / coeffs_[1]));
        return found;
    }
    if (degree() == 2) {
        mpq_class disc = coeffs_[1] * coeffs_[1] - 4 * coeffs_[2] * coeffs_[0];
        if (disc < 0) return found;
        if (auto root = exact_sqrt(disc)) {
            mpq_class r1 = (-coeffs_[1] - *root) / (2 * coeffs_[2]);
            mpq_class r2 = (-coeffs_[1] + *root) / (2 * coeffs_[2]);
            if (r1 > r2) std::swap(r1, r2);
            keep_if_interior(r1);
            if (r2 != r1) keep_if_interior(r2);
            return found;
        }
        // irrational quadratic roots: fall through to the generic scan
    }
    // scan a refining grid; stop when two consecutive refinements agree on
    // the sign-change count (turning-point derivatives have simple roots)
    size_t cells = 16;
    const size_t cell_limit = 1u << 16;
    std::vector<RootBracket> prev;
    bool have_prev = false;
    while (cells <= cell_limit) {
        found.clear();
        mpq_class step = (b - a) / static_cast<long>(cells);
        mpq_class prev_x = a;
        int prev_s = sign_at(a);
        for (size_t i = 1; i <= cells; ++i) {
            mpq_class x = (i == cells) ? b : mpq_class(a + step * static_cast<long>(i));
            x.canonicalize();
            int s = sign_at(x);
            if (s == 0) {
                if (i < cells) found.push_back({x, x});
            } else if (prev_s == 0) {
                // scan point sat on a root; re-anchor with the cell midpoint
                mpq_class mid = (prev_x + x) / 2;
                int sm = sign_at(mid);
                if (sm == 0)
                    found.push_back({mid, mid});
                else if (sm != s)
                    found.push_back({mid, x});
            } else if (prev_s != s) {
                found.push_back({prev_x, x});
            }
            prev_x = x;
            prev_s = s;
        }
        if (found.size() >= static_cast<size_t>(degree())) break;
        if (have_prev && prev.size() == found.size()) break;
        prev = found;
        have_prev = true;
        cells *= 4;
    }
    if (found.size() > static_cast<size_t>(degree()))
        raise(ErrorCode::root_isolation_failure, "more sign changes than the degree allows");
    return found;
}

RationalPoly::RootBracket RationalPoly::refine(const RootBracket& br,
                                               const mpq_class& width) const {
    if (br.exact()) return br;
    mpq_class lo = br.lo, hi = br.hi;
    int sl = sign_at(lo);
    while (hi - lo > width) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        int sm = sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == sl)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

std::optional<mpq_class> RationalPoly::snap_rational(const RootBracket& br,
                                                     unsigned long max_denominator) const {
    if (br.exact()) return br.lo;
    auto cand = simplest_rational_in(br.lo, br.hi, max_denominator);
    if (cand && sign_at(*cand) == 0) return cand;
    return std::nullopt;
}

} // namespace mdyn
