#include "rational.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cctype>

namespace mdyn {

namespace {

mpq_class parse_decimal(const std::string& text) {
    // [sign] digits [. digits] [e exponent]
    std::string mantissa;
    long exp10 = 0;
    size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) mantissa += text[i++];
    bool saw_digit = false, saw_dot = false;
    long frac_digits = 0;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mantissa += ch;
            saw_digit = true;
            if (saw_dot) ++frac_digits;
        } else if (ch == '.' && !saw_dot) {
            saw_dot = true;
        } else if ((ch == 'e' || ch == 'E') && saw_digit) {
            exp10 = std::stol(text.substr(i + 1));
            i = text.size() - 1;
            break;
        } else {
            raise(ErrorCode::parse_error, "bad rational literal '" + text + "'");
        }
    }
    if (!saw_digit) raise(ErrorCode::parse_error, "bad rational literal '" + text + "'");
    mpq_class value(mpz_class(mantissa), 1);
    long net = exp10 - frac_digits;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(net < 0 ? -net : net));
    if (net >= 0)
        value *= mpq_class(pow10, 1);
    else
        value /= mpq_class(pow10, 1);
    value.canonicalize();
    return value;
}

} // namespace

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) raise(ErrorCode::parse_error, "empty rational literal");
    if (text.find('/') != std::string::npos) {
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            raise(ErrorCode::parse_error, "bad rational literal '" + text + "'");
        if (q.get_den() == 0)
            raise(ErrorCode::parse_error, "zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    }
    if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
        text.find('E') != std::string::npos)
        return parse_decimal(text);
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        raise(ErrorCode::parse_error, "bad rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_string(const mpq_class& q) {
    return q.get_str();
}

std::string rational_decimal(const mpq_class& q, int digits) {
    if (q == 0) return "0";
    mpq_class a = abs(q);
    // scale so that the integer part carries `digits` significant digits
    mpz_class num = a.get_num(), den = a.get_den();
    long shift = 0;
    mpz_class scaled_num = num;
    while (scaled_num < den) {
        scaled_num *= 10;
        ++shift;
    }
    // scaled_num/den now in [1,10); bring digits-1 more places, then round
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
    scaled_num *= pow10;
    mpz_class quotient, remainder;
    mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled_num.get_mpz_t(),
                den.get_mpz_t());
    if (remainder * 2 >= den) quotient += 1;
    std::string mant = quotient.get_str();
    long exp = static_cast<long>(mant.size()) - 1 - shift - (digits - 1);
    // strip trailing zeros
    size_t last = mant.find_last_not_of('0');
    std::string core = mant.substr(0, std::max<size_t>(last + 1, 1));
    long point = static_cast<long>(mant.size()) + exp; // digits before the decimal point
    std::string out = q < 0 ? "-" : "";
    if (point > 0 && point <= static_cast<long>(core.size())) {
        out += core.substr(0, point);
        if (point < static_cast<long>(core.size())) out += "." + core.substr(point);
    } else if (point > 0 && point <= digits + 4) {
        out += core + std::string(point - core.size(), '0');
    } else if (point <= 0 && point > -6) {
        out += "0." + std::string(-point, '0') + core;
    } else {
        out += core.substr(0, 1);
        if (core.size() > 1) out += "." + core.substr(1);
        out += "e" + std::to_string(point - 1);
    }
    return out;
}

std::optional<mpq_class> exact_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    mpz_class ns, nr, ds, dr;
    mpz_sqrtrem(ns.get_mpz_t(), nr.get_mpz_t(), q.get_num().get_mpz_t());
    if (nr != 0) return std::nullopt;
    mpz_sqrtrem(ds.get_mpz_t(), dr.get_mpz_t(), q.get_den().get_mpz_t());
    if (dr != 0) return std::nullopt;
    return mpq_class(ns, ds);
}

size_t rational_bits(const mpq_class& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

namespace {

std::optional<mpq_class> simplest_positive(const mpq_class& lo, const mpq_class& hi,
                                           unsigned long max_denominator, int depth) {
    if (depth > 512) return std::nullopt;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpq_class floor_lo(fl, 1);
    mpq_class ceil_lo = (lo == floor_lo) ? floor_lo : floor_lo + 1;
    if (ceil_lo <= hi) return ceil_lo; // an integer fits
    // floor_lo < lo <= hi < floor_lo + 1
    auto inner = simplest_positive(1 / (hi - floor_lo), 1 / (lo - floor_lo),
                                   max_denominator, depth + 1);
    if (!inner) return std::nullopt;
    mpq_class r = floor_lo + 1 / *inner;
    r.canonicalize();
    if (r.get_den() > max_denominator) return std::nullopt;
    return r;
}

} // namespace

std::optional<mpq_class> simplest_rational_in(const mpq_class& lo, const mpq_class& hi,
                                              unsigned long max_denominator) {
    if (lo > hi) return std::nullopt;
    if (lo <= 0 && hi >= 0) return mpq_class(0);
    if (hi < 0) {
        auto r = simplest_rational_in(-hi, -lo, max_denominator);
        if (r) return mpq_class(-*r);
        return std::nullopt;
    }
    return simplest_positive(lo, hi, max_denominator, 0);
}

} // namespace mdyn
