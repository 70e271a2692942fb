#include "pvi/numeric.hpp"

#include <cmath>
#include <sstream>

#include "pvi/errors.hpp"

namespace pvi {

namespace {
unsigned g_digits = 60;
}

void set_working_digits(unsigned decimal_digits) {
    g_digits = decimal_digits;
    // log2(10) ~ 3.3220; generous guard bits for the big catalog entries
    mpf_set_default_prec(static_cast<mp_bitcnt_t>(decimal_digits * 3.33) + 96);
}

unsigned working_digits() { return g_digits; }

mpf_class pow10(long e) {
    mpf_class ten(10);
    mpf_class out(1);
    long n = e < 0 ? -e : e;
    while (n--) out *= ten;
    if (e < 0) out = 1 / out;
    return out;
}

mpf_class to_float(const Rational& q) {
    return mpf_class(q);
}

AComplex operator/(const AComplex& a, const AComplex& b) {
    mpf_class d = b.re * b.re + b.im * b.im;
    if (d == 0) throw NumericError("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

mpf_class abs(const AComplex& z) {
    mpf_class d = z.re * z.re + z.im * z.im;
    mpf_class r;
    mpf_sqrt(r.get_mpf_t(), d.get_mpf_t());
    return r;
}

AComplex sqrt(const AComplex& z) {
    if (z.re == 0 && z.im == 0) return AComplex();
    mpf_class r = abs(z);
    mpf_class w;
    if (z.re >= 0) {
        mpf_class t = (r + z.re) / 2;
        mpf_sqrt(w.get_mpf_t(), t.get_mpf_t());
        if (w == 0) return AComplex();
        return {w, z.im / (2 * w)};
    }
    mpf_class t = (r - z.re) / 2;
    mpf_sqrt(w.get_mpf_t(), t.get_mpf_t());
    if (w == 0) return AComplex();
    mpf_class re = z.im >= 0 ? mpf_class(z.im / (2 * w)) : mpf_class(-z.im / (2 * w));
    // principal branch: Re >= 0, sign(Im) follows sign(Im z)
    return z.im >= 0 ? AComplex{re, w} : AComplex{re, -w};
}

AComplex pow(const AComplex& z, unsigned e) {
    AComplex out(1);
    AComplex b = z;
    while (e) {
        if (e & 1) out *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return out;
}

std::string to_string(const AComplex& z, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << z.re;
    if (z.im != 0) {
        os << (z.im > 0 ? " + " : " - ");
        mpf_class a = z.im > 0 ? z.im : mpf_class(-z.im);
        os << a << "i";
    }
    return os.str();
}

CurvePoint make_point(const TowerPtr& tower, const AComplex& base,
                      const std::vector<int>& signs) {
    CurvePoint pt;
    pt.tower = tower;
    pt.base = base;
    mpf_class tol = pow10(-static_cast<long>(g_digits) / 2);
    for (unsigned i = 0; i < tower->size(); ++i) {
        AComplex v = eval(tower->relation(i), pt);
        if (abs(v) < tol)
            throw NumericError("branch point of generator " + tower->gen_name(i) +
                               " at the sample point");
        AComplex g = sqrt(v);
        if (i < signs.size() && signs[i] < 0) g = -g;
        pt.gens.push_back(g);
    }
    return pt;
}

void check_point(const CurvePoint& pt) {
    mpf_class tol = pow10(-static_cast<long>(g_digits) / 2);
    for (unsigned i = 0; i < pt.tower->size(); ++i) {
        if (i >= pt.gens.size()) throw NumericError("missing branch value");
        CurvePoint partial{pt.tower, pt.base,
                           std::vector<AComplex>(pt.gens.begin(), pt.gens.begin() + i)};
        AComplex v = eval(pt.tower->relation(i), partial);
        if (abs(pt.gens[i] * pt.gens[i] - v) > tol)
            throw NumericError("branch value inconsistent with relation of " +
                               pt.tower->gen_name(i));
    }
}

AComplex eval(const Poly& p, const CurvePoint& pt) {
    AComplex acc;
    std::vector<AComplex> base_pow{AComplex(1)};
    for (const auto& [m, c] : p.terms()) {
        while (base_pow.size() <= m.base) base_pow.push_back(base_pow.back() * pt.base);
        AComplex term = base_pow[m.base];
        term = term * AComplex(to_float(c));
        std::uint32_t g = m.gens;
        while (g) {
            unsigned idx = __builtin_ctz(g);
            g &= g - 1;
            if (idx >= pt.gens.size()) throw NumericError("point does not cover generator");
            term *= pt.gens[idx];
        }
        acc += term;
    }
    return acc;
}

AComplex eval(const TowerElement& x, const CurvePoint& pt) {
    AComplex den = eval(x.den(), pt);
    if (abs(den) < pow10(-static_cast<long>(g_digits) / 2))
        throw NumericError("pole at sample point - resample");
    return eval(x.num(), pt) / den;
}

Rational SamplePlan::next_rational() {
    // xorshift64
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    // rational in (1/7, 6): 1/7 + k/4096 * 41/7, k in [1, 4095]
    unsigned long k = (state_ % 4095) + 1;
    return rat(1, 7) + rat(static_cast<long>(k), 4096) * rat(41, 7);
}

CurvePoint SamplePlan::next(const TowerPtr& tower,
                            const std::vector<const TowerElement*>& avoid_poles) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        Rational s = next_rational();
        try {
            CurvePoint pt = make_point(tower, AComplex(to_float(s)));
            bool ok = true;
            mpf_class tol = pow10(-static_cast<long>(g_digits) / 2);
            for (const TowerElement* e : avoid_poles) {
                if (abs(eval(e->den(), pt)) < tol) {
                    ok = false;
                    break;
                }
            }
            if (ok) return pt;
        } catch (const NumericError&) {
            continue;
        }
    }
    throw NumericError("no admissible sample point after 32 attempts");
}

}  // namespace pvi
