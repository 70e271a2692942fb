#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "pvi/element.hpp"

namespace pvi {

// Arbitrary-precision complex arithmetic on top of GMP floats.  Precision is
// taken from the global default (set_working_digits); all evaluation entry
// points set it before computing.
struct AComplex {
    mpf_class re, im;

    AComplex() : re(0), im(0) {}
    AComplex(long r) : re(r), im(0) {}
    AComplex(const mpf_class& r) : re(r), im(0) {}
    AComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

    friend AComplex operator+(const AComplex& a, const AComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend AComplex operator-(const AComplex& a, const AComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend AComplex operator*(const AComplex& a, const AComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend AComplex operator/(const AComplex& a, const AComplex& b);
    AComplex& operator+=(const AComplex& o) { return *this = *this + o; }
    AComplex& operator-=(const AComplex& o) { return *this = *this - o; }
    AComplex& operator*=(const AComplex& o) { return *this = *this * o; }
    AComplex& operator/=(const AComplex& o) { return *this = *this / o; }
    AComplex operator-() const { return {-re, -im}; }
};

mpf_class abs(const AComplex& z);
AComplex sqrt(const AComplex& z);  // principal branch
AComplex pow(const AComplex& z, unsigned e);
std::string to_string(const AComplex& z, int digits = 20);

void set_working_digits(unsigned decimal_digits);
unsigned working_digits();
mpf_class pow10(long e);  // 10^e at working precision
mpf_class to_float(const Rational& q);

// A concrete point of the curve: a base value plus one branch value per
// generator (g_i^2 == p_i(point) within tolerance).
struct CurvePoint {
    TowerPtr tower;
    AComplex base;
    std::vector<AComplex> gens;
};

// Builds the branch values bottom-up with the given signs (+1 / -1,
// defaulting to +1); throws NumericError on a branch point (|p_i| ~ 0).
CurvePoint make_point(const TowerPtr& tower, const AComplex& base,
                      const std::vector<int>& signs = {});

// Validates that every supplied branch value squares to its radicand at the
// point (within 10^(-digits/2)); throws NumericError otherwise.
void check_point(const CurvePoint& pt);

AComplex eval(const Poly& p, const CurvePoint& pt);
// Throws NumericError on a vanishing denominator ("pole at sample point").
AComplex eval(const TowerElement& x, const CurvePoint& pt);

// Deterministic sample-point generator: rational base values in (1/7, 6),
// avoiding poles of the supplied elements, resampling up to 32 times.
class SamplePlan {
  public:
    explicit SamplePlan(std::uint64_t seed = 0x5eed5eedULL) : state_(seed) {}
    // next admissible point for the given elements (their denominators must
    // not vanish); throws NumericError if the resample budget is exhausted
    CurvePoint next(const TowerPtr& tower, const std::vector<const TowerElement*>& avoid_poles);

  private:
    Rational next_rational();
    std::uint64_t state_;
};

}  // namespace pvi
