#include "pvi/rational.hpp"

#include <stdexcept>

namespace pvi {

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    auto is_int = [](std::string_view v) {
        if (!v.empty() && (v[0] == '-' || v[0] == '+')) v.remove_prefix(1);
        if (v.empty()) return false;
        for (char c : v)
            if (c < '0' || c > '9') return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) return std::nullopt;
            return Rational(Integer(std::string(text)));
        }
        auto nums = text.substr(0, slash);
        auto dens = text.substr(slash + 1);
        if (!is_int(nums) || !is_int(dens)) return std::nullopt;
        Integer den{std::string(dens)};
        if (den == 0) return std::nullopt;
        return rat(Integer(std::string(nums)), den);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = exp > 0 ? base : Rational(1) / base;
    unsigned long n = exp > 0 ? exp : -exp;
    Rational out(1);
    while (n) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

void split_square(const Integer& n, Integer& square_root, Integer& sqfree) {
    if (n == 0) {
        square_root = 0;
        sqfree = 0;
        return;
    }
    Integer m = abs(n);
    square_root = 1;
    sqfree = n < 0 ? -1 : 1;
    // perfect-square fast path
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        square_root = isqrt(m);
        return;
    }
    Integer p = 2;
    while (p * p <= m) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) square_root *= p;
            if (e % 2) sqfree *= p;
        }
        p += (p == 2) ? 1 : 2;
        if (p > 100000 && m > 1) break;  // give up: treat the tail as squarefree
    }
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            square_root *= isqrt(m);
        } else {
            sqfree *= m;
        }
    }
}

}  // namespace pvi
