#include "pvi/branching.hpp"

#include <algorithm>
#include <optional>

#include "pvi/errors.hpp"

namespace pvi {

namespace {

using uni::UPoly;

constexpr long kInf = 1L << 30;

UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly out = a;
    out.resize(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    uni::normalize(out);
    return out;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly out = a;
    out.resize(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    uni::normalize(out);
    return out;
}

UPoly uscale(UPoly a, const Rational& c) {
    for (auto& x : a) x *= c;
    uni::normalize(a);
    return a;
}

UPoly usq(const UPoly& a) { return uni::mul(a, a); }

// order of h along the squarefree locus q, with a split request when the
// order is not uniform across the roots of q
struct Splitter {
    std::optional<UPoly> split;

    long ord(const UPoly& h_in, const UPoly& q) {
        if (split) return 0;
        if (uni::is_zero(h_in)) return kInf;
        UPoly h = h_in;
        long k = 0;
        while (true) {
            UPoly g = uni::gcd(h, q);
            if (uni::degree(g) == 0) return k;
            if (uni::degree(g) == uni::degree(q)) {
                h = uni::div_exact(h, q);
                ++k;
                continue;
            }
            split = g;
            return 0;
        }
    }

    // unordered order pair of x0 + x1*w over q on the unramified curve w^2=pw
    std::pair<long, long> pair1(const UPoly& x0, const UPoly& x1, const UPoly& pw,
                                const UPoly& q) {
        long mu = std::min(ord(x0, q), ord(x1, q));
        if (split) return {0, 0};
        if (mu >= kInf) throw Error("zero function in order computation");
        UPoly norm = usub(usq(x0), uni::mul(pw, usq(x1)));
        long omega = ord(norm, q);
        if (split) return {0, 0};
        if (omega >= kInf) throw Error("norm vanished identically (tower is not a field?)");
        return {mu, omega - mu};
    }
};

struct Coords {
    UPoly c00, c10, c01, c11;  // coefficients of 1, u1, u2, u1*u2
};

Coords coords_of(const Poly& p) {
    Coords c;
    auto put = [](UPoly& dst, std::uint32_t e, const Rational& v) {
        if (dst.size() <= e) dst.resize(e + 1, Rational(0));
        dst[e] = v;
    };
    for (const auto& [m, v] : p.terms()) {
        switch (m.gens) {
            case 0: put(c.c00, m.base, v); break;
            case 1: put(c.c10, m.base, v); break;
            case 2: put(c.c01, m.base, v); break;
            case 3: put(c.c11, m.base, v); break;
            default: throw Error("unsupported tower shape (more than two generators)");
        }
    }
    uni::normalize(c.c00);
    uni::normalize(c.c10);
    uni::normalize(c.c01);
    uni::normalize(c.c11);
    return c;
}

struct PlaceOrders {
    std::vector<long> num_orders;  // one entry per place above a root of q
    long den_e = 1;                // ord_P(D) = den_e * ord_q(D)
};

// Orders of the polynomial `num` at the places above one root of q.
// rels holds the (base-only) relations; returns nullopt with a split
// request when q must be refined first.
std::optional<PlaceOrders> place_orders(const Poly& num, const std::vector<UPoly>& rels,
                                        const UPoly& q, std::optional<UPoly>& split_out) {
    Splitter sp;
    Coords X = coords_of(num);
    const unsigned k = static_cast<unsigned>(rels.size());
    PlaceOrders out;

    auto bail = [&]() -> std::optional<PlaceOrders> {
        split_out = sp.split;
        return std::nullopt;
    };

    if (k == 0) {
        long o = sp.ord(X.c00, q);
        if (sp.split) return bail();
        out.num_orders = {o};
        return out;
    }

    if (k == 1) {
        long m1 = sp.ord(rels[0], q);
        if (sp.split) return bail();
        if (m1 == 0) {
            auto pr = sp.pair1(X.c00, X.c10, rels[0], q);
            if (sp.split) return bail();
            out.num_orders = {pr.first, pr.second};
            return out;
        }
        if (m1 != 1) throw Error("relation is not squarefree along a cluster");
        long o0 = sp.ord(X.c00, q);
        long o1 = sp.ord(X.c10, q);
        if (sp.split) return bail();
        out.num_orders = {std::min(2 * o0, 2 * o1 + 1)};
        out.den_e = 2;
        return out;
    }

    const UPoly& p1 = rels[0];
    const UPoly& p2 = rels[1];
    long m1 = sp.ord(p1, q);
    long m2 = sp.ord(p2, q);
    if (sp.split) return bail();
    if (m1 > 1 || m2 > 1) throw Error("relation is not squarefree along a cluster");

    if (m1 == 0 && m2 == 0) {
        long mu4 = std::min(std::min(sp.ord(X.c00, q), sp.ord(X.c10, q)),
                            std::min(sp.ord(X.c01, q), sp.ord(X.c11, q)));
        if (sp.split) return bail();
        // norm over u1, a function of u2:  C = (A0+A1 u2)^2 - p1 (B0+B1 u2)^2
        UPoly c0 = usub(uadd(usq(X.c00), uni::mul(p2, usq(X.c01))),
                        uni::mul(p1, uadd(usq(X.c10), uni::mul(p2, usq(X.c11)))));
        UPoly c1 = uscale(usub(uni::mul(X.c00, X.c01), uni::mul(p1, uni::mul(X.c10, X.c11))),
                          Rational(2));
        auto gp = sp.pair1(c0, c1, p2, q);  // {a+c, b+d}
        // norm over u2, a function of u1
        UPoly h0 = usub(uadd(usq(X.c00), uni::mul(p1, usq(X.c10))),
                        uni::mul(p2, uadd(usq(X.c01), uni::mul(p1, usq(X.c11)))));
        UPoly h1 = uscale(usub(uni::mul(X.c00, X.c10), uni::mul(p2, uni::mul(X.c01, X.c11))),
                          Rational(2));
        auto hp = sp.pair1(h0, h1, p1, q);  // {a+b, c+d}
        // both-flip norm on the w = u1 u2 curve (w^2 = p1 p2)
        UPoly p12 = uni::mul(p1, p2);
        UPoly j0 = usub(uadd(usq(X.c00), uni::mul(p12, usq(X.c11))),
                        uadd(uni::mul(p1, usq(X.c10)), uni::mul(p2, usq(X.c01))));
        UPoly j1 = uscale(usub(uni::mul(X.c00, X.c11), uni::mul(X.c10, X.c01)), Rational(2));
        auto jp = sp.pair1(j0, j1, p12, q);  // {a+d, b+c}
        if (sp.split) return bail();
        long omega = gp.first + gp.second;
        std::vector<std::vector<long>> candidates;
        for (long ab : {hp.first, hp.second})
            for (long ac : {gp.first, gp.second})
                for (long ad : {jp.first, jp.second}) {
                    long twice_a = ab + ac + ad - omega;
                    if (twice_a % 2 != 0 || twice_a < 0) continue;
                    long a = twice_a / 2;
                    long b = ab - a, c = ac - a, d = ad - a;
                    if (b < 0 || c < 0 || d < 0) continue;
                    if (std::min({a, b, c, d}) != mu4) continue;
                    if (a + b + c + d != omega) continue;
                    std::vector<long> ms{a, b, c, d};
                    std::sort(ms.begin(), ms.end());
                    candidates.push_back(std::move(ms));
                }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        if (candidates.empty()) throw Error("inconsistent order bookkeeping");
        if (candidates.size() > 1) throw Error("failed to separate points");
        out.num_orders = candidates.front();
        return out;
    }

    if (m1 + m2 == 1) {
        // exactly one generator ramified; (A + B u_r) with A, B on the
        // unramified curve; orders are the per-sign orders of A^2 - pr B^2
        bool swapped = (m2 == 1);
        const UPoly& pr = swapped ? p2 : p1;
        const UPoly& pu = swapped ? p1 : p2;
        const UPoly& A0 = X.c00;
        const UPoly& A1 = swapped ? X.c10 : X.c01;
        const UPoly& B0 = swapped ? X.c01 : X.c10;
        const UPoly& B1 = X.c11;
        UPoly c0 = usub(uadd(usq(A0), uni::mul(pu, usq(A1))),
                        uni::mul(pr, uadd(usq(B0), uni::mul(pu, usq(B1)))));
        UPoly c1 = uscale(usub(uni::mul(A0, A1), uni::mul(pr, uni::mul(B0, B1))), Rational(2));
        auto pr_pair = sp.pair1(c0, c1, pu, q);
        if (sp.split) return bail();
        out.num_orders = {pr_pair.first, pr_pair.second};
        out.den_e = 2;
        return out;
    }

    // both ramified over the same root: u2 = v u1 with v^2 = (p1/q)(p2/q);
    // f = (c00 + c11 p1 v) + (c10 + c01 v) u1, orders via F = C^2 - p1 E^2
    {
        UPoly p1q = uni::div_exact(p1, q);
        UPoly p2q = uni::div_exact(p2, q);
        UPoly pv = uni::mul(p1q, p2q);
        UPoly C0 = X.c00, C1 = uni::mul(X.c11, p1);
        const UPoly& E0 = X.c10;
        const UPoly& E1 = X.c01;
        UPoly f0 = usub(uadd(usq(C0), uni::mul(pv, usq(C1))),
                        uni::mul(p1, uadd(usq(E0), uni::mul(pv, usq(E1)))));
        UPoly f1 = uscale(usub(uni::mul(C0, C1), uni::mul(p1, uni::mul(E0, E1))), Rational(2));
        auto pr_pair = sp.pair1(f0, f1, pv, q);
        if (sp.split) return bail();
        out.num_orders = {pr_pair.first, pr_pair.second};
        out.den_e = 2;
        return out;
    }
}

// full norm of a <=2-generator polynomial down to Q[s]
UPoly full_norm(const Poly& p, const std::vector<UPoly>& rels) {
    Coords X = coords_of(p);
    if (rels.empty()) return X.c00;
    if (rels.size() == 1) return usub(usq(X.c00), uni::mul(rels[0], usq(X.c10)));
    UPoly c0 = usub(uadd(usq(X.c00), uni::mul(rels[1], usq(X.c01))),
                    uni::mul(rels[0], uadd(usq(X.c10), uni::mul(rels[1], usq(X.c11)))));
    UPoly c1 = uscale(usub(uni::mul(X.c00, X.c01), uni::mul(rels[0], uni::mul(X.c10, X.c11))),
                      Rational(2));
    return usub(usq(c0), uni::mul(rels[1], usq(c1)));
}

// product of the distinct irreducible factors
UPoly radical(const UPoly& f) {
    UPoly g = uni::gcd(f, uni::derivative(f));
    if (uni::degree(g) == 0) return f;
    return uni::div_exact(f, g);
}

void insert_squarefree(std::vector<UPoly>& basis, UPoly f) {
    for (std::size_t i = 0; i < basis.size() && uni::degree(f) > 0; ++i) {
        UPoly g = uni::gcd(f, basis[i]);
        if (uni::degree(g) == 0) continue;
        if (uni::degree(g) < uni::degree(basis[i])) {
            UPoly rest = uni::div_exact(basis[i], g);
            basis[i] = std::move(g);
            basis.push_back(std::move(rest));  // coprime to the others already
        }
        f = uni::div_exact(f, basis[i]);
    }
    if (uni::degree(f) > 0) basis.push_back(std::move(f));
}

void gcd_free_insert(std::vector<UPoly>& basis, UPoly f) {
    uni::normalize(f);
    if (uni::degree(f) <= 0) return;
    insert_squarefree(basis, radical(f));
}

struct FiberAccumulator {
    std::vector<long> zeros, ones, poles;

    void add(long t_ord, long tm1_ord, int copies) {
        for (int i = 0; i < copies; ++i) {
            if (t_ord > 0) zeros.push_back(t_ord);
            if (t_ord < 0) poles.push_back(-t_ord);
            if (tm1_ord > 0) ones.push_back(tm1_ord);
        }
    }
};

// analyze every cluster of the given locus against N, N-D, D
void analyze_side(const Poly& N, const Poly& NmD, const UPoly& D,
                  const std::vector<UPoly>& rels, std::vector<UPoly> worklist,
                  FiberAccumulator& acc) {
    while (!worklist.empty()) {
        UPoly q = std::move(worklist.back());
        worklist.pop_back();
        if (uni::degree(q) <= 0) continue;
        std::optional<UPoly> split;
        auto on_split = [&](const UPoly& g) {
            UPoly rest = uni::div_exact(q, g);
            worklist.push_back(g);
            worklist.push_back(rest);
        };
        auto a_n = place_orders(N, rels, q, split);
        if (!a_n) {
            on_split(*split);
            continue;
        }
        auto a_m = place_orders(NmD, rels, q, split);
        if (!a_m) {
            on_split(*split);
            continue;
        }
        Splitter sp;
        long d_ord = sp.ord(D, q);
        if (sp.split) {
            on_split(*sp.split);
            continue;
        }
        if (a_n->den_e != a_m->den_e || a_n->num_orders.size() != a_m->num_orders.size())
            throw Error("inconsistent place structure");
        // Places are not individually matched between the N and N-D analyses,
        // but at any place at most one of t, t-1 vanishes, and pole orders
        // agree for both; the multisets can therefore be combined safely.
        long dord_scaled = a_n->den_e * d_ord;
        std::vector<long> t_orders, tm1_orders;
        for (long o : a_n->num_orders) t_orders.push_back(o - dord_scaled);
        for (long o : a_m->num_orders) tm1_orders.push_back(o - dord_scaled);
        std::sort(t_orders.begin(), t_orders.end());
        std::sort(tm1_orders.begin(), tm1_orders.end());
        // consistency: negative entries (poles) must agree
        std::size_t places = t_orders.size();
        for (std::size_t i = 0; i < places; ++i) {
            long tn = t_orders[i];
            long tm = tm1_orders[i];
            if ((tn < 0) != (tm < 0) || (tn < 0 && tn != tm))
                throw Error("failed to separate points (pole mismatch)");
        }
        int copies = uni::degree(q);
        for (std::size_t i = 0; i < places; ++i)
            acc.add(t_orders[i], tm1_orders[i], copies);
    }
}

}  // namespace

BranchPattern branching(const TowerPtr& tower, const TowerElement& t) {
    if (tower->size() > 2) throw Error("unsupported tower shape (more than two generators)");
    std::vector<UPoly> rels;
    for (unsigned i = 0; i < tower->size(); ++i) {
        if (!tower->relation(i).base_only())
            throw Error("unsupported tower shape (nested radicand)");
        rels.push_back(tower->relation(i).univariate());
    }
    TowerElement tt = t.tower()->same_as(*tower) ? t : t.lifted(tower);
    const Poly& N = tt.num();
    UPoly D = tt.den().univariate();
    Poly NmD = tt.num() - Poly::from_univariate(D);

    FiberAccumulator acc;
    // finite part
    {
        std::vector<UPoly> basis;
        gcd_free_insert(basis, full_norm(N, rels));
        gcd_free_insert(basis, full_norm(NmD, rels));
        gcd_free_insert(basis, D);
        for (const auto& r : rels) gcd_free_insert(basis, r);
        analyze_side(N, NmD, D, rels, basis, acc);
    }
    // point(s) at infinity: substitute s -> 1/z and rescale the generators
    {
        TowerPtr zt = Tower::rational("z");
        std::vector<unsigned> half_deg;
        for (const auto& r : rels) {
            unsigned d = static_cast<unsigned>(uni::degree(r));
            unsigned c = (d + 1) / 2;
            half_deg.push_back(c);
            Poly rev = Poly::from_univariate(r);
            rev = rev.reverse_base();
            if (2 * c != d) rev = mul(rev, Poly::variable_base(1), *zt);
            // renaming: keep generator names
            zt = zt->extended(tower->gen_name(static_cast<unsigned>(half_deg.size()) - 1),
                              rev);
        }
        TowerMap map;
        map.target = zt;
        map.base_image = TowerElement::base(zt).inverse();
        for (unsigned i = 0; i < tower->size(); ++i)
            map.gen_images.push_back(TowerElement::generator(zt, i) *
                                     TowerElement::base(zt).pow(-(long)half_deg[i]));
        TowerElement t_inf = map.apply(tt);
        const Poly& N2 = t_inf.num();
        UPoly D2 = t_inf.den().univariate();
        Poly NmD2 = t_inf.num() - Poly::from_univariate(D2);
        std::vector<UPoly> rels2;
        for (unsigned i = 0; i < zt->size(); ++i) rels2.push_back(zt->relation(i).univariate());
        std::vector<UPoly> loci{UPoly{Rational(0), Rational(1)}};  // z
        analyze_side(N2, NmD2, D2, rels2, loci, acc);
    }

    BranchPattern out;
    out.zeros = acc.zeros;
    out.ones = acc.ones;
    out.poles = acc.poles;
    auto sum = [](const std::vector<long>& v) {
        long s = 0;
        for (long x : v) s += x;
        return s;
    };
    long sz = sum(out.zeros), so = sum(out.ones), sp = sum(out.poles);
    if (sz != so || so != sp)
        throw Error("fiber degree mismatch: " + std::to_string(sz) + "/" + std::to_string(so) +
                    "/" + std::to_string(sp));
    out.degree = sz;
    auto desc = [](std::vector<long>& v) { std::sort(v.rbegin(), v.rend()); };
    desc(out.zeros);
    desc(out.ones);
    desc(out.poles);
    return out;
}

BranchPattern branching(const CatalogEntry& entry) {
    return branching(entry.tower(), entry.t());
}

}  // namespace pvi
