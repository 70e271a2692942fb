#include "pvi/catalog.hpp"

#include <sstream>

#include "pvi/catalog_data.hpp"
#include "pvi/errors.hpp"
#include "pvi/expr.hpp"
#include "pvi/serialize.hpp"

namespace pvi {

namespace {

ThetaTuple parse_theta_line(const std::string& text) {
    std::istringstream is(text);
    std::string a, b, c, d;
    is >> a >> b >> c >> d;
    auto p0 = parse_rational(a), p1 = parse_rational(b), pt = parse_rational(c),
         pi = parse_rational(d);
    if (!p0 || !p1 || !pt || !pi) throw ParseError("bad theta: " + text);
    return ThetaTuple{*p0, *p1, *pt, *pi};
}

CatalogEntry build(const detail::EntrySource& src) {
    TowerPtr tower = Tower::rational(src.base);
    for (const auto& g : src.gens) {
        ExprContext ctx(tower);
        TowerElement rel = ctx.parse(g.expr);
        Rational unused;
        if (!rel.den().is_rational_constant(unused))
            throw ParseError(std::string("generator radicand must be polynomial: ") + g.name);
        Poly rel_poly = rel.num();
        Rational d;
        rel.den().is_rational_constant(d);
        rel_poly.scale(Rational(1) / d);
        tower = tower->extended(g.name, rel_poly);
    }
    ExprContext ctx(tower);
    for (const auto& l : src.lets) ctx.define(l.name, ctx.parse(l.expr));

    CatalogEntry e;
    e.id = src.id;
    e.source = src.source;
    e.claimed_degree = src.degree;
    e.claimed_genus = src.genus;
    e.solution.tower = tower;
    e.solution.t = ctx.parse(src.t_expr);
    e.solution.y = ctx.parse(src.y_expr);
    e.solution.theta = parse_theta_line(src.theta);
    e.solution.label = src.id;
    for (const char* l : src.links) e.links.emplace_back(l);
    return e;
}

}  // namespace

const std::vector<CatalogEntry>& load_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        for (const auto& src : detail::entry_sources()) out.push_back(build(src));
        return out;
    }();
    return entries;
}

bool catalog_has(const std::string& id) {
    for (const auto& e : load_catalog())
        if (e.id == id) return true;
    return false;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : load_catalog())
        if (e.id == id) return e;
    throw Error("unknown catalog entry: " + id);
}

VerifyReport verify_entry(const CatalogEntry& entry, std::size_t term_budget, unsigned samples,
                          unsigned digits) {
    return verify_solution(entry.solution, term_budget, samples, digits);
}

std::string entry_to_fixture(const CatalogEntry& entry) {
    std::ostringstream os;
    os << "# source: " << entry.source << "\n";
    os << "entry " << entry.id << "\n";
    os << "theta " << to_string(entry.theta().t0) << " " << to_string(entry.theta().t1) << " "
       << to_string(entry.theta().tt) << " " << to_string(entry.theta().ti) << "\n";
    os << "degree " << entry.claimed_degree << "\n";
    os << "genus " << entry.claimed_genus << "\n";
    os << tower_to_text(*entry.tower());
    os << "t = " << element_to_text(entry.t()) << "\n";
    os << "y = " << element_to_text(entry.y()) << "\n";
    for (const auto& l : entry.links) os << "link " << l << "\n";
    return os.str();
}

CatalogEntry entry_from_fixture(const std::string& text) {
    std::istringstream in(text);
    CatalogEntry e;
    std::string line;
    // header lines until the tower block
    while (in.peek() != EOF) {
        std::streampos before = in.tellg();
        if (!std::getline(in, line)) break;
        if (line.rfind("# source: ", 0) == 0) {
            e.source = line.substr(10);
        } else if (line.rfind("entry ", 0) == 0) {
            e.id = line.substr(6);
        } else if (line.rfind("theta ", 0) == 0) {
            e.solution.theta = parse_theta_line(line.substr(6));
        } else if (line.rfind("degree ", 0) == 0) {
            e.claimed_degree = std::stoi(line.substr(7));
        } else if (line.rfind("genus ", 0) == 0) {
            e.claimed_genus = std::stoi(line.substr(6));
        } else if (line.rfind("base ", 0) == 0) {
            in.seekg(before);
            break;
        } else {
            throw ParseError("unexpected fixture line: " + line);
        }
    }
    TowerPtr tower = tower_from_text(in);
    e.solution.tower = tower;
    bool have_t = false, have_y = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("t = ", 0) == 0) {
            e.solution.t = element_from_text(line.substr(4), tower);
            have_t = true;
        } else if (line.rfind("y = ", 0) == 0) {
            e.solution.y = element_from_text(line.substr(4), tower);
            have_y = true;
        } else if (line.rfind("link ", 0) == 0) {
            e.links.push_back(line.substr(5));
        } else {
            throw ParseError("unexpected fixture line: " + line);
        }
    }
    if (e.id.empty() || !have_t || !have_y) throw ParseError("incomplete fixture");
    e.solution.label = e.id;
    return e;
}

}  // namespace pvi
