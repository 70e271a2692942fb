#include "pvi/tower.hpp"

#include <sstream>

#include "pvi/errors.hpp"

namespace pvi {

std::shared_ptr<const Tower> Tower::rational(std::string base_name) {
    auto t = std::make_shared<Tower>();
    t->base_ = std::move(base_name);
    return t;
}

int Tower::find_gen(const std::string& name) const {
    for (std::size_t i = 0; i < exts_.size(); ++i)
        if (exts_[i].name == name) return static_cast<int>(i);
    return -1;
}

int Tower::find_relation(const Poly& rel) const {
    for (std::size_t i = 0; i < exts_.size(); ++i)
        if (exts_[i].relation == rel) return static_cast<int>(i);
    return -1;
}

std::shared_ptr<const Tower> Tower::extended(const std::string& name, Poly relation) const {
    if (relation.is_zero()) throw TowerError("zero radicand in tower extension");
    if (name == base_ || find_gen(name) >= 0)
        throw TowerError("generator name collision: " + name);
    if (exts_.size() >= 32) throw TowerError("tower too deep");
    std::uint32_t allowed = (1u << exts_.size()) - 1;
    if (relation.gens_used() & ~allowed)
        throw TowerError("relation for " + name + " uses later generators");
    auto t = std::make_shared<Tower>(*this);
    t->exts_.push_back({name, std::move(relation)});
    return t;
}

bool Tower::same_as(const Tower& other) const {
    if (this == &other) return true;
    if (base_ != other.base_ || exts_.size() != other.exts_.size()) return false;
    for (std::size_t i = 0; i < exts_.size(); ++i)
        if (exts_[i].name != other.exts_[i].name || exts_[i].relation != other.exts_[i].relation)
            return false;
    return true;
}

bool Tower::is_prefix_of(const Tower& other) const {
    if (base_ != other.base_ || exts_.size() > other.exts_.size()) return false;
    for (std::size_t i = 0; i < exts_.size(); ++i)
        if (exts_[i].name != other.exts_[i].name || exts_[i].relation != other.exts_[i].relation)
            return false;
    return true;
}

std::string Tower::describe() const {
    std::ostringstream os;
    os << "Q(" << base_ << ")";
    for (const auto& e : exts_) os << "[" << e.name << "]";
    return os.str();
}

TowerPtr join(const TowerPtr& a, const TowerPtr& b) {
    if (a == b) return a;
    if (a->same_as(*b)) return a;
    if (a->is_prefix_of(*b)) return b;
    if (b->is_prefix_of(*a)) return a;
    throw TowerError("incompatible towers: " + a->describe() + " vs " + b->describe());
}

}  // namespace pvi
