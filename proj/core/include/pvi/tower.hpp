#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pvi/poly.hpp"

namespace pvi {

// A tower of square-root extensions of Q(s): generators u_1..u_k with
// u_i^2 = p_i, where p_i is a polynomial in s and u_1..u_{i-1}.
// Immutable; extending produces a new tower sharing the prefix.
class Tower : public std::enable_shared_from_this<Tower> {
  public:
    struct Extension {
        std::string name;
        Poly relation;  // defining polynomial p_i
    };

    static std::shared_ptr<const Tower> rational(std::string base_name = "s");

    const std::string& base_name() const { return base_; }
    const std::vector<Extension>& extensions() const { return exts_; }
    unsigned size() const { return static_cast<unsigned>(exts_.size()); }
    const Poly& relation(unsigned index) const { return exts_[index].relation; }
    const std::string& gen_name(unsigned index) const { return exts_[index].name; }

    // -1 if absent
    int find_gen(const std::string& name) const;
    // index of a generator whose relation equals `rel` exactly, or -1
    int find_relation(const Poly& rel) const;

    // Appends a generator.  `relation` must be a nonzero polynomial in the
    // existing variables; square-freeness is the caller's responsibility.
    std::shared_ptr<const Tower> extended(const std::string& name, Poly relation) const;

    bool same_as(const Tower& other) const;      // identical variables/relations
    bool is_prefix_of(const Tower& other) const; // this embeds into other

    std::string describe() const;

  private:
    std::string base_;
    std::vector<Extension> exts_;
};

using TowerPtr = std::shared_ptr<const Tower>;

// Picks the common tower two operands live on (one must embed into the
// other); throws TowerError otherwise.
TowerPtr join(const TowerPtr& a, const TowerPtr& b);

}  // namespace pvi
