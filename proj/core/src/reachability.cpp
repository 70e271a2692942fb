#include "pvi/reachability.hpp"

namespace pvi {

Reachability schlesinger_reachable(std::int64_t k0, std::int64_t k1, std::int64_t kt,
                                   std::int64_t ki) {
    auto parity = [](std::int64_t k) { return ((k % 2) + 2) % 2; };
    int p0 = parity(k0), p1 = parity(k1), pt = parity(kt), pi = parity(ki);
    if (p0 == p1 && p1 == pt && pt == pi) return Reachability::OkamotoChain;
    if ((p0 + p1 + pt + pi) % 2 == 0) return Reachability::NeedsFractionalLinear;
    return Reachability::Unreachable;
}

std::string to_string(Reachability r) {
    switch (r) {
        case Reachability::OkamotoChain: return "OkamotoChain";
        case Reachability::NeedsFractionalLinear: return "NeedsFractionalLinear";
        default: return "Unreachable";
    }
}

}  // namespace pvi
