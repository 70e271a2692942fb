#pragma once

#include <cstdint>
#include <string>

namespace pvi {

// Whether two equations whose local monodromy differences differ by the
// integer shifts (k0,k1,kt,ki) are related by Okamoto transformations alone,
// need fractional-linear ones too, or are not related at all.
enum class Reachability { OkamotoChain, NeedsFractionalLinear, Unreachable };

Reachability schlesinger_reachable(std::int64_t k0, std::int64_t k1, std::int64_t kt,
                                   std::int64_t ki);

std::string to_string(Reachability r);

}  // namespace pvi
