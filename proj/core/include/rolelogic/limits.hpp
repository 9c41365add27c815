#pragma once

#include <cstddef>

namespace rolelogic {

// Guard on the number of free boolean choices an enumeration may range over
// (2^n models, relation interpretations, splits). ROLELOGIC_MAX_TUPLES
// replaces `fallback` when set.
std::size_t max_tuples(std::size_t fallback);

}  // namespace rolelogic
