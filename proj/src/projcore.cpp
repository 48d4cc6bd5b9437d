#include "projlin/projcore.hpp"

namespace projlin {

const char* to_string(ProjTag tag) noexcept {
    switch (tag) {
    case ProjTag::Regular: return "regular";
    case ProjTag::AtInfinity: return "at_infinity";
    case ProjTag::Degenerate: return "degenerate";
    }
    return "unknown";
}

} // namespace projlin
