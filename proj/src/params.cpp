#include "ptau/params.hpp"

namespace ptau {

const char* to_string(Level level) {
    switch (level) {
        case Level::PainleveIV: return "P_IV";
        case Level::PainleveII: return "P_II";
        case Level::PainleveI: return "P_I";
        case Level::Weierstrass: return "Weierstrass";
    }
    return "unknown";
}

}  // namespace ptau
