#include "semicond/config.hpp"

#include <cstdlib>
#include <string>

namespace semicond {

Caps caps_from_environment() {
    Caps caps;
    if (const char* raw = std::getenv("SEMICOND_DEGREE_CAP")) {
        try {
            int v = std::stoi(raw);
            if (v > 0) caps.scan_degree_cap = v;
        } catch (...) {
            // Ignore malformed values; defaults stand.
        }
    }
    return caps;
}

}  // namespace semicond
