// Size caps guarding every exhaustive enumeration.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>

#include "qfgl/errors.hpp"

namespace qfgl {

// Defaults are sized for desk-scale runs; the CLI and the QFGL_CAP_OVERRIDE
// environment variable can change them.
struct Caps {
    std::uint64_t field = 1ull << 24;        // max #F_{q^n} accepted by make_tower
    std::uint64_t table = 1ull << 20;        // max #F_{q^n} for discrete-log/digit tables
    std::uint64_t graph = 1ull << 16;        // max vertex count for build_graph
    std::uint64_t clique = 1ull << 14;       // max vertex count for exact clique search
    std::uint64_t enumeration = 1ull << 20;  // max items per subspace/coset/element enumeration
};

// Applies QFGL_CAP_OVERRIDE="graph=4096,clique=1024" style overrides.
inline Caps caps_from_env(Caps base = Caps{}) {
    const char* env = std::getenv("QFGL_CAP_OVERRIDE");
    if (env == nullptr || *env == '\0') return base;
    std::istringstream in(env);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        require(eq != std::string::npos, errc::invalid_argument,
                "QFGL_CAP_OVERRIDE entry '" + item + "' is not name=value");
        std::string name = item.substr(0, eq);
        std::uint64_t value = std::stoull(item.substr(eq + 1));
        if (name == "field") base.field = value;
        else if (name == "table") base.table = value;
        else if (name == "graph") base.graph = value;
        else if (name == "clique") base.clique = value;
        else if (name == "enumeration" || name == "enum") base.enumeration = value;
        else fail(errc::invalid_argument, "unknown cap '" + name + "' in QFGL_CAP_OVERRIDE");
    }
    return base;
}

}  // namespace qfgl
