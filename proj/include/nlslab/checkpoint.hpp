#pragma once

#include <filesystem>
#include <string>

#include "nlslab/field.hpp"
#include "nlslab/io.hpp"

namespace nlslab {

/// Field CSV plus a JSON manifest with the running counters. Runs resume
/// bit-identically under an identical config because the step controller
/// depends only on the state.
struct Checkpoint {
    RadialField field;
    double time = 0;
    std::size_t steps = 0;
    double discrete_mass = 0;
    double energy = 0;
};

inline void save_checkpoint(const Checkpoint& ck, const std::filesystem::path& stem) {
    save_field(ck.field, stem);
    json manifest = {
        {"time", ck.time},
        {"steps", ck.steps},
        {"discrete_mass", ck.discrete_mass},
        {"energy", ck.energy},
    };
    write_json(stem.string() + ".state.json", manifest);
}

inline Checkpoint load_checkpoint(const std::filesystem::path& stem) {
    const json manifest = read_json(stem.string() + ".state.json");
    return Checkpoint{load_field(stem), manifest.at("time").get<double>(),
                      manifest.at("steps").get<std::size_t>(),
                      manifest.value("discrete_mass", 0.0), manifest.value("energy", 0.0)};
}

}  // namespace nlslab
