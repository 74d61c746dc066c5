#pragma once

#include "sph/io.hpp"

#include <string>

namespace sph::testing {

inline std::string data_path(const std::string& name) { return std::string(SPH_DATA_DIR) + "/" + name; }

inline SphericalSkeleton load_skeleton(const std::string& name) {
    return skeleton_from_json(read_json_file(data_path(name)));
}

inline AugmentedDocument load_augmented(const std::string& name) {
    return augmented_from_json(read_json_file(data_path(name)));
}

inline RatVector rv(std::initializer_list<std::int64_t> xs) {
    RatVector out;
    for (auto x : xs) out.push_back(x);
    return out;
}

}  // namespace sph::testing
