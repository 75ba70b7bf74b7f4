#pragma once

#include <string>

#include "r13lab/model_params.hpp"

namespace r13::test {

inline std::string model_path(const std::string& name)
{
    return std::string(R13LAB_DATA_DIR) + "/models/" + name + ".json";
}

inline MolecularModel bundled(const std::string& name) { return load_model_file(model_path(name)); }

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace r13::test
