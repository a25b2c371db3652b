#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/scalar.hpp"

namespace nichols {

// Sectioned key-value run configuration. Parse errors carry line numbers.
struct RunConfig {
    FieldSpec field;

    // group-realized input
    std::string group_catalog;  // empty for diagonal input
    struct OrbitSpec {
        std::string rep;                                       // word / cycles
        std::vector<std::pair<std::string, std::string>> chi;  // element -> scalar text
    };
    std::vector<OrbitSpec> orbits;

    // diagonal input
    std::vector<std::vector<std::string>> diagonal_matrix;  // scalar texts
    struct OperatorSpec {
        std::string name;
        std::string perm;                 // cycles on letters, 1-based
        std::vector<std::string> scalars; // optional, defaults to 1
    };
    std::vector<OperatorSpec> operators;

    // sub-Nichols comparison data
    std::vector<std::string> subgroup_generators;
    std::string xi_element;  // class element used for the shift divisor

    // run controls
    int max_degree = 24;
    std::string traces = "classes";  // classes | identity | none
    unsigned factor_max_count = 5;
    unsigned factor_max_power = 0;  // 0: top degree
    bool duality_shortcut = false;
    int top_degree = -1;  // required with duality_shortcut
    std::string verify_level = "fast";
    std::string golden;  // path to expected table, optional

    static RunConfig parse_file(const std::string& path);
    static RunConfig parse_text(const std::string& text, const std::string& origin = "<config>");
};

}  // namespace nichols
