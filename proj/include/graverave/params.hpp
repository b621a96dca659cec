#pragma once

#include <array>
#include <string>
#include <vector>

#include "graverave/rng.hpp"

namespace graverave {

// The 10-gene level genome. Field order is the pinned draw/mutation order.
struct GeneratorParams {
    int random_seed = 1;               // [1, 9999]
    double initial_rock_density = 0.25;  // [0.1, 0.4]
    int rock_refinement_runs = 2;      // [1, 3]
    int rock_neighbour_number = 6;     // [4, 8]
    int rock_neighbour_depth = 2;      // [1, 2]
    double initial_tree_density = 0.25;  // [0.1, 0.4]
    int tree_refinement_runs = 2;      // [1, 3]
    int tree_neighbour_number = 6;     // [4, 8]
    int tree_neighbour_depth = 2;      // [1, 2]
    double flee_distance = 5.0;        // [0, 10]

    bool operator==(const GeneratorParams&) const = default;
};

enum class ParamKind { Integer, Real };

struct ParamSpec {
    const char* name;
    ParamKind kind;
    double lo;
    double hi;
    bool seed_only_mutable;  // true only for random_seed

    double (*get)(const GeneratorParams&);
    void (*set)(GeneratorParams&, double);
};

// The 10 gene descriptors, in genome field order.
const std::array<ParamSpec, 10>& param_specs();

// Empty when valid, else one message per out-of-range field.
std::vector<std::string> validate_params(const GeneratorParams& p);
void require_valid(const GeneratorParams& p);  // throws std::invalid_argument

// Every field drawn uniformly over its range, in field order: integers
// discrete-uniform (inclusive), reals continuous-uniform.
GeneratorParams random_params(Rng& rng);

std::string serialize_params(const GeneratorParams& p);
GeneratorParams parse_params(const std::string& json_text);

}  // namespace graverave
