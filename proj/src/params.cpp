#include "graverave/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace graverave {

namespace {

template <auto Field>
double get_field(const GeneratorParams& p) {
    return static_cast<double>(p.*Field);
}

template <auto Field>
void set_int_field(GeneratorParams& p, double v) {
    p.*Field = static_cast<int>(std::llround(v));
}

template <auto Field>
void set_real_field(GeneratorParams& p, double v) {
    p.*Field = v;
}

}  // namespace

const std::array<ParamSpec, 10>& param_specs() {
    static const std::array<ParamSpec, 10> specs = {{
        {"random_seed", ParamKind::Integer, 1, 9999, true,
         get_field<&GeneratorParams::random_seed>, set_int_field<&GeneratorParams::random_seed>},
        {"initial_rock_density", ParamKind::Real, 0.1, 0.4, false,
         get_field<&GeneratorParams::initial_rock_density>,
         set_real_field<&GeneratorParams::initial_rock_density>},
        {"rock_refinement_runs", ParamKind::Integer, 1, 3, false,
         get_field<&GeneratorParams::rock_refinement_runs>,
         set_int_field<&GeneratorParams::rock_refinement_runs>},
        {"rock_neighbour_number", ParamKind::Integer, 4, 8, false,
         get_field<&GeneratorParams::rock_neighbour_number>,
         set_int_field<&GeneratorParams::rock_neighbour_number>},
        {"rock_neighbour_depth", ParamKind::Integer, 1, 2, false,
         get_field<&GeneratorParams::rock_neighbour_depth>,
         set_int_field<&GeneratorParams::rock_neighbour_depth>},
        {"initial_tree_density", ParamKind::Real, 0.1, 0.4, false,
         get_field<&GeneratorParams::initial_tree_density>,
         set_real_field<&GeneratorParams::initial_tree_density>},
        {"tree_refinement_runs", ParamKind::Integer, 1, 3, false,
         get_field<&GeneratorParams::tree_refinement_runs>,
         set_int_field<&GeneratorParams::tree_refinement_runs>},
        {"tree_neighbour_number", ParamKind::Integer, 4, 8, false,
         get_field<&GeneratorParams::tree_neighbour_number>,
         set_int_field<&GeneratorParams::tree_neighbour_number>},
        {"tree_neighbour_depth", ParamKind::Integer, 1, 2, false,
         get_field<&GeneratorParams::tree_neighbour_depth>,
         set_int_field<&GeneratorParams::tree_neighbour_depth>},
        {"flee_distance", ParamKind::Real, 0.0, 10.0, false,
         get_field<&GeneratorParams::flee_distance>,
         set_real_field<&GeneratorParams::flee_distance>},
    }};
    return specs;
}

std::vector<std::string> validate_params(const GeneratorParams& p) {
    std::vector<std::string> problems;
    for (const auto& spec : param_specs()) {
        const double v = spec.get(p);
        if (!(v >= spec.lo && v <= spec.hi)) {
            std::ostringstream msg;
            msg << spec.name << "=" << v << " outside [" << spec.lo << ", " << spec.hi << "]";
            problems.push_back(msg.str());
        }
    }
    return problems;
}

void require_valid(const GeneratorParams& p) {
    const auto problems = validate_params(p);
    if (problems.empty()) return;
    std::string msg = "invalid generator params:";
    for (const auto& problem : problems) msg += " " + problem + ";";
    throw std::invalid_argument(msg);
}

GeneratorParams random_params(Rng& rng) {
    GeneratorParams p;
    for (const auto& spec : param_specs()) {
        if (spec.kind == ParamKind::Integer) {
            spec.set(p, rng.uniform_int(static_cast<int>(spec.lo), static_cast<int>(spec.hi)));
        } else {
            spec.set(p, rng.uniform_real(spec.lo, spec.hi));
        }
    }
    return p;
}

std::string serialize_params(const GeneratorParams& p) {
    nlohmann::json j;
    for (const auto& spec : param_specs()) {
        if (spec.kind == ParamKind::Integer) {
            j[spec.name] = static_cast<int>(spec.get(p));
        } else {
            j[spec.name] = spec.get(p);
        }
    }
    return j.dump(2);
}

GeneratorParams parse_params(const std::string& json_text) {
    const auto j = nlohmann::json::parse(json_text);
    GeneratorParams p;
    for (const auto& spec : param_specs()) {
        if (!j.contains(spec.name)) {
            throw std::runtime_error(std::string("params: missing field '") + spec.name + "'");
        }
        if (!j[spec.name].is_number()) {
            throw std::runtime_error(std::string("params: field '") + spec.name + "' is not a number");
        }
        spec.set(p, j[spec.name].get<double>());
    }
    require_valid(p);
    return p;
}

}  // namespace graverave
