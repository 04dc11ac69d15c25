#pragma once

#include "beg/continuum.hpp"
#include "beg/energy.hpp"
#include "beg/flow.hpp"
#include "beg/io.hpp"

#include <string>
#include <vector>

namespace beg {

// Run configuration read from a `key = value` file. Lines starting with '#'
// are comments. Numbers accept fractions such as 1/64.
//
//   k, gamma, zeta, epsilon           model parameters
//   minimizer = structured | brute
//   max_steps, width_threshold, brute_dilation
//   initial.box = x0 x1 y0 y1         physical box of the initial octagon
//   initial.cuts = c1 c2 c3 c4        corner legs D_i / sqrt(2), physical units
//   surfactant = ring | <count>
//   seed, branch = floor | ceil, horizon
//   compare.epsilons = e1 e2 ...      refinement levels for `compare`
struct RunConfig {
    ModelParams params;
    InitialCondition initial;
    FlowOptions flow;
    Branch branch = Branch::Floor;
    double horizon = 1.0;
    std::vector<double> compare_epsilons;
    std::vector<std::string> warnings;
};

double parse_number(const std::string& text);

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Regime checks. Throws ValidationError; gamma = 2 only adds a warning.
void validate_config(RunConfig& cfg);

// Every resolved value, defaults included.
Json config_to_json(const RunConfig& cfg);

}  // namespace beg
