#pragma once

#include "beg/energy.hpp"
#include "beg/lattice.hpp"

#include <string>
#include <vector>

namespace beg {

// A small configuration on which the structured minimizer can be checked
// against exhaustive search over `free_cells`.
struct OracleFixture {
    std::string name;
    SpinGrid u_old;
    ModelParams params;
    Region free_cells;
};

struct OracleOutcome {
    std::string name;
    double structured = 0.0;
    double brute = 0.0;
    double discrepancy = 0.0;
    bool structured_in_window = true;  // the structured step only changed free cells
};

// Rectangles of up to four cells ringed by surfactant, with a few extra
// surfactant cells for gamma = 1, across several (epsilon, zeta, k).
// Every fixture has at most 16 free cells.
std::vector<OracleFixture> oracle_fixtures();

OracleOutcome run_oracle_fixture(const OracleFixture& f);

}  // namespace beg
