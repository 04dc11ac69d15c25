#pragma once

#include "beg/dissipation.hpp"
#include "beg/energy.hpp"
#include "beg/lattice.hpp"
#include "beg/octagon.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace beg {

struct BruteForceOptions {
    std::uint64_t cap = 43046721;  // 3^16 configurations
};

struct BruteForceResult {
    SpinGrid u;
    StepFunctionalValue value;
    std::uint64_t evaluated = 0;
};

// Bounding box of I_old u Z_old dilated by `dilation` cells.
RectSpec default_search_window(const SpinGrid& u_old, int dilation = 1);

// Exhaustive minimizer over all spin assignments of the free cells; every other
// cell keeps its value from u_old. Ties go to the lexicographically smallest
// spin vector, cells taken in row-major order and spins ordered -1 < 0 < +1.
BruteForceResult brute_force_minimizer(const SpinGrid& u_old, const ModelParams& params, const Region& free_cells,
                                       const BruteForceOptions& options = {});
BruteForceResult brute_force_minimizer(const SpinGrid& u_old, const ModelParams& params, const RectSpec& window,
                                       const BruteForceOptions& options = {});

struct CandidateRecord {
    Displacements disp;
    bool empty = false;  // the candidate with no phase-one cells
    double energy = 0.0;
    double d1 = 0.0;
    std::int64_t d0 = 0;
    double total = 0.0;
    double perimeter = 0.0;  // perimeter of the candidate phase-one set
};

struct StructuredOptions {
    int min_side_cells = 1;             // every parallel side of I_old must have this many cells
    bool audit = false;                 // keep every evaluated candidate
    std::size_t audit_limit = 2000000;
    std::optional<std::uint64_t> placement_seed;  // shuffled partial surfactant layers
    double stage_exponent = 1.0 / 8.0;  // mu in the stage threshold max(2 eps sqrt(C), eps^mu)
    // Also consider removing the phase-one set entirely. Without it the search is
    // restricted to nonempty shapes and is no longer the exact argmin.
    bool include_empty = true;
};

struct StructuredResult {
    SpinGrid u;
    Displacements disp;
    StepFunctionalValue value;
    bool collapsed = false;  // the phase-one set vanished
    int stage = 0;           // low-gamma stage (1 pinned diagonals, 2 quasi-rectangle); 0 otherwise
    // Range of parallel displacements searched on each side.
    std::array<std::pair<int, int>, 4> alpha_band{};
    std::vector<CandidateRecord> audit;
};

// gamma > 2: I_old a discrete octagon wetted by Z_old. Candidates are inward
// octagons with Z_new their outer boundary, plus the empty set.
StructuredResult structured_minimizer_gamma_high(const SpinGrid& u_old, const ModelParams& params,
                                                 const StructuredOptions& options = {});

// gamma < 2: I_old an octagon (or quasi-rectangle) ringed by C >= #outer boundary
// surfactant cells. Candidates shrink the parallel sides and keep the diagonal
// support lines; surfactant is re-placed layer by layer with the same count.
StructuredResult structured_minimizer_gamma_low(const SpinGrid& u_old, const ModelParams& params,
                                                const StructuredOptions& options = {});

// Layered surfactant placement around I: the outer boundary first, then complement
// cells with at least two neighbours in the grown set, then whole rows below the
// filled bounding rectangle. The last partial layer is filled in row-major order,
// or in a shuffled order when a seed is given.
Region place_surfactant(const Region& I, long C, std::optional<std::uint64_t> seed = std::nullopt);

// Stage threshold for the low-gamma minimizer, in physical length: max(2 eps sqrt(C), eps^mu).
double pinning_threshold(long C, double epsilon, double mu);

}  // namespace beg
