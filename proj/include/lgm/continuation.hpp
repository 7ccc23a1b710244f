#pragma once

#include <string>

#include "lgm/solver.hpp"

namespace lgm {

struct TrackOptions {
    double initial_step = 0.01;
    double min_step = 1e-9;
    double max_step = 0.05;
    double corrector_tol = 1e-10;
    int max_corrector_iters = 8;
    // Accepted steps in a row before the step size grows.
    int grow_after = 3;
    double step_grow = 1.5;
    double step_shrink = 0.5;
    double match_tol = 1e-6;
    double ambiguity_ratio = 10.0;
    // Largest distance, in log coordinates, the corrector may move away
    // from the predicted point on an accepted step. Larger corrections can
    // mean the corrector slid to a different solution branch, so the step
    // is rejected and retried smaller.
    double motion_guard = 0.15;
    // Times the matching is retried with a halved step cap before the
    // permutation is declared ambiguous.
    int max_refinements = 4;
    // Degenerations stop at time 1 - endpoint_delta; a tracked point is
    // classified as escaping when some coordinate modulus leaves
    // [escape_lo, escape_hi], with the comparison inset by escape_margin
    // in log space.
    double endpoint_delta = 1e-4;
    double escape_lo = 1e-4;
    double escape_hi = 1e4;
    double escape_margin = 1e-3;
    int threads = 1;
    SolveOptions solver;
};

struct MonodromyPermutation {
    ToricDivisor divisor;
    // mapping[i] is the index the i-th point of the tracked CritSet lands on.
    std::vector<int> mapping;
    double epsilon = 1.0;
};

struct DegenerationResult {
    enum class Status { Converged, Escaped };
    struct PointResult {
        Status status = Status::Converged;
        // Index into limit_points for converged points when the limit
        // system was solvable, else -1.
        int limit_index = -1;
        CxVec endpoint;
        // Per coordinate: "inf" above the window, "0" below, "~" inside.
        std::string escape_direction;
    };
    std::vector<PointResult> points;
    double t_end = 0.0;
    CritSet limit_points;
    bool limit_matched = false;
};

// Continue a start solution along the path from s = 0 to s = 1 with an
// Euler predictor and Newton corrector, both in log coordinates.
CritPoint track(const CoefficientPath& path, const CritPoint& z0,
                const TrackOptions& opts = {});

// Track every point of cs around a closed loop and match the endpoints
// back to cs, giving the permutation the loop induces.
MonodromyPermutation loop_permutation(const LaurentPoly& f,
                                      const CoefficientPath& loop,
                                      const CritSet& cs,
                                      const TrackOptions& opts = {});

// Ramp the coefficients of the scaled vertices toward zero and classify
// each start point as escaping or converging; converged points are matched
// to the critical set of the limit potential when that potential has one.
DegenerationResult degenerate(const LaurentPoly& f,
                              const std::vector<IntVec>& scaled_vertices,
                              const CritSet& cs, const TrackOptions& opts = {});

std::vector<int> inverse_mapping(const std::vector<int>& mapping);
std::vector<int> compose_mappings(const std::vector<int>& outer,
                                  const std::vector<int>& inner);

// Cycle notation over labels, singleton cycles omitted, "id" when nothing
// moves. Cycles start at their smallest label and are listed by it.
std::string cycle_string(const std::vector<int>& mapping,
                         const std::vector<std::string>& labels);
// Cycle notation over point indices with singletons kept, e.g. "(0 2 1)(3)".
std::string index_cycle_string(const std::vector<int>& mapping);

// Inverse of cycle_string: parses "(A B)(C D)" or "id" into an index
// mapping over the given labels. Labels absent from the string stay fixed.
// Throws ParseError on malformed input, unknown labels, or repeats.
std::vector<int> parse_cycle_string(const std::string& cycles,
                                    const std::vector<std::string>& labels);

}  // namespace lgm
