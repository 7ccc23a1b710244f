#pragma once

#include "lgm/laurent.hpp"

namespace lgm {

struct SolveOptions {
    double tol_residual = 1e-10;
    double tol_dedupe = 1e-6;
    double tol_reduced = 1e-8;
    int max_iters = 50;
    int batch_size = 200;
    int quiet_batches = 3;
    int max_batches = 100;
    unsigned long long seed = 7;
    int threads = 1;
};

struct CritPoint {
    CxVec coords;
    double residual = 0.0;
    // Smallest singular value of the log Jacobian at coords.
    double min_singular = 0.0;
};

// All critical points of a potential, sorted by real part then imaginary
// part of the coordinates, lexicographically.
struct CritSet {
    std::vector<CritPoint> points;
    LaurentPoly potential;
};

// Newton iteration in log coordinates: z <- z * exp(delta) with
// J delta = -F, stopping at tol_residual or after max_iters steps.
CritPoint newton_refine(const LGSystem& sys, const CxVec& z0,
                        const SolveOptions& opts = {});

// Seeded multistart Newton over random torus points until the expected
// count (the facet count of the Newton polytope) is reached and further
// batches stay quiet. Falls back to monodromy population when multistart
// stalls below the expected count.
CritSet solve_all(const LaurentPoly& f, const SolveOptions& opts = {});

// Expected number of critical points, read off the Newton polytope.
int expected_count(const LaurentPoly& f);

bool is_reduced(const CritSet& cs, const SolveOptions& opts = {});

// The unique solution with positive real coordinates.
const CritPoint& positive_point(const CritSet& cs);

// Infinity norm distance between two coordinate vectors.
double point_distance(const CxVec& a, const CxVec& b);

}  // namespace lgm
