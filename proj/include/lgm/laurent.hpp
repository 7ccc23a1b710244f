#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "lgm/toric.hpp"

namespace lgm {

using Cx = std::complex<double>;
using CxVec = std::vector<Cx>;

// Sparse Laurent polynomial: finitely many terms c * z^e with integer
// exponent vectors e of length dim. Zero coefficients are never stored.
struct LaurentPoly {
    int dim = 0;
    std::map<IntVec, Cx> terms;

    void add_term(const IntVec& exponents, Cx coeff);
};

// The n logarithmic derivative equations z_i df/dz_i of a potential.
// Equation i keeps the terms of f whose i-th exponent is nonzero, with
// coefficients multiplied by that exponent.
struct LGSystem {
    int dim = 0;
    std::vector<LaurentPoly> equations;
    LaurentPoly source;
};

// One monomial's scalar factor over a path segment, local time u in [0,1]:
//   (amp0 + (amp1-amp0) u) * exp(2 pi i * winding * u)
// The phase is reduced mod 1 before exponentiating so that integer windings
// give factor exactly 1 at u = 0 and u = 1.
struct SegmentFactor {
    double amp0 = 1.0;
    double amp1 = 1.0;
    long long winding = 0;

    Cx at(double u) const;
    Cx deriv(double u) const;
    SegmentFactor reversed() const;
};

// Factors for the monomials that move during one segment; monomials not
// listed keep factor 1.
struct PathSegment {
    std::map<IntVec, SegmentFactor> factors;
};

// A family of coefficient vectors over s in [0,1]: the coefficient of z^e
// at time s is base.terms[e] times the current segment's factor for e.
// Segments are traversed in order, each spanning an equal share of [0,1].
struct CoefficientPath {
    LaurentPoly base;
    std::vector<PathSegment> segments;
    bool loop = false;

    // Loop metadata carried through to permutation reports.
    ToricDivisor divisor;
    double epsilon = 1.0;

    Cx factor(const IntVec& exponents, double s) const;
    // Derivative of the factor with respect to the global time s.
    Cx factor_deriv(const IntVec& exponents, double s) const;
    LaurentPoly at(double s) const;
    CoefficientPath reversed() const;
    CoefficientPath repeated(int count) const;
};

// Base and fiber ray index subsets of a bundle entry; both empty for the
// surfaces, which use plain loops.
struct VertexPartition {
    std::vector<int> base;
    std::vector<int> fiber;
};

LaurentPoly lg_potential(const FanoPolytope& P);
LGSystem lg_system(const LaurentPoly& f);

Cx eval(const LaurentPoly& f, const CxVec& z);
Eigen::VectorXcd eval_system(const LGSystem& sys, const CxVec& z);
Eigen::MatrixXcd jacobian(const LGSystem& sys, const CxVec& z);

// Path-time variants. sys must be the log derivative system of path.base;
// every term is scaled by the path factor for its exponent at time s.
Eigen::VectorXcd eval_system(const LGSystem& sys, const CoefficientPath& path,
                             double s, const CxVec& z);
Eigen::MatrixXcd jacobian(const LGSystem& sys, const CoefficientPath& path,
                          double s, const CxVec& z);
// Derivative of the system value with respect to the path time s.
Eigen::VectorXcd time_derivative(const LGSystem& sys,
                                 const CoefficientPath& path, double s,
                                 const CxVec& z);

// Loop rotating the coefficient of z^{rays[F]} by exp(2 pi i D_F s).
CoefficientPath gamma_loop(const LaurentPoly& f, const ToricDivisor& D,
                           const std::vector<IntVec>& rays);

// Three-segment loop: ramp the base-ray coefficients from 1 to epsilon,
// run the phase loop on the ramped potential, ramp back. Collapses to
// gamma_loop when epsilon is exactly 1.
CoefficientPath composite_loop(const LaurentPoly& f, const ToricDivisor& D,
                               const VertexPartition& partition, double epsilon,
                               const std::vector<IntVec>& rays);

}  // namespace lgm
