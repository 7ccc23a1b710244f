#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lgm/errors.hpp"

namespace lgm {

using IntVec = std::vector<long long>;

// Convex hull of finitely many lattice points with the origin in its
// interior. The vertices are the rays of the associated complete fan;
// vertices[i] holds the lattice coordinates of ray i, and divisors are
// indexed in this order throughout.
struct FanoPolytope {
    int dim = 0;
    std::vector<IntVec> vertices;
};

// One facet of the hull, normalized so that the facet hyperplane is
// { x : <inner_normal, x> = -1 } and every vertex pairs >= -1.
struct Facet {
    std::vector<int> vertex_indices;
    IntVec inner_normal;
};

// Integer divisor supported on the rays, coefficient per ray.
struct ToricDivisor {
    IntVec coeffs;

    bool operator==(const ToricDivisor&) const = default;
    bool operator<(const ToricDivisor& o) const { return coeffs < o.coeffs; }
};

// Divisor classes modulo divisors of monomials. relation_matrix has one
// row per ray (the ray's lattice coordinates), so the divisor of the
// monomial z^m is relation_matrix * m. reduce_basis holds an echelonized
// integer basis of that sublattice, with strictly increasing pivot rows;
// it turns class comparison into a syntactic check on representatives.
struct PicardLattice {
    int num_rays = 0;
    int dim = 0;
    int rank = 0;
    std::vector<IntVec> relation_matrix;
    std::vector<IntVec> reduce_basis;
    std::vector<int> pivot_rows;
    FanoPolytope polytope;
};

struct LineBundleClass {
    ToricDivisor rep;           // canonical representative
    std::string display_name;   // optional symbolic name, e.g. "H-E1"

    bool operator==(const LineBundleClass& o) const { return rep == o.rep; }
    bool operator<(const LineBundleClass& o) const { return rep < o.rep; }
};

struct ReasonCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

struct CollectionReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Complete facet list of the hull, by exhaustive search over dim-subsets
// of the vertices. Throws NotFullDimensional when the vertices do not
// span, NotReflexive when the origin is not interior or some facet
// hyperplane cannot be written <m, x> = -1 with integer m.
std::vector<Facet> facets(const FanoPolytope& P);

// True when the origin is interior, the vertices are distinct primitive
// lattice vectors, and every facet is a simplex whose vertex matrix is
// unimodular. On failure the returned reason says which condition broke.
ReasonCheck is_reflexive_fano(const FanoPolytope& P);

// Number of facets, which for these polytopes equals the number of
// maximal fan cones and the expected number of critical points.
int euler_characteristic(const FanoPolytope& P);

// Divisor class data. Throws TorsionInPicard when the class group has a
// torsion part (never the case for the built-in entries).
PicardLattice picard(const FanoPolytope& P);

// Canonical representative of D modulo divisors of monomials.
LineBundleClass divisor_class(const PicardLattice& pic, const ToricDivisor& D);

// All lattice points m with <m, ray_F> >= -D_F for every ray. Their count
// is the dimension of the space of global sections of the associated line
// bundle. Throws UnboundedPolytope when the inequality system has a
// recession direction, which cannot happen over a complete fan.
std::vector<IntVec> divisor_polytope_points(const FanoPolytope& P,
                                            const ToricDivisor& D);

// The set B(L): all coefficientwise nonnegative divisors with class L,
// in lexicographic order. Empty when L has no effective representative.
std::vector<ToricDivisor> effective_basis(const PicardLattice& pic,
                                          const LineBundleClass& L);

// Checks, for every ordered pair (i, j), that the effective divisors of
// class L_j - L_i biject with the lattice points of the corresponding
// divisor polytope. Failing pairs are listed in the report.
CollectionReport is_special_collection(const PicardLattice& pic,
                                       const std::vector<LineBundleClass>& E);

// Divisor expressions such as "n1", "n2+n3", "2n1+n4", or "0". Ray names
// default to n1..nr when the supplied list is empty.
ToricDivisor parse_divisor(const std::string& expr,
                           const std::vector<std::string>& ray_names,
                           int num_rays);
std::string divisor_string(const ToricDivisor& D,
                           const std::vector<std::string>& ray_names = {});

}  // namespace lgm
