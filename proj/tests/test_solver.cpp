#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "lgm/errors.hpp"
#include "lgm/solver.hpp"

using namespace lgm;

namespace {

const FanoPolytope p2{2, {{1, 0}, {0, 1}, {-1, -1}}};
const FanoPolytope p1xp1{2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
const FanoPolytope bl1{2, {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}}};
const FanoPolytope bl2{2, {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
const FanoPolytope pb2{3,
                       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 2}, {0, 0, -1}}};

// True when some solved point lies within tol of want, infinity norm.
bool has_point(const CritSet& cs, const CxVec& want, double tol) {
    for (const auto& p : cs.points) {
        if (point_distance(p.coords, want) < tol) return true;
    }
    return false;
}

const Cx omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

}  // namespace

TEST_CASE("expected counts from the Newton polytope") {
    CHECK(expected_count(lg_potential(p2)) == 3);
    CHECK(expected_count(lg_potential(p1xp1)) == 4);
    CHECK(expected_count(lg_potential(bl2)) == 5);
    CHECK(expected_count(lg_potential(pb2)) == 6);
}

TEST_CASE("newton refinement") {
    auto sys = lg_system(lg_potential(bl1));
    auto p = newton_refine(sys, {1.4, 0.8});
    CHECK(p.residual < 1e-10);
    CHECK(std::abs(p.coords[0] - 1.49) < 0.02);
    CHECK(std::abs(p.coords[1] - 0.81) < 0.02);
    CHECK(std::abs(p.coords[0].imag()) < 1e-12);

    // A true solution is a fixed point.
    auto sp2 = lg_system(lg_potential(p2));
    auto q = newton_refine(sp2, {1.0, 1.0});
    CHECK(std::abs(q.coords[0] - 1.0) < 1e-12);
    CHECK(std::abs(q.coords[1] - 1.0) < 1e-12);
    CHECK(q.min_singular > 1e-8);

    // A nearby start lands on the nonreal root exactly.
    auto r = newton_refine(sp2, {omega * 1.001, omega});
    CHECK(std::abs(r.coords[0] - omega) < 1e-9);
    CHECK(std::abs(r.coords[1] - omega) < 1e-9);

    CHECK_THROWS_AS(newton_refine(sp2, {0.0, 1.0}), ZeroCoordinate);

    // z1 + z2 has no critical point; iterates slide to zero and leave the box.
    LaurentPoly g;
    g.dim = 2;
    g.add_term({1, 0}, 1.0);
    g.add_term({0, 1}, 1.0);
    CHECK_THROWS_AS(newton_refine(lg_system(g), {1.0, 1.0}), Diverged);

    // A single monomial gives two identical equations.
    LaurentPoly h;
    h.dim = 2;
    h.add_term({1, 1}, 1.0);
    CHECK_THROWS_AS(newton_refine(lg_system(h), {1.0, 1.0}), SingularJacobian);
}

TEST_CASE("plane solutions are the cube roots of unity") {
    auto cs = solve_all(lg_potential(p2));
    REQUIRE(cs.points.size() == 3);
    CHECK(has_point(cs, {1.0, 1.0}, 1e-8));
    CHECK(has_point(cs, {omega, omega}, 1e-8));
    CHECK(has_point(cs, {std::conj(omega), std::conj(omega)}, 1e-8));
    for (const auto& p : cs.points) {
        CHECK(p.residual < 1e-10);
        CHECK(p.min_singular > 1e-8);
    }
    // Sorted by real then imaginary part, first coordinate outranking.
    for (size_t i = 1; i < cs.points.size(); ++i) {
        const auto &a = cs.points[i - 1].coords, &b = cs.points[i].coords;
        CHECK((a[0].real() < b[0].real() ||
               (a[0].real() == b[0].real() && a[0].imag() <= b[0].imag())));
    }
}

TEST_CASE("product solutions are the sign vectors") {
    auto cs = solve_all(lg_potential(p1xp1));
    REQUIRE(cs.points.size() == 4);
    for (double a : {-1.0, 1.0}) {
        for (double b : {-1.0, 1.0}) CHECK(has_point(cs, {a, b}, 1e-8));
    }
}

TEST_CASE("five points of the double blowup") {
    auto cs = solve_all(lg_potential(bl2));
    REQUIRE(cs.points.size() == 5);
    CHECK(has_point(cs, {1.32, 1.32}, 0.02));
    CHECK(has_point(cs, {0.61, -1.61}, 0.02));
    CHECK(has_point(cs, {-1.61, 0.61}, 0.02));
    CHECK(has_point(cs, {Cx(-0.66, 0.56), Cx(-0.66, 0.56)}, 0.02));
    CHECK(has_point(cs, {Cx(-0.66, -0.56), Cx(-0.66, -0.56)}, 0.02));
    CHECK(is_reduced(cs));
}

TEST_CASE("conjugation closure") {
    for (const auto& P : {p2, bl2, pb2}) {
        auto cs = solve_all(lg_potential(P));
        for (const auto& p : cs.points) {
            CxVec conj(p.coords.size());
            for (size_t i = 0; i < p.coords.size(); ++i)
                conj[i] = std::conj(p.coords[i]);
            CHECK(has_point(cs, conj, 1e-8));
        }
    }
}

TEST_CASE("determinism") {
    auto f = lg_potential(bl2);
    auto a = solve_all(f);
    auto b = solve_all(f);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
        for (size_t j = 0; j < a.points[i].coords.size(); ++j) {
            CHECK(a.points[i].coords[j] == b.points[i].coords[j]);
        }
        CHECK(a.points[i].residual == b.points[i].residual);
        CHECK(a.points[i].min_singular == b.points[i].min_singular);
    }

    SolveOptions other;
    other.seed = 12345;
    auto c = solve_all(f, other);
    REQUIRE(c.points.size() == a.points.size());
    for (const auto& p : a.points) CHECK(has_point(c, p.coords, 1e-6));

    SolveOptions parallel;
    parallel.threads = 4;
    auto d = solve_all(f, parallel);
    REQUIRE(d.points.size() == a.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
        for (size_t j = 0; j < a.points[i].coords.size(); ++j) {
            CHECK(a.points[i].coords[j] == d.points[i].coords[j]);
        }
    }
}

TEST_CASE("loop population completes a starved multistart") {
    // One batch of two starts cannot reach three points, so the solver
    // must recover the rest by tracking phase loops.
    SolveOptions opts;
    opts.batch_size = 2;
    opts.max_batches = 1;
    auto cs = solve_all(lg_potential(p2), opts);
    CHECK(cs.points.size() == 3);
    CHECK(has_point(cs, {1.0, 1.0}, 1e-8));
    CHECK(has_point(cs, {omega, omega}, 1e-8));
}

TEST_CASE("solver failure modes") {
    SolveOptions none;
    none.max_batches = 0;
    try {
        solve_all(lg_potential(p2), none);
        FAIL("expected IncompleteSolve");
    } catch (const IncompleteSolve& e) {
        CHECK(e.found == 0);
    }

    SolveOptions nodedupe;
    nodedupe.tol_dedupe = 0.0;
    CHECK_THROWS_AS(solve_all(lg_potential(p2), nodedupe), ExcessSolutions);

    SolveOptions strict;
    strict.tol_reduced = 1e6;
    CHECK_THROWS_AS(solve_all(lg_potential(p2), strict), NonReduced);
}

TEST_CASE("reducedness checks") {
    auto cs = solve_all(lg_potential(p2));
    CHECK(is_reduced(cs));

    auto extra = cs;
    extra.points.push_back(cs.points[0]);
    CHECK_FALSE(is_reduced(extra));

    auto dup = cs;
    dup.points[1] = dup.points[0];
    CHECK_FALSE(is_reduced(dup));

    // One variable: z + 1/z with critical points at +-1.
    LaurentPoly f1;
    f1.dim = 1;
    f1.add_term({1}, 1.0);
    f1.add_term({-1}, 1.0);
    auto cs1 = solve_all(f1);
    REQUIRE(cs1.points.size() == 2);
    CHECK(is_reduced(cs1));
    CHECK(std::abs(positive_point(cs1).coords[0] - 1.0) < 1e-10);
}

TEST_CASE("positive anchors") {
    auto cs = solve_all(lg_potential(p2));
    auto& p = positive_point(cs);
    CHECK(std::abs(p.coords[0] - 1.0) < 1e-10);

    auto& q = positive_point(solve_all(lg_potential(pb2)));
    for (const Cx& z : q.coords) CHECK(z.real() > 0.0);

    CritSet none;
    none.points.push_back({{omega, omega}, 0.0, 1.0});
    CHECK_THROWS_AS(positive_point(none), NoPositivePoint);

    CritSet two;
    two.points.push_back({{Cx(1.0), Cx(1.0)}, 0.0, 1.0});
    two.points.push_back({{Cx(2.0), Cx(0.5)}, 0.0, 1.0});
    CHECK_THROWS_AS(positive_point(two), MultiplePositivePoints);
}
