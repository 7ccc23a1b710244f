#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lgm/continuation.hpp"
#include "lgm/errors.hpp"

using namespace lgm;

namespace {

FanoPolytope p2() { return {2, {{1, 0}, {0, 1}, {-1, -1}}}; }

FanoPolytope p1xp1() { return {2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}}; }

FanoPolytope bl1() { return {2, {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}}}; }

FanoPolytope p2bundle2() {
    return {3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 2}, {0, 0, -1}}};
}

ToricDivisor ray_divisor(size_t rays, size_t index, long long mult = 1) {
    ToricDivisor D{IntVec(rays, 0)};
    D.coeffs[index] = mult;
    return D;
}

// index of the critical point nearest to z, which must be within tol
size_t find_index(const CritSet& cs, const CxVec& z, double tol = 1e-6) {
    size_t best = 0;
    double bd = point_distance(cs.points[0].coords, z);
    for (size_t k = 1; k < cs.points.size(); ++k) {
        double d = point_distance(cs.points[k].coords, z);
        if (d < bd) {
            bd = d;
            best = k;
        }
    }
    REQUIRE(bd < tol);
    return best;
}

bool is_identity(const std::vector<int>& m) {
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] != (int)i) return false;
    return true;
}

int permutation_order(std::vector<int> m) {
    std::vector<int> acc = m;
    int order = 1;
    while (!is_identity(acc)) {
        acc = compose_mappings(m, acc);
        ++order;
        REQUIRE(order <= 64);
    }
    return order;
}

const Cx kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

}  // namespace

TEST_CASE("loops around projective plane classes rotate the critical points") {
    FanoPolytope P = p2();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    size_t i1 = find_index(cs, {Cx(1), Cx(1)});
    size_t iw = find_index(cs, {kOmega, kOmega});
    size_t iwb = find_index(cs, {std::conj(kOmega), std::conj(kOmega)});

    std::vector<int> first;
    for (size_t r = 0; r < 3; ++r) {
        ToricDivisor D = ray_divisor(3, r);
        MonodromyPermutation perm =
            loop_permutation(f, gamma_loop(f, D, P.vertices), cs);
        CHECK(perm.mapping[i1] == (int)iw);
        CHECK(perm.mapping[iw] == (int)iwb);
        CHECK(perm.mapping[iwb] == (int)i1);
        CHECK(perm.epsilon == 1.0);
        CHECK(perm.divisor.coeffs == D.coeffs);
        if (r == 0)
            first = perm.mapping;
        else
            CHECK(perm.mapping == first);
    }
}

TEST_CASE("track carries a point around a loop and back") {
    FanoPolytope P = p2();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    size_t i1 = find_index(cs, {Cx(1), Cx(1)});
    CoefficientPath loop = gamma_loop(f, ray_divisor(3, 0), P.vertices);

    CritPoint fwd = track(loop, cs.points[i1]);
    CHECK(std::abs(fwd.coords[0] - kOmega) < 1e-8);
    CHECK(std::abs(fwd.coords[1] - kOmega) < 1e-8);
    CHECK(fwd.residual < 1e-9);
    CHECK(fwd.min_singular > 0.1);

    CritPoint bwd = track(loop.reversed(), cs.points[i1]);
    CHECK(std::abs(bwd.coords[0] - std::conj(kOmega)) < 1e-8);

    CritPoint round = track(loop.reversed(), fwd);
    CHECK(point_distance(round.coords, cs.points[i1].coords) < 1e-8);

    CritPoint twice = track(loop.repeated(2), cs.points[i1]);
    CHECK(std::abs(twice.coords[0] - std::conj(kOmega)) < 1e-8);

    CoefficientPath still;
    still.base = f;
    still.segments.push_back({});
    CritPoint fixed = track(still, cs.points[i1]);
    CHECK(point_distance(fixed.coords, cs.points[i1].coords) < 1e-10);
}

TEST_CASE("the zero divisor induces the identity permutation") {
    FanoPolytope P = p2();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    CoefficientPath loop =
        gamma_loop(f, ToricDivisor{{0, 0, 0}}, P.vertices);
    MonodromyPermutation perm = loop_permutation(f, loop, cs);
    CHECK(is_identity(perm.mapping));
    CHECK(cycle_string(perm.mapping, {"E0", "E1", "E2"}) == "id");
    CHECK(index_cycle_string(perm.mapping) == "(0)(1)(2)");
}

TEST_CASE("reversed and repeated loops invert and square the permutation") {
    FanoPolytope P = p2();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    CoefficientPath loop = gamma_loop(f, ray_divisor(3, 0), P.vertices);
    std::vector<int> m = loop_permutation(f, loop, cs).mapping;

    std::vector<int> rev = loop_permutation(f, loop.reversed(), cs).mapping;
    CHECK(rev == inverse_mapping(m));

    std::vector<int> sq = loop_permutation(f, loop.repeated(2), cs).mapping;
    CHECK(sq == compose_mappings(m, m));
}

TEST_CASE("product of two spheres splits the monodromy by factor") {
    FanoPolytope P = p1xp1();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    auto idx = [&](double a, double b) {
        return (int)find_index(cs, {Cx(a), Cx(b)});
    };

    MonodromyPermutation h =
        loop_permutation(f, gamma_loop(f, ray_divisor(4, 0), P.vertices), cs);
    for (double a : {-1.0, 1.0})
        for (double b : {-1.0, 1.0}) CHECK(h.mapping[idx(a, b)] == idx(-a, b));

    MonodromyPermutation v =
        loop_permutation(f, gamma_loop(f, ray_divisor(4, 1), P.vertices), cs);
    for (double a : {-1.0, 1.0})
        for (double b : {-1.0, 1.0}) CHECK(v.mapping[idx(a, b)] == idx(a, -b));

    // opposite rays carry linearly equivalent divisors
    MonodromyPermutation h2 =
        loop_permutation(f, gamma_loop(f, ray_divisor(4, 2), P.vertices), cs);
    CHECK(h2.mapping == h.mapping);
    MonodromyPermutation v2 =
        loop_permutation(f, gamma_loop(f, ray_divisor(4, 3), P.vertices), cs);
    CHECK(v2.mapping == v.mapping);
}

TEST_CASE("blowup of the plane mixes cycle types across its classes") {
    FanoPolytope P = bl1();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    REQUIRE(cs.points.size() == 4);
    auto perm = [&](const ToricDivisor& D) {
        return loop_permutation(f, gamma_loop(f, D, P.vertices), cs).mapping;
    };

    // exceptional ray: one four cycle
    std::vector<int> e = perm(ray_divisor(4, 2));
    CHECK(permutation_order(e) == 4);

    // the two fibration rays agree and square to the identity
    std::vector<int> a = perm(ray_divisor(4, 1));
    std::vector<int> b = perm(ray_divisor(4, 3));
    CHECK(a == b);
    CHECK(permutation_order(a) == 2);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] != (int)i);

    // the hyperplane ray inverts the exceptional cycle and matches the
    // equivalent divisor on the other two rays
    std::vector<int> h = perm(ray_divisor(4, 0));
    CHECK(h == inverse_mapping(e));
    CHECK(h == perm(ToricDivisor{{0, 1, 1, 0}}));
}

TEST_CASE("the permutation is stable under a smaller step cap") {
    FanoPolytope P = bl1();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    CoefficientPath loop = gamma_loop(f, ray_divisor(4, 2), P.vertices);
    std::vector<int> coarse = loop_permutation(f, loop, cs).mapping;
    TrackOptions fine;
    fine.max_step = 0.02;
    fine.initial_step = 0.005;
    CHECK(loop_permutation(f, loop, cs, fine).mapping == coarse);
}

TEST_CASE("half amplitude composite loops recover the bundle monodromy") {
    FanoPolytope P = p2bundle2();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    REQUIRE(cs.points.size() == 6);
    VertexPartition part{{0, 1, 3}, {2, 4}};

    const std::vector<std::pair<std::string, CxVec>> anchors = {
        {"E00", {Cx(0.66119), Cx(0.66119), Cx(0.53763)}},
        {"E10",
         {Cx(0.11928, 0.85727), Cx(0.11928, 0.85727), Cx(0.43996, -0.67442)}},
        {"E20",
         {Cx(0.11928, -0.85727), Cx(0.11928, -0.85727), Cx(0.43996, 0.67442)}},
        {"E01",
         {Cx(-0.50844, 0.4815), Cx(-0.50844, 0.4815), Cx(-0.53178, -0.24615)}},
        {"E11",
         {Cx(-0.50844, -0.4815), Cx(-0.50844, -0.4815), Cx(-0.53178, 0.24615)}},
        {"E21", {Cx(4.11714), Cx(4.11714), Cx(-8.35399)}},
    };
    std::map<std::string, int> at;
    for (const auto& [label, z] : anchors)
        at[label] = (int)find_index(cs, z, 0.02);

    auto expect = [&](const std::vector<std::vector<std::string>>& cycles) {
        std::vector<int> m(6);
        for (int i = 0; i < 6; ++i) m[i] = i;
        for (const auto& cyc : cycles)
            for (size_t i = 0; i < cyc.size(); ++i)
                m[at[cyc[i]]] = at[cyc[(i + 1) % cyc.size()]];
        return m;
    };

    auto run = [&](const ToricDivisor& D) {
        CoefficientPath loop = composite_loop(f, D, part, 0.5, P.vertices);
        return loop_permutation(f, loop, cs);
    };

    MonodromyPermutation base = run(ray_divisor(5, 3));
    CHECK(base.epsilon == 0.5);
    CHECK(base.mapping == expect({{"E00", "E10", "E20"}, {"E01", "E11", "E21"}}));
    CHECK(run(ray_divisor(5, 0)).mapping == base.mapping);
    CHECK(run(ray_divisor(5, 1)).mapping == base.mapping);

    MonodromyPermutation fiber = run(ray_divisor(5, 2));
    CHECK(fiber.mapping ==
          expect({{"E00", "E11", "E10", "E21", "E20", "E01"}}));
}

TEST_CASE("degeneration splits points between escape and the limit model") {
    FanoPolytope P = bl1();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    size_t esc = find_index(cs, {Cx(0.5249), Cx(-1.3803)}, 1e-3);

    DegenerationResult res = degenerate(f, {{-1, 0}}, cs);
    CHECK(res.limit_matched);
    CHECK(res.t_end == doctest::Approx(1.0 - 1e-4));
    REQUIRE(res.limit_points.points.size() == 3);

    std::vector<bool> taken(3, false);
    for (size_t k = 0; k < res.points.size(); ++k) {
        const auto& p = res.points[k];
        if (k == esc) {
            CHECK(p.status == DegenerationResult::Status::Escaped);
            CHECK(p.escape_direction == "(0,~)");
            CHECK(p.limit_index == -1);
        } else {
            CHECK(p.status == DegenerationResult::Status::Converged);
            REQUIRE(p.limit_index >= 0);
            CHECK(!taken[p.limit_index]);
            taken[p.limit_index] = true;
            CHECK(point_distance(
                      p.endpoint,
                      res.limit_points.points[p.limit_index].coords) < 1e-2);
        }
    }

    // the interior fixed point lands on the limit system's positive point
    size_t big = find_index(cs, {Cx(1.4902), Cx(0.8192)}, 1e-3);
    size_t pos = find_index(res.limit_points, {Cx(1), Cx(1)});
    CHECK(res.points[big].limit_index == (int)pos);
}

TEST_CASE("degeneration without a limit model reports raw endpoints") {
    FanoPolytope P = p2();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);

    DegenerationResult res = degenerate(f, {{1, 0}}, cs);
    CHECK(!res.limit_matched);
    CHECK(res.limit_points.points.empty());
    for (const auto& p : res.points) {
        CHECK(p.status == DegenerationResult::Status::Converged);
        CHECK(p.limit_index == -1);
        // the scaled coordinate has walked far out without leaving the box
        CHECK(std::abs(p.endpoint[0]) > 100.0);
    }
}

TEST_CASE("empty degeneration matches every point to itself") {
    FanoPolytope P = p2();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    DegenerationResult res = degenerate(f, {}, cs);
    CHECK(res.limit_matched);
    for (size_t k = 0; k < res.points.size(); ++k) {
        CHECK(res.points[k].status == DegenerationResult::Status::Converged);
        CHECK(res.points[k].limit_index == (int)k);
    }
}

TEST_CASE("tracking failures are reported by kind") {
    FanoPolytope P = bl1();
    LaurentPoly f = lg_potential(P);
    CritSet cs = solve_all(f);
    size_t esc = find_index(cs, {Cx(0.5249), Cx(-1.3803)}, 1e-3);
    size_t big = find_index(cs, {Cx(1.4902), Cx(0.8192)}, 1e-3);

    SUBCASE("a coefficient ramp through a branch point starves the step") {
        CoefficientPath ramp;
        ramp.base = f;
        PathSegment seg;
        seg.factors.emplace(IntVec{-1, 0}, SegmentFactor{1.0, -1.0, 0});
        ramp.segments.push_back(seg);
        CHECK_THROWS_AS(track(ramp, cs.points[big]), StepUnderflow);
        CHECK_THROWS_AS(track(ramp, cs.points[esc]), DivergedPath);
    }

    SUBCASE("a point leaving the tracking box diverges") {
        CoefficientPath down;
        down.base = f;
        PathSegment seg;
        seg.factors.emplace(IntVec{-1, 0}, SegmentFactor{1.0, 0.0, 0});
        down.segments.push_back(seg);
        CHECK_THROWS_AS(track(down, cs.points[esc]), DivergedPath);
        CritPoint end = track(down, cs.points[big]);
        CHECK(point_distance(end.coords, {Cx(1), Cx(1)}) < 1e-6);
    }

    SUBCASE("a singular start system is rejected") {
        LaurentPoly g;
        g.dim = 1;
        g.add_term({2}, 0.5);
        g.add_term({1}, -3.0);
        g.add_term({-1}, -4.0);
        CoefficientPath still;
        still.base = g;
        still.segments.push_back({});
        CritPoint z0;
        z0.coords = {Cx(2)};
        CHECK_THROWS_AS(track(still, z0), SingularJacobian);
    }

    SUBCASE("start points must solve the system") {
        CoefficientPath loop =
            gamma_loop(lg_potential(p2()), ray_divisor(3, 0), p2().vertices);
        CritPoint z0;
        z0.coords = {Cx(2), Cx(2)};
        CHECK_THROWS_AS(track(loop, z0), Error);
        z0.coords = {Cx(0), Cx(1)};
        CHECK_THROWS_AS(track(loop, z0), ZeroCoordinate);
    }

    SUBCASE("step bounds are validated") {
        CoefficientPath loop = gamma_loop(f, ray_divisor(4, 0), P.vertices);
        TrackOptions bad;
        bad.initial_step = 0.2;
        bad.max_step = 0.05;
        CHECK_THROWS_AS(track(loop, cs.points[big], bad), Error);
    }

    SUBCASE("an impossible match tolerance exhausts refinement") {
        CoefficientPath loop = gamma_loop(f, ray_divisor(4, 2), P.vertices);
        TrackOptions strict;
        strict.match_tol = 1e-16;
        CHECK_THROWS_AS(loop_permutation(f, loop, cs, strict),
                        AmbiguousMatching);
    }

    SUBCASE("loop permutations reject paths that are not loops") {
        CoefficientPath down;
        down.base = f;
        PathSegment seg;
        seg.factors.emplace(IntVec{-1, 0}, SegmentFactor{1.0, 0.0, 0});
        down.segments.push_back(seg);
        CHECK_THROWS_AS(loop_permutation(f, down, cs), Error);
    }

    SUBCASE("loop permutations reject mismatched potentials") {
        FanoPolytope Q = p1xp1();
        LaurentPoly g = lg_potential(Q);
        CoefficientPath loop = gamma_loop(g, ray_divisor(4, 0), Q.vertices);
        CHECK_THROWS_AS(loop_permutation(f, loop, cs), Error);
    }

    SUBCASE("degenerations validate the scaled vertices and the match") {
        CHECK_THROWS_AS(degenerate(f, {{5, 5}}, cs), Error);
        TrackOptions strict;
        strict.match_tol = 1e-18;
        CHECK_THROWS_AS(degenerate(f, {{-1, 0}}, cs, strict), UnmatchedLimit);
    }
}

TEST_CASE("cycle strings and mapping algebra") {
    CHECK(inverse_mapping({1, 2, 0}) == std::vector<int>{2, 0, 1});
    CHECK_THROWS_AS(inverse_mapping({0, 0, 2}), Error);

    CHECK(compose_mappings({1, 2, 0}, {1, 2, 0}) == std::vector<int>{2, 0, 1});
    CHECK_THROWS_AS(compose_mappings({0, 1}, {0, 1, 2}), Error);
    // outer after inner: swap01 after swap12 sends 0 to 1, 2 to 0
    CHECK(compose_mappings({1, 0, 2}, {0, 2, 1}) == std::vector<int>{1, 2, 0});

    CHECK(cycle_string({1, 2, 0}, {"E0", "E1", "E2"}) == "(E0 E1 E2)");
    CHECK(cycle_string({0, 2, 1}, {"E0", "E1", "E2"}) == "(E1 E2)");
    CHECK(cycle_string({0, 1, 2}, {"E0", "E1", "E2"}) == "id");
    CHECK(cycle_string({1, 0, 2}, {"F1", "E0", "E9"}) == "(E0 F1)");
    CHECK_THROWS_AS(cycle_string({1, 0}, {"A", "A"}), Error);
    CHECK_THROWS_AS(cycle_string({1, 0}, {"A"}), Error);

    CHECK(index_cycle_string({1, 2, 0, 3}) == "(0 1 2)(3)");
    CHECK(index_cycle_string({0, 1, 2}) == "(0)(1)(2)");
}
