#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "lgm/toric.hpp"

using namespace lgm;

namespace {

FanoPolytope make(int dim, std::vector<IntVec> verts) {
    return FanoPolytope{dim, std::move(verts)};
}

const FanoPolytope p2 = make(2, {{1, 0}, {0, 1}, {-1, -1}});
const FanoPolytope p1xp1 = make(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
const FanoPolytope bl1 = make(2, {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}});
const FanoPolytope bl2 = make(2, {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
const FanoPolytope bl3 =
    make(2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});

FanoPolytope p2bundle(long long k) {
    return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, k}, {0, 0, -1}});
}
FanoPolytope p1bundle(long long k) {
    return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 0}, {-k, -k, -1}});
}
FanoPolytope p1xp1bundle(long long k1, long long k2) {
    return make(3, {{1, 0, 0},
                    {0, 1, 0},
                    {0, 0, 1},
                    {k1, -1, 0},
                    {k2, 0, -1},
                    {-1, 0, 0}});
}

ToricDivisor ray(int i, int num_rays) {
    ToricDivisor d;
    d.coeffs.assign(num_rays, 0);
    d.coeffs[i] = 1;
    return d;
}

std::set<IntVec> normal_set(const FanoPolytope& P) {
    std::set<IntVec> s;
    for (const auto& f : facets(P)) s.insert(f.inner_normal);
    return s;
}

}  // namespace

TEST_CASE("facets of the plane triangle") {
    auto fs = facets(p2);
    REQUIRE(fs.size() == 3);
    // Hand computation: the edges lie on <m, x> = -1 for these m.
    CHECK(normal_set(p2) ==
          std::set<IntVec>{{-1, -1}, {-1, 2}, {2, -1}});
    for (const auto& f : fs) {
        CHECK(f.vertex_indices.size() == 2);
        for (size_t i = 0; i < p2.vertices.size(); ++i) {
            long long pair = 0;
            for (int k = 0; k < 2; ++k)
                pair += f.inner_normal[k] * p2.vertices[i][k];
            bool on = std::find(f.vertex_indices.begin(), f.vertex_indices.end(),
                                (int)i) != f.vertex_indices.end();
            CHECK(pair >= -1);
            CHECK((pair == -1) == on);
        }
    }
}

TEST_CASE("facets of the product square") {
    auto fs = facets(p1xp1);
    REQUIRE(fs.size() == 4);
    for (const auto& f : fs) CHECK(f.vertex_indices.size() == 2);
}

TEST_CASE("facets of a threefold bipyramid") {
    CHECK(facets(p2bundle(2)).size() == 6);
    CHECK(facets(p1bundle(1)).size() == 6);
    CHECK(facets(p1xp1bundle(1, -1)).size() == 8);
}

TEST_CASE("facet errors") {
    // Collinear points span only a line.
    CHECK_THROWS_AS(facets(make(2, {{1, 0}, {-1, 0}, {2, 0}})),
                    NotFullDimensional);
    // A facet hyperplane at level 3 has no integral normal at level -1.
    CHECK_THROWS_AS(facets(make(2, {{1, 0}, {0, 1}, {-1, -3}})), NotReflexive);
    // Origin on the boundary of the hull.
    CHECK_THROWS_AS(facets(make(2, {{1, 0}, {0, 1}, {1, 1}})), NotReflexive);
}

TEST_CASE("reflexive Fano recognition") {
    CHECK(is_reflexive_fano(p2).ok);
    CHECK(is_reflexive_fano(p1xp1).ok);
    CHECK(is_reflexive_fano(bl3).ok);
    CHECK(is_reflexive_fano(p2bundle(0)).ok);
    CHECK(is_reflexive_fano(p1xp1bundle(1, -1)).ok);

    // The square with corner vertices is reflexive but its facet vertex
    // matrices have determinant 2, so it fails the simplex condition.
    auto square = make(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    auto chk = is_reflexive_fano(square);
    CHECK_FALSE(chk.ok);
    CHECK(chk.reason.find("determinant") != std::string::npos);

    CHECK_FALSE(is_reflexive_fano(make(2, {{1, 0}, {0, 1}, {-1, -3}})).ok);
    CHECK_FALSE(is_reflexive_fano(make(2, {{1, 0}, {2, 0}, {0, 1}, {-1, -1}})).ok);
}

TEST_CASE("euler characteristic equals the facet count") {
    CHECK(euler_characteristic(p2) == 3);
    CHECK(euler_characteristic(p1xp1) == 4);
    CHECK(euler_characteristic(bl1) == 4);
    CHECK(euler_characteristic(bl2) == 5);
    CHECK(euler_characteristic(bl3) == 6);
    CHECK(euler_characteristic(p2bundle(1)) == 6);
    CHECK(euler_characteristic(p1bundle(0)) == 6);
    CHECK(euler_characteristic(p1xp1bundle(0, 0)) == 8);
}

TEST_CASE("polar involution returns the original vertices") {
    for (const auto& P : {p2, p1xp1, bl1, bl2, bl3, p2bundle(0), p2bundle(2),
                          p1bundle(1), p1xp1bundle(1, 1), p1xp1bundle(1, -1)}) {
        FanoPolytope polar{P.dim, {}};
        for (const auto& f : facets(P)) polar.vertices.push_back(f.inner_normal);
        std::set<IntVec> original(P.vertices.begin(), P.vertices.end());
        CHECK(normal_set(polar) == original);
    }
}

TEST_CASE("picard ranks") {
    CHECK(picard(p2).rank == 1);
    CHECK(picard(p1xp1).rank == 2);
    CHECK(picard(bl1).rank == 2);
    CHECK(picard(bl2).rank == 3);
    CHECK(picard(bl3).rank == 4);
    CHECK(picard(p2bundle(1)).rank == 2);
    CHECK(picard(p1bundle(1)).rank == 2);
    CHECK(picard(p1xp1bundle(1, 1)).rank == 3);
}

TEST_CASE("torsion is rejected") {
    // Corner square: the rays generate an index-2 sublattice, so the
    // class group is Z plus a 2-torsion part.
    auto square = make(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK_THROWS_AS(picard(square), TorsionInPicard);
}

TEST_CASE("divisor classes") {
    auto pic = picard(bl1);
    CHECK(divisor_class(pic, ray(1, 4)) == divisor_class(pic, ray(3, 4)));
    CHECK_FALSE(divisor_class(pic, ray(0, 4)) == divisor_class(pic, ray(2, 4)));

    // Divisors of monomials have zero class.
    for (const auto& P : {p2, bl2, p2bundle(2)}) {
        auto pc = picard(P);
        ToricDivisor zero;
        zero.coeffs.assign(pc.num_rays, 0);
        for (long long m0 = -2; m0 <= 2; ++m0) {
            for (long long m1 = -2; m1 <= 2; ++m1) {
                IntVec m = {m0, m1};
                if (P.dim == 3) m.push_back(m0 - m1);
                ToricDivisor d;
                d.coeffs.resize(pc.num_rays);
                for (int F = 0; F < pc.num_rays; ++F) {
                    d.coeffs[F] = 0;
                    for (int k = 0; k < pc.dim; ++k)
                        d.coeffs[F] += m[k] * pc.relation_matrix[F][k];
                }
                CHECK(divisor_class(pc, d) == divisor_class(pc, zero));
            }
        }
    }

    // The three coordinate divisors of the plane are linearly equivalent.
    auto pp = picard(p2);
    ToricDivisor sum{{1, 1, 1}}, three{{3, 0, 0}};
    CHECK(divisor_class(pp, sum) == divisor_class(pp, three));
}

TEST_CASE("divisor polytope points") {
    auto pts = divisor_polytope_points(p2, ray(0, 3));
    CHECK(pts == std::vector<IntVec>{{-1, 0}, {-1, 1}, {0, 0}});

    ToricDivisor zero{{0, 0, 0}};
    CHECK(divisor_polytope_points(p2, zero) == std::vector<IntVec>{{0, 0}});

    CHECK(divisor_polytope_points(bl1, ray(0, 4)).size() == 3);

    // Negative coefficients can empty the polytope.
    ToricDivisor neg{{-1, 0, 0}};
    CHECK(divisor_polytope_points(p2, neg).empty());

    // Hull without the origin: the inequality system has a recession cone.
    CHECK_THROWS_AS(
        divisor_polytope_points(make(2, {{1, 0}, {0, 1}, {1, 1}}), zero),
        UnboundedPolytope);
}

TEST_CASE("effective bases") {
    auto pic = picard(bl1);
    auto B = effective_basis(pic, divisor_class(pic, ray(0, 4)));
    CHECK(B == std::vector<ToricDivisor>{
                   {{0, 0, 1, 1}}, {{0, 1, 1, 0}}, {{1, 0, 0, 0}}});

    ToricDivisor zero{{0, 0, 0, 0}};
    CHECK(effective_basis(pic, divisor_class(pic, zero)) ==
          std::vector<ToricDivisor>{{{0, 0, 0, 0}}});

    auto pic2 = picard(bl2);
    auto B2 = effective_basis(pic2, divisor_class(pic2, ray(1, 5)));
    CHECK(B2 == std::vector<ToricDivisor>{{{0, 0, 0, 1, 1}}, {{0, 1, 0, 0, 0}}});

    // No effective representative at all.
    auto pp = picard(p2);
    ToricDivisor neg{{-1, 0, 0}};
    CHECK(effective_basis(pp, divisor_class(pp, neg)).empty());

    // Every element has the right class, nonnegative coefficients, and
    // the lattice-point parameterization is injective.
    for (const auto& P : {p2, bl2, bl3, p1bundle(1)}) {
        auto pc = picard(P);
        for (int i = 0; i < pc.num_rays; ++i) {
            auto L = divisor_class(pc, ray(i, pc.num_rays));
            auto basis = effective_basis(pc, L);
            auto npts =
                divisor_polytope_points(P, L.rep).size();
            CHECK(basis.size() == npts);
            for (size_t k = 0; k < basis.size(); ++k) {
                if (k) CHECK(basis[k - 1] < basis[k]);
                CHECK(divisor_class(pc, basis[k]) == L);
                for (long long cc : basis[k].coeffs) CHECK(cc >= 0);
            }
        }
    }
}

TEST_CASE("special collections") {
    auto pp = picard(p2);
    std::vector<LineBundleClass> trivial = {divisor_class(pp, {{0, 0, 0}})};
    CHECK(is_special_collection(pp, trivial).ok);

    std::vector<LineBundleClass> plane = {divisor_class(pp, {{0, 0, 0}}),
                                          divisor_class(pp, {{1, 0, 0}}),
                                          divisor_class(pp, {{2, 0, 0}})};
    CHECK(is_special_collection(pp, plane).ok);

    auto pb = picard(bl1);
    std::vector<LineBundleClass> blow = {divisor_class(pb, {{0, 0, 0, 0}}),
                                         divisor_class(pb, {{0, 1, 0, 0}}),
                                         divisor_class(pb, {{1, 0, 0, 0}}),
                                         divisor_class(pb, {{1, 1, 0, 0}})};
    CHECK(is_special_collection(pb, blow).ok);
}

TEST_CASE("divisor expressions") {
    std::vector<std::string> names = {"n1", "n2", "n3", "n4"};
    CHECK(parse_divisor("n2", names, 4) == ToricDivisor{{0, 1, 0, 0}});
    CHECK(parse_divisor("n2+n3", names, 4) == ToricDivisor{{0, 1, 1, 0}});
    CHECK(parse_divisor("2n1+n4", names, 4) == ToricDivisor{{2, 0, 0, 1}});
    CHECK(parse_divisor("n1-n3", names, 4) == ToricDivisor{{1, 0, -1, 0}});
    CHECK(parse_divisor("0", names, 4) == ToricDivisor{{0, 0, 0, 0}});
    CHECK(parse_divisor(" n1 + 2 n2 ", names, 4) == ToricDivisor{{1, 2, 0, 0}});

    CHECK_THROWS_AS(parse_divisor("n9", names, 4), ParseError);
    CHECK_THROWS_AS(parse_divisor("", names, 4), ParseError);
    CHECK_THROWS_AS(parse_divisor("n1 n2", names, 4), ParseError);

    CHECK(divisor_string({{0, 1, 1, 0}}, names) == "n2+n3");
    CHECK(divisor_string({{2, 0, 0, 1}}, names) == "2n1+n4");
    CHECK(divisor_string({{0, 0, 0, 0}}, names) == "0");
    CHECK(divisor_string({{1, 0, -1, 0}}, names) == "n1-n3");
    CHECK(divisor_string({{1, 1}}) == "n1+n2");

    // Round trip on every ray-sum shape used by the reports.
    for (const auto& d : {ToricDivisor{{1, 0, 0, 0}}, ToricDivisor{{0, 1, 1, 0}},
                          ToricDivisor{{2, 0, 1, 0}}, ToricDivisor{{1, 1, 1, 1}}}) {
        CHECK(parse_divisor(divisor_string(d, names), names, 4) == d);
    }
}
