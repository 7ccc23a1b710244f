#include "lgm/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace lgm {
namespace {

constexpr double kFixtureTol = 0.02;
constexpr double kCollapseTol = 0.15;
constexpr double kFiberSignTol = 0.2;
constexpr double kBaseTargetTol = 0.05;

std::string format_point(const CxVec& z) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < z.size(); ++i) {
        if (i) out << ", ";
        out << z[i].real();
        if (z[i].imag() != 0.0)
            out << (z[i].imag() > 0 ? "+" : "") << z[i].imag() << "i";
    }
    out << ")";
    return out.str();
}

void require_map(const CatalogEntry& entry, const CritSet& cs,
                 const ExceptionalMap& map) {
    if (map.assignment.size() != cs.points.size())
        throw Error("exceptional map covers " +
                    std::to_string(map.assignment.size()) + " points, not " +
                    std::to_string(cs.points.size()));
    std::vector<char> hit(entry.collection.size(), 0);
    for (int a : map.assignment) {
        if (a < 0 || a >= (int)entry.collection.size())
            throw Error("exceptional map assignment out of range");
        if (hit[a]++)
            throw Error("exceptional map assigns '" +
                        entry.collection[a].label + "' twice");
    }
    if (map.assignment.size() != entry.collection.size())
        throw Error("exceptional map does not cover the collection");
}

// Loop construction shared by the alignment and orbit checks: plain loops
// for the surface entries, composite loops at the entry's epsilon for the
// bundle entries.
CoefficientPath entry_loop(const CatalogEntry& entry, const LaurentPoly& f,
                           const ToricDivisor& D) {
    if (entry.partition.base.empty())
        return gamma_loop(f, D, entry.polytope.vertices);
    return composite_loop(f, D, entry.partition, entry.epsilon,
                          entry.polytope.vertices);
}

}  // namespace

std::vector<std::string> point_labels(const ExceptionalMap& map,
                                      const CatalogEntry& entry) {
    std::vector<std::string> labels;
    for (int a : map.assignment) labels.push_back(entry.collection[a].label);
    return labels;
}

ExceptionalMap label_solutions(const CatalogEntry& entry, const CritSet& cs) {
    if (cs.points.size() != entry.fixtures.size())
        throw FixtureMismatch("entry '" + entry.id + "' has " +
                              std::to_string(entry.fixtures.size()) +
                              " fixtures but the critical set has " +
                              std::to_string(cs.points.size()) + " points");
    std::map<std::string, int> collection_index;
    for (size_t i = 0; i < entry.collection.size(); ++i)
        collection_index[entry.collection[i].label] = (int)i;

    ExceptionalMap map;
    map.entry_id = entry.id;
    std::vector<int> claimed_by(entry.fixtures.size(), -1);
    for (size_t i = 0; i < cs.points.size(); ++i) {
        const CxVec& z = cs.points[i].coords;
        if (z.size() != (size_t)entry.polytope.dim)
            throw FixtureMismatch("point " + std::to_string(i) +
                                  " has the wrong dimension for entry '" +
                                  entry.id + "'");
        int found = -1;
        for (size_t k = 0; k < entry.fixtures.size(); ++k) {
            if (point_distance(z, entry.fixtures[k].point) > kFixtureTol)
                continue;
            if (found >= 0)
                throw FixtureMismatch(
                    "point " + format_point(z) + " matches fixtures '" +
                    entry.fixtures[found].label + "' and '" +
                    entry.fixtures[k].label + "'");
            found = (int)k;
        }
        if (found < 0)
            throw FixtureMismatch("point " + format_point(z) +
                                  " matches no fixture of entry '" + entry.id +
                                  "'");
        if (claimed_by[found] >= 0)
            throw FixtureMismatch("points " + std::to_string(claimed_by[found]) +
                                  " and " + std::to_string(i) +
                                  " both claim fixture '" +
                                  entry.fixtures[found].label + "'");
        claimed_by[found] = (int)i;
        map.assignment.push_back(
            collection_index.at(entry.fixtures[found].label));
    }
    return map;
}

RecipeReport verify_labeling_recipe(const CatalogEntry& entry,
                                    const CritSet& cs,
                                    const ExceptionalMap& map,
                                    const TrackOptions& opts,
                                    const Catalog& catalog) {
    require_map(entry, cs, map);
    LaurentPoly f = lg_potential(entry.polytope);
    std::vector<std::string> labels = point_labels(map, entry);

    RecipeReport report;
    for (size_t ri = 0; ri < entry.degeneration_recipes.size(); ++ri) {
        const DegenerationRecipe& r = entry.degeneration_recipes[ri];
        std::string where =
            entry.id + " recipe " + std::to_string(ri) + ": ";
        std::vector<IntVec> scaled;
        for (int k : r.scale) scaled.push_back(entry.polytope.vertices[k]);
        DegenerationResult res = degenerate(f, scaled, cs, opts);

        if (r.kind == DegenerationRecipe::Kind::Limit) {
            const CatalogEntry& target = catalog.get(r.limit_id);
            if (!res.limit_matched)
                throw RecipeViolation(where +
                                      "the scaled family has no limit system");
            ExceptionalMap limit_map;
            try {
                limit_map = label_solutions(target, res.limit_points);
            } catch (const FixtureMismatch& ex) {
                throw RecipeViolation(where + "limit points do not label as '" +
                                      r.limit_id + "': " + ex.what());
            }
            std::set<std::string> escapes(r.escape.begin(), r.escape.end());
            for (size_t i = 0; i < cs.points.size(); ++i) {
                const auto& pr = res.points[i];
                const std::string& name = labels[i];
                if (escapes.count(name)) {
                    if (pr.status != DegenerationResult::Status::Escaped)
                        throw RecipeViolation(
                            where + "'" + name + "' should escape but stayed at " +
                            format_point(pr.endpoint));
                    report.checks.push_back(where + "'" + name + "' escapes " +
                                            pr.escape_direction);
                    continue;
                }
                if (pr.status != DegenerationResult::Status::Converged)
                    throw RecipeViolation(where + "'" + name + "' escaped " +
                                          pr.escape_direction);
                if (pr.limit_index < 0)
                    throw RecipeViolation(where + "'" + name +
                                          "' has no limit point");
                std::string got =
                    target.collection[limit_map.assignment[pr.limit_index]]
                        .label;
                const std::string& want = r.label_map.at(name);
                if (got != want)
                    throw RecipeViolation(where + "'" + name + "' lands on '" +
                                          got + "' of '" + r.limit_id +
                                          "', expected '" + want + "'");
                report.checks.push_back(where + "'" + name + "' -> '" + want +
                                        "' of " + r.limit_id);
            }
        } else {
            for (size_t i = 0; i < cs.points.size(); ++i) {
                const auto& pr = res.points[i];
                const std::string& name = labels[i];
                if (pr.status != DegenerationResult::Status::Converged)
                    throw RecipeViolation(where + "'" + name +
                                          "' escaped during the collapse " +
                                          pr.escape_direction);
                const CxVec& z = pr.endpoint;
                double cmax = 0.0;
                for (int c : r.collapse_coords)
                    cmax = std::max(cmax, std::abs(z[c]));
                if (cmax > kCollapseTol)
                    throw RecipeViolation(
                        where + "'" + name +
                        "' collapse coordinates still large at " +
                        format_point(z));
                if (r.fiber_coord >= 0) {
                    int digit = labels[i][r.fiber_sign_digit] - '0';
                    double want = digit % 2 == 0 ? 1.0 : -1.0;
                    if (std::abs(z[r.fiber_coord] - want) > kFiberSignTol)
                        throw RecipeViolation(
                            where + "'" + name + "' fiber coordinate " +
                            format_point({z[r.fiber_coord]}) + ", expected " +
                            (want > 0 ? "+1" : "-1"));
                }
                if (r.base_target) {
                    const auto& bt = *r.base_target;
                    const CatalogEntry& target = catalog.get(bt.id);
                    std::string tlabel =
                        bt.label_prefix + name[bt.label_digit];
                    const SolutionFixture* fixture = nullptr;
                    for (const auto& tf : target.fixtures)
                        if (tf.label == tlabel) fixture = &tf;
                    if (!fixture)
                        throw RecipeViolation(where + "no fixture '" + tlabel +
                                              "' in '" + bt.id + "'");
                    CxVec got;
                    for (int c : bt.coords) got.push_back(z[c]);
                    if (point_distance(got, fixture->point) > kBaseTargetTol)
                        throw RecipeViolation(
                            where + "'" + name + "' base point " +
                            format_point(got) + " is far from '" + tlabel +
                            "' of '" + bt.id + "'");
                }
                report.checks.push_back(where + "'" + name + "' collapsed to " +
                                        format_point(z));
            }
            for (const auto& orbit : r.orbit) {
                CoefficientPath path = entry_loop(entry, f, orbit.divisor);
                MonodromyPermutation perm = loop_permutation(f, path, cs, opts);
                std::string got = cycle_string(perm.mapping, labels);
                std::string divisor_name =
                    divisor_string(orbit.divisor, entry.ray_names);
                if (got != orbit.cycles)
                    throw RecipeViolation(where + "orbit loop " + divisor_name +
                                          " acts as " + got + ", expected " +
                                          orbit.cycles);
                report.checks.push_back(where + "orbit " + divisor_name +
                                        " acts as " + got);
            }
        }
    }
    return report;
}

AlignmentReport check_aligned(const CatalogEntry& entry, const CritSet& cs,
                              const ExceptionalMap& map,
                              const TrackOptions& opts) {
    require_map(entry, cs, map);
    LaurentPoly f = lg_potential(entry.polytope);
    std::vector<std::string> labels = point_labels(map, entry);
    LabeledQuiver quiver = entry_quiver(entry);
    std::vector<ToricDivisor> divisors = edge_divisors(quiver);

    std::map<ToricDivisor, std::string> fixture_cycles;
    for (const auto& mf : entry.monodromy_fixtures)
        fixture_cycles[mf.divisor] = mf.cycles;

    std::vector<std::pair<ToricDivisor, bool>> jobs;
    for (const auto& D : divisors) jobs.emplace_back(D, true);
    std::set<ToricDivisor> in_quiver(divisors.begin(), divisors.end());
    for (const auto& mf : entry.monodromy_fixtures)
        if (!in_quiver.count(mf.divisor)) {
            jobs.emplace_back(mf.divisor, false);
            in_quiver.insert(mf.divisor);
        }

    AlignmentReport report;
    report.entry_id = entry.id;
    for (const auto& [D, from_quiver] : jobs) {
        DivisorAlignment row;
        row.divisor = D;
        row.divisor_name = divisor_string(D, entry.ray_names);
        row.in_quiver = from_quiver;

        CoefficientPath path = entry_loop(entry, f, D);
        row.permutation = loop_permutation(f, path, cs, opts);
        row.cycles = cycle_string(row.permutation.mapping, labels);

        auto fixture = fixture_cycles.find(D);
        if (fixture != fixture_cycles.end()) {
            row.has_fixture = true;
            row.matches_fixture = row.cycles == fixture->second;
            if (!row.matches_fixture)
                row.violations.push_back("loop acts as " + row.cycles +
                                         ", recorded " + fixture->second);
        }

        if (from_quiver) {
            row.subquiver = divisor_subquiver(quiver, D);
            LabeledQuiver orbit = monodromy_quiver(row.permutation, labels);
            std::map<std::string, std::string> identity;
            for (const auto& v : row.subquiver.vertices) identity[v] = v;
            ContainmentReport contained =
                is_contained(row.subquiver, orbit, identity);
            row.contained = contained.contained;
            for (const auto& v : contained.violations)
                row.violations.push_back(v);
        }

        report.pass = report.pass && row.ok();
        report.divisors.push_back(std::move(row));
    }
    return report;
}

AlignmentReport check_aligned(const CatalogEntry& entry,
                              const TrackOptions& opts) {
    LaurentPoly f = lg_potential(entry.polytope);
    CritSet cs = solve_all(f, opts.solver);
    ExceptionalMap map = label_solutions(entry, cs);
    return check_aligned(entry, cs, map, opts);
}

}  // namespace lgm
