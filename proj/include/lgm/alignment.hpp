#pragma once

#include <string>
#include <vector>

#include "lgm/catalog.hpp"
#include "lgm/continuation.hpp"
#include "lgm/quiver.hpp"
#include "lgm/solver.hpp"

namespace lgm {

// Bijection between the critical points of an entry's potential and its
// exceptional collection: assignment[i] is the collection index of
// critical point i.
struct ExceptionalMap {
    std::string entry_id;
    std::vector<int> assignment;
};

// Collection labels in critical point order under the map.
std::vector<std::string> point_labels(const ExceptionalMap& map,
                                      const CatalogEntry& entry);

// Matches each critical point to the unique entry fixture within 0.02 in
// the coordinatewise max norm and transfers its label. Throws
// FixtureMismatch when a point matches no fixture or several, or when two
// points claim the same fixture.
ExceptionalMap label_solutions(const CatalogEntry& entry, const CritSet& cs);

// One line per verified clause of the entry's degeneration recipes.
struct RecipeReport {
    std::vector<std::string> checks;
};

// Replays the entry's degeneration recipes against the labeled solutions.
// Limit recipes must send exactly the escape labels out of the coordinate
// window and land every other point on the recipe's label in the limit
// entry. Fiber recipes must keep every point finite, collapse the named
// coordinates, reproduce the expected sign or base point, and realize the
// recorded orbit loops. Recipe targets are resolved in the given catalog.
// Throws RecipeViolation naming the first failing clause.
RecipeReport verify_labeling_recipe(const CatalogEntry& entry,
                                    const CritSet& cs,
                                    const ExceptionalMap& map,
                                    const TrackOptions& opts = {},
                                    const Catalog& catalog = builtin_catalog());

// Outcome of checking one loop divisor.
struct DivisorAlignment {
    ToricDivisor divisor;
    std::string divisor_name;
    MonodromyPermutation permutation;
    // Action on the labels of the exceptional map, in canonical cycle form.
    std::string cycles;
    // True for edge labels of the entry's quiver; false for divisors that
    // appear only among the monodromy fixtures, which get their
    // permutation checked but no containment test.
    bool in_quiver = true;
    LabeledQuiver subquiver;
    bool has_fixture = false;
    bool matches_fixture = true;
    bool contained = true;
    std::vector<std::string> violations;

    bool ok() const { return matches_fixture && contained; }
};

struct AlignmentReport {
    std::string entry_id;
    std::vector<DivisorAlignment> divisors;
    bool pass = true;
};

// Computes the monodromy permutation of every edge label of the entry's
// quiver (plain loops when the partition is empty, composite loops at the
// entry's epsilon otherwise), compares against the recorded fixtures, and
// checks that each divisor subquiver maps into the corresponding
// monodromy quiver under the exceptional map. Divisors appearing only in
// monodromy_fixtures are appended with their permutation checked.
AlignmentReport check_aligned(const CatalogEntry& entry, const CritSet& cs,
                              const ExceptionalMap& map,
                              const TrackOptions& opts = {});

// Full pipeline: solve the entry's critical system, label the solutions,
// and run the alignment checks.
AlignmentReport check_aligned(const CatalogEntry& entry,
                              const TrackOptions& opts = {});

}  // namespace lgm
