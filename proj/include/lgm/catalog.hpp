#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgm/laurent.hpp"
#include "lgm/quiver.hpp"
#include "lgm/toric.hpp"

namespace lgm {

// A labeled reference solution of an entry's critical system. Precision
// varies per entry because some entries store rounded published values;
// consumers match computed points to fixtures within 0.02.
struct SolutionFixture {
    std::string label;
    CxVec point;
};

// Expected action of one coefficient loop on the solution labels, written
// as disjoint cycles with fixed labels omitted ("id" when everything is
// fixed). The strings are canonical: cycles start at their smallest label
// and are ordered by that label.
struct PermutationFixture {
    ToricDivisor divisor;
    std::string cycles;
};

// One element of an entry's exceptional collection.
struct CollectionItem {
    std::string label;     // solution label, e.g. "E0" or "F1"
    std::string display;   // class name, e.g. "2H-E"
    ToricDivisor divisor;  // integer divisor representing the class
};

// How the solutions behave when the coefficients of selected rays are
// ramped toward zero. Limit recipes converge onto another entry's system
// except for a known escape set. Fiber recipes keep every solution finite
// while the collapse coordinates shrink; the surviving data is checked
// against a sign pattern, a base entry, or both, and designated phase
// loops must act on the labels as stated.
struct DegenerationRecipe {
    enum class Kind { Limit, Fiber };

    Kind kind = Kind::Limit;
    std::vector<int> scale;  // ray indices whose coefficients ramp down

    // Limit recipes only.
    std::string limit_id;                          // entry the family converges to
    std::vector<std::string> escape;               // labels that must escape
    std::map<std::string, std::string> label_map;  // surviving label -> limit label

    // Fiber recipes only.
    std::vector<int> collapse_coords;       // coordinates that must shrink
    std::vector<PermutationFixture> orbit;  // required phase-loop actions
    int fiber_coord = -1;                   // coordinate carrying a sign, or -1
    int fiber_sign_digit = -1;              // label position selecting the sign

    // Where the non-collapsing coordinates land, for entries fibered over
    // a smaller catalog entry. The base solution label is built by
    // prepending label_prefix to the label character at label_digit.
    struct BaseTarget {
        std::string id;
        std::vector<int> coords;
        int label_digit = 0;
        std::string label_prefix;
    };
    std::optional<BaseTarget> base_target;
};

// Everything known about one manifold: toric data, the exceptional
// collection with its quiver arrows, loop parameters, labeled reference
// solutions, expected monodromy, and degeneration behavior.
struct CatalogEntry {
    std::string id;
    FanoPolytope polytope;
    std::vector<std::string> ray_names;
    std::map<std::string, std::string> class_names;  // ray name -> class name
    std::vector<CollectionItem> collection;
    std::vector<std::pair<int, int>> arrow_pairs;  // index pairs into collection
    VertexPartition partition;
    double epsilon = 1.0;
    std::vector<SolutionFixture> fixtures;
    std::vector<PermutationFixture> monodromy_fixtures;
    std::vector<DegenerationRecipe> degeneration_recipes;

    // Alternative class names for the same entry read as a projective
    // bundle; only bl1_p2 carries these. alt_class_names is keyed by ray
    // name, alt_collection by solution label.
    std::map<std::string, std::string> alt_class_names;
    std::map<std::string, std::string> alt_collection;
};

// Validated, read-only entry list with lookup by id.
class Catalog {
  public:
    explicit Catalog(std::vector<CatalogEntry> entries);

    // Throws UnknownEntry when no entry has the given id.
    const CatalogEntry& get(const std::string& id) const;
    bool has(const std::string& id) const;
    std::vector<std::string> list() const;
    const std::vector<CatalogEntry>& entries() const { return entries_; }

  private:
    std::vector<CatalogEntry> entries_;
};

// The built-in entries, embedded in the binary.
const Catalog& builtin_catalog();

// Parses and validates a catalog document (schema "v1"). Degeneration
// recipes may reference entries of the same document or built-in ids.
// Throws ParseError on malformed JSON and CatalogInvalid when the
// document violates the schema or an entry invariant.
Catalog load_catalog(const std::string& json_text);

// Catalog with the overlay's entries added on top of the base; an overlay
// entry whose id matches a base entry replaces it in place, new ids are
// appended in overlay order.
Catalog merge_catalogs(const Catalog& base, const Catalog& overlay);

// Classes of the collection in order, display names attached.
std::vector<LineBundleClass> collection_classes(const PicardLattice& pic,
                                                const CatalogEntry& entry);

// Labels of the collection in order.
std::vector<std::string> collection_labels(const CatalogEntry& entry);

// The entry's quiver with collection labels as vertex names.
LabeledQuiver entry_quiver(const CatalogEntry& entry);

// The JSON document the built-in catalog is loaded from.
const char* builtin_catalog_json();

}  // namespace lgm
