#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgm/continuation.hpp"
#include "lgm/toric.hpp"

namespace lgm {

struct QuiverEdge {
    int source = 0;
    int target = 0;
    ToricDivisor label;
    std::string name;

    bool operator==(const QuiverEdge&) const = default;
};

// Directed multigraph on string vertices. Collection quivers carry one
// edge per effective divisor between two bundles; monodromy quivers carry
// one edge per critical point.
struct LabeledQuiver {
    std::vector<std::string> vertices;
    std::vector<QuiverEdge> edges;
};

// One edge per element of the effective basis of E[j] - E[i], for each
// requested ordered pair, in the pair order given. Edge names combine the
// endpoint names with the divisor, e.g. "E0->E1:n2+n3". Vertices are
// named by vertex_names, falling back to the display names of E.
// Throws EmptyHom when a requested pair has an empty basis.
LabeledQuiver build_quiver(const PicardLattice& pic,
                           const std::vector<LineBundleClass>& E,
                           const std::vector<std::pair<int, int>>& arrow_pairs,
                           const std::vector<std::string>& vertex_names = {});

// Same vertices, only the edges whose label equals D componentwise.
LabeledQuiver divisor_subquiver(const LabeledQuiver& Q, const ToricDivisor& D);

// Functional graph of the permutation: one edge from each point to its
// image, every edge labeled by the loop divisor.
LabeledQuiver monodromy_quiver(const MonodromyPermutation& perm,
                               const std::vector<std::string>& vertex_labels);

struct ContainmentReport {
    bool contained = true;
    std::vector<std::string> violations;
    explicit operator bool() const { return contained; }
};

// Checks that vertex_map sends every edge of sub onto some edge of sup
// with the mapped endpoints; edge labels are not compared. vertex_map
// must be an injection from sub's vertices into sup's.
ContainmentReport is_contained(const LabeledQuiver& sub,
                               const LabeledQuiver& sup,
                               const std::map<std::string, std::string>& vertex_map);

// Distinct edge labels in lexicographic order.
std::vector<ToricDivisor> edge_divisors(const LabeledQuiver& Q);

std::string to_dot(const LabeledQuiver& Q);

}  // namespace lgm
