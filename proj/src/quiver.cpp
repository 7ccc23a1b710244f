#include "lgm/quiver.hpp"

#include <algorithm>
#include <set>

#include "lgm/errors.hpp"

namespace lgm {

LabeledQuiver build_quiver(const PicardLattice& pic,
                           const std::vector<LineBundleClass>& E,
                           const std::vector<std::pair<int, int>>& arrow_pairs,
                           const std::vector<std::string >& vertex_names) {
    LabeledQuiver Q;
    if (vertex_names.empty()) {
        for (const auto& L : E) Q.vertices.push_back(L.display_name);
    } else {
        if (vertex_names.size() != E.size())
            throw Error("vertex name count does not match the collection");
        Q.vertices = vertex_names;
    }

    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : arrow_pairs) {
        if (i < 0 || j < 0 || i >= (int)E.size() || j >= (int)E.size())
            throw Error("arrow pair is out of range");
        if (!seen.insert({i, j}).second)
            throw Error("duplicate arrow pair");

        ToricDivisor diff{IntVec(E[i].rep.coeffs.size(), 0)};
        for (size_t r = 0; r < diff.coeffs.size(); ++r)
            diff.coeffs[r] = E[j].rep.coeffs[r] - E[i].rep.coeffs[r];
        std::vector<ToricDivisor> basis =
            effective_basis(pic, divisor_class(pic, diff));
        if (basis.empty())
            throw EmptyHom("no effective divisors from " + Q.vertices[i] +
                           " to " + Q.vertices[j]);
        for (const ToricDivisor& D : basis) {
            QuiverEdge e;
            e.source = i;
            e.target = j;
            e.label = D;
            e.name = Q.vertices[i] + "->" + Q.vertices[j] + ":" +
                     divisor_string(D);
            Q.edges.push_back(std::move(e));
        }
    }
    return Q;
}

LabeledQuiver divisor_subquiver(const LabeledQuiver& Q, const ToricDivisor& D) {
    LabeledQuiver sub;
    sub.vertices = Q.vertices;
    for (const QuiverEdge& e : Q.edges)
        if (e.label == D) sub.edges.push_back(e);
    return sub;
}

LabeledQuiver monodromy_quiver(const MonodromyPermutation& perm,
                               const std::vector<std::string>& vertex_labels) {
    if (vertex_labels.size() != perm.mapping.size())
        throw Error("label count does not match the permutation");
    LabeledQuiver Q;
    Q.vertices = vertex_labels;
    for (size_t i = 0; i < perm.mapping.size(); ++i) {
        int t = perm.mapping[i];
        if (t < 0 || t >= (int)perm.mapping.size())
            throw Error("permutation image is out of range");
        QuiverEdge e;
        e.source = (int)i;
        e.target = t;
        e.label = perm.divisor;
        e.name = Q.vertices[i] + "->" + Q.vertices[t] + ":" +
                 divisor_string(perm.divisor);
        Q.edges.push_back(std::move(e));
    }
    return Q;
}

ContainmentReport is_contained(const LabeledQuiver& sub,
                               const LabeledQuiver& sup,
                               const std::map<std::string, std::string>& vertex_map) {
    std::vector<int> image(sub.vertices.size(), -1);
    std::set<int> hit;
    for (size_t u = 0; u < sub.vertices.size(); ++u) {
        auto it = vertex_map.find(sub.vertices[u]);
        if (it == vertex_map.end())
            throw Error("vertex " + sub.vertices[u] + " has no image");
        auto at = std::find(sup.vertices.begin(), sup.vertices.end(),
                            it->second);
        if (at == sup.vertices.end())
            throw Error("image " + it->second + " is not a vertex above");
        image[u] = (int)(at - sup.vertices.begin());
        if (!hit.insert(image[u]).second)
            throw Error("vertex map is not injective");
    }

    ContainmentReport report;
    for (const QuiverEdge& e : sub.edges) {
        int u = image[e.source], v = image[e.target];
        bool found = false;
        for (const QuiverEdge& f : sup.edges) {
            if (f.source == u && f.target == v) {
                found = true;
                break;
            }
        }
        if (!found) {
            report.contained = false;
            report.violations.push_back(e.name + " has no image edge " +
                                        sup.vertices[u] + "->" +
                                        sup.vertices[v]);
        }
    }
    return report;
}

std::vector<ToricDivisor> edge_divisors(const LabeledQuiver& Q) {
    std::vector<ToricDivisor> out;
    for (const QuiverEdge& e : Q.edges) out.push_back(e.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_dot(const LabeledQuiver& Q) {
    std::string out = "digraph quiver {\n";
    for (const std::string& v : Q.vertices) out += "  \"" + v + "\";\n";
    for (const QuiverEdge& e : Q.edges) {
        out += "  \"" + Q.vertices[e.source] + "\" -> \"" +
               Q.vertices[e.target] + "\" [label=\"" +
               divisor_string(e.label) + "\"];\n";
    }
    out += "}\n";
    return out;
}

}  // namespace lgm
