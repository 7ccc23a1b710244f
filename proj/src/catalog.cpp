#include "lgm/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <set>

#include "json.hpp"

#include "lgm/continuation.hpp"

namespace lgm {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
    throw CatalogInvalid(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        invalid(where, std::string("missing key '") + key + "'");
    return *it;
}

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            invalid(where, "unknown key '" + it.key() + "'");
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) invalid(where, "expected a string");
    return v.get<std::string>();
}

long long as_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) invalid(where, "expected an integer");
    return v.get<long long>();
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) invalid(where, "expected a number");
    return v.get<double>();
}

std::vector<int> as_index_list(const json& v, const std::string& where) {
    if (!v.is_array()) invalid(where, "expected an array of indices");
    std::vector<int> out;
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back((int)as_integer(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

IntVec as_int_vec(const json& v, const std::string& where) {
    if (!v.is_array()) invalid(where, "expected an integer array");
    IntVec out;
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back(as_integer(v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::map<std::string, std::string> as_string_map(const json& v,
                                                 const std::string& where) {
    if (!v.is_object()) invalid(where, "expected an object of strings");
    std::map<std::string, std::string> out;
    for (auto it = v.begin(); it != v.end(); ++it)
        out[it.key()] = as_string(it.value(), where + "." + it.key());
    return out;
}

ToricDivisor parsed_divisor(const std::string& expr, const CatalogEntry& e,
                            const std::string& where) {
    try {
        return parse_divisor(expr, e.ray_names, (int)e.ray_names.size());
    } catch (const ParseError& ex) {
        invalid(where, std::string("bad divisor '") + expr + "': " + ex.what());
    }
}

PermutationFixture parse_perm_fixture(const json& v, const CatalogEntry& e,
                                      const std::string& where) {
    if (!v.is_object()) invalid(where, "expected an object");
    check_keys(v, {"divisor", "cycles"}, where);
    PermutationFixture out;
    std::string expr = as_string(field(v, "divisor", where), where + ".divisor");
    out.divisor = parsed_divisor(expr, e, where);
    out.cycles = as_string(field(v, "cycles", where), where + ".cycles");
    return out;
}

DegenerationRecipe parse_recipe(const json& v, const CatalogEntry& e,
                                const std::string& where) {
    if (!v.is_object()) invalid(where, "expected an object");
    DegenerationRecipe r;
    std::string kind = as_string(field(v, "kind", where), where + ".kind");
    if (kind == "limit") {
        r.kind = DegenerationRecipe::Kind::Limit;
        check_keys(v, {"kind", "scale", "limit_id", "escape", "label_map"},
                   where);
        r.limit_id =
            as_string(field(v, "limit_id", where), where + ".limit_id");
        const json& esc = field(v, "escape", where);
        if (!esc.is_array()) invalid(where + ".escape", "expected an array");
        for (size_t i = 0; i < esc.size(); ++i)
            r.escape.push_back(as_string(esc[i], where + ".escape"));
        r.label_map =
            as_string_map(field(v, "label_map", where), where + ".label_map");
    } else if (kind == "fiber") {
        r.kind = DegenerationRecipe::Kind::Fiber;
        check_keys(v,
                   {"kind", "scale", "collapse_coords", "orbit", "fiber_coord",
                    "fiber_sign_digit", "base_target"},
                   where);
        r.collapse_coords = as_index_list(field(v, "collapse_coords", where),
                                          where + ".collapse_coords");
        const json& orbit = field(v, "orbit", where);
        if (!orbit.is_array()) invalid(where + ".orbit", "expected an array");
        for (size_t i = 0; i < orbit.size(); ++i)
            r.orbit.push_back(parse_perm_fixture(
                orbit[i], e, where + ".orbit[" + std::to_string(i) + "]"));
        if (v.contains("fiber_coord"))
            r.fiber_coord = (int)as_integer(v["fiber_coord"],
                                            where + ".fiber_coord");
        if (v.contains("fiber_sign_digit"))
            r.fiber_sign_digit = (int)as_integer(v["fiber_sign_digit"],
                                                 where + ".fiber_sign_digit");
        if (v.contains("base_target")) {
            const json& bt = v["base_target"];
            std::string bw = where + ".base_target";
            if (!bt.is_object()) invalid(bw, "expected an object");
            check_keys(bt, {"id", "coords", "label_digit", "label_prefix"}, bw);
            DegenerationRecipe::BaseTarget target;
            target.id = as_string(field(bt, "id", bw), bw + ".id");
            target.coords = as_index_list(field(bt, "coords", bw), bw + ".coords");
            target.label_digit =
                (int)as_integer(field(bt, "label_digit", bw), bw + ".label_digit");
            target.label_prefix = as_string(field(bt, "label_prefix", bw),
                                            bw + ".label_prefix");
            r.base_target = target;
        }
    } else {
        invalid(where, "unknown recipe kind '" + kind + "'");
    }
    r.scale = as_index_list(field(v, "scale", where), where + ".scale");
    return r;
}

CatalogEntry parse_entry(const json& je, int index) {
    std::string where = "entry #" + std::to_string(index);
    if (!je.is_object()) invalid(where, "expected an object");
    CatalogEntry e;
    e.id = as_string(field(je, "id", where), where + ".id");
    if (e.id.empty()) invalid(where, "empty id");
    where = "entry '" + e.id + "'";
    check_keys(je,
               {"id", "dim", "vertices", "ray_names", "class_names",
                "collection", "arrow_pairs", "partition", "epsilon", "fixtures",
                "monodromy_fixtures", "degeneration_recipes", "alt_class_names",
                "alt_collection"},
               where);

    e.polytope.dim = (int)as_integer(field(je, "dim", where), where + ".dim");
    const json& verts = field(je, "vertices", where);
    if (!verts.is_array() || verts.empty())
        invalid(where + ".vertices", "expected a nonempty array");
    for (size_t i = 0; i < verts.size(); ++i)
        e.polytope.vertices.push_back(
            as_int_vec(verts[i], where + ".vertices[" + std::to_string(i) + "]"));

    const json& names = field(je, "ray_names", where);
    if (!names.is_array()) invalid(where + ".ray_names", "expected an array");
    for (size_t i = 0; i < names.size(); ++i)
        e.ray_names.push_back(as_string(names[i], where + ".ray_names"));

    e.class_names = as_string_map(field(je, "class_names", where),
                                  where + ".class_names");

    const json& coll = field(je, "collection", where);
    if (!coll.is_array()) invalid(where + ".collection", "expected an array");
    for (size_t i = 0; i < coll.size(); ++i) {
        std::string cw = where + ".collection[" + std::to_string(i) + "]";
        const json& item = coll[i];
        if (!item.is_object()) invalid(cw, "expected an object");
        check_keys(item, {"label", "display", "coeffs"}, cw);
        CollectionItem c;
        c.label = as_string(field(item, "label", cw), cw + ".label");
        c.display = as_string(field(item, "display", cw), cw + ".display");
        c.divisor.coeffs = as_int_vec(field(item, "coeffs", cw), cw + ".coeffs");
        e.collection.push_back(std::move(c));
    }

    std::map<std::string, int> label_index;
    for (size_t i = 0; i < e.collection.size(); ++i)
        label_index.emplace(e.collection[i].label, (int)i);

    const json& pairs = field(je, "arrow_pairs", where);
    if (!pairs.is_array()) invalid(where + ".arrow_pairs", "expected an array");
    for (size_t i = 0; i < pairs.size(); ++i) {
        std::string pw = where + ".arrow_pairs[" + std::to_string(i) + "]";
        const json& p = pairs[i];
        if (!p.is_array() || p.size() != 2)
            invalid(pw, "expected a pair of labels");
        int idx[2];
        for (int k = 0; k < 2; ++k) {
            std::string label = as_string(p[k], pw);
            auto it = label_index.find(label);
            if (it == label_index.end())
                invalid(pw, "unknown label '" + label + "'");
            idx[k] = it->second;
        }
        e.arrow_pairs.emplace_back(idx[0], idx[1]);
    }

    const json& part = field(je, "partition", where);
    if (!part.is_object()) invalid(where + ".partition", "expected an object");
    check_keys(part, {"base", "fiber"}, where + ".partition");
    e.partition.base = as_index_list(field(part, "base", where),
                                     where + ".partition.base");
    e.partition.fiber = as_index_list(field(part, "fiber", where),
                                      where + ".partition.fiber");

    e.epsilon = as_number(field(je, "epsilon", where), where + ".epsilon");

    const json& fixtures = field(je, "fixtures", where);
    if (!fixtures.is_array()) invalid(where + ".fixtures", "expected an array");
    for (size_t i = 0; i < fixtures.size(); ++i) {
        std::string fw = where + ".fixtures[" + std::to_string(i) + "]";
        const json& jf = fixtures[i];
        if (!jf.is_object()) invalid(fw, "expected an object");
        check_keys(jf, {"label", "point"}, fw);
        SolutionFixture f;
        f.label = as_string(field(jf, "label", fw), fw + ".label");
        const json& point = field(jf, "point", fw);
        if (!point.is_array()) invalid(fw + ".point", "expected an array");
        for (size_t k = 0; k < point.size(); ++k) {
            const json& c = point[k];
            if (!c.is_array() || c.size() != 2)
                invalid(fw + ".point", "expected [re, im] pairs");
            f.point.emplace_back(as_number(c[0], fw + ".point"),
                                 as_number(c[1], fw + ".point"));
        }
        e.fixtures.push_back(std::move(f));
    }

    if (je.contains("monodromy_fixtures")) {
        const json& mf = je["monodromy_fixtures"];
        if (!mf.is_array())
            invalid(where + ".monodromy_fixtures", "expected an array");
        for (size_t i = 0; i < mf.size(); ++i)
            e.monodromy_fixtures.push_back(parse_perm_fixture(
                mf[i], e,
                where + ".monodromy_fixtures[" + std::to_string(i) + "]"));
    }

    if (je.contains("degeneration_recipes")) {
        const json& recipes = je["degeneration_recipes"];
        if (!recipes.is_array())
            invalid(where + ".degeneration_recipes", "expected an array");
        for (size_t i = 0; i < recipes.size(); ++i)
            e.degeneration_recipes.push_back(parse_recipe(
                recipes[i], e,
                where + ".degeneration_recipes[" + std::to_string(i) + "]"));
    }

    if (je.contains("alt_class_names"))
        e.alt_class_names = as_string_map(je["alt_class_names"],
                                          where + ".alt_class_names");
    if (je.contains("alt_collection"))
        e.alt_collection = as_string_map(je["alt_collection"],
                                         where + ".alt_collection");
    return e;
}

void check_index_set(const std::vector<int>& indices, int bound, bool nonempty,
                     const std::string& where) {
    if (nonempty && indices.empty()) invalid(where, "must not be empty");
    std::set<int> seen;
    for (int i : indices) {
        if (i < 0 || i >= bound)
            invalid(where, "index " + std::to_string(i) + " out of range");
        if (!seen.insert(i).second)
            invalid(where, "index " + std::to_string(i) + " repeated");
    }
}

// The display names must name classes: two entries get equal names exactly
// when their divisors have the same class.
void check_name_class_consistency(const PicardLattice& pic,
                                  const std::vector<std::string>& names,
                                  const std::vector<ToricDivisor>& divisors,
                                  const std::string& where) {
    std::vector<LineBundleClass> classes;
    for (const auto& d : divisors) classes.push_back(divisor_class(pic, d));
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j) {
            bool same_name = names[i] == names[j];
            bool same_class = classes[i] == classes[j];
            if (same_name != same_class)
                invalid(where, "'" + names[i] + "' and '" + names[j] +
                                   (same_name ? "' share a name but not a class"
                                              : "' share a class but not a name"));
        }
}

void check_cycles(const std::string& cycles,
                  const std::vector<std::string>& labels,
                  const std::string& where) {
    std::vector<int> mapping;
    try {
        mapping = parse_cycle_string(cycles, labels);
    } catch (const ParseError& ex) {
        invalid(where, ex.what());
    }
    if (cycle_string(mapping, labels) != cycles)
        invalid(where, "cycles '" + cycles + "' not in canonical form");
}

void validate_entry(const CatalogEntry& e) {
    std::string where = "entry '" + e.id + "'";
    int num_rays = (int)e.polytope.vertices.size();

    for (const auto& v : e.polytope.vertices)
        if ((int)v.size() != e.polytope.dim)
            invalid(where, "vertex length does not match dim");
    ReasonCheck fano = is_reflexive_fano(e.polytope);
    if (!fano) invalid(where, "polytope: " + fano.reason);
    int chi = euler_characteristic(e.polytope);
    PicardLattice pic = picard(e.polytope);
    if (pic.rank != num_rays - e.polytope.dim)
        invalid(where, "class group rank " + std::to_string(pic.rank) +
                           " does not match ray count minus dim");

    if ((int)e.ray_names.size() != num_rays)
        invalid(where, "ray_names length does not match vertex count");
    std::set<std::string> ray_set;
    for (const auto& n : e.ray_names) {
        if (n.empty()) invalid(where, "empty ray name");
        if (!ray_set.insert(n).second)
            invalid(where, "duplicate ray name '" + n + "'");
    }

    std::vector<ToricDivisor> ray_divisors(num_rays);
    for (int i = 0; i < num_rays; ++i) {
        ray_divisors[i].coeffs.assign(num_rays, 0);
        ray_divisors[i].coeffs[i] = 1;
    }
    auto check_ray_names = [&](const std::map<std::string, std::string>& table,
                               const std::string& tw) {
        std::vector<std::string> displays;
        for (const auto& n : e.ray_names) {
            auto it = table.find(n);
            if (it == table.end()) invalid(tw, "missing ray '" + n + "'");
            if (it->second.empty()) invalid(tw, "empty name for ray '" + n + "'");
            displays.push_back(it->second);
        }
        if (table.size() != (size_t)num_rays)
            invalid(tw, "key that is not a ray name");
        check_name_class_consistency(pic, displays, ray_divisors, tw);
    };
    check_ray_names(e.class_names, where + ".class_names");
    if (!e.alt_class_names.empty())
        check_ray_names(e.alt_class_names, where + ".alt_class_names");

    if ((int)e.collection.size() != chi)
        invalid(where, "collection size " + std::to_string(e.collection.size()) +
                           " does not match the facet count " +
                           std::to_string(chi));
    std::set<std::string> labels_seen;
    std::vector<std::string> displays;
    std::vector<ToricDivisor> divisors;
    for (const auto& c : e.collection) {
        if (c.label.empty()) invalid(where, "empty collection label");
        if (!labels_seen.insert(c.label).second)
            invalid(where, "duplicate collection label '" + c.label + "'");
        if (c.display.empty()) invalid(where, "empty collection display name");
        if ((int)c.divisor.coeffs.size() != num_rays)
            invalid(where, "collection coeffs length does not match ray count");
        displays.push_back(c.display);
        divisors.push_back(c.divisor);
    }
    check_name_class_consistency(pic, displays, divisors, where + ".collection");

    std::vector<LineBundleClass> classes = collection_classes(pic, e);
    CollectionReport special = is_special_collection(pic, classes);
    if (!special.ok) {
        std::string msg = "collection is not special:";
        for (const auto& f : special.failures) msg += " " + f + ";";
        invalid(where, msg);
    }

    std::set<std::pair<int, int>> pair_set;
    for (const auto& [i, j] : e.arrow_pairs) {
        if (i == j) invalid(where, "arrow pair with equal endpoints");
        if (!pair_set.insert({i, j}).second)
            invalid(where, "duplicate arrow pair");
    }
    try {
        build_quiver(pic, classes, e.arrow_pairs, collection_labels(e));
    } catch (const EmptyHom& ex) {
        invalid(where, std::string("arrow pair without effective divisors: ") +
                           ex.what());
    }

    check_index_set(e.partition.base, num_rays, false, where + ".partition.base");
    check_index_set(e.partition.fiber, num_rays, false,
                    where + ".partition.fiber");
    if (e.partition.base.empty() != e.partition.fiber.empty())
        invalid(where, "partition must fill both parts or neither");
    if (!e.partition.base.empty()) {
        std::set<int> all(e.partition.base.begin(), e.partition.base.end());
        for (int i : e.partition.fiber)
            if (!all.insert(i).second)
                invalid(where, "partition parts overlap at index " +
                                   std::to_string(i));
        if ((int)all.size() != num_rays)
            invalid(where, "partition does not cover every ray");
    }

    if (!(e.epsilon > 0.0 && e.epsilon <= 1.0))
        invalid(where, "epsilon must lie in (0, 1]");

    if (e.fixtures.size() != e.collection.size())
        invalid(where, "fixture count does not match collection size");
    std::set<std::string> fixture_labels;
    for (const auto& f : e.fixtures) {
        if (!labels_seen.count(f.label))
            invalid(where, "fixture label '" + f.label +
                               "' is not a collection label");
        if (!fixture_labels.insert(f.label).second)
            invalid(where, "duplicate fixture label '" + f.label + "'");
        if ((int)f.point.size() != e.polytope.dim)
            invalid(where, "fixture '" + f.label +
                               "' point length does not match dim");
        for (const Cx& z : f.point) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                invalid(where, "fixture '" + f.label + "' has a nonfinite coordinate");
            if (z == Cx(0.0, 0.0))
                invalid(where, "fixture '" + f.label + "' has a zero coordinate");
        }
    }

    std::vector<std::string> labels = collection_labels(e);
    for (const auto& mf : e.monodromy_fixtures) {
        if ((int)mf.divisor.coeffs.size() != num_rays)
            invalid(where, "monodromy fixture divisor length mismatch");
        check_cycles(mf.cycles, labels, where + ".monodromy_fixtures");
    }

    for (size_t ri = 0; ri < e.degeneration_recipes.size(); ++ri) {
        const DegenerationRecipe& r = e.degeneration_recipes[ri];
        std::string rw =
            where + ".degeneration_recipes[" + std::to_string(ri) + "]";
        check_index_set(r.scale, num_rays, true, rw + ".scale");
        if (r.kind == DegenerationRecipe::Kind::Limit) {
            std::set<std::string> escape_set;
            for (const auto& l : r.escape) {
                if (!labels_seen.count(l))
                    invalid(rw, "escape label '" + l + "' is not a collection label");
                if (!escape_set.insert(l).second)
                    invalid(rw, "duplicate escape label '" + l + "'");
            }
            for (const auto& c : e.collection) {
                bool escapes = escape_set.count(c.label) > 0;
                bool mapped = r.label_map.count(c.label) > 0;
                if (escapes && mapped)
                    invalid(rw, "label '" + c.label +
                                    "' both escapes and has a limit label");
                if (!escapes && !mapped)
                    invalid(rw, "label '" + c.label + "' has no limit label");
            }
            if (r.label_map.size() + escape_set.size() != e.collection.size())
                invalid(rw, "label_map key that is not a collection label");
        } else {
            check_index_set(r.collapse_coords, e.polytope.dim, true,
                            rw + ".collapse_coords");
            for (const auto& of : r.orbit) {
                if ((int)of.divisor.coeffs.size() != num_rays)
                    invalid(rw, "orbit divisor length mismatch");
                check_cycles(of.cycles, labels, rw + ".orbit");
            }
            if ((r.fiber_coord >= 0) != (r.fiber_sign_digit >= 0))
                invalid(rw, "fiber_coord and fiber_sign_digit go together");
            if (r.fiber_coord >= 0) {
                if (r.fiber_coord >= e.polytope.dim)
                    invalid(rw, "fiber_coord out of range");
                for (const auto& l : labels)
                    if (r.fiber_sign_digit >= (int)l.size() ||
                        !std::isdigit((unsigned char)l[r.fiber_sign_digit]))
                        invalid(rw, "label '" + l +
                                        "' has no digit at fiber_sign_digit");
            }
            if (r.fiber_coord < 0 && !r.base_target)
                invalid(rw, "fiber recipe checks nothing: needs fiber_coord "
                            "or base_target");
            if (r.base_target) {
                const auto& bt = *r.base_target;
                check_index_set(bt.coords, e.polytope.dim, true,
                                rw + ".base_target.coords");
                for (const auto& l : labels)
                    if (bt.label_digit < 0 || bt.label_digit >= (int)l.size() ||
                        !std::isdigit((unsigned char)l[bt.label_digit]))
                        invalid(rw, "label '" + l +
                                        "' has no digit at base_target.label_digit");
            }
        }
    }

    if (!e.alt_collection.empty()) {
        if (e.alt_collection.size() != e.collection.size())
            invalid(where, "alt_collection size does not match collection");
        for (const auto& [label, display] : e.alt_collection) {
            if (!labels_seen.count(label))
                invalid(where, "alt_collection label '" + label +
                                   "' is not a collection label");
            if (display.empty())
                invalid(where, "empty alt_collection name for '" + label + "'");
        }
    }
}

// Recipe targets may live later in the same document or among the
// built-ins, so they are resolved after every entry has been validated.
void validate_references(
    const std::vector<CatalogEntry>& entries,
    const std::function<const CatalogEntry*(const std::string&)>& find) {
    for (const auto& e : entries) {
        std::string where = "entry '" + e.id + "'";
        for (size_t ri = 0; ri < e.degeneration_recipes.size(); ++ri) {
            const DegenerationRecipe& r = e.degeneration_recipes[ri];
            std::string rw =
                where + ".degeneration_recipes[" + std::to_string(ri) + "]";
            if (r.kind == DegenerationRecipe::Kind::Limit) {
                const CatalogEntry* target = find(r.limit_id);
                if (!target)
                    invalid(rw, "unknown limit entry '" + r.limit_id + "'");
                std::set<std::string> target_labels;
                for (const auto& c : target->collection)
                    target_labels.insert(c.label);
                std::set<std::string> used;
                for (const auto& [from, to] : r.label_map) {
                    if (!target_labels.count(to))
                        invalid(rw, "limit label '" + to + "' is not a label of '" +
                                        r.limit_id + "'");
                    if (!used.insert(to).second)
                        invalid(rw, "limit label '" + to + "' used twice");
                }
                if (used.size() != target_labels.size())
                    invalid(rw, "surviving labels do not cover '" + r.limit_id +
                                    "' (" + std::to_string(used.size()) + " of " +
                                    std::to_string(target_labels.size()) + ")");
            } else if (r.base_target) {
                const auto& bt = *r.base_target;
                std::string bw = rw + ".base_target";
                const CatalogEntry* target = find(bt.id);
                if (!target) invalid(bw, "unknown entry '" + bt.id + "'");
                if ((int)bt.coords.size() != target->polytope.dim)
                    invalid(bw, "coords count does not match the dim of '" +
                                    bt.id + "'");
                std::set<std::string> target_labels;
                for (const auto& c : target->collection)
                    target_labels.insert(c.label);
                for (const auto& c : e.collection) {
                    std::string want =
                        bt.label_prefix + c.label[bt.label_digit];
                    if (!target_labels.count(want))
                        invalid(bw, "label '" + c.label + "' maps to '" + want +
                                        "', not a label of '" + bt.id + "'");
                }
            }
        }
    }
}

std::vector<CatalogEntry> parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ParseError(std::string("catalog is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) invalid("catalog", "expected a JSON object");
    check_keys(doc, {"schema", "entries"}, "catalog");
    std::string schema =
        as_string(field(doc, "schema", "catalog"), "catalog.schema");
    if (schema != "v1")
        invalid("catalog", "unsupported schema '" + schema + "' (expected 'v1')");
    const json& entries = field(doc, "entries", "catalog");
    if (!entries.is_array()) invalid("catalog.entries", "expected an array");
    std::vector<CatalogEntry> out;
    for (size_t i = 0; i < entries.size(); ++i) {
        CatalogEntry e = parse_entry(entries[i], (int)i);
        validate_entry(e);
        out.push_back(std::move(e));
    }
    return out;
}

Catalog load_impl(const std::string& text, bool builtin_fallback) {
    std::vector<CatalogEntry> entries = parse_document(text);
    auto find = [&](const std::string& id) -> const CatalogEntry* {
        for (const auto& e : entries)
            if (e.id == id) return &e;
        if (builtin_fallback && builtin_catalog().has(id))
            return &builtin_catalog().get(id);
        return nullptr;
    };
    validate_references(entries, find);
    return Catalog(std::move(entries));
}

}  // namespace

Catalog::Catalog(std::vector<CatalogEntry> entries)
    : entries_(std::move(entries)) {
    std::set<std::string> ids;
    for (const auto& e : entries_)
        if (!ids.insert(e.id).second)
            invalid("catalog", "duplicate entry id '" + e.id + "'");
}

const CatalogEntry& Catalog::get(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return e;
    throw UnknownEntry("no catalog entry with id '" + id + "'");
}

bool Catalog::has(const std::string& id) const {
    for (const auto& e : entries_)
        if (e.id == id) return true;
    return false;
}

std::vector<std::string> Catalog::list() const {
    std::vector<std::string> ids;
    for (const auto& e : entries_) ids.push_back(e.id);
    return ids;
}

const Catalog& builtin_catalog() {
    static const Catalog catalog = load_impl(builtin_catalog_json(), false);
    return catalog;
}

Catalog load_catalog(const std::string& json_text) {
    return load_impl(json_text, true);
}

Catalog merge_catalogs(const Catalog& base, const Catalog& overlay) {
    std::vector<CatalogEntry> entries = base.entries();
    for (const auto& e : overlay.entries()) {
        bool replaced = false;
        for (auto& existing : entries)
            if (existing.id == e.id) {
                existing = e;
                replaced = true;
                break;
            }
        if (!replaced) entries.push_back(e);
    }
    return Catalog(std::move(entries));
}

std::vector<LineBundleClass> collection_classes(const PicardLattice& pic,
                                                const CatalogEntry& entry) {
    std::vector<LineBundleClass> classes;
    for (const auto& c : entry.collection) {
        LineBundleClass L = divisor_class(pic, c.divisor);
        L.display_name = c.display;
        classes.push_back(std::move(L));
    }
    return classes;
}

std::vector<std::string> collection_labels(const CatalogEntry& entry) {
    std::vector<std::string> labels;
    for (const auto& c : entry.collection) labels.push_back(c.label);
    return labels;
}

LabeledQuiver entry_quiver(const CatalogEntry& entry) {
    PicardLattice pic = picard(entry.polytope);
    return build_quiver(pic, collection_classes(pic, entry), entry.arrow_pairs,
                        collection_labels(entry));
}

}  // namespace lgm
