#include "lgm/toric.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

namespace lgm {

namespace {

using Matrix = std::vector<IntVec>;

long long det(const Matrix& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    long long d = 0, sign = 1;
    for (size_t c = 0; c < n; ++c) {
        Matrix minor;
        for (size_t r = 1; r < n; ++r) {
            IntVec row;
            for (size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        d += sign * m[0][c] * det(minor);
        sign = -sign;
    }
    return d;
}

long long dot(const IntVec& a, const IntVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Affine rank of the vertex set (dimension of the hull).
int affine_rank(const std::vector<IntVec>& pts, int dim) {
    if (pts.size() < 2) return 0;
    // Differences against the first point, then fraction-free elimination.
    Matrix rows;
    for (size_t i = 1; i < pts.size(); ++i) {
        IntVec r(dim);
        for (int k = 0; k < dim; ++k) r[k] = pts[i][k] - pts[0][k];
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < dim && rank < (int)rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            while (rows[r][col] != 0) {
                long long q = rows[r][col] / rows[rank][col];
                if (q == 0) {
                    std::swap(rows[r], rows[rank]);
                    continue;
                }
                for (int k = 0; k < dim; ++k) rows[r][k] -= q * rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

struct RawFacet {
    IntVec a;                 // outward normal, <a, v> <= b on the hull
    long long b = 0;
    std::vector<int> on;      // vertices with <a, v> = b
};

// All facet hyperplanes of the hull, by brute force over dim-subsets.
std::vector<RawFacet> raw_facets(const FanoPolytope& P) {
    int n = P.dim;
    int r = (int)P.vertices.size();
    if (r < n + 1 || affine_rank(P.vertices, n) < n)
        throw NotFullDimensional("vertex set does not span a full-dimensional hull");

    std::set<std::pair<IntVec, long long>> seen;
    std::vector<RawFacet> out;
    std::vector<int> idx(n);
    // Iterate over all n-subsets of vertex indices.
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    while (true) {
        // Null vector of the n x (n+1) system <a, v_i> - b = 0 via cofactors.
        Matrix rows;
        for (int i = 0; i < n; ++i) {
            IntVec row = P.vertices[c[i]];
            row.push_back(-1);
            rows.push_back(std::move(row));
        }
        IntVec x(n + 1);
        bool nonzero = false;
        long long sign = 1;
        for (int j = 0; j <= n; ++j) {
            Matrix minor;
            for (int i = 0; i < n; ++i) {
                IntVec row;
                for (int k = 0; k <= n; ++k)
                    if (k != j) row.push_back(rows[i][k]);
                minor.push_back(std::move(row));
            }
            x[j] = sign * det(minor);
            sign = -sign;
            if (x[j] != 0) nonzero = true;
        }
        if (nonzero) {
            IntVec a(x.begin(), x.begin() + n);
            long long b = x[n];
            bool pos = false, neg = false;
            for (const auto& v : P.vertices) {
                long long s = dot(a, v) - b;
                if (s > 0) pos = true;
                if (s < 0) neg = true;
            }
            if (!(pos && neg)) {
                if (pos) {  // flip so the hull satisfies <a, v> <= b
                    for (auto& t : a) t = -t;
                    b = -b;
                }
                long long g = std::abs(b);
                for (long long t : a) g = std::gcd(g, std::abs(t));
                if (g > 1) {
                    for (auto& t : a) t /= g;
                    b /= g;
                }
                if (seen.insert({a, b}).second) {
                    RawFacet f;
                    f.a = a;
                    f.b = b;
                    for (int i = 0; i < r; ++i)
                        if (dot(a, P.vertices[i]) == b) f.on.push_back(i);
                    out.push_back(std::move(f));
                }
            }
        }
        // next subset
        int i = n - 1;
        while (i >= 0 && c[i] == r - n + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int k = i + 1; k < n; ++k) c[k] = c[k - 1] + 1;
    }
    return out;
}

long long floor_div(long long a, long long p) {
    long long m = ((a % p) + p) % p;
    return (a - m) / p;
}

std::string vec_string(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::vector<std::string> default_ray_names(int num_rays) {
    std::vector<std::string> names(num_rays);
    for (int i = 0; i < num_rays; ++i) names[i] = "n" + std::to_string(i + 1);
    return names;
}

}  // namespace

std::vector<Facet> facets(const FanoPolytope& P) {
    auto raw = raw_facets(P);
    std::vector<Facet> out;
    for (const auto& f : raw) {
        if (f.b <= 0)
            throw NotReflexive("origin is not interior to the hull");
        if (f.b != 1)
            throw NotReflexive("facet <" + vec_string(f.a) + ", x> = " +
                               std::to_string(f.b) +
                               " has no integral normal at level -1");
        Facet fac;
        fac.vertex_indices = f.on;
        fac.inner_normal.resize(P.dim);
        for (int k = 0; k < P.dim; ++k) fac.inner_normal[k] = -f.a[k];
        out.push_back(std::move(fac));
    }
    std::sort(out.begin(), out.end(), [](const Facet& x, const Facet& y) {
        return x.inner_normal < y.inner_normal;
    });
    return out;
}

ReasonCheck is_reflexive_fano(const FanoPolytope& P) {
    std::set<IntVec> distinct(P.vertices.begin(), P.vertices.end());
    if (distinct.size() != P.vertices.size())
        return {false, "vertices are not distinct"};
    for (const auto& v : P.vertices) {
        long long g = 0;
        for (long long t : v) g = std::gcd(g, std::abs(t));
        if (g != 1)
            return {false, "vertex " + vec_string(v) + " is not primitive"};
    }
    std::vector<Facet> fs;
    try {
        fs = facets(P);
    } catch (const Error& e) {
        return {false, e.what()};
    }
    for (const auto& f : fs) {
        if ((int)f.vertex_indices.size() != P.dim)
            return {false, "a facet has " + std::to_string(f.vertex_indices.size()) +
                               " vertices, expected " + std::to_string(P.dim)};
        Matrix m;
        for (int i : f.vertex_indices) m.push_back(P.vertices[i]);
        if (std::abs(det(m)) != 1)
            return {false, "a facet vertex matrix has determinant " +
                               std::to_string(det(m))};
    }
    return {true, ""};
}

int euler_characteristic(const FanoPolytope& P) {
    return (int)facets(P).size();
}

PicardLattice picard(const FanoPolytope& P) {
    facets(P);  // validates the hull
    int n = P.dim;
    int r = (int)P.vertices.size();

    PicardLattice pic;
    pic.num_rays = r;
    pic.dim = n;
    pic.rank = r - n;
    pic.relation_matrix = P.vertices;
    pic.polytope = P;

    // Columns of the relation matrix generate the monomial-divisor
    // sublattice; echelonize them by integer column operations with a
    // leftmost-lowest pivot rule.
    std::vector<IntVec> cols(n, IntVec(r));
    for (int k = 0; k < n; ++k)
        for (int F = 0; F < r; ++F) cols[k][F] = P.vertices[F][k];

    std::vector<int> active(n);
    for (int k = 0; k < n; ++k) active[k] = k;

    for (int row = 0; row < r && !active.empty(); ++row) {
        // Reduce until at most one active column is nonzero in this row.
        while (true) {
            int piv = -1;
            for (int k : active) {
                if (cols[k][row] == 0) continue;
                if (piv < 0 || std::abs(cols[k][row]) < std::abs(cols[piv][row]))
                    piv = k;
            }
            if (piv < 0) break;
            bool others = false;
            for (int k : active) {
                if (k == piv || cols[k][row] == 0) continue;
                others = true;
                long long q = cols[k][row] / cols[piv][row];
                if (q != 0)
                    for (int F = 0; F < r; ++F) cols[k][F] -= q * cols[piv][F];
            }
            if (!others) {
                if (cols[piv][row] < 0)
                    for (auto& t : cols[piv]) t = -t;
                pic.reduce_basis.push_back(cols[piv]);
                pic.pivot_rows.push_back(row);
                active.erase(std::find(active.begin(), active.end(), piv));
                break;
            }
        }
    }
    if ((int)pic.reduce_basis.size() != n)
        throw NotFullDimensional("rays do not span the lattice");

    // The class group is torsion free exactly when the gcd of the n x n
    // minors of the sublattice basis is 1.
    long long g = 0;
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i;
    while (true) {
        Matrix m;
        for (int i = 0; i < n; ++i) {
            IntVec row(n);
            for (int k = 0; k < n; ++k) row[k] = pic.reduce_basis[k][c[i]];
            m.push_back(std::move(row));
        }
        g = std::gcd(g, std::abs(det(m)));
        int i = n - 1;
        while (i >= 0 && c[i] == r - n + i) --i;
        if (i < 0 || g == 1) break;
        ++c[i];
        for (int k = i + 1; k < n; ++k) c[k] = c[k - 1] + 1;
    }
    if (g != 1)
        throw TorsionInPicard("class group has torsion (minor gcd " +
                              std::to_string(g) + ")");
    return pic;
}

LineBundleClass divisor_class(const PicardLattice& pic, const ToricDivisor& D) {
    if ((int)D.coeffs.size() != pic.num_rays)
        throw Error("divisor has " + std::to_string(D.coeffs.size()) +
                    " coefficients, expected " + std::to_string(pic.num_rays));
    IntVec d = D.coeffs;
    for (size_t k = 0; k < pic.reduce_basis.size(); ++k) {
        const IntVec& b = pic.reduce_basis[k];
        int row = pic.pivot_rows[k];
        long long q = floor_div(d[row], b[row]);
        if (q != 0)
            for (int F = 0; F < pic.num_rays; ++F) d[F] -= q * b[F];
    }
    return {ToricDivisor{std::move(d)}, ""};
}

std::vector<IntVec> divisor_polytope_points(const FanoPolytope& P,
                                            const ToricDivisor& D) {
    if (D.coeffs.size() != P.vertices.size())
        throw Error("divisor length does not match the number of rays");
    std::vector<RawFacet> raw;
    try {
        raw = raw_facets(P);
    } catch (const NotFullDimensional& e) {
        throw UnboundedPolytope(std::string("inequality system is unbounded: ") +
                                e.what());
    }
    for (const auto& f : raw)
        if (f.b <= 0)
            throw UnboundedPolytope(
                "inequality system is unbounded: origin is not interior");

    // The divisor polytope sits inside A' times the polar polytope, where
    // A' bounds the coefficients from above; that gives a coordinate box.
    long long amax = 0;
    for (long long a : D.coeffs) amax = std::max(amax, a);
    IntVec bound(P.dim, 0);
    for (const auto& f : raw)
        for (int k = 0; k < P.dim; ++k)
            bound[k] = std::max(bound[k], amax * std::abs(f.a[k]));

    std::vector<IntVec> points;
    IntVec m(P.dim);
    auto feasible = [&](const IntVec& u) {
        for (size_t F = 0; F < P.vertices.size(); ++F)
            if (dot(u, P.vertices[F]) < -D.coeffs[F]) return false;
        return true;
    };
    // Odometer over the box.
    for (int k = 0; k < P.dim; ++k) m[k] = -bound[k];
    while (true) {
        if (feasible(m)) points.push_back(m);
        int k = P.dim - 1;
        while (k >= 0 && m[k] == bound[k]) --k;
        if (k < 0) break;
        ++m[k];
        for (int j = k + 1; j < P.dim; ++j) m[j] = -bound[j];
    }
    std::sort(points.begin(), points.end());
    return points;
}

std::vector<ToricDivisor> effective_basis(const PicardLattice& pic,
                                          const LineBundleClass& L) {
    ToricDivisor rep = divisor_class(pic, L.rep).rep;
    auto pts = divisor_polytope_points(pic.polytope, rep);
    std::vector<ToricDivisor> out;
    for (const auto& m : pts) {
        ToricDivisor d = rep;
        for (int F = 0; F < pic.num_rays; ++F)
            d.coeffs[F] += dot(m, pic.relation_matrix[F]);
        out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
}

CollectionReport is_special_collection(const PicardLattice& pic,
                                       const std::vector<LineBundleClass>& E) {
    CollectionReport rep;
    for (size_t i = 0; i < E.size(); ++i) {
        for (size_t j = 0; j < E.size(); ++j) {
            if (i == j) continue;
            IntVec diff(pic.num_rays);
            for (int F = 0; F < pic.num_rays; ++F)
                diff[F] = E[j].rep.coeffs[F] - E[i].rep.coeffs[F];
            LineBundleClass L = divisor_class(pic, ToricDivisor{diff});
            auto pts = divisor_polytope_points(pic.polytope, L.rep);
            auto B = effective_basis(pic, L);
            std::string where =
                "pair (" + std::to_string(i) + "," + std::to_string(j) + "): ";
            if (B.size() != pts.size()) {
                rep.ok = false;
                rep.failures.push_back(where + std::to_string(B.size()) +
                                       " effective divisors vs " +
                                       std::to_string(pts.size()) +
                                       " lattice points");
                continue;
            }
            for (size_t k = 0; k + 1 < B.size(); ++k) {
                if (B[k] == B[k + 1]) {
                    rep.ok = false;
                    rep.failures.push_back(where + "duplicate effective divisor");
                    break;
                }
            }
            for (const auto& d : B) {
                if (!(divisor_class(pic, d) == L)) {
                    rep.ok = false;
                    rep.failures.push_back(where + "class mismatch in basis");
                    break;
                }
            }
        }
    }
    return rep;
}

ToricDivisor parse_divisor(const std::string& expr,
                           const std::vector<std::string>& ray_names,
                           int num_rays) {
    std::vector<std::string> names =
        ray_names.empty() ? default_ray_names(num_rays) : ray_names;
    if ((int)names.size() != num_rays)
        throw Error("ray name list does not match the number of rays");

    ToricDivisor D;
    D.coeffs.assign(num_rays, 0);
    size_t pos = 0;
    auto skip_space = [&] {
        while (pos < expr.size() && std::isspace((unsigned char)expr[pos])) ++pos;
    };
    skip_space();
    if (pos < expr.size() && expr[pos] == '0') {
        ++pos;
        skip_space();
        if (pos == expr.size()) return D;
        throw ParseError("unexpected text after '0' in divisor expression");
    }
    bool first = true;
    while (pos < expr.size()) {
        long long sign = 1;
        if (expr[pos] == '+' || expr[pos] == '-') {
            sign = expr[pos] == '-' ? -1 : 1;
            ++pos;
            skip_space();
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " +
                             std::to_string(pos) + " in \"" + expr + "\"");
        }
        long long coeff = 1;
        if (pos < expr.size() && std::isdigit((unsigned char)expr[pos])) {
            coeff = 0;
            while (pos < expr.size() && std::isdigit((unsigned char)expr[pos]))
                coeff = coeff * 10 + (expr[pos++] - '0');
        }
        skip_space();
        int ray = -1;
        size_t best = 0;
        for (int i = 0; i < num_rays; ++i) {
            const std::string& nm = names[i];
            if (nm.size() > best && expr.compare(pos, nm.size(), nm) == 0) {
                ray = i;
                best = nm.size();
            }
        }
        if (ray < 0)
            throw ParseError("unknown ray name at position " +
                             std::to_string(pos) + " in \"" + expr + "\"");
        pos += best;
        D.coeffs[ray] += sign * coeff;
        first = false;
        skip_space();
    }
    if (first) throw ParseError("empty divisor expression");
    return D;
}

std::string divisor_string(const ToricDivisor& D,
                           const std::vector<std::string>& ray_names) {
    std::vector<std::string> names =
        ray_names.empty() ? default_ray_names((int)D.coeffs.size()) : ray_names;
    std::string out;
    for (size_t i = 0; i < D.coeffs.size(); ++i) {
        long long c = D.coeffs[i];
        if (c == 0) continue;
        if (!out.empty() && c > 0) out += "+";
        if (c < 0) out += "-";
        if (std::abs(c) != 1) out += std::to_string(std::abs(c));
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace lgm
