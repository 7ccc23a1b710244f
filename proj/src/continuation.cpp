#include "lgm/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <thread>

#include "lgm/errors.hpp"

namespace lgm {

namespace {

const double kLogBound = std::log(1e8);
// Bailout for corrector iterates, generous enough to never cut off a
// correction that could still be accepted.
const double kCorrectorBound = 25.0;

enum class TrackStatus { Ok, Singular, Diverged, Escaped, Underflow };

CxVec from_log(const Eigen::VectorXcd& w) {
    CxVec z(w.size());
    for (int i = 0; i < w.size(); ++i) z[i] = std::exp(w(i));
    return z;
}

Eigen::VectorXcd to_log(const CxVec& z) {
    Eigen::VectorXcd w(z.size());
    for (size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0.0) throw ZeroCoordinate("coordinate is zero");
        w(i) = Cx(std::log(std::abs(z[i])), std::arg(z[i]));
    }
    return w;
}

double inf_norm(const Eigen::VectorXcd& v) {
    double m = 0.0;
    for (int i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v(i)));
    return m;
}

double max_abs_real(const Eigen::VectorXcd& w) {
    double m = 0.0;
    for (int i = 0; i < w.size(); ++i) m = std::max(m, std::abs(w(i).real()));
    return m;
}

// Newton corrector at fixed path time. Returns false when the residual
// does not reach tol within the iteration budget.
bool correct(const LGSystem& sys, const CoefficientPath& path, double s,
             Eigen::VectorXcd& w, const TrackOptions& opts) {
    for (int it = 0; it < opts.max_corrector_iters; ++it) {
        CxVec z = from_log(w);
        Eigen::VectorXcd F = eval_system(sys, path, s, z);
        if (inf_norm(F) < opts.corrector_tol) return true;
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(jacobian(sys, path, s, z));
        if (!lu.isInvertible()) return false;
        w += lu.solve(-F);
        if (max_abs_real(w) > kCorrectorBound) return false;
    }
    CxVec z = from_log(w);
    return inf_norm(eval_system(sys, path, s, z)) < opts.corrector_tol;
}

using EscapeCheck = std::function<bool(const Eigen::VectorXcd&)>;

// Adaptive predictor-corrector walk of the path. On success w holds the
// endpoint; on escape it holds the state where the window was left.
TrackStatus track_core(const LGSystem& sys, const CoefficientPath& path,
                       Eigen::VectorXcd& w, const TrackOptions& opts,
                       const EscapeCheck& escaped = {}) {
    if (!(opts.min_step < opts.initial_step && opts.initial_step <= opts.max_step))
        throw Error("step sizes must satisfy min_step < initial_step <= max_step");
    double s = 0.0;
    double ds = std::min(opts.initial_step, opts.max_step);
    int streak = 0;
    while (s < 1.0 - 1e-14) {
        double step = std::min(ds, 1.0 - s);
        CxVec z = from_log(w);
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(jacobian(sys, path, s, z));
        if (!lu.isInvertible()) return TrackStatus::Singular;
        Eigen::VectorXcd wp =
            w + lu.solve(-time_derivative(sys, path, s, z)) * step;

        Eigen::VectorXcd wn = wp;
        bool ok = correct(sys, path, s + step, wn, opts);
        if (ok && inf_norm(wn - wp) > opts.motion_guard) ok = false;

        if (ok) {
            s += step;
            w = wn;
            if (++streak >= opts.grow_after) {
                ds = std::min(ds * opts.step_grow, opts.max_step);
                streak = 0;
            }
            if (max_abs_real(w) > kLogBound) return TrackStatus::Diverged;
            if (escaped && escaped(w)) return TrackStatus::Escaped;
        } else {
            streak = 0;
            ds *= opts.step_shrink;
            if (ds < opts.min_step) return TrackStatus::Underflow;
        }
    }
    return TrackStatus::Ok;
}

[[noreturn]] void throw_status(TrackStatus st) {
    switch (st) {
        case TrackStatus::Singular:
            throw SingularJacobian("Jacobian became singular along the path");
        case TrackStatus::Diverged:
            throw DivergedPath("a coordinate left the tracking box");
        case TrackStatus::Underflow:
            throw StepUnderflow("step size fell below the minimum");
        default:
            throw Error("unexpected tracking status");
    }
}

void run_chunks(size_t count, int threads,
                const std::function<void(size_t, size_t)>& work) {
    if (threads <= 1 || count < 2) {
        work(0, count);
        return;
    }
    size_t workers = std::min<size_t>(threads, count);
    std::vector<std::thread> pool;
    size_t chunk = (count + workers - 1) / workers;
    for (size_t t = 0; t < workers; ++t) {
        size_t lo = t * chunk;
        size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] { work(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

void check_start(const LGSystem& sys, const CoefficientPath& path,
                 const CxVec& z0, const TrackOptions& opts) {
    Eigen::VectorXcd F = eval_system(sys, path, 0.0, z0);
    if (inf_norm(F) > opts.corrector_tol)
        throw Error("start point does not solve the system at the path start");
}

}  // namespace

CritPoint track(const CoefficientPath& path, const CritPoint& z0,
                const TrackOptions& opts) {
    LGSystem sys = lg_system(path.base);
    check_start(sys, path, z0.coords, opts);
    Eigen::VectorXcd w = to_log(z0.coords);
    TrackStatus st = track_core(sys, path, w, opts);
    if (st != TrackStatus::Ok) throw_status(st);

    CritPoint out;
    out.coords = from_log(w);
    out.residual = inf_norm(eval_system(sys, path, 1.0, out.coords));
    LGSystem end_sys = lg_system(path.at(1.0));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jacobian(end_sys, out.coords));
    out.min_singular = svd.singularValues().minCoeff();
    return out;
}

MonodromyPermutation loop_permutation(const LaurentPoly& f,
                                      const CoefficientPath& loop,
                                      const CritSet& cs,
                                      const TrackOptions& opts) {
    if (!loop.loop) throw Error("path is not flagged as a loop");
    if (loop.base.terms != f.terms)
        throw Error("loop does not start at the potential's coefficients");
    const LGSystem sys = lg_system(f);
    const size_t n = cs.points.size();
    if (n == 0) throw Error("empty critical set");

    for (int attempt = 0; attempt <= opts.max_refinements; ++attempt) {
        TrackOptions cur = opts;
        cur.max_step = opts.max_step * std::pow(0.5, attempt);
        cur.initial_step = std::min(opts.initial_step, cur.max_step);
        if (cur.min_step >= cur.initial_step) cur.min_step = cur.initial_step / 2;

        std::vector<CxVec> ends(n);
        std::vector<TrackStatus> status(n, TrackStatus::Ok);
        run_chunks(n, opts.threads, [&](size_t lo, size_t hi) {
            for (size_t k = lo; k < hi; ++k) {
                Eigen::VectorXcd w = to_log(cs.points[k].coords);
                status[k] = track_core(sys, loop, w, cur);
                if (status[k] != TrackStatus::Ok) continue;
                CxVec z = from_log(w);
                try {
                    CritPoint p = newton_refine(sys, z, cur.solver);
                    if (p.residual < cur.corrector_tol) z = p.coords;
                } catch (const Error&) {
                }
                ends[k] = std::move(z);
            }
        });
        for (size_t k = 0; k < n; ++k) {
            if (status[k] != TrackStatus::Ok) throw_status(status[k]);
        }

        std::vector<int> mapping(n, -1);
        bool clean = true;
        for (size_t k = 0; k < n && clean; ++k) {
            double best = std::numeric_limits<double>::infinity();
            double second = best;
            int best_at = -1;
            for (size_t j = 0; j < n; ++j) {
                double d = point_distance(ends[k], cs.points[j].coords);
                if (d < best) {
                    second = best;
                    best = d;
                    best_at = (int)j;
                } else if (d < second) {
                    second = d;
                }
            }
            if (best > cur.match_tol || second < cur.ambiguity_ratio * best)
                clean = false;
            else
                mapping[k] = best_at;
        }
        if (clean) {
            std::vector<char> hit(n, 0);
            for (int m : mapping) {
                if (m < 0 || hit[m]) {
                    clean = false;
                    break;
                }
                hit[m] = 1;
            }
        }
        if (clean) {
            MonodromyPermutation perm;
            perm.divisor = loop.divisor;
            perm.mapping = std::move(mapping);
            perm.epsilon = loop.epsilon;
            return perm;
        }
    }
    throw AmbiguousMatching("endpoint matching stayed ambiguous after refinement");
}

DegenerationResult degenerate(const LaurentPoly& f,
                              const std::vector<IntVec>& scaled_vertices,
                              const CritSet& cs, const TrackOptions& opts) {
    for (const auto& v : scaled_vertices) {
        if (!f.terms.count(v))
            throw Error("scaled vertex is not a term of the potential");
    }

    CoefficientPath path;
    path.base = f;
    PathSegment seg;
    for (const auto& v : scaled_vertices)
        seg.factors.emplace(v, SegmentFactor{1.0, opts.endpoint_delta, 0});
    path.segments.push_back(std::move(seg));

    LaurentPoly limit;
    limit.dim = f.dim;
    for (const auto& [e, c] : f.terms) {
        if (std::find(scaled_vertices.begin(), scaled_vertices.end(), e) ==
            scaled_vertices.end())
            limit.add_term(e, c);
    }

    DegenerationResult out;
    out.t_end = 1.0 - opts.endpoint_delta;

    FanoPolytope limit_poly;
    limit_poly.dim = f.dim;
    for (const auto& [e, c] : limit.terms) limit_poly.vertices.push_back(e);
    if (is_reflexive_fano(limit_poly)) {
        out.limit_points = solve_all(limit, opts.solver);
        out.limit_matched = true;
    }

    const LGSystem sys = lg_system(f);
    const double lo = std::log(opts.escape_lo) + opts.escape_margin;
    const double hi = std::log(opts.escape_hi) - opts.escape_margin;
    auto escaped = [&](const Eigen::VectorXcd& w) {
        for (int i = 0; i < w.size(); ++i) {
            if (w(i).real() < lo || w(i).real() > hi) return true;
        }
        return false;
    };

    const size_t n = cs.points.size();
    std::vector<DegenerationResult::PointResult> results(n);
    std::vector<TrackStatus> status(n, TrackStatus::Ok);
    run_chunks(n, opts.threads, [&](size_t lo_k, size_t hi_k) {
        for (size_t k = lo_k; k < hi_k; ++k) {
            Eigen::VectorXcd w = to_log(cs.points[k].coords);
            TrackStatus st = track_core(sys, path, w, opts, escaped);
            status[k] = st;
            if (st != TrackStatus::Ok && st != TrackStatus::Escaped) continue;
            auto& r = results[k];
            r.endpoint = from_log(w);
            if (st == TrackStatus::Escaped) {
                r.status = DegenerationResult::Status::Escaped;
                std::string dir = "(";
                for (int i = 0; i < w.size(); ++i) {
                    if (i) dir += ",";
                    if (w(i).real() > hi)
                        dir += "inf";
                    else if (w(i).real() < lo)
                        dir += "0";
                    else
                        dir += "~";
                }
                r.escape_direction = dir + ")";
            }
        }
    });
    for (size_t k = 0; k < n; ++k) {
        if (status[k] != TrackStatus::Ok && status[k] != TrackStatus::Escaped)
            throw_status(status[k]);
    }

    if (out.limit_matched) {
        LGSystem limit_sys = lg_system(limit);
        std::vector<char> taken(out.limit_points.points.size(), 0);
        for (size_t k = 0; k < n; ++k) {
            auto& r = results[k];
            if (r.status != DegenerationResult::Status::Converged) continue;
            CxVec polished;
            try {
                CritPoint p = newton_refine(limit_sys, r.endpoint, opts.solver);
                if (p.residual >= opts.solver.tol_residual)
                    throw UnmatchedLimit("limit polish did not converge");
                polished = p.coords;
            } catch (const UnmatchedLimit&) {
                throw;
            } catch (const Error&) {
                throw UnmatchedLimit("limit polish failed");
            }
            int best = -1;
            double bd = 0.0;
            for (size_t j = 0; j < out.limit_points.points.size(); ++j) {
                double d = point_distance(polished, out.limit_points.points[j].coords);
                if (best < 0 || d < bd) {
                    best = (int)j;
                    bd = d;
                }
            }
            if (best < 0 || bd > opts.match_tol)
                throw UnmatchedLimit("converged point is not a limit critical point");
            if (taken[best])
                throw UnmatchedLimit("two points converged to the same limit point");
            taken[best] = 1;
            r.limit_index = best;
        }
    }

    out.points = std::move(results);
    return out;
}

std::vector<int> inverse_mapping(const std::vector<int>& mapping) {
    std::vector<int> inv(mapping.size(), -1);
    for (size_t i = 0; i < mapping.size(); ++i) {
        int m = mapping[i];
        if (m < 0 || m >= (int)mapping.size() || inv[m] != -1)
            throw Error("mapping is not a bijection");
        inv[m] = (int)i;
    }
    return inv;
}

std::vector<int> compose_mappings(const std::vector<int>& outer,
                                  const std::vector<int>& inner) {
    if (outer.size() != inner.size()) throw Error("mapping sizes differ");
    std::vector<int> out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) {
        int m = inner[i];
        if (m < 0 || m >= (int)outer.size()) throw Error("mapping out of range");
        out[i] = outer[m];
    }
    return out;
}

std::string cycle_string(const std::vector<int>& mapping,
                         const std::vector<std::string>& labels) {
    if (labels.size() != mapping.size())
        throw Error("label count does not match the mapping");
    std::map<std::string, int> order;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (!order.emplace(labels[i], (int)i).second)
            throw Error("duplicate label");
    }
    std::vector<char> seen(mapping.size(), 0);
    std::string out;
    for (const auto& [label, start] : order) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int at = start;
        while (!seen[at]) {
            seen[at] = 1;
            cycle.push_back(at);
            at = mapping[at];
        }
        if (cycle.size() <= 1) continue;
        out += "(";
        for (size_t k = 0; k < cycle.size(); ++k) {
            if (k) out += " ";
            out += labels[cycle[k]];
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

std::string index_cycle_string(const std::vector<int>& mapping) {
    std::vector<char> seen(mapping.size(), 0);
    std::string out;
    for (size_t start = 0; start < mapping.size(); ++start) {
        if (seen[start]) continue;
        out += "(";
        int at = (int)start;
        bool first = true;
        while (!seen[at]) {
            seen[at] = 1;
            if (!first) out += " ";
            out += std::to_string(at);
            first = false;
            at = mapping[at];
        }
        out += ")";
    }
    return out;
}

std::vector<int> parse_cycle_string(const std::string& cycles,
                                    const std::vector<std::string>& labels) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (!index.emplace(labels[i], (int)i).second)
            throw ParseError("duplicate label '" + labels[i] + "'");
    }
    std::vector<int> mapping(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) mapping[i] = (int)i;
    if (cycles == "id") return mapping;

    std::vector<char> used(labels.size(), 0);
    size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < cycles.size() && cycles[pos] == ' ') ++pos;
    };
    skip_spaces();
    if (pos == cycles.size())
        throw ParseError("empty cycle string; use \"id\" for the identity");
    while (pos < cycles.size()) {
        if (cycles[pos] != '(')
            throw ParseError("expected '(' at position " + std::to_string(pos) +
                             " in \"" + cycles + "\"");
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_spaces();
            if (pos == cycles.size())
                throw ParseError("unterminated cycle in \"" + cycles + "\"");
            if (cycles[pos] == ')') {
                ++pos;
                break;
            }
            size_t start = pos;
            while (pos < cycles.size() && cycles[pos] != ' ' &&
                   cycles[pos] != ')' && cycles[pos] != '(')
                ++pos;
            std::string label = cycles.substr(start, pos - start);
            auto it = index.find(label);
            if (it == index.end())
                throw ParseError("unknown label '" + label + "' in \"" + cycles +
                                 "\"");
            if (used[it->second])
                throw ParseError("label '" + label + "' appears twice in \"" +
                                 cycles + "\"");
            used[it->second] = 1;
            cycle.push_back(it->second);
        }
        if (cycle.empty())
            throw ParseError("empty cycle in \"" + cycles + "\"");
        for (size_t k = 0; k < cycle.size(); ++k)
            mapping[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_spaces();
    }
    return mapping;
}

}  // namespace lgm
