#include "lgm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <thread>

#include "lgm/errors.hpp"

namespace lgm {

namespace {

const double kLogBound = std::log(1e8);

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

bool out_of_bounds(const Eigen::VectorXcd& w) {
    for (int i = 0; i < w.size(); ++i) {
        if (std::abs(w(i).real()) > kLogBound) return true;
    }
    return false;
}

double smallest_singular(const LGSystem& sys, const CxVec& z) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jacobian(sys, z));
    return svd.singularValues().minCoeff();
}

// Uniform double in [0,1) from the top 53 bits of the generator.
double unit_double(std::mt19937_64& rng) {
    return (double)(rng() >> 11) * 0x1.0p-53;
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

// One predictor-corrector pass with a fixed step count, used only to
// populate missing solutions by tracking known ones around a loop.
bool track_fixed_steps(const LGSystem& sys, const CoefficientPath& path,
                       Eigen::VectorXcd& w, int steps, double tol) {
    for (int k = 0; k < steps; ++k) {
        double s0 = (double)k / steps;
        double s1 = (double)(k + 1) / steps;
        CxVec z = from_log(w);
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(jacobian(sys, path, s0, z));
        if (!lu.isInvertible()) return false;
        w += lu.solve(-time_derivative(sys, path, s0, z)) * (s1 - s0);
        bool ok = false;
        for (int it = 0; it < 8; ++it) {
            CxVec zc = from_log(w);
            Eigen::VectorXcd F = eval_system(sys, path, s1, zc);
            if (inf_norm(F) < tol) {
                ok = true;
                break;
            }
            Eigen::FullPivLU<Eigen::MatrixXcd> lc(jacobian(sys, path, s1, zc));
            if (!lc.isInvertible()) return false;
            w += lc.solve(-F);
        }
        if (!ok || out_of_bounds(w)) return false;
    }
    return true;
}

}  // namespace

double point_distance(const CxVec& a, const CxVec& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

int expected_count(const LaurentPoly& f) {
    FanoPolytope P;
    P.dim = f.dim;
    for (const auto& [e, c] : f.terms) P.vertices.push_back(e);
    return euler_characteristic(P);
}

CritPoint newton_refine(const LGSystem& sys, const CxVec& z0,
                        const SolveOptions& opts) {
    if ((int)z0.size() != sys.dim) throw Error("point dimension mismatch");
    Eigen::VectorXcd w = to_log(z0);
    if (out_of_bounds(w)) throw Diverged("start is outside the residence box");

    CxVec z = from_log(w);
    Eigen::VectorXcd F = eval_system(sys, z);
    double res = inf_norm(F);
    double prev = res;
    int stalled = 0;
    for (int it = 0; it < opts.max_iters && res >= opts.tol_residual; ++it) {
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(jacobian(sys, z));
        if (!lu.isInvertible())
            throw SingularJacobian("log Jacobian is singular during refinement");
        w += lu.solve(-F);
        if (out_of_bounds(w))
            throw Diverged("coordinates left the residence box");
        z = from_log(w);
        F = eval_system(sys, z);
        res = inf_norm(F);
        if (res >= prev) {
            if (++stalled >= 5) throw Diverged("residual stopped decreasing");
        } else {
            stalled = 0;
        }
        prev = res;
    }

    CritPoint out;
    out.coords = z;
    out.residual = res;
    out.min_singular = smallest_singular(sys, z);
    return out;
}

CritSet solve_all(const LaurentPoly& f, const SolveOptions& opts) {
    if (f.terms.empty()) throw Error("cannot solve an empty potential");
    const int n = f.dim;
    const int chi = expected_count(f);
    const LGSystem sys = lg_system(f);

    std::mt19937_64 rng(opts.seed);
    std::vector<CritPoint> found;
    auto try_add = [&](const CritPoint& p) {
        for (const auto& q : found) {
            if (point_distance(p.coords, q.coords) < opts.tol_dedupe) return false;
        }
        found.push_back(p);
        return true;
    };

    int quiet = 0;
    int batches = 0;
    while (batches < opts.max_batches &&
           ((int)found.size() < chi || quiet < opts.quiet_batches)) {
        ++batches;
        // Starts are drawn serially so the sequence is seed-determined; the
        // refinements are then independent per start, and the merge below
        // walks starts in index order regardless of thread count.
        std::vector<CxVec> starts(opts.batch_size);
        for (auto& s : starts) {
            s.resize(n);
            for (int i = 0; i < n; ++i) {
                double logmod = -2.0 + 4.0 * unit_double(rng);
                double angle = 2.0 * std::numbers::pi * unit_double(rng);
                s[i] = std::polar(std::exp(logmod), angle);
            }
        }
        std::vector<CritPoint> results(starts.size());
        std::vector<char> converged(starts.size(), 0);
        run_chunks(starts.size(), opts.threads, [&](size_t lo, size_t hi) {
            for (size_t k = lo; k < hi; ++k) {
                try {
                    CritPoint p = newton_refine(sys, starts[k], opts);
                    if (p.residual < opts.tol_residual) {
                        results[k] = std::move(p);
                        converged[k] = 1;
                    }
                } catch (const Diverged&) {
                } catch (const SingularJacobian&) {
                }
            }
        });
        bool added = false;
        for (size_t k = 0; k < starts.size(); ++k) {
            if (converged[k] && try_add(results[k])) added = true;
        }
        if ((int)found.size() > chi)
            throw ExcessSolutions("found " + std::to_string(found.size()) +
                                  " distinct points, expected " +
                                  std::to_string(chi) +
                                  "; tolerances are likely misconfigured");
        quiet = added ? 0 : quiet + 1;
    }

    // Multistart stalled: drive the known points around random coefficient
    // phase loops and keep any new endpoints.
    for (int round = 0; round < 20 && (int)found.size() < chi; ++round) {
        CoefficientPath path;
        path.base = f;
        path.loop = true;
        PathSegment seg;
        for (const auto& [e, c] : f.terms) {
            long long winding = (long long)(rng() % 3) - 1;
            if (winding != 0) seg.factors.emplace(e, SegmentFactor{1.0, 1.0, winding});
        }
        if (seg.factors.empty()) continue;
        path.segments.push_back(std::move(seg));

        size_t snapshot = found.size();
        for (size_t k = 0; k < snapshot; ++k) {
            Eigen::VectorXcd w = to_log(found[k].coords);
            if (!track_fixed_steps(sys, path, w, 400, opts.tol_residual)) continue;
            try {
                CritPoint p = newton_refine(sys, from_log(w), opts);
                if (p.residual < opts.tol_residual) try_add(p);
            } catch (const Diverged&) {
            } catch (const SingularJacobian&) {
            }
        }
        if ((int)found.size() > chi)
            throw ExcessSolutions("loop population exceeded the expected count");
    }

    if ((int)found.size() < chi)
        throw IncompleteSolve("found " + std::to_string(found.size()) + " of " +
                                  std::to_string(chi) + " critical points",
                              (int)found.size());

    for (const auto& p : found) {
        if (p.min_singular <= opts.tol_reduced)
            throw NonReduced("a critical point has smallest singular value " +
                             std::to_string(p.min_singular));
    }

    std::sort(found.begin(), found.end(),
              [](const CritPoint& a, const CritPoint& b) {
                  for (size_t i = 0; i < a.coords.size(); ++i) {
                      if (a.coords[i].real() != b.coords[i].real())
                          return a.coords[i].real() < b.coords[i].real();
                      if (a.coords[i].imag() != b.coords[i].imag())
                          return a.coords[i].imag() < b.coords[i].imag();
                  }
                  return false;
              });

    CritSet cs;
    cs.points = std::move(found);
    cs.potential = f;
    return cs;
}

bool is_reduced(const CritSet& cs, const SolveOptions& opts) {
    int chi = 0;
    try {
        chi = expected_count(cs.potential);
    } catch (const Error&) {
        return false;
    }
    if ((int)cs.points.size() != chi) return false;
    for (size_t i = 0; i < cs.points.size(); ++i) {
        if (cs.points[i].min_singular <= opts.tol_reduced) return false;
        for (size_t j = i + 1; j < cs.points.size(); ++j) {
            if (point_distance(cs.points[i].coords, cs.points[j].coords) <=
                opts.tol_dedupe)
                return false;
        }
    }
    return true;
}

const CritPoint& positive_point(const CritSet& cs) {
    const CritPoint* hit = nullptr;
    for (const auto& p : cs.points) {
        bool positive = true;
        for (const Cx& z : p.coords) {
            if (std::abs(z.imag()) >= 1e-8 || z.real() <= 0.0) {
                positive = false;
                break;
            }
        }
        if (!positive) continue;
        if (hit) throw MultiplePositivePoints("two all-positive critical points");
        hit = &p;
    }
    if (!hit) throw NoPositivePoint("no all-positive critical point");
    return *hit;
}

}  // namespace lgm
