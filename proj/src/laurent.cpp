#include "lgm/laurent.hpp"

#include <cmath>
#include <numbers>

#include "lgm/errors.hpp"

namespace lgm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Cx ipow(Cx z, long long e) {
    if (e < 0) return 1.0 / ipow(z, -e);
    Cx out = 1.0;
    while (e > 0) {
        if (e & 1) out *= z;
        z *= z;
        e >>= 1;
    }
    return out;
}

void check_torus(const CxVec& z) {
    for (const Cx& zi : z) {
        if (zi == 0.0) throw ZeroCoordinate("coordinate is zero");
    }
}

Cx monomial(const IntVec& e, const CxVec& z) {
    Cx out = 1.0;
    for (size_t i = 0; i < e.size(); ++i) out *= ipow(z[i], e[i]);
    return out;
}

}  // namespace

void LaurentPoly::add_term(const IntVec& exponents, Cx coeff) {
    auto it = terms.find(exponents);
    if (it == terms.end()) {
        if (coeff != 0.0) terms.emplace(exponents, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0.0) terms.erase(it);
}

Cx SegmentFactor::at(double u) const {
    double amp = amp0 + (amp1 - amp0) * u;
    if (winding == 0) return amp;
    double theta = kTwoPi * std::fmod((double)winding * u, 1.0);
    return amp * Cx(std::cos(theta), std::sin(theta));
}

Cx SegmentFactor::deriv(double u) const {
    double amp = amp0 + (amp1 - amp0) * u;
    Cx phase = 1.0;
    if (winding != 0) {
        double theta = kTwoPi * std::fmod((double)winding * u, 1.0);
        phase = Cx(std::cos(theta), std::sin(theta));
    }
    return (amp1 - amp0) * phase + amp * Cx(0.0, kTwoPi * (double)winding) * phase;
}

SegmentFactor SegmentFactor::reversed() const {
    return SegmentFactor{amp1, amp0, -winding};
}

Cx CoefficientPath::factor(const IntVec& exponents, double s) const {
    if (segments.empty()) return 1.0;
    int K = (int)segments.size();
    double x = s * K;
    int k = std::min((int)x, K - 1);
    if (k < 0) k = 0;
    auto it = segments[k].factors.find(exponents);
    if (it == segments[k].factors.end()) return 1.0;
    return it->second.at(x - k);
}

Cx CoefficientPath::factor_deriv(const IntVec& exponents, double s) const {
    if (segments.empty()) return 0.0;
    int K = (int)segments.size();
    double x = s * K;
    int k = std::min((int)x, K - 1);
    if (k < 0) k = 0;
    auto it = segments[k].factors.find(exponents);
    if (it == segments[k].factors.end()) return 0.0;
    return it->second.deriv(x - k) * (double)K;
}

LaurentPoly CoefficientPath::at(double s) const {
    LaurentPoly out;
    out.dim = base.dim;
    for (const auto& [e, c] : base.terms) out.add_term(e, c * factor(e, s));
    return out;
}

CoefficientPath CoefficientPath::reversed() const {
    CoefficientPath out = *this;
    out.segments.clear();
    for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
        PathSegment seg;
        for (const auto& [e, f] : it->factors) seg.factors.emplace(e, f.reversed());
        out.segments.push_back(std::move(seg));
    }
    return out;
}

CoefficientPath CoefficientPath::repeated(int count) const {
    if (count < 1) throw Error("repeat count must be positive");
    CoefficientPath out = *this;
    for (int i = 1; i < count; ++i)
        out.segments.insert(out.segments.end(), segments.begin(), segments.end());
    return out;
}

LaurentPoly lg_potential(const FanoPolytope& P) {
    auto chk = is_reflexive_fano(P);
    if (!chk) throw NotReflexive(chk.reason);
    LaurentPoly f;
    f.dim = P.dim;
    for (const auto& v : P.vertices) f.add_term(v, 1.0);
    return f;
}

LGSystem lg_system(const LaurentPoly& f) {
    LGSystem sys;
    sys.dim = f.dim;
    sys.source = f;
    sys.equations.resize(f.dim);
    for (int i = 0; i < f.dim; ++i) {
        sys.equations[i].dim = f.dim;
        for (const auto& [e, c] : f.terms)
            sys.equations[i].add_term(e, c * (double)e[i]);
    }
    return sys;
}

Cx eval(const LaurentPoly& f, const CxVec& z) {
    if ((int)z.size() != f.dim) throw Error("point dimension mismatch");
    check_torus(z);
    Cx out = 0.0;
    for (const auto& [e, c] : f.terms) out += c * monomial(e, z);
    return out;
}

Eigen::VectorXcd eval_system(const LGSystem& sys, const CxVec& z) {
    if ((int)z.size() != sys.dim) throw Error("point dimension mismatch");
    check_torus(z);
    Eigen::VectorXcd out(sys.dim);
    for (int i = 0; i < sys.dim; ++i) {
        Cx v = 0.0;
        for (const auto& [e, c] : sys.equations[i].terms) v += c * monomial(e, z);
        out(i) = v;
    }
    return out;
}

Eigen::MatrixXcd jacobian(const LGSystem& sys, const CxVec& z) {
    if ((int)z.size() != sys.dim) throw Error("point dimension mismatch");
    check_torus(z);
    Eigen::MatrixXcd J(sys.dim, sys.dim);
    for (int i = 0; i < sys.dim; ++i) {
        for (int j = 0; j < sys.dim; ++j) {
            Cx v = 0.0;
            for (const auto& [e, c] : sys.equations[i].terms)
                v += c * (double)e[j] * monomial(e, z);
            J(i, j) = v;
        }
    }
    return J;
}

Eigen::VectorXcd eval_system(const LGSystem& sys, const CoefficientPath& path,
                             double s, const CxVec& z) {
    if ((int)z.size() != sys.dim) throw Error("point dimension mismatch");
    check_torus(z);
    Eigen::VectorXcd out(sys.dim);
    for (int i = 0; i < sys.dim; ++i) {
        Cx v = 0.0;
        for (const auto& [e, c] : sys.equations[i].terms)
            v += c * path.factor(e, s) * monomial(e, z);
        out(i) = v;
    }
    return out;
}

Eigen::MatrixXcd jacobian(const LGSystem& sys, const CoefficientPath& path,
                          double s, const CxVec& z) {
    if ((int)z.size() != sys.dim) throw Error("point dimension mismatch");
    check_torus(z);
    Eigen::MatrixXcd J(sys.dim, sys.dim);
    for (int i = 0; i < sys.dim; ++i) {
        for (int j = 0; j < sys.dim; ++j) {
            Cx v = 0.0;
            for (const auto& [e, c] : sys.equations[i].terms)
                v += c * path.factor(e, s) * (double)e[j] * monomial(e, z);
            J(i, j) = v;
        }
    }
    return J;
}

Eigen::VectorXcd time_derivative(const LGSystem& sys,
                                 const CoefficientPath& path, double s,
                                 const CxVec& z) {
    if ((int)z.size() != sys.dim) throw Error("point dimension mismatch");
    check_torus(z);
    Eigen::VectorXcd out(sys.dim);
    for (int i = 0; i < sys.dim; ++i) {
        Cx v = 0.0;
        for (const auto& [e, c] : sys.equations[i].terms)
            v += c * path.factor_deriv(e, s) * monomial(e, z);
        out(i) = v;
    }
    return out;
}

CoefficientPath gamma_loop(const LaurentPoly& f, const ToricDivisor& D,
                           const std::vector<IntVec>& rays) {
    if (D.coeffs.size() != rays.size())
        throw Error("divisor length does not match the ray count");
    CoefficientPath path;
    path.base = f;
    path.loop = true;
    path.divisor = D;
    path.epsilon = 1.0;
    PathSegment seg;
    for (size_t F = 0; F < rays.size(); ++F) {
        if (D.coeffs[F] == 0) continue;
        seg.factors.emplace(rays[F], SegmentFactor{1.0, 1.0, D.coeffs[F]});
    }
    path.segments.push_back(std::move(seg));
    return path;
}

CoefficientPath composite_loop(const LaurentPoly& f, const ToricDivisor& D,
                               const VertexPartition& partition, double epsilon,
                               const std::vector<IntVec>& rays) {
    if (D.coeffs.size() != rays.size())
        throw Error("divisor length does not match the ray count");
    if (!(epsilon > 0.0 && epsilon <= 1.0))
        throw Error("epsilon must lie in (0, 1]");

    std::vector<int> seen(rays.size(), 0);
    for (int i : partition.base) {
        if (i < 0 || i >= (int)rays.size() || seen[i]++)
            throw BadPartition("base subset is not a valid ray subset");
    }
    for (int i : partition.fiber) {
        if (i < 0 || i >= (int)rays.size() || seen[i]++)
            throw BadPartition("fiber subset overlaps base or is out of range");
    }
    for (size_t i = 0; i < rays.size(); ++i) {
        if (!seen[i]) throw BadPartition("subsets do not cover every ray");
    }

    if (epsilon == 1.0) return gamma_loop(f, D, rays);

    CoefficientPath path;
    path.base = f;
    path.loop = true;
    path.divisor = D;
    path.epsilon = epsilon;

    PathSegment down, phase, up;
    for (int F : partition.base) {
        down.factors.emplace(rays[F], SegmentFactor{1.0, epsilon, 0});
        up.factors.emplace(rays[F], SegmentFactor{epsilon, 1.0, 0});
        phase.factors.emplace(rays[F], SegmentFactor{epsilon, epsilon, 0});
    }
    for (size_t F = 0; F < rays.size(); ++F) {
        if (D.coeffs[F] == 0) continue;
        auto it = phase.factors.find(rays[F]);
        if (it == phase.factors.end()) {
            phase.factors.emplace(rays[F], SegmentFactor{1.0, 1.0, D.coeffs[F]});
        } else {
            it->second.winding = D.coeffs[F];
        }
    }
    path.segments.push_back(std::move(down));
    path.segments.push_back(std::move(phase));
    path.segments.push_back(std::move(up));
    return path;
}

}  // namespace lgm
