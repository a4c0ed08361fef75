#include "curv/curvature.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "curv/lp.hpp"

namespace curv {

namespace {

void require_pair(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) {
        throw CurvatureError(fmt::format("curvature needs two distinct vertices, got {} twice", x));
    }
    if (!d.reachable(x, y)) {
        throw CurvatureError(fmt::format("vertices {} and {} lie in different components", x, y));
    }
}

std::vector<Vertex> joint_support(const Distribution& m1, const Distribution& m2) {
    std::vector<Vertex> out;
    for (const auto& [v, mass] : m1.support()) out.push_back(v);
    for (const auto& [v, mass] : m2.support()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int distance_between(const DistanceMatrix& d, Vertex a, Vertex b) {
    if (a < 0 || a >= d.order() || b < 0 || b >= d.order()) {
        throw CurvatureError(fmt::format("support vertex pair ({}, {}) outside the distance table", a, b));
    }
    if (!d.reachable(a, b)) {
        throw CurvatureError(fmt::format("support vertices {} and {} are not mutually reachable", a, b));
    }
    return *d.at(a, b);
}

/// N[x] u N[y], sorted.
std::vector<Vertex> closed_neighborhoods(const Graph& g, Vertex x, Vertex y) {
    std::vector<Vertex> out{x, y};
    for (Vertex w : g.neighbors(x)) out.push_back(w);
    for (Vertex w : g.neighbors(y)) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational laplacian(const Graph& g, const Potential& f, Vertex v) {
    Rational sum = 0;
    for (Vertex w : g.neighbors(v)) sum += f.at(w) - f.at(v);
    return sum / g.degree(v);
}

}  // namespace

Distribution Distribution::from_masses(std::vector<std::pair<Vertex, Rational>> masses) {
    Distribution out;
    Rational total = 0;
    std::sort(masses.begin(), masses.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < masses.size(); ++i) {
        const auto& [v, m] = masses[i];
        if (i > 0 && masses[i - 1].first == v) {
            throw CurvatureError(fmt::format("vertex {} appears twice in a distribution", v));
        }
        if (m < 0) {
            throw CurvatureError(fmt::format("negative mass {} at vertex {}", to_fraction_string(m), v));
        }
        total += m;
        if (m > 0) out.support_.push_back(masses[i]);
    }
    if (total != 1) {
        throw CurvatureError(fmt::format("distribution masses sum to {}, not 1", to_fraction_string(total)));
    }
    return out;
}

Rational Distribution::mass(Vertex v) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), v,
                               [](const auto& entry, Vertex key) { return entry.first < key; });
    return it != support_.end() && it->first == v ? it->second : Rational(0);
}

Distribution lazy_distribution(const Graph& g, Vertex x, const Rational& alpha) {
    g.check_vertex(x);
    if (alpha < 0 || alpha >= 1) {
        throw CurvatureError(fmt::format("idleness {} outside [0, 1)", to_fraction_string(alpha)));
    }
    const int dx = g.degree(x);
    if (dx == 0) {
        throw CurvatureError(fmt::format("vertex {} is isolated", x));
    }
    std::vector<std::pair<Vertex, Rational>> masses{{x, alpha}};
    const Rational share = (1 - alpha) / dx;
    for (Vertex w : g.neighbors(x)) masses.emplace_back(w, share);
    return Distribution::from_masses(std::move(masses));
}

TransportResult wasserstein(const Distribution& m1, const Distribution& m2, const DistanceMatrix& d) {
    const auto& src = m1.support();
    const auto& dst = m2.support();
    const std::size_t rows = src.size();
    const std::size_t cols = dst.size();
    const std::size_t vars = rows * cols;

    LinearProgram lp{std::vector<Rational>(vars)};
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            lp.objective[i * cols + j] = distance_between(d, src[i].first, dst[j].first);
        }
    }
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Rational> a(vars);
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = 1;
        lp.add(std::move(a), Relation::Equal, src[i].second);
    }
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Rational> a(vars);
        for (std::size_t i = 0; i < rows; ++i) a[i * cols + j] = 1;
        lp.add(std::move(a), Relation::Equal, dst[j].second);
    }

    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) {
        throw CurvatureError("transport LP did not reach an optimum: " + to_string(sol.status));
    }
    TransportResult out{*sol.value, {{}, *sol.value}};
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& a = sol.primal[i * cols + j];
            if (a != 0) out.certificate.coupling.push_back({src[i].first, dst[j].first, a});
        }
    }
    return out;
}

DualResult kantorovich_dual(const Distribution& m1, const Distribution& m2, const DistanceMatrix& d) {
    const auto domain = joint_support(m1, m2);
    const std::size_t k = domain.size();
    LinearProgram lp{std::vector<Rational>(k)};
    lp.bounds.assign(k, VariableBounds::free());
    lp.bounds[0] = VariableBounds::fixed(0);
    for (std::size_t i = 0; i < k; ++i) {
        lp.objective[i] = m2.mass(domain[i]) - m1.mass(domain[i]);
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const Rational dist = distance_between(d, domain[i], domain[j]);
            std::vector<Rational> a(k);
            a[i] = 1;
            a[j] = -1;
            lp.add(a, Relation::LessEqual, dist);
            a[i] = -1;
            a[j] = 1;
            lp.add(std::move(a), Relation::LessEqual, dist);
        }
    }
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) {
        throw CurvatureError("Kantorovich LP did not reach an optimum: " + to_string(sol.status));
    }
    DualResult out{-*sol.value, {{}, -*sol.value}};
    for (std::size_t i = 0; i < k; ++i) out.certificate.potential.emplace(domain[i], sol.primal[i]);
    return out;
}

bool is_valid_coupling(const Distribution& m1, const Distribution& m2, const std::vector<TransportEntry>& coupling,
                       const DistanceMatrix& d, Rational& cost) {
    std::map<Vertex, Rational> out_mass;
    std::map<Vertex, Rational> in_mass;
    Rational total = 0;
    for (const auto& e : coupling) {
        if (e.mass < 0) return false;
        if (e.source < 0 || e.source >= d.order() || e.target < 0 || e.target >= d.order()) return false;
        if (e.mass == 0) continue;
        if (!d.reachable(e.source, e.target)) return false;
        out_mass[e.source] += e.mass;
        in_mass[e.target] += e.mass;
        total += e.mass * *d.at(e.source, e.target);
    }
    for (const auto& [v, m] : out_mass) {
        if (m1.mass(v) != m) return false;
    }
    for (const auto& [v, m] : m1.support()) {
        auto it = out_mass.find(v);
        if (it == out_mass.end() || it->second != m) return false;
    }
    for (const auto& [v, m] : in_mass) {
        if (m2.mass(v) != m) return false;
    }
    for (const auto& [v, m] : m2.support()) {
        auto it = in_mass.find(v);
        if (it == in_mass.end() || it->second != m) return false;
    }
    cost = total;
    return true;
}

bool is_lipschitz(const Potential& f, const DistanceMatrix& d) {
    for (auto a = f.begin(); a != f.end(); ++a) {
        for (auto b = std::next(a); b != f.end(); ++b) {
            if (!d.reachable(a->first, b->first)) continue;
            Rational gap = a->second - b->second;
            if (gap < 0) gap = -gap;
            if (gap > *d.at(a->first, b->first)) return false;
        }
    }
    return true;
}

Rational dual_objective(const Potential& f, const Distribution& m1, const Distribution& m2) {
    Rational total = 0;
    for (const auto& [v, value] : f) total += value * (m1.mass(v) - m2.mass(v));
    return total;
}

Rational alpha_ricci(const Graph& g, Vertex x, Vertex y, const Rational& alpha) {
    return alpha_ricci(g, DistanceMatrix(g), x, y, alpha);
}

Rational alpha_ricci(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y, const Rational& alpha) {
    require_pair(g, d, x, y);
    const auto mx = lazy_distribution(g, x, alpha);
    const auto my = lazy_distribution(g, y, alpha);
    return 1 - wasserstein(mx, my, d).value / *d.at(x, y);
}

LlyResult lly_curvature_with_witness(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y) {
    require_pair(g, d, x, y);
    const auto domain = closed_neighborhoods(g, x, y);
    const std::size_t k = domain.size();
    auto index = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(domain.begin(), domain.end(), v) - domain.begin());
    };
    const int dxy = *d.at(x, y);
    const std::size_t ix = index(x);
    const std::size_t iy = index(y);

    LinearProgram lp{std::vector<Rational>(k)};
    lp.bounds.assign(k, VariableBounds::free());
    lp.bounds[ix] = VariableBounds::fixed(0);

    // (Laplacian f(x) - Laplacian f(y)) / d(x, y)
    const Rational wx = Rational(1) / (g.degree(x) * dxy);
    const Rational wy = Rational(1) / (g.degree(y) * dxy);
    for (Vertex w : g.neighbors(x)) {
        lp.objective[index(w)] += wx;
        lp.objective[ix] -= wx;
    }
    for (Vertex w : g.neighbors(y)) {
        lp.objective[index(w)] -= wy;
        lp.objective[iy] += wy;
    }

    {
        std::vector<Rational> a(k);
        a[iy] = 1;
        a[ix] = -1;
        lp.add(std::move(a), Relation::Equal, dxy);
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const Rational dist = *d.at(domain[i], domain[j]);
            std::vector<Rational> a(k);
            a[i] = 1;
            a[j] = -1;
            lp.add(a, Relation::LessEqual, dist);
            a[i] = -1;
            a[j] = 1;
            lp.add(std::move(a), Relation::LessEqual, dist);
        }
    }

    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) {
        throw CurvatureError("curvature LP did not reach an optimum: " + to_string(sol.status));
    }
    LlyResult out{*sol.value, {}};
    for (std::size_t i = 0; i < k; ++i) out.potential.emplace(domain[i], sol.primal[i]);
    return out;
}

Rational lly_curvature(const Graph& g, Vertex x, Vertex y) {
    return lly_curvature(g, DistanceMatrix(g), x, y);
}

Rational lly_curvature(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y) {
    return lly_curvature_with_witness(g, d, x, y).kappa;
}

Rational lly_via_limit(const Graph& g, Vertex x, Vertex y) {
    return lly_via_limit(g, DistanceMatrix(g), x, y);
}

Rational lly_via_limit(const Graph& g, const DistanceMatrix& d, Vertex x, Vertex y) {
    require_pair(g, d, x, y);
    auto scaled = [&](int k) {
        const Rational alpha = 1 - Rational(1, k);
        return alpha_ricci(g, d, x, y, alpha) * k;
    };
    int k = std::max(g.degree(x), g.degree(y)) + 2;
    Rational previous = scaled(k);
    for (++k; k <= kLimitOracleCap; ++k) {
        Rational current = scaled(k);
        if (current == previous) {
            return current;
        }
        previous = std::move(current);
    }
    throw CurvatureError(fmt::format("limit oracle did not stabilize for pair ({}, {}) by k = {}", x, y, kLimitOracleCap));
}

CurvatureReport curvature_report(const Graph& g) {
    if (!is_connected(g)) {
        throw CurvatureError("curvature report requires a connected graph");
    }
    if (g.size() == 0) {
        throw CurvatureError("curvature report requires at least one edge");
    }
    const DistanceMatrix d(g);
    CurvatureReport report{g, {}, 0, false};
    for (const Edge& e : g.edges()) {
        report.rows.push_back({e.u, e.v, lly_curvature(g, d, e.u, e.v)});
    }
    report.min_kappa = report.rows.front().kappa;
    for (const auto& row : report.rows) report.min_kappa = std::min(report.min_kappa, row.kappa);
    report.positively_curved = report.min_kappa > 0;
    return report;
}

Rational lemma31_value(int dx, int dy) {
    if (dx < 1 || dy < 1) {
        throw CurvatureError(fmt::format("degrees must be positive, got ({}, {})", dx, dy));
    }
    return Rational(2, dx) + Rational(2, dy) - 2;
}

Rational lemma32_bound(int dx, int dy) {
    if (dx < 1 || dy < 1) {
        throw CurvatureError(fmt::format("degrees must be positive, got ({}, {})", dx, dy));
    }
    return Rational(1, dx) + Rational(2, dy) - 1;
}

Rational upper_bound_from_potential(const Graph& g, Vertex x, Vertex y, const Potential& f) {
    const DistanceMatrix d(g);
    require_pair(g, d, x, y);
    for (const auto& [v, value] : f) g.check_vertex(v);
    const auto domain = closed_neighborhoods(g, x, y);
    for (Vertex v : domain) {
        if (!f.contains(v)) {
            throw InfeasiblePotential(fmt::format("potential undefined at vertex {}", v), v, v);
        }
    }
    const int dxy = *d.at(x, y);
    if (f.at(y) - f.at(x) != dxy) {
        throw InfeasiblePotential(fmt::format("gradient condition f({}) - f({}) = {} violated", y, x, dxy), y, x);
    }
    for (auto a = f.begin(); a != f.end(); ++a) {
        for (auto b = std::next(a); b != f.end(); ++b) {
            HopDistance dist = d.at(a->first, b->first);
            Rational gap = a->second - b->second;
            if (gap < 0) gap = -gap;
            if (!dist) continue;
            if (gap > *dist) {
                throw InfeasiblePotential(fmt::format("Lipschitz condition violated on ({}, {}): |{}| > {}", a->first,
                                                      b->first, to_fraction_string(gap), *dist),
                                          a->first, b->first);
            }
        }
    }
    return (laplacian(g, f, x) - laplacian(g, f, y)) / dxy;
}

}  // namespace curv
