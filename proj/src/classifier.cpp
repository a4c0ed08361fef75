#include "curv/classifier.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <string_view>
#include <thread>

#include "curv/families.hpp"
#include "curv/formats.hpp"

namespace curv {

namespace {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any task is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
}

int resolve_threads(int threads) { return threads > 0 ? threads : default_thread_count(); }

std::vector<Survivor> positively_curved(const std::vector<Graph>& candidates, int threads) {
    std::vector<std::optional<CurvatureReport>> reports(candidates.size());
    parallel_for(candidates.size(), resolve_threads(threads),
                 [&](std::size_t i) { reports[i] = curvature_report(candidates[i]); });
    std::vector<Survivor> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (reports[i]->positively_curved) {
            out.push_back({canonical_form(candidates[i], kCanonicalHardCap), candidates[i], std::move(*reports[i])});
        }
    }
    return out;
}

bool matches_known(const std::vector<Survivor>& survivors, int n_max) {
    std::set<CanonicalForm> expected;
    for (const Graph& g : known_classification()) {
        if (g.order() <= n_max) expected.insert(canonical_form(g));
    }
    std::set<CanonicalForm> found;
    for (const auto& s : survivors) found.insert(s.form);
    return found == expected;
}

EnumerationFilter theorem_hypotheses() {
    EnumerationFilter filter;
    filter.require_connected = true;
    filter.min_degree = 2;
    filter.c4_free = true;
    return filter;
}

void record(VerificationReport& report, const Graph& g, Vertex u, Vertex v, std::string detail) {
    report.violations.push_back({emit_graph6(g), u, v, std::move(detail)});
}

}  // namespace

bool EnumerationFilter::accepts(const Graph& g) const {
    if (require_connected && !is_connected(g)) return false;
    if (min_degree > 0 && curv::min_degree(g) < min_degree) return false;
    if (c4_free && !is_c4_free(g)) return false;
    if (triangle_free && !is_triangle_free(g)) return false;
    if (max_pendant_edges) {
        int pendant = 0;
        for (const Edge& e : g.edges()) {
            if (g.degree(e.u) == 1 || g.degree(e.v) == 1) ++pendant;
        }
        if (pendant > *max_pendant_edges) return false;
    }
    return true;
}

std::vector<Graph> enumerate_graphs(int n, const EnumerationFilter& filter) {
    if (n < 1 || n > kEnumerationCap) {
        throw GraphError(fmt::format("enumeration supports 1..{} vertices, got {}", kEnumerationCap, n));
    }
    std::set<CanonicalForm> seen;
    std::vector<CanonicalForm> level{canonical_form(Graph(n, {}))};
    seen.insert(level.front());
    while (!level.empty()) {
        std::set<CanonicalForm> next;
        for (const CanonicalForm& form : level) {
            const Graph g = canonical_graph(form);
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v)) continue;
                    Graph h = g.with_edge(u, v);
                    if (filter.c4_free && edge_in_cycle(h, u, v, 4)) continue;
                    if (filter.triangle_free && edge_in_cycle(h, u, v, 3)) continue;
                    CanonicalForm cf = canonical_form(h);
                    if (!seen.contains(cf)) next.insert(cf);
                }
            }
        }
        seen.insert(next.begin(), next.end());
        level.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    for (const CanonicalForm& form : seen) {
        Graph g = canonical_graph(form);
        if (filter.accepts(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> known_classification() {
    return {cycle(3), cycle(5), friendship(2), friendship(3), graph_T()};
}

int default_thread_count() {
    if (const char* env = std::getenv("CURV_THREADS")) {
        std::string_view text(env);
        int value = 0;
        auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && p == text.data() + text.size() && value > 0) return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ClassificationResult classify_theorem_15(int n_max, int threads) {
    if (n_max < 3 || n_max > kEnumerationCap) {
        throw GraphError(fmt::format("classification supports n_max in 3..{}, got {}", kEnumerationCap, n_max));
    }
    ClassificationResult result;
    result.n_max = n_max;
    for (int n = 3; n <= n_max; ++n) {
        auto found = positively_curved(enumerate_graphs(n, theorem_hypotheses()), threads);
        for (auto& s : found) result.survivors.push_back(std::move(s));
    }
    result.matched_known_set = matches_known(result.survivors, n_max);
    return result;
}

ClassificationResult classify_corpus(std::span<const Graph> corpus, int threads) {
    const EnumerationFilter hypotheses = theorem_hypotheses();
    std::set<CanonicalForm> seen;
    std::vector<Graph> candidates;
    ClassificationResult result;
    for (const Graph& g : corpus) {
        result.n_max = std::max(result.n_max, g.order());
        if (!hypotheses.accepts(g)) continue;
        if (seen.insert(canonical_form(g, kCanonicalHardCap)).second) candidates.push_back(g);
    }
    result.survivors = positively_curved(candidates, threads);
    std::sort(result.survivors.begin(), result.survivors.end(),
              [](const Survivor& a, const Survivor& b) { return a.form < b.form; });
    result.matched_known_set = matches_known(result.survivors, result.n_max);
    return result;
}

VerificationReport verify_lemma_31(std::span<const Graph> corpus) {
    VerificationReport report{.suite = "lemma31"};
    for (const Graph& g : corpus) {
        ++report.graphs_checked;
        const DistanceMatrix d(g);
        for (const Edge& e : g.edges()) {
            if (edge_in_cycle(g, e.u, e.v, 3) || edge_in_cycle(g, e.u, e.v, 4) || edge_in_cycle(g, e.u, e.v, 5)) {
                continue;
            }
            ++report.items_checked;
            const Rational kappa = lly_curvature(g, d, e.u, e.v);
            const Rational expected = lemma31_value(g.degree(e.u), g.degree(e.v));
            if (kappa != expected) {
                record(report, g, e.u, e.v,
                       fmt::format("kappa {} != {}", to_fraction_string(kappa), to_fraction_string(expected)));
            }
        }
    }
    return report;
}

VerificationReport verify_lemma_32(std::span<const Graph> corpus) {
    VerificationReport report{.suite = "lemma32"};
    for (const Graph& g : corpus) {
        ++report.graphs_checked;
        const DistanceMatrix d(g);
        for (const Edge& e : g.edges()) {
            if (edge_in_cycle(g, e.u, e.v, 3) || edge_in_cycle(g, e.u, e.v, 4)) continue;
            ++report.items_checked;
            const Rational kappa = lly_curvature(g, d, e.u, e.v);
            const int du = g.degree(e.u);
            const int dv = g.degree(e.v);
            const Rational bound = std::min(lemma32_bound(du, dv), lemma32_bound(dv, du));
            if (kappa > bound) {
                record(report, g, e.u, e.v,
                       fmt::format("kappa {} > bound {}", to_fraction_string(kappa), to_fraction_string(bound)));
            }
        }
    }
    return report;
}

VerificationReport verify_lemma_33(std::span<const Graph> corpus) {
    VerificationReport report{.suite = "lemma33"};
    for (const Graph& g : corpus) {
        if (!is_connected(g) || g.size() == 0 || !is_c4_free(g)) continue;
        const CurvatureReport curvature = curvature_report(g);
        if (!curvature.positively_curved) continue;
        ++report.graphs_checked;
        for (const Edge& e : g.edges()) {
            const int du = g.degree(e.u);
            const int dv = g.degree(e.v);
            const bool applies = (du >= 4 && dv >= 2) || (dv >= 4 && du >= 2);
            if (!applies) continue;
            ++report.items_checked;
            if (!edge_in_cycle(g, e.u, e.v, 3)) {
                record(report, g, e.u, e.v, fmt::format("degrees ({}, {}) but no triangle on the edge", du, dv));
            }
        }
    }
    return report;
}

VerificationReport verify_edge_reduction(std::span<const Graph> corpus) {
    VerificationReport report{.suite = "edge-reduction"};
    for (const Graph& g : corpus) {
        if (!is_connected(g) || g.size() == 0) continue;
        ++report.graphs_checked;
        const DistanceMatrix d(g);
        const Rational edge_min = curvature_report(g).min_kappa;
        for (Vertex x = 0; x < g.order(); ++x) {
            for (Vertex y = x + 1; y < g.order(); ++y) {
                if (g.adjacent(x, y)) continue;
                ++report.items_checked;
                const Rational kappa = lly_curvature(g, d, x, y);
                if (kappa < edge_min) {
                    record(report, g, x, y,
                           fmt::format("pair kappa {} < edge minimum {}", to_fraction_string(kappa),
                                       to_fraction_string(edge_min)));
                }
            }
        }
    }
    return report;
}

VerificationReport verify_theorem_14(const ClassificationResult& result) {
    VerificationReport report{.suite = "theorem14"};
    int largest = 0;
    for (const auto& s : result.survivors) {
        ++report.graphs_checked;
        ++report.items_checked;
        const int delta = max_degree(s.graph);
        largest = std::max(largest, delta);
        if (delta > 6) {
            record(report, s.graph, -1, -1, fmt::format("survivor has maximum degree {}", delta));
        }
    }
    report.notes.push_back(fmt::format("max degree among survivors: {}", largest));
    if (result.n_max >= 7) {
        const CanonicalForm f3 = canonical_form(friendship(3));
        const bool attained = std::any_of(result.survivors.begin(), result.survivors.end(),
                                          [&](const Survivor& s) { return s.form == f3; });
        if (!attained || largest != 6) {
            record(report, friendship(3), -1, -1, "degree bound 6 not attained by F3 among survivors");
        } else {
            report.notes.push_back("bound 6 attained by F3");
        }
    }
    return report;
}

VerificationReport verify_theorem_14(int n_max) { return verify_theorem_14(classify_theorem_15(n_max)); }

VerificationReport verify_theorem_15(const ClassificationResult& result) {
    VerificationReport report{.suite = "theorem15"};
    report.graphs_checked = result.survivors.size();
    report.items_checked = result.survivors.size();
    std::set<CanonicalForm> expected;
    for (const Graph& g : known_classification()) {
        if (g.order() <= result.n_max) expected.insert(canonical_form(g));
    }
    for (const auto& s : result.survivors) {
        report.notes.push_back(fmt::format("survivor {} min kappa {}", emit_graph6(s.graph),
                                           to_fraction_string(s.report.min_kappa)));
        if (!expected.contains(s.form)) {
            record(report, s.graph, -1, -1, "positively curved graph outside {C3, C5, F2, F3, T}");
        }
    }
    for (const CanonicalForm& form : expected) {
        const bool present = std::any_of(result.survivors.begin(), result.survivors.end(),
                                         [&](const Survivor& s) { return s.form == form; });
        if (!present) record(report, canonical_graph(form), -1, -1, "expected member missing from survivors");
    }
    return report;
}

VerificationReport verify_theorem_15(int n_max) { return verify_theorem_15(classify_theorem_15(n_max)); }

VerificationReport verify_pendant_corollary() {
    VerificationReport report{.suite = "pendant-corollary"};
    const Graph g = graph_F3_prime();
    report.graphs_checked = 1;
    report.items_checked = 1;
    const auto curvature = curvature_report(g);
    if (!curvature.positively_curved) {
        record(report, g, -1, -1, fmt::format("min kappa {} is not positive", to_fraction_string(curvature.min_kappa)));
    }
    if (max_degree(g) != 7) {
        record(report, g, -1, -1, fmt::format("maximum degree {} != 7", max_degree(g)));
    }
    if (count_degree(g, 1) != 1) {
        record(report, g, -1, -1, fmt::format("{} pendant vertices, expected 1", count_degree(g, 1)));
    }
    if (!is_c4_free(g)) {
        record(report, g, -1, -1, "graph contains a 4-cycle");
    }
    report.notes.push_back(fmt::format("F3' min kappa {}", to_fraction_string(curvature.min_kappa)));
    return report;
}

Graph random_connected_graph(std::mt19937_64& rng, int max_order) {
    std::uniform_int_distribution<int> order_dist(2, std::max(2, max_order));
    std::uniform_real_distribution<double> density(0.25, 0.75);
    const int n = order_dist(rng);
    const double p = density(rng);
    std::bernoulli_distribution coin(p);
    while (true) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.push_back({u, v});
            }
        }
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

VerificationReport verify_duality(int samples, std::uint64_t seed, int max_order) {
    VerificationReport report{.suite = "duality"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(1, 5);
    for (int s = 0; s < samples; ++s) {
        const Graph g = random_connected_graph(rng, max_order);
        const DistanceMatrix d(g);
        auto random_distribution = [&] {
            std::vector<Vertex> vertices(g.order());
            for (Vertex v = 0; v < g.order(); ++v) vertices[v] = v;
            std::shuffle(vertices.begin(), vertices.end(), rng);
            std::uniform_int_distribution<int> size_dist(1, g.order());
            const int size = size_dist(rng);
            std::vector<int> w(size);
            int total = 0;
            for (auto& x : w) total += (x = weight(rng));
            std::vector<std::pair<Vertex, Rational>> masses;
            for (int i = 0; i < size; ++i) masses.emplace_back(vertices[i], Rational(w[i], total));
            return Distribution::from_masses(std::move(masses));
        };
        const Distribution m1 = random_distribution();
        const Distribution m2 = random_distribution();
        ++report.graphs_checked;
        ++report.items_checked;
        const auto primal = wasserstein(m1, m2, d);
        const auto dual = kantorovich_dual(m1, m2, d);
        if (primal.value != dual.value) {
            record(report, g, -1, -1,
                   fmt::format("sample {}: primal {} != dual {}", s, to_fraction_string(primal.value),
                               to_fraction_string(dual.value)));
        }
        Rational cost;
        if (!is_valid_coupling(m1, m2, primal.certificate.coupling, d, cost) || cost != primal.value) {
            record(report, g, -1, -1, fmt::format("sample {}: coupling certificate invalid", s));
        }
        if (!is_lipschitz(dual.certificate.potential, d) ||
            dual_objective(dual.certificate.potential, m1, m2) != dual.value) {
            record(report, g, -1, -1, fmt::format("sample {}: Lipschitz certificate invalid", s));
        }
    }
    return report;
}

VerificationReport verify_oracle(std::span<const Graph> graphs) {
    VerificationReport report{.suite = "oracle"};
    for (const Graph& g : graphs) {
        if (!is_connected(g)) continue;
        ++report.graphs_checked;
        const DistanceMatrix d(g);
        for (const Edge& e : g.edges()) {
            ++report.items_checked;
            const Rational direct = lly_curvature(g, d, e.u, e.v);
            const Rational limit = lly_via_limit(g, d, e.u, e.v);
            if (direct != limit) {
                record(report, g, e.u, e.v,
                       fmt::format("limit-free {} != limit {}", to_fraction_string(direct), to_fraction_string(limit)));
            }
        }
    }
    return report;
}

std::vector<Graph> named_families() {
    std::vector<Graph> out{graph_T(), friendship(2), friendship(3), graph_F3_prime(), graph_G1(), graph_F()};
    for (int n = 3; n <= 10; ++n) out.push_back(cycle(n));
    for (int n = 2; n <= 5; ++n) out.push_back(complete(n));
    for (int n = 3; n <= 6; ++n) out.push_back(star(n));
    for (int n = 3; n <= 6; ++n) out.push_back(path(n));
    return out;
}

std::vector<Graph> connected_graphs_up_to(int max_order) {
    EnumerationFilter connected;
    connected.require_connected = true;
    std::vector<Graph> out;
    for (int n = 2; n <= max_order; ++n) {
        for (Graph& g : enumerate_graphs(n, connected)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> default_lemma_corpus() {
    auto corpus = connected_graphs_up_to(6);
    for (Graph& g : named_families()) corpus.push_back(std::move(g));
    return corpus;
}

std::vector<Graph> default_oracle_corpus(int random_count, std::uint64_t seed) {
    auto corpus = named_families();
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) corpus.push_back(random_connected_graph(rng, 7));
    return corpus;
}

}  // namespace curv
