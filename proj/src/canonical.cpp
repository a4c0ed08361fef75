#include "curv/canonical.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <vector>

namespace curv {

namespace {

/// Stable 1-dimensional Weisfeiler-Leman coloring. Colors are ranks of
/// sorted signatures, so the ordered partition is isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> colors(n);
    {
        std::vector<int> degrees(n);
        for (Vertex v = 0; v < n; ++v) degrees[v] = g.degree(v);
        std::vector<int> distinct = degrees;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (Vertex v = 0; v < n; ++v) {
            colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), degrees[v]) - distinct.begin());
        }
    }
    int classes = 1 + *std::max_element(colors.begin(), colors.end());
    while (true) {
        std::vector<std::vector<int>> signatures(n);
        for (Vertex v = 0; v < n; ++v) {
            auto& sig = signatures[v];
            for (Vertex w : g.neighbors(v)) sig.push_back(colors[w]);
            std::sort(sig.begin(), sig.end());
            sig.insert(sig.begin(), colors[v]);
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& sig : signatures) rank.emplace(sig, 0);
        int next = 0;
        for (auto& [sig, r] : rank) r = next++;
        for (Vertex v = 0; v < n; ++v) colors[v] = rank[signatures[v]];
        if (next == classes) {
            return colors;
        }
        classes = next;
    }
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
        auto colors = refine_colors(g);
        // Position p may only hold vertices of the p-th smallest color.
        slot_color_ = colors;
        std::sort(slot_color_.begin(), slot_color_.end());
        colors_ = std::move(colors);
        perm_.assign(n_, -1);
        used_.assign(n_, false);
        total_bits_ = n_ * (n_ - 1) / 2;
    }

    std::uint64_t run() {
        descend(0, 0);
        return best_;
    }

private:
    void descend(int pos, std::uint64_t prefix) {
        if (pos == n_) {
            if (!have_best_ || prefix < best_) {
                best_ = prefix;
                have_best_ = true;
            }
            return;
        }
        const int prefix_bits = (pos + 1) * pos / 2;
        for (Vertex v = 0; v < n_; ++v) {
            if (used_[v] || colors_[v] != slot_color_[pos]) continue;
            std::uint64_t next = prefix;
            for (int i = 0; i < pos; ++i) {
                next = (next << 1) | (g_.adjacent(perm_[i], v) ? 1u : 0u);
            }
            if (have_best_) {
                std::uint64_t best_prefix = total_bits_ == prefix_bits ? best_ : best_ >> (total_bits_ - prefix_bits);
                if (next > best_prefix) continue;
            }
            perm_[pos] = v;
            used_[v] = true;
            descend(pos + 1, next);
            used_[v] = false;
        }
    }

    const Graph& g_;
    int n_;
    int total_bits_ = 0;
    std::vector<int> colors_;
    std::vector<int> slot_color_;
    std::vector<Vertex> perm_;
    std::vector<bool> used_;
    std::uint64_t best_ = 0;
    bool have_best_ = false;
};

}  // namespace

std::string CanonicalForm::to_string() const {
    const int total = n * (n - 1) / 2;
    std::string out(total, '0');
    for (int i = 0; i < total; ++i) {
        if ((bits >> (total - 1 - i)) & 1u) out[i] = '1';
    }
    return out;
}

CanonicalForm canonical_form(const Graph& g, int max_order) {
    const int cap = std::min(max_order, kCanonicalHardCap);
    if (g.order() > cap) {
        throw GraphError(fmt::format("canonical form limited to {} vertices, graph has {}", cap, g.order()));
    }
    if (g.order() == 1) {
        return {1, 0};
    }
    return {g.order(), CanonicalSearch(g).run()};
}

Graph canonical_graph(const CanonicalForm& form) {
    if (form.n < 1 || form.n > kCanonicalHardCap) {
        throw GraphError(fmt::format("canonical form order {} out of range", form.n));
    }
    const int total = form.n * (form.n - 1) / 2;
    std::vector<Edge> edges;
    int index = 0;
    for (Vertex j = 1; j < form.n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++index) {
            if ((form.bits >> (total - 1 - index)) & 1u) edges.push_back({i, j});
        }
    }
    return Graph(form.n, edges);
}

bool is_isomorphic(const Graph& a, const Graph& b, int max_order) {
    if (a.order() != b.order() || a.size() != b.size()) {
        return false;
    }
    return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace curv
