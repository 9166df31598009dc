#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slq/graph.hpp"

namespace slq {

// Unlabeled free tree, encoded as the canonical level sequence of the tree
// rooted at its centroid (for bicentroidal trees, at whichever of the two
// centroids gives the lexicographically larger sequence). Children are laid
// out in non-increasing order of their own encodings, so the sequence is the
// lexicographically greatest over all orderings, and two CanonicalTrees are
// equal exactly when the underlying unlabeled trees are isomorphic.
struct CanonicalTree {
    std::vector<int> levels;    // levels[0] == 0; 1 <= levels[i] <= levels[i-1]+1

    int order() const noexcept { return static_cast<int>(levels.size()); }
    bool operator==(const CanonicalTree&) const = default;
};

// Enumeration emits level sequences in the successor rule's native order:
// decreasing lexicographic, so the path comes first and the star last.
// "First" and "least" for trees always mean earliest in this order.
inline bool enumeration_precedes(const CanonicalTree& a, const CanonicalTree& b) {
    return a.levels > b.levels;
}

inline std::string level_sequence_string(const CanonicalTree& t) {
    std::string s;
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(t.levels[i]);
    }
    return s;
}

// Parent of position i is the nearest earlier position one level up.
inline Graph tree_to_graph(const CanonicalTree& t) {
    const int n = t.order();
    if (n < 1 || t.levels[0] != 0)
        throw std::invalid_argument("tree_to_graph: level sequence must start with 0");
    GraphBuilder b(n);
    std::vector<int> last_at(n, -1);
    last_at[0] = 0;
    for (int i = 1; i < n; ++i) {
        const int lvl = t.levels[i];
        if (lvl < 1 || lvl > t.levels[i - 1] + 1)
            throw std::invalid_argument("tree_to_graph: malformed level at position " +
                                        std::to_string(i));
        b.edge(last_at[lvl - 1], i);
        last_at[lvl] = i;
    }
    return b.build();
}

namespace detail {

inline std::vector<int> encode_rooted(const std::vector<std::vector<int>>& adj, int v, int parent,
                                      int level) {
    std::vector<std::vector<int>> subs;
    for (int u : adj[v])
        if (u != parent) subs.push_back(encode_rooted(adj, u, v, level + 1));
    std::sort(subs.begin(), subs.end(), std::greater<>());
    std::vector<int> out{level};
    for (const auto& s : subs) out.insert(out.end(), s.begin(), s.end());
    return out;
}

inline std::vector<int> centroids(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> size(n, 1), parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                stack.push_back(u);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    int best = n + 1;
    std::vector<int> cs;
    for (int v = 0; v < n; ++v) {
        int m = n - size[v];
        for (int u : adj[v])
            if (parent[u] == v) m = std::max(m, size[u]);
        if (m < best) {
            best = m;
            cs = {v};
        } else if (m == best) {
            cs.push_back(v);
        }
    }
    return cs;
}

inline CanonicalTree canonical_form_adj(const std::vector<std::vector<int>>& adj) {
    std::vector<int> seq;
    for (int c : centroids(adj)) seq = std::max(seq, encode_rooted(adj, c, -1, 0));
    return CanonicalTree{std::move(seq)};
}

} // namespace detail

inline CanonicalTree canonical_form(const Graph& g) {
    const int n = g.order();
    if (g.edge_count() != n - 1 || !is_connected(g))
        throw std::invalid_argument("canonical_form: input is not a tree");
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    return detail::canonical_form_adj(adj);
}

// Streams every unlabeled free tree on t vertices exactly once. The rooted
// successor rule walks all canonical rooted level sequences in decreasing
// lexicographic order; sequences whose rooting is not the centroid-canonical
// one are skipped, leaving one representative per free tree.
class TreeStream {
public:
    explicit TreeStream(int t) : t_(t) {
        if (t < 1) throw std::invalid_argument("TreeStream: need t >= 1");
        cur_.resize(t);
        for (int i = 0; i < t; ++i) cur_[i] = i;
    }

    std::optional<CanonicalTree> next() {
        while (!exhausted_) {
            CanonicalTree cand{cur_};
            advance();
            if (is_free_canonical(cand)) return cand;
        }
        return std::nullopt;
    }

private:
    // Successor rule: drop the deepest vertex that sits below level 1 by one
    // level, then tile the tail with copies of the block since its new parent.
    void advance() {
        int p = -1;
        for (int i = t_ - 1; i >= 0; --i)
            if (cur_[i] > 1) {
                p = i;
                break;
            }
        if (p < 0) {
            exhausted_ = true;
            return;
        }
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (cur_[i] == cur_[p] - 1) {
                q = i;
                break;
            }
        const int diff = p - q;
        cur_[p] = cur_[p] - 1;
        for (int i = p + 1; i < t_; ++i) cur_[i] = cur_[i - diff];
    }

    static bool is_free_canonical(const CanonicalTree& cand) {
        std::vector<std::vector<int>> adj(cand.order());
        std::vector<int> last_at(cand.order(), -1);
        last_at[0] = 0;
        for (int i = 1; i < cand.order(); ++i) {
            const int par = last_at[cand.levels[i] - 1];
            adj[par].push_back(i);
            adj[i].push_back(par);
            last_at[cand.levels[i]] = i;
        }
        return detail::canonical_form_adj(adj).levels == cand.levels;
    }

    int t_;
    std::vector<int> cur_;
    bool exhausted_ = false;
};

inline std::vector<CanonicalTree> enumerate_trees(int t) {
    TreeStream s(t);
    std::vector<CanonicalTree> out;
    while (auto tr = s.next()) out.push_back(std::move(*tr));
    return out;
}

// Independent counting oracle: decode every Prufer word on t symbols (all
// t^(t-2) labeled trees), canonicalize, count distinct forms. A different
// algorithm on purpose, so it and the successor-rule stream validate each
// other.
inline long long prufer_count_oracle(int t) {
    if (t < 2 || t > 9) throw std::invalid_argument("prufer_count_oracle: need 2 <= t <= 9");
    long long total = 1;
    for (int i = 0; i < t - 2; ++i) total *= t;
    std::set<std::vector<int>> forms;
    std::vector<int> word(std::max(t - 2, 0));
    std::vector<int> deg(t);
    for (long long w = 0; w < total; ++w) {
        long long rest = w;
        for (int i = 0; i < t - 2; ++i) {
            word[i] = static_cast<int>(rest % t);
            rest /= t;
        }
        std::fill(deg.begin(), deg.end(), 1);
        for (int a : word) ++deg[a];
        std::vector<std::vector<int>> adj(t);
        std::vector<char> done(t, 0);
        for (int a : word) {
            int leaf = -1;
            for (int v = 0; v < t; ++v)
                if (!done[v] && deg[v] == 1) {
                    leaf = v;
                    break;
                }
            adj[leaf].push_back(a);
            adj[a].push_back(leaf);
            done[leaf] = 1;
            --deg[a];
        }
        int u = -1, v = -1;
        for (int i = 0; i < t; ++i)
            if (!done[i]) (u < 0 ? u : v) = i;
        adj[u].push_back(v);
        adj[v].push_back(u);
        forms.insert(detail::canonical_form_adj(adj).levels);
    }
    return static_cast<long long>(forms.size());
}

inline CanonicalTree parse_level_sequence(const std::string& text) {
    std::vector<int> levels;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == i) throw std::invalid_argument("level sequence: unexpected character '" +
                                                std::string(1, text[i]) + "'");
        levels.push_back(std::stoi(text.substr(i, j - i)));
        i = j;
    }
    if (levels.empty()) throw std::invalid_argument("level sequence: empty");
    CanonicalTree t{std::move(levels)};
    tree_to_graph(t);    // validates shape
    return t;
}

} // namespace slq
