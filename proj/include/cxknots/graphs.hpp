/**
 * Complexes of connected and two-connected simple graphs on labeled vertices.
 *
 * A graph with e edges is an (e-1)-dimensional face of the simplex whose
 * vertices are the C(a,2) possible edges; the face orientation is fixed once
 * and for all by the lexicographic order of the edge list.  The complex of
 * connected (two-connected) graphs is the quotient by the faces failing the
 * predicate, realized by simply deleting those generators: the boundary
 * drops one edge at a time with the alternating sign of its lexicographic
 * position, and deletions leaving the predicate class contribute zero.
 */
#pragma once

#include <cstdint>

#include "complex.hpp"
#include "reps.hpp"

namespace cxknots {

struct SimpleGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // 1 <= i < j <= vertex_count, lex sorted

    SimpleGraph(int a, std::vector<std::pair<int, int>> e) : vertex_count(a), edges(std::move(e)) {
        if (a < 2) throw std::invalid_argument("at least two vertices required");
        for (auto& [i, j] : edges) {
            if (i > j) std::swap(i, j);
            if (i < 1 || j > a || i == j) throw std::invalid_argument("bad edge");
        }
        std::sort(edges.begin(), edges.end());
        for (size_t k = 0; k + 1 < edges.size(); ++k)
            if (edges[k] == edges[k + 1]) throw std::invalid_argument("multi-edge");
    }
};

inline bool is_connected(const SimpleGraph& g) {
    int a = g.vertex_count;
    std::vector<std::vector<int>> adj(a + 1);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> seen(a + 1, 0);
    std::vector<int> stack = {1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == a;
}

/// connected, and still connected after removing any single vertex
inline bool is_two_connected(const SimpleGraph& g) {
    if (!is_connected(g)) return false;
    int a = g.vertex_count;
    for (int drop = 1; drop <= a; ++drop) {
        std::vector<std::vector<int>> adj(a + 1);
        for (auto [i, j] : g.edges)
            if (i != drop && j != drop) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        int start = drop == 1 ? 2 : 1;
        std::vector<char> seen(a + 1, 0);
        std::vector<int> stack = {start};
        seen[start] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != a - 1) return false;
    }
    return true;
}

enum class GraphPredicate { connected, two_connected };

/**
 * Generator bookkeeping for a graph complex: graphs are edge-subset masks of
 * K_a, ordered by mask value within each degree.
 */
class GraphComplex {
  public:
    GraphComplex(int a, GraphPredicate pred) : a_(a), pred_(pred) {
        if (a < 2 || a > 7) throw std::invalid_argument("vertex count must be in 2..7");
        int k = 0;
        for (int i = 1; i <= a; ++i)
            for (int j = i + 1; j <= a; ++j) {
                edge_of_index_.push_back({i, j});
                index_of_edge_[{i, j}] = k++;
            }
        int ne = k;
        for (uint32_t mask = 1; mask < (1u << ne); ++mask) {
            if (!passes(mask)) continue;
            int e = __builtin_popcount(mask);
            masks_[e - 1].push_back(mask);
        }
        int lo = masks_.empty() ? 0 : masks_.begin()->first;
        int hi = masks_.empty() ? 0 : masks_.rbegin()->first;
        complex_.emplace(lo, hi);
        for (auto& [d, ms] : masks_) {
            std::sort(ms.begin(), ms.end());
            complex_->set_rank(d, static_cast<int>(ms.size()));
            for (size_t i = 0; i < ms.size(); ++i) index_[ms[i]] = static_cast<int>(i);
            std::vector<std::string> labels;
            for (uint32_t m : ms) labels.push_back(mask_label(m));
            complex_->set_labels(d, std::move(labels));
        }
        for (int d = lo + 1; d <= hi; ++d) {
            SparseIntMatrix b(complex_->rank_at(d - 1), complex_->rank_at(d));
            auto it = masks_.find(d);
            if (it != masks_.end() && masks_.count(d - 1)) {
                for (uint32_t m : it->second) {
                    int col = index_.at(m);
                    int pos = 0;
                    for (int bit = 0; bit < ne; ++bit) {
                        if (!(m >> bit & 1)) continue;
                        uint32_t face = m & ~(1u << bit);
                        auto fit = index_.find(face);
                        if (fit != index_.end() && __builtin_popcount(face) == d)
                            b.add(fit->second, col, Int(pos % 2 ? -1 : 1));
                        ++pos;
                    }
                }
            }
            complex_->set_boundary(d, std::move(b));
        }
    }

    int vertex_count() const { return a_; }
    const IntegerChainComplex& complex() const { return *complex_; }
    const std::vector<uint32_t>& generators(int degree) const {
        static const std::vector<uint32_t> none;
        auto it = masks_.find(degree);
        return it == masks_.end() ? none : it->second;
    }
    int index_of(uint32_t mask) const { return index_.at(mask); }

    uint32_t mask_of(const SimpleGraph& g) const {
        uint32_t m = 0;
        for (auto e : g.edges) m |= 1u << index_of_edge_.at(e);
        return m;
    }

    std::string mask_label(uint32_t m) const {
        std::string s;
        for (size_t bit = 0; bit < edge_of_index_.size(); ++bit)
            if (m >> bit & 1) {
                if (!s.empty()) s += ",";
                s += std::to_string(edge_of_index_[bit].first) +
                     std::to_string(edge_of_index_[bit].second);
            }
        return s;
    }

    /// action of a vertex permutation on the degree-d generators, with the
    /// sign of the induced permutation of the lex-ordered edge list
    SparseIntMatrix permutation_action(int degree, const Perm& p) const {
        const auto& gens = generators(degree);
        SparseIntMatrix m(static_cast<int>(gens.size()), static_cast<int>(gens.size()));
        int ne = static_cast<int>(edge_of_index_.size());
        for (size_t col = 0; col < gens.size(); ++col) {
            uint32_t g = gens[col];
            std::vector<int> image_positions;
            uint32_t img = 0;
            for (int bit = 0; bit < ne; ++bit)
                if (g >> bit & 1) {
                    auto [i, j] = edge_of_index_[bit];
                    int pi = p[i - 1], pj = p[j - 1];
                    if (pi > pj) std::swap(pi, pj);
                    int nbit = index_of_edge_.at({pi, pj});
                    img |= 1u << nbit;
                    image_positions.push_back(nbit);
                }
            int inv = 0;
            for (size_t x = 0; x < image_positions.size(); ++x)
                for (size_t y = x + 1; y < image_positions.size(); ++y)
                    if (image_positions[x] > image_positions[y]) ++inv;
            m.set(index_.at(img), static_cast<int>(col), Int(inv % 2 ? -1 : 1));
        }
        return m;
    }

  private:
    bool passes(uint32_t mask) const {
        std::vector<std::pair<int, int>> edges;
        for (size_t bit = 0; bit < edge_of_index_.size(); ++bit)
            if (mask >> bit & 1) edges.push_back(edge_of_index_[bit]);
        SimpleGraph g(a_, std::move(edges));
        return pred_ == GraphPredicate::connected ? is_connected(g) : is_two_connected(g);
    }

    int a_;
    GraphPredicate pred_;
    std::vector<std::pair<int, int>> edge_of_index_;
    std::map<std::pair<int, int>, int> index_of_edge_;
    std::map<int, std::vector<uint32_t>> masks_;  // degree -> sorted masks
    std::map<uint32_t, int> index_;
    std::optional<IntegerChainComplex> complex_;
};

inline IntegerChainComplex graph_complex(int a, GraphPredicate pred) {
    return GraphComplex(a, pred).complex();
}

/**
 * The three 4-dimensional matching chains of the two-connected complex on
 * four vertices.  The chain of matching m is the part of the boundary of the
 * complete-graph face supported on the two 5-edge graphs missing an edge of
 * m; their sum is the whole boundary of the complete-graph face.
 */
struct MatchingBasis {
    GraphComplex gc{4, GraphPredicate::two_connected};
    std::array<std::vector<Int>, 3> chains;      // labels 2, 3, 4
    std::vector<Int> full_face_boundary;

    MatchingBasis() {
        const IntegerChainComplex& c = gc.complex();
        uint32_t full = (1u << 6) - 1;
        int full_col = gc.index_of(full);
        int n4 = c.rank_at(4);
        full_face_boundary.assign(n4, Int(0));
        const SparseIntMatrix& b5 = c.boundary(5);
        for (int r = 0; r < n4; ++r) full_face_boundary[r] = b5.get(r, full_col);
        for (int label : matching_labels()) {
            std::vector<Int> chain(n4, Int(0));
            for (auto [x, y] : matching_pairs(label)) {
                SimpleGraph missing(4, complement_edges(x, y));
                int row = gc.index_of(gc.mask_of(missing));
                chain[row] = full_face_boundary[row];
            }
            chains[label - 2] = std::move(chain);
        }
    }

    const std::vector<Int>& chain(int label) const { return chains[label - 2]; }

  private:
    static std::vector<std::pair<int, int>> complement_edges(int x, int y) {
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                if (!(i == x && j == y)) e.push_back({i, j});
        return e;
    }
};

}  // namespace cxknots
