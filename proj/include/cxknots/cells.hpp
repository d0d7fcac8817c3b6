/**
 * Fox-Neuwirth-Fuks cellular models of configuration spaces B(R^k, n).
 *
 * A cell is a (k-1)-level nested ordered composition of n: level 1 groups
 * the points by their first coordinate, each group is recursively composed
 * at the next level, and points inside a final group are totally ordered by
 * the last coordinate.  For k = 2 these are the classical cells e(a_1..a_m)
 * of the plane configuration space.  The dimension of a cell is n plus the
 * number of groups over all levels, and the homology of the resulting chain
 * complex is the Borel-Moore homology of B(R^k, n) with the local system
 * attached to a symmetric-group representation.
 *
 * Canonical point labels inside a cell are lexicographic by group path; for
 * k = 2 this reads "by increasing real part, then by decreasing imaginary
 * part".  Orientations come from the ordered wedge of coordinate
 * differentials (group coordinates level by level, then the last coordinate
 * of every point in label order).  The boundary merges two adjacent groups
 * of one level, interleaving their children in all possible ways; the sign
 * of a term is
 *
 *     (-1)^(groups before the merge level + index of the left group + 1)
 *     x (sign of the induced permutation of deeper-level groups)
 *     x (sign of the induced point permutation),
 *
 * and its coefficient is the representation matrix of the induced point
 * relabeling.  This convention reproduces the reference differential of the
 * threefold matching cover term for term (see tests/data).
 */
#pragma once

#include <functional>

#include "complex.hpp"
#include "reps.hpp"

namespace cxknots {

struct CellTree {
    std::vector<CellTree> sub;  // children groups; empty at the final level
    int points = 0;             // point count, meaningful at the final level only

    static CellTree leaf(int pts) { return CellTree{{}, pts}; }
    static CellTree node(std::vector<CellTree> children) { return CellTree{std::move(children), 0}; }

    bool operator==(const CellTree&) const = default;
};

struct NestedCell {
    int k = 2;                    // coordinate depth; depth of grouping is k-1
    std::vector<CellTree> groups; // level-1 groups

    bool operator==(const NestedCell&) const = default;

    int depth() const { return k - 1; }

    int n() const {
        int total = 0;
        for (const CellTree& g : groups) total += count_points(g);
        return total;
    }

    int dimension() const {
        int dim = n();
        for (const CellTree& g : groups) dim += count_groups(g);
        return dim;
    }

    /// "e(2,1,1)" for k = 2, nested brackets like "e([[1],[1,1]])" for k >= 3
    std::string name() const {
        std::string s = "e(";
        for (size_t i = 0; i < groups.size(); ++i) {
            if (i) s += ",";
            s += render(groups[i]);
        }
        return s + ")";
    }

    static int count_points(const CellTree& t) {
        if (t.sub.empty()) return t.points;
        int c = 0;
        for (const CellTree& s : t.sub) c += count_points(s);
        return c;
    }

    static int count_groups(const CellTree& t) {
        int c = 1;
        for (const CellTree& s : t.sub) c += count_groups(s);
        return c;
    }

  private:
    static std::string render(const CellTree& t) {
        if (t.sub.empty()) return std::to_string(t.points);
        std::string s = "[";
        for (size_t i = 0; i < t.sub.size(); ++i) {
            if (i) s += ",";
            s += render(t.sub[i]);
        }
        return s + "]";
    }
};

/// k = 2 helper: cell from an ordered composition
inline NestedCell fuks_cell(const std::vector<int>& composition) {
    NestedCell c;
    c.k = 2;
    for (int a : composition) c.groups.push_back(CellTree::leaf(a));
    return c;
}

namespace detail {

inline void compositions(int n, std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int first = 1; first <= rest; ++first) {
            cur.push_back(first);
            rec(rest - first);
            cur.pop_back();
        }
    };
    rec(n);
}

inline std::vector<CellTree> enum_trees(int n, int depth);

inline std::vector<std::vector<CellTree>> enum_levels(int n, int depth) {
    std::vector<std::vector<int>> comps;
    compositions(n, comps);
    std::vector<std::vector<CellTree>> out;
    for (const auto& comp : comps) {
        std::vector<std::vector<CellTree>> choices;
        for (int part : comp) choices.push_back(enum_trees(part, depth));
        std::vector<size_t> pick(comp.size(), 0);
        while (true) {
            std::vector<CellTree> row;
            for (size_t i = 0; i < comp.size(); ++i) row.push_back(choices[i][pick[i]]);
            out.push_back(std::move(row));
            size_t i = 0;
            for (; i < comp.size(); ++i) {
                if (++pick[i] < choices[i].size()) break;
                pick[i] = 0;
            }
            if (i == comp.size()) break;
        }
    }
    return out;
}

inline std::vector<CellTree> enum_trees(int n, int depth) {
    std::vector<CellTree> out;
    if (depth == 1) {
        out.push_back(CellTree::leaf(n));
        return out;
    }
    for (auto& children : enum_levels(n, depth - 1)) out.push_back(CellTree::node(std::move(children)));
    return out;
}

/// labeled tree: leaves carry the actual point labels in order
struct LTree {
    std::vector<LTree> sub;
    std::vector<int> pts;
};

inline LTree label_tree(const CellTree& t, int& next) {
    LTree l;
    if (t.sub.empty()) {
        for (int i = 0; i < t.points; ++i) l.pts.push_back(next++);
    } else {
        for (const CellTree& s : t.sub) l.sub.push_back(label_tree(s, next));
    }
    return l;
}

inline void collect_points(const LTree& t, std::vector<int>& out) {
    if (t.sub.empty()) {
        out.insert(out.end(), t.pts.begin(), t.pts.end());
        return;
    }
    for (const LTree& s : t.sub) collect_points(s, out);
}

inline CellTree strip_labels(const LTree& t) {
    if (t.sub.empty()) return CellTree::leaf(static_cast<int>(t.pts.size()));
    std::vector<CellTree> children;
    for (const LTree& s : t.sub) children.push_back(strip_labels(s));
    return CellTree::node(std::move(children));
}

struct GroupRef {
    std::vector<int> path;  // child indices from the top level
    const LTree* node;
};

inline void groups_at_level(const std::vector<LTree>& top, int level,
                            std::vector<GroupRef>& out) {
    std::function<void(const LTree&, std::vector<int>&, int)> rec =
        [&](const LTree& t, std::vector<int>& path, int l) {
            if (l == level) {
                out.push_back({path, &t});
                return;
            }
            for (size_t i = 0; i < t.sub.size(); ++i) {
                path.push_back(static_cast<int>(i));
                rec(t.sub[i], path, l + 1);
                path.pop_back();
            }
        };
    std::vector<int> path;
    for (size_t i = 0; i < top.size(); ++i) {
        path.push_back(static_cast<int>(i));
        rec(top[i], path, 1);
        path.pop_back();
    }
}

template <typename T>
inline int list_perm_sign(const std::vector<T>& old_order, const std::vector<T>& new_order) {
    std::map<T, int> index;
    for (size_t i = 0; i < old_order.size(); ++i) index[old_order[i]] = static_cast<int>(i);
    std::vector<int> arr;
    for (const T& v : new_order) arr.push_back(index.at(v));
    int inv = 0;
    for (size_t i = 0; i < arr.size(); ++i)
        for (size_t j = i + 1; j < arr.size(); ++j)
            if (arr[i] > arr[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

inline void interleavings(int a, int b, std::vector<std::vector<int>>& out) {
    // all merges of index lists [0..a) and [a..a+b) preserving relative order
    out.clear();
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int ia, int ib) {
        if (ia == a && ib == b) {
            out.push_back(cur);
            return;
        }
        if (ia < a) {
            cur.push_back(ia);
            rec(ia + 1, ib);
            cur.pop_back();
        }
        if (ib < b) {
            cur.push_back(a + ib);
            rec(ia, ib + 1);
            cur.pop_back();
        }
    };
    rec(0, 0);
}

inline LTree* locate(std::vector<LTree>& top, const std::vector<int>& path) {
    LTree* cur = &top[path[0]];
    for (size_t i = 1; i < path.size(); ++i) cur = &cur->sub[path[i]];
    return cur;
}

inline std::vector<int> sorted_points(const LTree& t) {
    std::vector<int> p;
    collect_points(t, p);
    std::sort(p.begin(), p.end());
    return p;
}

}  // namespace detail

struct RawBoundaryTerm {
    int sign;            // incidence sign
    NestedCell cell;     // the codimension-one face
    Perm relabel;        // canonical E label -> canonical face label
};

/// codimension-one faces of a cell with incidence signs and point relabelings
inline std::vector<RawBoundaryTerm> cell_boundary(const NestedCell& cell) {
    using namespace detail;
    std::vector<RawBoundaryTerm> out;
    int depth = cell.depth();
    int n = cell.n();
    int next = 1;
    std::vector<LTree> top;
    for (const CellTree& g : cell.groups) top.push_back(label_tree(g, next));

    std::vector<int> groups_per_level(depth, 0);
    for (int l = 1; l <= depth; ++l) {
        std::vector<GroupRef> refs;
        groups_at_level(top, l, refs);
        groups_per_level[l - 1] = static_cast<int>(refs.size());
    }

    for (int level = 1; level <= depth; ++level) {
        std::vector<GroupRef> refs;
        groups_at_level(top, level, refs);
        for (size_t gi = 0; gi + 1 < refs.size(); ++gi) {
            const auto& left = refs[gi];
            const auto& right = refs[gi + 1];
            bool siblings =
                left.path.size() == right.path.size() &&
                std::equal(left.path.begin(), left.path.end() - 1, right.path.begin()) &&
                right.path.back() == left.path.back() + 1;
            if (!siblings) continue;
            int j = static_cast<int>(gi) + 1;  // canonical index of the left group
            int m_less = 0;
            for (int l = 0; l < level - 1; ++l) m_less += groups_per_level[l];
            int base = (m_less + j + 1) % 2 ? -1 : 1;

            // children as ordered units: subtrees below the merge level,
            // single points at the deepest level
            std::vector<LTree> ch1, ch2;
            if (level < depth) {
                ch1 = left.node->sub;
                ch2 = right.node->sub;
            } else {
                for (int p : left.node->pts) ch1.push_back(LTree{{}, {p}});
                for (int p : right.node->pts) ch2.push_back(LTree{{}, {p}});
            }
            std::vector<std::vector<int>> shuffles;
            interleavings(static_cast<int>(ch1.size()), static_cast<int>(ch2.size()), shuffles);
            for (const auto& sh : shuffles) {
                std::vector<LTree> all = ch1;
                all.insert(all.end(), ch2.begin(), ch2.end());
                LTree merged;
                if (level < depth) {
                    for (int idx : sh) merged.sub.push_back(all[idx]);
                } else {
                    for (int idx : sh) merged.pts.push_back(all[idx].pts[0]);
                }
                // face tree: replace the two siblings by the merged group
                std::vector<LTree> ftop = top;
                if (left.path.size() == 1) {
                    ftop.erase(ftop.begin() + left.path[0], ftop.begin() + left.path[0] + 2);
                    ftop.insert(ftop.begin() + left.path[0], merged);
                } else {
                    std::vector<int> parent_path(left.path.begin(), left.path.end() - 1);
                    LTree* parent = locate(ftop, parent_path);
                    int pos = left.path.back();
                    parent->sub.erase(parent->sub.begin() + pos, parent->sub.begin() + pos + 2);
                    parent->sub.insert(parent->sub.begin() + pos, merged);
                }
                // induced point permutation: E label -> position in face order
                std::vector<int> fpoints;
                for (const LTree& g : ftop) collect_points(g, fpoints);
                Perm relabel(n);
                for (int pos = 0; pos < n; ++pos) relabel[fpoints[pos] - 1] = pos + 1;
                std::vector<int> identity(n);
                for (int i = 0; i < n; ++i) identity[i] = i + 1;
                int sgn = base * list_perm_sign(identity, fpoints);
                // deeper-level group permutations
                for (int r = level + 1; r <= depth; ++r) {
                    std::vector<GroupRef> eg, fg;
                    groups_at_level(top, r, eg);
                    groups_at_level(ftop, r, fg);
                    std::vector<std::vector<int>> ekeys, fkeys;
                    for (const auto& g : eg) ekeys.push_back(sorted_points(*g.node));
                    for (const auto& g : fg) fkeys.push_back(sorted_points(*g.node));
                    sgn *= list_perm_sign(ekeys, fkeys);
                }
                NestedCell face;
                face.k = cell.k;
                for (const LTree& g : ftop) face.groups.push_back(strip_labels(g));
                out.push_back({sgn, std::move(face), std::move(relabel)});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

/// all cells of the k = 2 decomposition of B(C, n), one per ordered composition
inline std::vector<NestedCell> fuks_cells(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("fuks_cells requires 2 <= n <= 6");
    std::vector<std::vector<int>> comps;
    detail::compositions(n, comps);
    std::vector<NestedCell> cells;
    for (const auto& c : comps) cells.push_back(fuks_cell(c));
    std::sort(cells.begin(), cells.end(), [](const NestedCell& a, const NestedCell& b) {
        if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
        return a.name() < b.name();
    });
    return cells;
}

/// all cells of the nested model of B(R^k, n)
inline std::vector<NestedCell> nested_cells(int k, int n) {
    if (k == 2) return fuks_cells(n);
    if (k < 2) throw std::invalid_argument("coordinate depth k >= 2 required");
    if (n < 1 || n > 3) throw std::invalid_argument("k >= 3 supports n <= 3");
    std::vector<NestedCell> cells;
    for (auto& children : detail::enum_levels(n, k - 1)) {
        NestedCell c;
        c.k = k;
        c.groups = std::move(children);
        cells.push_back(std::move(c));
    }
    std::sort(cells.begin(), cells.end(), [](const NestedCell& a, const NestedCell& b) {
        if (a.dimension() != b.dimension()) return a.dimension() > b.dimension();
        return a.name() < b.name();
    });
    return cells;
}

struct BoundaryTerm {
    NestedCell cell;
    Mat coefficient;  // representation matrix including the incidence sign
};

/// boundary of one cell in the local system attached to rep
inline std::vector<BoundaryTerm> fuks_boundary(const NestedCell& cell, const SnRepresentation& rep) {
    if (rep.n != cell.n()) throw std::invalid_argument("representation is for the wrong n");
    std::map<std::string, BoundaryTerm> acc;
    for (const RawBoundaryTerm& t : cell_boundary(cell)) {
        Mat m = rep.evaluate(t.relabel);
        auto it = acc.find(t.cell.name());
        if (it == acc.end()) {
            Mat scaled = m;
            for (auto& row : scaled)
                for (Int& v : row) v *= t.sign;
            acc.emplace(t.cell.name(), BoundaryTerm{t.cell, std::move(scaled)});
        } else {
            for (int i = 0; i < rep.dim; ++i)
                for (int j = 0; j < rep.dim; ++j) it->second.coefficient[i][j] += t.sign * m[i][j];
        }
    }
    std::vector<BoundaryTerm> out;
    for (auto& [name, term] : acc) {
        bool zero = true;
        for (const auto& row : term.coefficient)
            for (const Int& v : row)
                if (v != 0) zero = false;
        if (!zero) out.push_back(std::move(term));
    }
    return out;
}

/**
 * The chain complex of the nested model with coefficients in rep; its
 * homology is the Borel-Moore homology of B(R^k, n) with that local system.
 */
class ConfigComplex {
  public:
    ConfigComplex(int k, int n, SnRepresentation rep)
        : k_(k), n_(n), rep_(std::move(rep)) {
        if (rep_.n != n) throw std::invalid_argument("representation is for the wrong n");
        if (k == 2) {
            if (n < 2 || n > 6) throw std::invalid_argument("k = 2 supports 2 <= n <= 6");
        } else if (k >= 3) {
            if (n < 1 || n > 3) throw std::invalid_argument("k >= 3 supports n <= 3");
        } else {
            throw std::invalid_argument("k >= 2 required");
        }
        cells_ = (k == 2) ? fuks_cells(n) : nested_cells(k, n);
        int lo = cells_.back().dimension(), hi = cells_.front().dimension();
        for (const NestedCell& c : cells_) {
            lo = std::min(lo, c.dimension());
            hi = std::max(hi, c.dimension());
        }
        complex_.emplace(lo, hi);
        std::map<int, std::vector<const NestedCell*>> bydim;
        for (const NestedCell& c : cells_) bydim[c.dimension()].push_back(&c);
        int dm = rep_.dim;
        for (auto& [d, cs] : bydim) {
            complex_->set_rank(d, static_cast<int>(cs.size()) * dm);
            std::vector<std::string> labels;
            for (size_t i = 0; i < cs.size(); ++i) {
                index_[cs[i]->name()] = static_cast<int>(i);
                for (int a = 0; a < dm; ++a)
                    labels.push_back(dm == 1 ? cs[i]->name()
                                             : cs[i]->name() + "#" + std::to_string(a));
            }
            complex_->set_labels(d, std::move(labels));
        }
        for (int d = lo + 1; d <= hi; ++d) {
            SparseIntMatrix b(complex_->rank_at(d - 1), complex_->rank_at(d));
            if (bydim.count(d)) {
                for (const NestedCell* c : bydim[d]) {
                    int col = index_.at(c->name());
                    for (const BoundaryTerm& t : fuks_boundary(*c, rep_)) {
                        int row = index_.at(t.cell.name());
                        for (int a = 0; a < dm; ++a)
                            for (int bcol = 0; bcol < dm; ++bcol)
                                b.add(row * dm + a, col * dm + bcol, t.coefficient[a][bcol]);
                    }
                }
            }
            complex_->set_boundary(d, std::move(b));
        }
    }

    const IntegerChainComplex& complex() const { return *complex_; }
    const std::vector<NestedCell>& cells() const { return cells_; }
    int cell_index(const std::string& cell_name) const { return index_.at(cell_name); }
    int rep_dim() const { return rep_.dim; }

  private:
    int k_, n_;
    SnRepresentation rep_;
    std::vector<NestedCell> cells_;
    std::map<std::string, int> index_;
    std::optional<IntegerChainComplex> complex_;
};

/// Borel-Moore homology of B(R^k, n) with the rep-local system
inline GradedGroup config_homology(int k, int n, const SnRepresentation& rep) {
    return nonzero_part(ConfigComplex(k, n, rep).complex().homology());
}

// ---------------------------------------------------------------------------
// the threefold matching cover of B(C, 4)

struct LabeledCell {
    NestedCell base;
    int label;  // 2, 3 or 4: the point matched with the first one

    std::string name() const { return base.name() + "_" + std::to_string(label); }
};

struct CoveringTerm {
    Int coeff;
    NestedCell cell;
    int label;
};

/// boundary of one covering cell with constant integer coefficients
inline std::vector<CoveringTerm> covering_boundary(const NestedCell& cell, int label) {
    if (cell.k != 2 || cell.n() != 4) throw std::invalid_argument("covering cells live over B(C,4)");
    std::vector<CoveringTerm> out;
    std::map<std::string, NestedCell> byname;
    std::map<std::pair<std::string, int>, Int> coeffs;
    for (const RawBoundaryTerm& t : cell_boundary(cell)) {
        int new_label = permute_matching(t.relabel, label);
        coeffs[{t.cell.name(), new_label}] += t.sign;
        byname.emplace(t.cell.name(), t.cell);
    }
    for (const auto& [key, c] : coeffs)
        if (c != 0) out.push_back({c, byname.at(key.first), key.second});
    return out;
}

/**
 * The 24-generator complex of the threefold matching cover of B(C,4) with
 * constant integer coefficients.  Generators are base cells in fuks_cells
 * order, each with labels 2, 3, 4.
 */
class CoveringComplex {
  public:
    CoveringComplex() : cells_(fuks_cells(4)) {
        std::map<int, std::vector<const NestedCell*>> bydim;
        for (const NestedCell& c : cells_) bydim[c.dimension()].push_back(&c);
        complex_.emplace(5, 8);
        for (auto& [d, cs] : bydim) {
            complex_->set_rank(d, static_cast<int>(cs.size()) * 3);
            std::vector<std::string> labels;
            for (size_t i = 0; i < cs.size(); ++i) {
                index_[cs[i]->name()] = static_cast<int>(i);
                for (int label : matching_labels())
                    labels.push_back(cs[i]->name() + "_" + std::to_string(label));
            }
            complex_->set_labels(d, std::move(labels));
        }
        for (int d = 6; d <= 8; ++d) {
            SparseIntMatrix b(complex_->rank_at(d - 1), complex_->rank_at(d));
            for (const NestedCell* c : bydim[d]) {
                for (int label : matching_labels()) {
                    int col = generator_index(c->name(), label);
                    for (const CoveringTerm& t : covering_boundary(*c, label))
                        b.add(generator_index(t.cell.name(), t.label), col, t.coeff);
                }
            }
            complex_->set_boundary(d, std::move(b));
        }
    }

    const IntegerChainComplex& complex() const { return *complex_; }
    const std::vector<NestedCell>& base_cells() const { return cells_; }

    int generator_index(const std::string& base_name, int label) const {
        return index_.at(base_name) * 3 + (label - 2);
    }

  private:
    std::vector<NestedCell> cells_;
    std::map<std::string, int> index_;
    std::optional<IntegerChainComplex> complex_;
};

inline IntegerChainComplex covering_complex4() { return CoveringComplex().complex(); }

}  // namespace cxknots
