/**
 * Finitely presented abelian groups, maps between them, and exactness tests.
 *
 * A presentation is coker(relations : Z^m -> Z^gens).  Maps are integer
 * matrices on generators.  Everything reduces to integer kernels and solves,
 * so all answers are exact.  This underlies the homology-with-generators
 * checks (matching basis, induced symmetry action, long exact sequences).
 */
#pragma once

#include "complex.hpp"

namespace cxknots {

inline SparseIntMatrix columns_matrix(int n, const std::vector<std::vector<Int>>& cols) {
    SparseIntMatrix m(n, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (static_cast<int>(cols[j].size()) != n) throw std::invalid_argument("column length mismatch");
        for (int i = 0; i < n; ++i) m.set(i, static_cast<int>(j), cols[j][i]);
    }
    return m;
}

inline SparseIntMatrix hstack(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    SparseIntMatrix m(a.rows(), a.cols() + b.cols());
    for (const auto& [rc, v] : a.entries()) m.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : b.entries()) m.set(rc.first, rc.second + a.cols(), v);
    return m;
}

struct FpGroup {
    int gens = 0;
    SparseIntMatrix relations;  // gens x nrel

    FpGroup() = default;
    FpGroup(int g, SparseIntMatrix rel) : gens(g), relations(std::move(rel)) {
        if (relations.rows() != gens) throw std::invalid_argument("relation matrix shape");
    }

    AbelianGroup value() const {
        std::vector<Int> inv = smith_invariants(relations);
        long free = gens - static_cast<long>(inv.size());
        std::vector<Int> tors;
        for (const Int& d : inv)
            if (d > 1) tors.push_back(d);
        return AbelianGroup(free, std::move(tors));
    }
};

struct FpMap {
    FpGroup src, dst;
    SparseIntMatrix matrix;  // dst.gens x src.gens

    FpMap(FpGroup s, FpGroup d, SparseIntMatrix m)
        : src(std::move(s)), dst(std::move(d)), matrix(std::move(m)) {
        if (matrix.rows() != dst.gens || matrix.cols() != src.gens)
            throw std::invalid_argument("fp map shape mismatch");
    }

    bool well_defined() const {
        SmithSolver span(dst.relations);
        for (int j = 0; j < src.relations.cols(); ++j) {
            std::vector<Int> r(src.gens, Int(0));
            for (int i = 0; i < src.gens; ++i) r[i] = src.relations.get(i, j);
            if (!span.solve(matrix.apply(r))) return false;
        }
        return true;
    }
};

/// Exactness of A --f--> B --g--> C at B (for well-defined maps).
inline bool is_exact_at(const FpMap& f, const FpMap& g) {
    // im f  <=  ker g:  g(f(e_i)) must vanish in C
    SmithSolver c_span(g.dst.relations);
    for (int j = 0; j < f.src.gens; ++j) {
        std::vector<Int> e(f.src.gens, Int(0));
        e[j] = 1;
        if (!c_span.solve(g.matrix.apply(f.matrix.apply(e)))) return false;
    }
    // ker g  <=  im f: lift ker(g-bar) to Z^{B.gens}; it is the projection of
    // ker [g.matrix | C.relations], and membership is tested against
    // span [f.matrix | B.relations].
    SmithSolver ker(hstack(g.matrix, g.dst.relations));
    SmithSolver image(hstack(f.matrix, f.dst.relations));
    for (const auto& k : ker.kernel_basis()) {
        std::vector<Int> b(k.begin(), k.begin() + f.dst.gens);
        if (!image.solve(b)) return false;
    }
    return true;
}

/**
 * Homology of one degree of a chain complex, with explicit generators:
 * kernel basis of boundary(d) plus the image of boundary(d+1) as relations.
 */
class HomologySpace {
  public:
    HomologySpace(const IntegerChainComplex& c, int d)
        : chain_rank_(c.rank_at(d)) {
        SmithSolver bd(c.boundary(d));
        kernel_ = bd.kernel_basis();
        kernel_solver_.emplace(columns_matrix(chain_rank_, kernel_));
        const SparseIntMatrix& up = c.boundary(d + 1);
        SparseIntMatrix rel(static_cast<int>(kernel_.size()), up.cols());
        for (int j = 0; j < up.cols(); ++j) {
            std::vector<Int> col(up.rows(), Int(0));
            for (int i = 0; i < up.rows(); ++i) col[i] = up.get(i, j);
            std::vector<Int> y = coords_of_cycle(col);
            for (size_t i = 0; i < y.size(); ++i) rel.set(static_cast<int>(i), j, y[i]);
        }
        presentation_ = FpGroup(static_cast<int>(kernel_.size()), std::move(rel));
    }

    const FpGroup& presentation() const { return presentation_; }
    AbelianGroup group() const { return presentation_.value(); }
    int cycle_rank() const { return static_cast<int>(kernel_.size()); }

    /// kernel coordinates of a cycle (throws if z is not a cycle)
    std::vector<Int> coords_of_cycle(const std::vector<Int>& z) const {
        auto y = kernel_solver_->solve(z);
        if (!y) throw std::invalid_argument("vector is not a cycle");
        return *y;
    }

    /// do the classes of these cycles generate the homology group?
    bool classes_generate(const std::vector<std::vector<Int>>& cycles) const {
        SparseIntMatrix m(presentation_.gens,
                          static_cast<int>(cycles.size()) + presentation_.relations.cols());
        for (size_t j = 0; j < cycles.size(); ++j) {
            std::vector<Int> y = coords_of_cycle(cycles[j]);
            for (size_t i = 0; i < y.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(j), y[i]);
        }
        for (const auto& [rc, v] : presentation_.relations.entries())
            m.set(rc.first, rc.second + static_cast<int>(cycles.size()), v);
        std::vector<Int> inv = smith_invariants(m);
        if (static_cast<int>(inv.size()) != presentation_.gens) return false;
        for (const Int& d : inv)
            if (d != 1) return false;
        return true;
    }

    /// are two cycles homologous?
    bool same_class(const std::vector<Int>& a, const std::vector<Int>& b) const {
        std::vector<Int> ya = coords_of_cycle(a), yb = coords_of_cycle(b);
        std::vector<Int> diff(ya.size());
        for (size_t i = 0; i < ya.size(); ++i) diff[i] = ya[i] - yb[i];
        SmithSolver span(presentation_.relations);
        return span.solve(diff).has_value();
    }

  private:
    int chain_rank_;
    std::vector<std::vector<Int>> kernel_;
    std::optional<SmithSolver> kernel_solver_;
    FpGroup presentation_{0, SparseIntMatrix(0, 0)};
};

}  // namespace cxknots
