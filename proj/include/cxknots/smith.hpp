/**
 * Exact Smith normal form over the integers.
 *
 * Two engines:
 *  - smith_invariants: sparse elimination with fill-minimizing pivot choice,
 *    returns the invariant factors only.  This is the workhorse behind every
 *    homology computation.
 *  - SmithSolver: dense elimination that also tracks the unimodular
 *    transforms U, V with U*A*V = D.  Used for kernels, integer linear
 *    solves and group presentations on small matrices.
 *
 * All arithmetic is arbitrary precision; coefficient growth during
 * elimination is real and must not overflow.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "sparse.hpp"

namespace cxknots {

/// Normalize a diagonal to the divisibility chain d1 | d2 | ... (1s retained).
inline std::vector<Int> normalize_invariant_chain(std::vector<Int> diag) {
    for (Int& d : diag) d = abs(d);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < diag.size(); ++i)
            for (size_t j = i + 1; j < diag.size(); ++j) {
                Int g = int_gcd(diag[i], diag[j]);
                if (g == diag[i] || g == diag[j]) continue;
                diag[j] = int_lcm(diag[i], diag[j]);
                diag[i] = g;
                changed = true;
            }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

namespace detail {

/// Sparse working form: rows as maps col -> value, plus a column index.
struct SparseWork {
    std::vector<std::map<int, Int>> row;
    std::vector<std::set<int>> col;  // col -> rows with a nonzero entry

    explicit SparseWork(const SparseIntMatrix& m) : row(m.rows()), col(m.cols()) {
        for (const auto& [rc, v] : m.entries()) {
            row[rc.first][rc.second] = v;
            col[rc.second].insert(rc.first);
        }
    }

    void set(int r, int c, const Int& v) {
        if (v == 0) {
            row[r].erase(c);
            col[c].erase(r);
        } else {
            row[r][c] = v;
            col[c].insert(r);
        }
    }

    // row[dst] -= q * row[src]
    void row_axpy(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (const auto& [c, v] : row[src]) {
            auto it = row[dst].find(c);
            if (it == row[dst].end()) {
                Int nv = -q * v;
                if (nv != 0) {
                    row[dst][c] = std::move(nv);
                    col[c].insert(dst);
                }
            } else {
                it->second -= q * v;
                if (it->second == 0) {
                    row[dst].erase(it);
                    col[c].erase(dst);
                }
            }
        }
    }
};

}  // namespace detail

/// Invariant factors d1 | d2 | ... | dr of an integer matrix (r = rank).
inline std::vector<Int> smith_invariants(const SparseIntMatrix& m) {
    detail::SparseWork w(m);
    std::vector<char> row_active(m.rows(), 1), col_active(m.cols(), 1);
    std::vector<Int> diag;

    auto row_nnz = [&](int r) { return w.row[r].size(); };
    auto col_nnz = [&](int c) { return w.col[c].size(); };

    while (true) {
        // pivot selection: prefer units, then low Markowitz cost
        int pr = -1, pc = -1;
        bool unit = false;
        long best_cost = -1;
        Int best_abs;
        long scanned = 0;
        for (int r = 0; r < m.rows() && scanned < 4096; ++r) {
            if (!row_active[r] || w.row[r].empty()) continue;
            for (const auto& [c, v] : w.row[r]) {
                ++scanned;
                bool u = (v == 1 || v == -1);
                long cost = static_cast<long>(row_nnz(r) - 1) * static_cast<long>(col_nnz(c) - 1);
                Int a = abs(v);
                bool better;
                if (pr < 0) better = true;
                else if (u != unit) better = u;
                else if (cost != best_cost) better = cost < best_cost;
                else better = a < best_abs;
                if (better) {
                    pr = r; pc = c; unit = u; best_cost = cost; best_abs = a;
                    if (u && cost == 0) { scanned = 1 << 30; break; }
                }
            }
        }
        if (pr < 0) break;

        // Euclidean descent: make the pivot divide its column, then its row
        while (true) {
            Int p = w.row[pr].at(pc);
            int bad_row = -1;
            for (int r : w.col[pc])
                if (r != pr && row_active[r] && w.row[r].at(pc) % p != 0) { bad_row = r; break; }
            if (bad_row >= 0) {
                Int v = w.row[bad_row].at(pc);
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
                w.row_axpy(bad_row, pr, q);
                pr = bad_row;  // remainder is strictly smaller: move the pivot
                continue;
            }
            // column entries all divisible: clear the column
            std::vector<int> rows_to_clear(w.col[pc].begin(), w.col[pc].end());
            for (int r : rows_to_clear) {
                if (r == pr || !row_active[r]) continue;
                Int q = w.row[r].at(pc) / p;
                w.row_axpy(r, pr, q);
            }
            // column now has only the pivot; handle the pivot row.
            // A column operation col_j -= q*col_pc only touches rows where
            // col_pc is nonzero, i.e. only the pivot row itself.
            int bad_col = -1;
            Int bad_val;
            for (const auto& [c, v] : w.row[pr])
                if (c != pc && col_active[c] && v % p != 0) { bad_col = c; bad_val = v; break; }
            if (bad_col >= 0) {
                // replace col_bad by col_bad - q*col_pc, leaving the remainder,
                // then continue with the (smaller) remainder as pivot
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), bad_val.get_mpz_t(), p.get_mpz_t());
                Int rem = bad_val - q * p;
                w.set(pr, bad_col, rem);
                pc = bad_col;
                continue;
            }
            // divisible along the row: the row entries die under column ops
            std::vector<int> cols_to_clear;
            for (const auto& [c, v] : w.row[pr])
                if (c != pc) cols_to_clear.push_back(c);
            for (int c : cols_to_clear) w.set(pr, c, Int(0));
            break;
        }

        diag.push_back(abs(w.row[pr].at(pc)));
        w.set(pr, pc, Int(0));
        row_active[pr] = 0;
        col_active[pc] = 0;
    }
    return normalize_invariant_chain(std::move(diag));
}

inline long matrix_rank(const SparseIntMatrix& m) {
    return static_cast<long>(smith_invariants(m).size());
}

// ---------------------------------------------------------------------------
// dense decomposition with transforms (for small matrices)

using DenseMat = std::vector<std::vector<Int>>;

inline DenseMat dense_identity(int n) {
    DenseMat m(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline DenseMat to_dense(const SparseIntMatrix& m) {
    DenseMat d(m.rows(), std::vector<Int>(m.cols(), Int(0)));
    for (const auto& [rc, v] : m.entries()) d[rc.first][rc.second] = v;
    return d;
}

/**
 * U * A * V = D with U, V unimodular and D diagonal (the diagonal is not
 * normalized to a divisibility chain; use smith_invariants for that).
 */
class SmithSolver {
  public:
    explicit SmithSolver(const SparseIntMatrix& m)
        : rows_(m.rows()), cols_(m.cols()), a_(to_dense(m)),
          u_(dense_identity(m.rows())), v_(dense_identity(m.cols())) {
        reduce();
    }

    int rank() const { return rank_; }
    const DenseMat& u() const { return u_; }
    const DenseMat& v() const { return v_; }
    const std::vector<Int>& diagonal() const { return diag_; }

    /// basis of { x : A x = 0 } as columns of V beyond the rank
    std::vector<std::vector<Int>> kernel_basis() const {
        std::vector<std::vector<Int>> basis;
        for (int j = rank_; j < cols_; ++j) {
            std::vector<Int> k(cols_);
            for (int i = 0; i < cols_; ++i) k[i] = v_[i][j];
            basis.push_back(std::move(k));
        }
        return basis;
    }

    /// one integral solution of A x = b, if any
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
        if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("rhs length mismatch");
        std::vector<Int> c(rows_, Int(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < rows_; ++j) c[i] += u_[i][j] * b[j];
        std::vector<Int> y(cols_, Int(0));
        for (int i = 0; i < std::min(rows_, cols_); ++i) {
            if (i < rank_) {
                if (c[i] % diag_[i] != 0) return std::nullopt;
                y[i] = c[i] / diag_[i];
            } else if (c[i] != 0) {
                return std::nullopt;
            }
        }
        for (int i = cols_; i < rows_; ++i)
            if (c[i] != 0) return std::nullopt;
        for (int i = std::min(rows_, cols_); i < rows_; ++i)
            if (c[i] != 0) return std::nullopt;
        std::vector<Int> x(cols_, Int(0));
        for (int i = 0; i < cols_; ++i)
            for (int j = 0; j < cols_; ++j) x[i] += v_[i][j] * y[j];
        return x;
    }

    std::vector<Int> invariants() const {
        std::vector<Int> d = diag_;
        return normalize_invariant_chain(std::move(d));
    }

  private:
    void reduce() {
        int k = 0;
        int n = std::min(rows_, cols_);
        while (k < n) {
            // find the nonzero entry of least magnitude in the trailing block
            int pr = -1, pc = -1;
            Int best;
            for (int i = k; i < rows_; ++i)
                for (int j = k; j < cols_; ++j)
                    if (a_[i][j] != 0 && (pr < 0 || abs(a_[i][j]) < best)) {
                        pr = i; pc = j; best = abs(a_[i][j]);
                    }
            if (pr < 0) break;
            swap_rows(k, pr);
            swap_cols(k, pc);
            bool clean = false;
            while (!clean) {
                clean = true;
                for (int i = k + 1; i < rows_; ++i) {
                    if (a_[i][k] == 0) continue;
                    Int q;
                    mpz_tdiv_q(q.get_mpz_t(), a_[i][k].get_mpz_t(), a_[k][k].get_mpz_t());
                    row_axpy(i, k, q);
                    if (a_[i][k] != 0) { swap_rows(k, i); clean = false; }
                }
                for (int j = k + 1; j < cols_; ++j) {
                    if (a_[k][j] == 0) continue;
                    Int q;
                    mpz_tdiv_q(q.get_mpz_t(), a_[k][j].get_mpz_t(), a_[k][k].get_mpz_t());
                    col_axpy(j, k, q);
                    if (a_[k][j] != 0) { swap_cols(k, j); clean = false; }
                }
            }
            ++k;
        }
        rank_ = 0;
        diag_.assign(n, Int(0));
        for (int i = 0; i < n; ++i) {
            diag_[i] = a_[i][i];
            if (diag_[i] != 0) ++rank_;
        }
        // zero diagonal entries can only trail nonzero ones
        diag_.resize(rank_);
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(a_[i], a_[j]);
        std::swap(u_[i], u_[j]);
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (auto& row : a_) std::swap(row[i], row[j]);
        for (auto& row : v_) std::swap(row[i], row[j]);
    }
    void row_axpy(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < cols_; ++j) a_[dst][j] -= q * a_[src][j];
        for (int j = 0; j < rows_; ++j) u_[dst][j] -= q * u_[src][j];
    }
    void col_axpy(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < rows_; ++i) a_[i][dst] -= q * a_[i][src];
        for (int i = 0; i < cols_; ++i) v_[i][dst] -= q * v_[i][src];
    }

    int rows_, cols_;
    DenseMat a_, u_, v_;
    int rank_ = 0;
    std::vector<Int> diag_;
};

}  // namespace cxknots
