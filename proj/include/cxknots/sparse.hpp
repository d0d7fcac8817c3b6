/**
 * Sparse matrices over arbitrary-precision integers.
 *
 * Storage is a map from (row, col) to a nonzero entry; writing a zero erases.
 * This is the interchange type for every boundary operator in the library.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abelian.hpp"

namespace cxknots {

class SparseIntMatrix {
  public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    size_t nnz() const { return entries_.size(); }

    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

    Int get(int r, int c) const {
        check(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? Int(0) : it->second;
    }

    void set(int r, int c, Int v) {
        check(r, c);
        if (v == 0) entries_.erase({r, c});
        else entries_[{r, c}] = std::move(v);
    }

    void add(int r, int c, const Int& v) {
        check(r, c);
        auto it = entries_.find({r, c});
        if (it == entries_.end()) {
            if (v != 0) entries_.emplace(std::make_pair(r, c), v);
        } else {
            it->second += v;
            if (it->second == 0) entries_.erase(it);
        }
    }

    SparseIntMatrix transpose() const {
        SparseIntMatrix t(cols_, rows_);
        for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
        return t;
    }

    SparseIntMatrix operator*(const SparseIntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        // index o by row for the sparse product
        std::vector<std::vector<std::pair<int, const Int*>>> rows_of_o(o.rows_);
        for (const auto& [rc, v] : o.entries_) rows_of_o[rc.first].push_back({rc.second, &v});
        SparseIntMatrix p(rows_, o.cols_);
        for (const auto& [rc, v] : entries_)
            for (const auto& [c2, w] : rows_of_o[rc.second]) p.add(rc.first, c2, v * (*w));
        return p;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<Int> y(rows_, Int(0));
        for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
        return y;
    }

    bool is_zero() const { return entries_.empty(); }

    bool operator==(const SparseIntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    /// triplet form [[r, c, v], ...] in row-major order
    Json to_json() const {
        Json j = Json::array();
        for (const auto& [rc, v] : entries_)
            j.push_back(Json::array({rc.first, rc.second, int_to_ll(v)}));
        return j;
    }

    static SparseIntMatrix from_json(int rows, int cols, const Json& j) {
        SparseIntMatrix m(rows, cols);
        for (const auto& t : j) m.set(t.at(0).get<int>(), t.at(1).get<int>(), Int(t.at(2).get<long>()));
        return m;
    }

  private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index out of bounds");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Int> entries_;
};

}  // namespace cxknots
