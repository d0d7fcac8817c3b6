/**
 * Finite chain complexes of free Z-modules and their homology.
 *
 * Degrees form a contiguous range [lo, hi]; boundary(d) maps degree d to
 * degree d-1.  Homology is computed from Smith invariants of the boundary
 * matrices:  H_d = Z^(rank_d - rho_d - rho_{d+1}) + torsion(boundary_{d+1}).
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smith.hpp"

namespace cxknots {

class IntegerChainComplex {
  public:
    IntegerChainComplex(int lo, int hi) : lo_(lo), hi_(hi) {
        if (hi < lo) throw std::invalid_argument("empty degree range");
        ranks_.assign(hi - lo + 1, 0);
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }

    int rank_at(int d) const { return in_range(d) ? ranks_[d - lo_] : 0; }

    void set_rank(int d, int r) {
        require_range(d);
        ranks_[d - lo_] = r;
    }

    void set_labels(int d, std::vector<std::string> labels) {
        require_range(d);
        if (static_cast<int>(labels.size()) != rank_at(d))
            throw std::invalid_argument("label count does not match rank");
        labels_[d] = std::move(labels);
    }

    const std::vector<std::string>* labels(int d) const {
        auto it = labels_.find(d);
        return it == labels_.end() ? nullptr : &it->second;
    }

    /// boundary(d): matrix with rank_at(d-1) rows and rank_at(d) columns
    const SparseIntMatrix& boundary(int d) const {
        auto it = boundaries_.find(d);
        if (it == boundaries_.end())
            it = boundaries_.emplace(d, SparseIntMatrix(rank_at(d - 1), rank_at(d))).first;
        return it->second;
    }

    void set_boundary(int d, SparseIntMatrix m) {
        require_range(d);
        if (m.rows() != rank_at(d - 1) || m.cols() != rank_at(d))
            throw std::invalid_argument("boundary shape mismatch at degree " + std::to_string(d));
        boundaries_[d] = std::move(m);
    }

    /// degrees where boundary(d-1) * boundary(d) != 0; empty means valid
    std::vector<int> verify() const {
        std::vector<int> bad;
        for (int d = lo_ + 2; d <= hi_; ++d) {
            if (rank_at(d) == 0 || rank_at(d - 2) == 0) continue;
            if (!(boundary(d - 1) * boundary(d)).is_zero()) bad.push_back(d);
        }
        return bad;
    }

    GradedGroup homology() const {
        std::vector<int> bad = verify();
        if (!bad.empty())
            throw std::runtime_error("not a chain complex: d*d != 0 at degree " +
                                     std::to_string(bad.front()));
        std::map<int, std::vector<Int>> inv;
        for (int d = lo_; d <= hi_ + 1; ++d) {
            if (rank_at(d) == 0 || rank_at(d - 1) == 0) continue;
            inv[d] = smith_invariants(boundary(d));
        }
        auto rho = [&](int d) {
            auto it = inv.find(d);
            return it == inv.end() ? 0L : static_cast<long>(it->second.size());
        };
        GradedGroup h;
        for (int d = lo_; d <= hi_; ++d) {
            long free = rank_at(d) - rho(d) - rho(d + 1);
            std::vector<Int> tors;
            if (auto it = inv.find(d + 1); it != inv.end())
                for (const Int& t : it->second)
                    if (t > 1) tors.push_back(t);
            h[d] = AbelianGroup(free, std::move(tors));
        }
        return h;
    }

    long euler_characteristic() const {
        long chi = 0;
        for (int d = lo_; d <= hi_; ++d) chi += (d % 2 == 0 ? 1 : -1) * rank_at(d);
        return chi;
    }

    bool euler_check() const {
        long chi_h = 0;
        for (const auto& [d, g] : homology()) chi_h += (d % 2 == 0 ? 1 : -1) * g.free_rank;
        return chi_h == euler_characteristic();
    }

    IntegerChainComplex direct_sum(const IntegerChainComplex& o) const {
        int lo = std::min(lo_, o.lo_), hi = std::max(hi_, o.hi_);
        IntegerChainComplex s(lo, hi);
        for (int d = lo; d <= hi; ++d) s.set_rank(d, rank_at(d) + o.rank_at(d));
        for (int d = lo + 1; d <= hi; ++d) {
            SparseIntMatrix m(s.rank_at(d - 1), s.rank_at(d));
            for (const auto& [rc, v] : boundary(d).entries()) m.set(rc.first, rc.second, v);
            int roff = rank_at(d - 1), coff = rank_at(d);
            for (const auto& [rc, v] : o.boundary(d).entries())
                m.set(rc.first + roff, rc.second + coff, v);
            s.set_boundary(d, std::move(m));
        }
        return s;
    }

    Json to_json() const {
        Json j;
        j["degrees"] = Json::array({lo_, hi_});
        Json ranks = Json::object();
        for (int d = lo_; d <= hi_; ++d)
            if (rank_at(d) > 0) ranks[std::to_string(d)] = rank_at(d);
        j["ranks"] = ranks;
        Json bnd = Json::object();
        for (int d = lo_ + 1; d <= hi_; ++d)
            if (!boundary(d).is_zero()) bnd[std::to_string(d)] = boundary(d).to_json();
        j["boundaries"] = bnd;
        return j;
    }

    static IntegerChainComplex from_json(const Json& j) {
        int lo = j.at("degrees").at(0).get<int>();
        int hi = j.at("degrees").at(1).get<int>();
        IntegerChainComplex c(lo, hi);
        for (const auto& [key, val] : j.at("ranks").items())
            c.set_rank(std::stoi(key), val.get<int>());
        for (const auto& [key, val] : j.at("boundaries").items()) {
            int d = std::stoi(key);
            c.set_boundary(d, SparseIntMatrix::from_json(c.rank_at(d - 1), c.rank_at(d), val));
        }
        return c;
    }

  private:
    bool in_range(int d) const { return d >= lo_ && d <= hi_; }
    void require_range(int d) const {
        if (!in_range(d)) throw std::out_of_range("degree out of range: " + std::to_string(d));
    }

    int lo_, hi_;
    std::vector<int> ranks_;
    mutable std::map<int, SparseIntMatrix> boundaries_;
    std::map<int, std::vector<std::string>> labels_;
};

}  // namespace cxknots
