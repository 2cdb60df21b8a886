#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "homuce/errors.hpp"

namespace homuce {

using MultiIndex = std::vector<std::size_t>;

/// Lexicographic bijection between multi-indices of a tensor product of
/// spaces with the given dimensions and flat coordinates (slot 0 is the
/// most significant).
class TensorIndex {
public:
    TensorIndex() = default;
    explicit TensorIndex(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
        size_ = 1;
        for (auto d : dims_) size_ *= d;
    }
    /// M ⊗ L^{⊗n}
    static TensorIndex chains(std::size_t mdim, std::size_t ldim, std::size_t n) {
        std::vector<std::size_t> dims{mdim};
        dims.insert(dims.end(), n, ldim);
        return TensorIndex(std::move(dims));
    }

    std::size_t arity() const { return dims_.size(); }
    std::size_t size() const { return size_; }
    const std::vector<std::size_t>& dims() const { return dims_; }

    std::size_t flatten(const MultiIndex& idx) const {
        if (idx.size() != dims_.size()) throw DimensionMismatch("multi-index arity mismatch");
        std::size_t flat = 0;
        for (std::size_t s = 0; s < dims_.size(); ++s) {
            if (idx[s] >= dims_[s]) throw DimensionMismatch("multi-index out of range");
            flat = flat * dims_[s] + idx[s];
        }
        return flat;
    }
    MultiIndex unflatten(std::size_t flat) const {
        if (flat >= size_) throw DimensionMismatch("flat index out of range");
        MultiIndex idx(dims_.size());
        for (std::size_t s = dims_.size(); s-- > 0;) {
            idx[s] = flat % dims_[s];
            flat /= dims_[s];
        }
        return idx;
    }

private:
    std::vector<std::size_t> dims_;
    std::size_t size_ = 1;
};

/// Basis of Λ^n K^dim: strictly increasing index tuples in lexicographic order.
class WedgeIndex {
public:
    WedgeIndex() = default;
    WedgeIndex(std::size_t arity, std::size_t dim) : arity_(arity), dim_(dim) {
        MultiIndex cur;
        enumerate(0, cur);
        for (std::size_t k = 0; k < tuples_.size(); ++k) lookup_[tuples_[k]] = k;
    }

    std::size_t arity() const { return arity_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return tuples_.size(); }
    const MultiIndex& unflatten(std::size_t flat) const { return tuples_.at(flat); }
    std::size_t flatten(const MultiIndex& sorted) const {
        auto it = lookup_.find(sorted);
        if (it == lookup_.end()) throw DimensionMismatch("not a strictly increasing index tuple");
        return it->second;
    }

    struct Normalized {
        int sign;  // +1 or -1
        MultiIndex sorted;
    };
    /// Sorts an arbitrary tuple, tracking the sign of the permutation;
    /// nothing when an index repeats (the wedge vanishes).
    static std::optional<Normalized> normalize(MultiIndex idx) {
        int sign = 1;
        for (std::size_t i = 1; i < idx.size(); ++i)
            for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
                if (idx[j - 1] == idx[j]) return std::nullopt;
                std::swap(idx[j - 1], idx[j]);
                sign = -sign;
            }
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (idx[i - 1] == idx[i]) return std::nullopt;
        return Normalized{sign, std::move(idx)};
    }

private:
    void enumerate(std::size_t start, MultiIndex& cur) {
        if (cur.size() == arity_) {
            tuples_.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < dim_; ++i) {
            cur.push_back(i);
            enumerate(i + 1, cur);
            cur.pop_back();
        }
    }

    std::size_t arity_ = 0;
    std::size_t dim_ = 0;
    std::vector<MultiIndex> tuples_;
    std::map<MultiIndex, std::size_t> lookup_;
};

}  // namespace homuce
