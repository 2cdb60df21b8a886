#pragma once

#include <vector>

#include "homuce/errors.hpp"
#include "homuce/matrix.hpp"

namespace homuce {

/// Linear subspace of K^n stored by its reduced row-echelon basis, so
/// equality of subspaces is equality of bases.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace zero(std::size_t n) { return Subspace(n); }
    static Subspace full(std::size_t n) { return span(n, identity_rows(n)); }

    static Subspace span(std::size_t n, const std::vector<Vector>& vectors) {
        return from_rows(Mat::from_rows(n, vectors));
    }
    /// Row space of m.
    static Subspace from_rows(const Mat& m) {
        Subspace s(m.cols());
        auto r = rref_with_pivots(m);
        s.basis_ = std::move(r.reduced);
        s.pivots_ = std::move(r.pivots);
        return s;
    }
    /// Column space of m.
    static Subspace image(const Mat& m) { return from_rows(m.transpose()); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }
    const Mat& basis_matrix() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<Vector> basis() const {
        std::vector<Vector> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
        return out;
    }

    /// Remainder of v after clearing the pivot coordinates with basis rows.
    Vector reduce(Vector v) const {
        check(v);
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            const Scalar c = v[pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!basis_(r, j).is_zero()) v[j] -= c * basis_(r, j);
        }
        return v;
    }

    bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }
    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different spaces");
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_.row_vector(i))) return false;
        return true;
    }

    /// Coordinates of v in the RREF basis; they are v's pivot entries.
    Vector coordinates(const Vector& v) const {
        if (!contains(v)) throw NotInSubspace("vector does not lie in the subspace");
        Vector c(dim());
        for (std::size_t r = 0; r < pivots_.size(); ++r) c[r] = v[pivots_[r]];
        return c;
    }
    Vector from_coordinates(const Vector& c) const {
        if (c.size() != dim()) throw DimensionMismatch("coordinate vector length");
        Vector v(ambient_);
        for (std::size_t r = 0; r < dim(); ++r) {
            if (c[r].is_zero()) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (!basis_(r, j).is_zero()) v[j] += c[r] * basis_(r, j);
        }
        return v;
    }
    /// ambient_dim x dim matrix whose columns are the basis vectors.
    Mat inclusion() const { return basis_.transpose(); }

    Subspace operator+(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different spaces");
        std::vector<Vector> rows = basis();
        for (auto& v : o.basis()) rows.push_back(std::move(v));
        return span(ambient_, rows);
    }

    Subspace intersect(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different spaces");
        if (is_zero() || o.is_zero()) return Subspace(ambient_);
        // x = A^T a = B^T b  <=>  [A^T | -B^T] (a, b) = 0
        Mat sys(ambient_, dim() + o.dim());
        for (std::size_t j = 0; j < ambient_; ++j) {
            for (std::size_t r = 0; r < dim(); ++r) sys(j, r) = basis_(r, j);
            for (std::size_t r = 0; r < o.dim(); ++r) sys(j, dim() + r) = -o.basis_(r, j);
        }
        std::vector<Vector> vs;
        for (const auto& ab : null_space_basis(sys)) {
            Vector a(ab.begin(), ab.begin() + static_cast<std::ptrdiff_t>(dim()));
            vs.push_back(from_coordinates(a));
        }
        return span(ambient_, vs);
    }

    /// Image of this subspace under m.
    Subspace mapped(const Mat& m) const {
        if (m.cols() != ambient_) throw DimensionMismatch("map domain mismatch");
        std::vector<Vector> vs;
        for (std::size_t r = 0; r < dim(); ++r) vs.push_back(m.apply(basis_.row(r)));
        return span(m.rows(), vs);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    static std::vector<Vector> identity_rows(std::size_t n) {
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vector(n, i));
        return rows;
    }
    void check(const Vector& v) const {
        if (v.size() != ambient_) throw DimensionMismatch("vector length != ambient dimension");
    }

    std::size_t ambient_ = 0;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space of m as a subspace of K^cols.
inline Subspace kernel(const Mat& m) { return Subspace::span(m.cols(), null_space_basis(m)); }

/// Preimage m^{-1}(target) of a subspace of the codomain.
inline Subspace preimage(const Mat& m, const Subspace& target) {
    // v in preimage  <=>  m v reduces to zero modulo target
    Mat red(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) red.set_column(j, target.reduce(m.column(j)));
    return kernel(red);
}

/// K^n / sub, realised through the coordinate complement of sub's pivots.
class QuotientSpace {
public:
    QuotientSpace() = default;
    QuotientSpace(std::size_t ambient_dim, Subspace sub) : ambient_(ambient_dim), sub_(std::move(sub)) {
        if (sub_.ambient_dim() != ambient_) throw DimensionMismatch("quotient: subspace ambient mismatch");
        std::vector<bool> is_pivot(ambient_, false);
        for (auto p : sub_.pivots()) is_pivot[p] = true;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!is_pivot[j]) free_.push_back(j);

        project_ = Mat(free_.size(), ambient_);
        embed_ = Mat(ambient_, free_.size());
        for (std::size_t k = 0; k < free_.size(); ++k) {
            project_(k, free_[k]) = Scalar(1);
            embed_(free_[k], k) = Scalar(1);
        }
        const Mat& b = sub_.basis_matrix();
        for (std::size_t r = 0; r < sub_.dim(); ++r)
            for (std::size_t k = 0; k < free_.size(); ++k)
                project_(k, sub_.pivots()[r]) = -b(r, free_[k]);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return free_.size(); }
    const Subspace& sub() const { return sub_; }
    /// dim x ambient matrix; kills exactly sub.
    const Mat& projection() const { return project_; }
    /// ambient x dim section with projection * section = identity.
    const Mat& section() const { return embed_; }

    Vector project(const Vector& v) const { return project_.apply(v); }
    Vector lift(const Vector& q) const { return embed_.apply(q); }

private:
    std::size_t ambient_ = 0;
    Subspace sub_;
    std::vector<std::size_t> free_;
    Mat project_;
    Mat embed_;
};

inline QuotientSpace quotient(std::size_t ambient_dim, const Subspace& sub) {
    return QuotientSpace(ambient_dim, sub);
}

}  // namespace homuce
