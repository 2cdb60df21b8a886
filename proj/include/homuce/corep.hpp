#pragma once

#include <string>
#include <vector>

#include "homuce/algebra.hpp"
#include "homuce/constructions.hpp"

namespace homuce {

/// Coefficient module (M, lambda, rho, alpha_M) over a Hom-Leibniz algebra L.
/// left[i] is the matrix of m -> e_i . m, right[i] the matrix of m -> m . e_i.
class HomCoRep {
public:
    HomCoRep() = default;
    HomCoRep(HomAlgebra base, std::size_t mdim, std::vector<Mat> left, std::vector<Mat> right, Mat alpha_m,
             std::vector<std::string> labels = {})
        : base_(std::move(base)), mdim_(mdim), left_(std::move(left)), right_(std::move(right)),
          alpha_m_(std::move(alpha_m)), labels_(std::move(labels)) {
        const std::size_t n = base_.dim();
        if (left_.size() != n || right_.size() != n) throw DimensionMismatch("one action matrix per basis element");
        for (std::size_t i = 0; i < n; ++i)
            if (left_[i].rows() != mdim_ || left_[i].cols() != mdim_ || right_[i].rows() != mdim_ ||
                right_[i].cols() != mdim_)
                throw DimensionMismatch("action matrices must be mdim x mdim");
        if (alpha_m_.rows() != mdim_ || alpha_m_.cols() != mdim_) throw DimensionMismatch("alpha_M must be mdim x mdim");
        if (labels_.empty()) labels_ = HomAlgebra::default_labels("m", mdim_);
        if (labels_.size() != mdim_) throw DimensionMismatch("module label count");
    }

    const HomAlgebra& base() const { return base_; }
    std::size_t mdim() const { return mdim_; }
    std::size_t ldim() const { return base_.dim(); }
    const Mat& alpha_m() const { return alpha_m_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Mat& left(std::size_t i) const { return left_[i]; }
    const Mat& right(std::size_t i) const { return right_[i]; }

    /// Matrix of m -> x . m.
    Mat left_by(const Vector& x) const { return combine(left_, x); }
    /// Matrix of m -> m . x.
    Mat right_by(const Vector& x) const { return combine(right_, x); }

    Vector act_left(const Vector& x, const Vector& m) const { return left_by(x).apply(m); }
    Vector act_right(const Vector& m, const Vector& x) const { return right_by(x).apply(m); }

    bool is_trivial() const {
        for (std::size_t i = 0; i < ldim(); ++i)
            if (!left_[i].is_zero() || !right_[i].is_zero()) return false;
        return true;
    }

    HomCoRep with_left(std::size_t i, Mat m) const {
        HomCoRep c = *this;
        c.left_.at(i) = std::move(m);
        return c;
    }

private:
    Mat combine(const std::vector<Mat>& fam, const Vector& x) const {
        Mat out(mdim_, mdim_);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero()) out += fam[i] * x[i];
        return out;
    }

    HomAlgebra base_;
    std::size_t mdim_ = 0;
    std::vector<Mat> left_, right_;
    Mat alpha_m_;
    std::vector<std::string> labels_;
};

/// Zero actions with the given twisting map on an mdim-dimensional module.
inline HomCoRep corep_trivial(const HomAlgebra& L, std::size_t mdim, const Mat& alpha_m) {
    std::vector<Mat> zero(L.dim(), Mat(mdim, mdim));
    return HomCoRep(L, mdim, zero, zero, alpha_m);
}

/// The ground field with trivial actions and alpha = Id.
inline HomCoRep corep_ground(const HomAlgebra& L) { return corep_trivial(L, 1, Mat::identity(1)); }

/// L acting on itself: x . m = -[m, x], m . x = [m, x], alpha_M = alpha_L.
inline HomCoRep corep_self(const HomAlgebra& L) {
    std::vector<Mat> left, right;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Mat r = L.right_mult(unit_vector(L.dim(), i));
        left.push_back(-r);
        right.push_back(std::move(r));
    }
    return HomCoRep(L, L.dim(), std::move(left), std::move(right), L.alpha(), L.labels());
}

struct AxiomFailure {
    std::string axiom;
    std::vector<std::size_t> indices;  // (x, y, m) basis indices as applicable
    Vector lhs;
    Vector rhs;
};

struct CoRepReport {
    std::vector<AxiomFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks the five co-representation axioms and the derived identity
/// alpha(y).(m.x) + (m.x).alpha(y) = 0 on all basis elements.
inline CoRepReport validate(const HomCoRep& C) {
    CoRepReport rep;
    const HomAlgebra& L = C.base();
    const std::size_t n = L.dim(), md = C.mdim();
    const Mat& am = C.alpha_m();
    auto sub = [](Vector a, const Vector& b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
        return a;
    };
    auto add = [](Vector a, const Vector& b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        return a;
    };
    auto check = [&](const char* name, std::vector<std::size_t> idx, const Vector& lhs, const Vector& rhs) {
        if (lhs != rhs) rep.failures.push_back({name, std::move(idx), lhs, rhs});
    };
    for (std::size_t xi = 0; xi < n; ++xi) {
        const Vector x = unit_vector(n, xi);
        const Vector ax = L.alpha().column(xi);
        for (std::size_t c = 0; c < md; ++c) {
            const Vector m = unit_vector(md, c);
            const Vector amm = am.column(c);
            check("axiom4", {xi, c}, am.apply(C.act_left(x, m)), C.act_left(ax, amm));
            check("axiom5", {xi, c}, am.apply(C.act_right(m, x)), C.act_right(amm, ax));
            for (std::size_t yi = 0; yi < n; ++yi) {
                const Vector y = unit_vector(n, yi);
                const Vector ay = L.alpha().column(yi);
                const Vector xy = L.bracket_basis(xi, yi);
                const Vector ym = C.act_left(y, m);
                const Vector xm = C.act_left(x, m);
                const Vector mx = C.act_right(m, x);
                check("axiom1", {xi, yi, c}, C.act_left(xy, amm), sub(C.act_left(ax, ym), C.act_left(ay, xm)));
                check("axiom2", {xi, yi, c}, C.act_left(ay, mx), sub(C.act_right(ym, ax), C.act_right(amm, xy)));
                check("axiom3", {xi, yi, c}, C.act_right(mx, ay), sub(C.act_right(amm, xy), C.act_right(ym, ax)));
                check("derived", {xi, yi, c}, add(C.act_left(ay, mx), C.act_right(mx, ay)), Vector(md));
            }
        }
    }
    return rep;
}

/// "axiom1 at (x, y, m): lhs = ..., rhs = ..."; the last index is a module basis element.
inline std::string describe(const AxiomFailure& f, const HomCoRep& C) {
    std::string at;
    for (std::size_t k = 0; k < f.indices.size(); ++k) {
        const bool module = k + 1 == f.indices.size();
        at += (k ? "," : "") + (module ? C.labels()[f.indices[k]] : C.base().labels()[f.indices[k]]);
    }
    return f.axiom + " at (" + at + "): lhs = " + format_linear(f.lhs, C.labels()) +
           ", rhs = " + format_linear(f.rhs, C.labels());
}

/// Co-representation on an alpha_M-stable, action-stable subspace N of M.
inline HomCoRep restrict_corep(const HomCoRep& C, const Subspace& N) {
    const Mat inc = N.inclusion();
    auto restrict = [&](const Mat& f) {
        Mat out(N.dim(), N.dim());
        for (std::size_t a = 0; a < N.dim(); ++a) {
            const Vector v = f.apply(inc.column(a));
            if (!N.contains(v)) throw PreconditionFailed("submodule is not stable");
            out.set_column(a, N.coordinates(v));
        }
        return out;
    };
    std::vector<Mat> left, right;
    for (std::size_t i = 0; i < C.ldim(); ++i) {
        left.push_back(restrict(C.left(i)));
        right.push_back(restrict(C.right(i)));
    }
    return HomCoRep(C.base(), N.dim(), std::move(left), std::move(right), restrict(C.alpha_m()));
}

}  // namespace homuce
