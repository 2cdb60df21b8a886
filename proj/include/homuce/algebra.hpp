#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "homuce/errors.hpp"
#include "homuce/matrix.hpp"
#include "homuce/subspace.hpp"
#include "homuce/text.hpp"

namespace homuce {

enum class Flavor { leibniz, lie };

inline const char* to_string(Flavor f) { return f == Flavor::lie ? "lie" : "leibniz"; }

/// A finite-dimensional algebra (L, [-,-], alpha_L) given by structure
/// constants: [e_i, e_j] = sum_k c_ij^k e_k. Column j of alpha holds alpha(e_j).
///
/// Construction never checks the Hom-Leibniz identity; see validate().
class HomAlgebra {
public:
    HomAlgebra() = default;

    /// `structure` is dim x dim^2; column i*dim+j is [e_i, e_j].
    HomAlgebra(std::string name, std::vector<std::string> labels, Mat structure, Mat alpha,
               Flavor flavor = Flavor::leibniz)
        : name_(std::move(name)), labels_(std::move(labels)), structure_(std::move(structure)),
          alpha_(std::move(alpha)), flavor_(flavor) {
        const std::size_t n = labels_.size();
        if (structure_.rows() != n || structure_.cols() != n * n)
            throw DimensionMismatch("structure constants must be dim x dim^2");
        if (alpha_.rows() != n || alpha_.cols() != n) throw DimensionMismatch("alpha must be dim x dim");
    }

    struct Entry {
        std::size_t i, j;
        Vector value;
    };
    /// Algebra from its nonzero brackets; everything unlisted is zero.
    static HomAlgebra from_brackets(std::string name, std::vector<std::string> labels,
                                    const std::vector<Entry>& brackets, Mat alpha,
                                    Flavor flavor = Flavor::leibniz) {
        const std::size_t n = labels.size();
        Mat s(n, n * n);
        for (const auto& e : brackets) {
            if (e.i >= n || e.j >= n || e.value.size() != n) throw DimensionMismatch("bracket entry out of range");
            s.set_column(e.i * n + e.j, e.value);
        }
        return HomAlgebra(std::move(name), std::move(labels), std::move(s), std::move(alpha), flavor);
    }

    /// Abelian algebra of the given dimension with twisting map alpha.
    static HomAlgebra abelian(std::size_t n, Mat alpha, std::string name = "abelian") {
        return HomAlgebra(std::move(name), default_labels("e", n), Mat(n, n * n), std::move(alpha), Flavor::lie);
    }

    static std::vector<std::string> default_labels(const std::string& stem, std::size_t n) {
        std::vector<std::string> out;
        for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
        return out;
    }

    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t dim() const { return labels_.size(); }
    Flavor flavor() const { return flavor_; }
    const Mat& structure() const { return structure_; }
    const Mat& alpha() const { return alpha_; }

    HomAlgebra renamed(std::string name) const {
        HomAlgebra c = *this;
        c.name_ = std::move(name);
        return c;
    }
    HomAlgebra with_flavor(Flavor f) const {
        HomAlgebra c = *this;
        c.flavor_ = f;
        return c;
    }
    HomAlgebra with_labels(std::vector<std::string> labels) const {
        if (labels.size() != dim()) throw DimensionMismatch("label count mismatch");
        HomAlgebra c = *this;
        c.labels_ = std::move(labels);
        return c;
    }

    Vector bracket_basis(std::size_t i, std::size_t j) const { return structure_.column(i * dim() + j); }
    const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_(k, i * dim() + j);
    }

    Vector bracket(const Vector& x, const Vector& y) const {
        const std::size_t n = dim();
        Vector out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar c = x[i] * y[j];
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& s = structure_(k, i * n + j);
                    if (!s.is_zero()) out[k] += c * s;
                }
            }
        }
        return out;
    }

    Vector apply_alpha(const Vector& x) const { return alpha_.apply(x); }

    /// Matrix of y -> [x, y].
    Mat left_mult(const Vector& x) const {
        Mat m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket(x, unit_vector(dim(), j)));
        return m;
    }
    /// Matrix of y -> [y, x].
    Mat right_mult(const Vector& x) const {
        Mat m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket(unit_vector(dim(), j), x));
        return m;
    }

    std::string format(const Vector& v) const { return format_linear(v, labels_); }

    friend bool operator==(const HomAlgebra& a, const HomAlgebra& b) {
        return a.labels_ == b.labels_ && a.structure_ == b.structure_ && a.alpha_ == b.alpha_ &&
               a.flavor_ == b.flavor_;
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    Mat structure_;
    Mat alpha_;
    Flavor flavor_ = Flavor::leibniz;
};

struct IdentityFailure {
    std::string identity;
    std::vector<std::size_t> indices;
    Vector lhs;
    Vector rhs;
};

struct ValidationReport {
    bool is_hom_leibniz = true;
    bool is_multiplicative = true;
    bool is_hom_lie = true;  // Hom-Leibniz and alternating
    Flavor flavor = Flavor::leibniz;
    std::vector<IdentityFailure> failures;

    bool ok() const { return failures.empty(); }
};

/// Checks the Hom-Leibniz identity
///   [alpha(e_i), [e_j, e_k]] = [[e_i, e_j], alpha(e_k)] - [[e_i, e_k], alpha(e_j)]
/// on all basis triples, multiplicativity on all pairs and, for the lie
/// flavor, the alternating property. Every violation is listed.
inline ValidationReport validate(const HomAlgebra& L) {
    ValidationReport rep;
    rep.flavor = L.flavor();
    const std::size_t n = L.dim();
    std::vector<Vector> a(n), e(n);
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = unit_vector(n, i);
        a[i] = L.alpha().column(i);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector lhs = L.bracket(a[i], L.bracket_basis(j, k));
                Vector rhs = L.bracket(L.bracket_basis(i, j), a[k]);
                Vector t = L.bracket(L.bracket_basis(i, k), a[j]);
                for (std::size_t q = 0; q < n; ++q) rhs[q] -= t[q];
                if (lhs != rhs) {
                    rep.is_hom_leibniz = false;
                    rep.failures.push_back({"hom-leibniz", {i, j, k}, lhs, rhs});
                }
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector lhs = L.apply_alpha(L.bracket_basis(i, j));
            Vector rhs = L.bracket(a[i], a[j]);
            if (lhs != rhs) {
                rep.is_multiplicative = false;
                rep.failures.push_back({"multiplicativity", {i, j}, lhs, rhs});
            }
        }
    bool alternating = true;
    std::vector<IdentityFailure> alt_failures;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vector lhs = L.bracket_basis(i, j);
            Vector rhs = L.bracket_basis(j, i);
            for (auto& x : rhs) x = -x;
            const bool bad = (i == j) ? !is_zero_vector(lhs) : lhs != rhs;
            if (bad) {
                alternating = false;
                if (i == j) {
                    alt_failures.push_back({"alternating", {i, i}, lhs, Vector(n)});
                } else {
                    alt_failures.push_back({"alternating", {i, j}, lhs, rhs});
                }
            }
        }
    rep.is_hom_lie = alternating && rep.is_hom_leibniz;
    if (L.flavor() == Flavor::lie)
        for (auto& f : alt_failures) rep.failures.push_back(std::move(f));
    return rep;
}

/// "hom-leibniz at (e1,e2,e3): lhs = ..., rhs = ...".
inline std::string describe(const IdentityFailure& f, const HomAlgebra& L) {
    std::string at;
    for (std::size_t k = 0; k < f.indices.size(); ++k) at += (k ? "," : "") + L.labels()[f.indices[k]];
    return f.identity + " at (" + at + "): lhs = " + format_linear(f.lhs, L.labels()) +
           ", rhs = " + format_linear(f.rhs, L.labels());
}

}  // namespace homuce
