#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homuce/corep.hpp"
#include "homuce/index.hpp"

namespace homuce {

struct ChainOptions {
    std::size_t max_degree = 4;
    std::size_t max_coordinates = 100000;
};

namespace detail {

/// out += coeff * (f_0 ⊗ f_1 ⊗ ... ) in the lexicographic tensor basis.
inline void add_pure_tensor(Vector& out, const std::vector<const Vector*>& f, const Scalar& coeff) {
    std::function<void(std::size_t, std::size_t, const Scalar&)> rec = [&](std::size_t s, std::size_t offset,
                                                                            const Scalar& c) {
        if (s == f.size()) {
            out[offset] += c;
            return;
        }
        const Vector& v = *f[s];
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) rec(s + 1, offset * v.size() + k, c * v[k]);
    };
    if (!coeff.is_zero()) rec(0, 0, coeff);
}

inline std::size_t checked_chain_size(std::size_t mdim, std::size_t ldim, std::size_t n, const ChainOptions& opt) {
    if (n > opt.max_degree)
        throw DegreeCapExceeded("degree " + std::to_string(n) + " exceeds the cap " + std::to_string(opt.max_degree));
    std::size_t size = mdim;
    for (std::size_t k = 0; k < n; ++k) {
        size *= ldim;
        if (size > opt.max_coordinates)
            throw DegreeCapExceeded("tensor space in degree " + std::to_string(n) + " exceeds " +
                                    std::to_string(opt.max_coordinates) + " coordinates");
    }
    return size;
}

/// Basis data for one basis tensor m_c ⊗ e_{i1} ⊗ ... ⊗ e_{in}.
struct BasisTensor {
    Vector m, am;               // m and alpha_M(m)
    std::vector<Vector> x, ax;  // x_k and alpha_L(x_k)
};

inline BasisTensor basis_tensor(const HomCoRep& C, const MultiIndex& idx) {
    BasisTensor t;
    t.m = unit_vector(C.mdim(), idx[0]);
    t.am = C.alpha_m().column(idx[0]);
    for (std::size_t s = 1; s < idx.size(); ++s) {
        t.x.push_back(unit_vector(C.ldim(), idx[s]));
        t.ax.push_back(C.base().alpha().column(idx[s]));
    }
    return t;
}

}  // namespace detail

/// dim CL_n = mdim * ldim^n.
inline std::size_t chain_dim(const HomCoRep& C, std::size_t n) {
    std::size_t s = C.mdim();
    for (std::size_t k = 0; k < n; ++k) s *= C.ldim();
    return s;
}

/// d_n : M ⊗ L^{⊗n} -> M ⊗ L^{⊗(n-1)}; d_0 is the zero map to the zero space.
inline Mat differential(const HomCoRep& C, std::size_t n, const ChainOptions& opt = {}) {
    const std::size_t src = detail::checked_chain_size(C.mdim(), C.ldim(), n, opt);
    if (n == 0) return Mat(0, src);
    const HomAlgebra& L = C.base();
    const TensorIndex idx = TensorIndex::chains(C.mdim(), C.ldim(), n);
    Mat d(chain_dim(C, n - 1), src);
    std::vector<const Vector*> f;
    for (std::size_t b = 0; b < src; ++b) {
        const auto t = detail::basis_tensor(C, idx.unflatten(b));
        Vector col(d.rows());
        // m . x1 ⊗ α(x2) ⊗ ... ⊗ α(xn)
        const Vector mx = C.act_right(t.m, t.x[0]);
        f = {&mx};
        for (std::size_t k = 1; k < n; ++k) f.push_back(&t.ax[k]);
        detail::add_pure_tensor(col, f, Scalar(1));
        // (-1)^i x_i . m ⊗ α(x1) ... α(x_i)^ ... α(xn), i = 2..n
        for (std::size_t i = 1; i < n; ++i) {
            const Vector xm = C.act_left(t.x[i], t.m);
            f = {&xm};
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) f.push_back(&t.ax[k]);
            detail::add_pure_tensor(col, f, Scalar((i + 1) % 2 == 0 ? 1 : -1));
        }
        // (-1)^{j+1} α_M(m) ⊗ ... [x_i, x_j] in slot i ... α(x_j)^ ...
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Vector br = L.bracket(t.x[i], t.x[j]);
                f = {&t.am};
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == j) continue;
                    f.push_back(k == i ? &br : &t.ax[k]);
                }
                detail::add_pure_tensor(col, f, Scalar((j + 2) % 2 == 0 ? 1 : -1));
            }
        d.set_column(b, col);
    }
    return d;
}

/// theta_n(y) : CL_n -> CL_n,
/// m ⊗ x1..xn -> -y.m ⊗ α(x1)..α(xn) + sum_i α_M(m) ⊗ α(x1)..[x_i, y]..α(xn).
inline Mat theta(const HomCoRep& C, std::size_t n, const Vector& y, const ChainOptions& opt = {}) {
    const std::size_t size = detail::checked_chain_size(C.mdim(), C.ldim(), n, opt);
    const HomAlgebra& L = C.base();
    const TensorIndex idx = TensorIndex::chains(C.mdim(), C.ldim(), n);
    Mat th(size, size);
    std::vector<const Vector*> f;
    for (std::size_t b = 0; b < size; ++b) {
        const auto t = detail::basis_tensor(C, idx.unflatten(b));
        Vector col(size);
        const Vector ym = C.act_left(y, t.m);
        f = {&ym};
        for (std::size_t k = 0; k < n; ++k) f.push_back(&t.ax[k]);
        detail::add_pure_tensor(col, f, Scalar(-1));
        for (std::size_t i = 0; i < n; ++i) {
            const Vector br = L.bracket(t.x[i], y);
            f = {&t.am};
            for (std::size_t k = 0; k < n; ++k) f.push_back(k == i ? &br : &t.ax[k]);
            detail::add_pure_tensor(col, f, Scalar(1));
        }
        th.set_column(b, col);
    }
    return th;
}

/// A_n(z) : CL_n -> CL_{n+1}, m ⊗ x1..xn -> (-1)^n m ⊗ x1..xn ⊗ z.
inline Mat append_op(const HomCoRep& C, std::size_t n, const Vector& z, const ChainOptions& opt = {}) {
    const std::size_t size = detail::checked_chain_size(C.mdim(), C.ldim(), n, opt);
    detail::checked_chain_size(C.mdim(), C.ldim(), n + 1, opt);
    const std::size_t l = C.ldim();
    const Scalar sign(n % 2 == 0 ? 1 : -1);
    Mat a(size * l, size);
    for (std::size_t b = 0; b < size; ++b)
        for (std::size_t k = 0; k < l; ++k)
            if (!z[k].is_zero()) a(b * l + k, b) = sign * z[k];
    return a;
}

/// T_n = α_M ⊗ α_L^{⊗n}.
inline Mat twist_op(const HomCoRep& C, std::size_t n, const ChainOptions& opt = {}) {
    detail::checked_chain_size(C.mdim(), C.ldim(), n, opt);
    Mat t = C.alpha_m();
    for (std::size_t k = 0; k < n; ++k) t = kron(t, C.base().alpha());
    return t;
}

struct HomologyReport {
    std::size_t degree = 0;
    std::size_t dim = 0;
    std::size_t cycle_dim = 0;
    std::size_t boundary_rank = 0;
    std::vector<Vector> cycle_basis;  // representatives reduced modulo boundaries
};

namespace detail {

inline HomologyReport homology_from(std::size_t n, const Mat& dn, const Mat& dn1) {
    HomologyReport r;
    r.degree = n;
    const Subspace Z = kernel(dn);
    const Subspace B = Subspace::image(dn1);
    r.cycle_dim = Z.dim();
    r.boundary_rank = B.dim();
    r.dim = Z.dim() - B.dim();
    std::vector<Vector> reps;
    for (const auto& z : Z.basis()) reps.push_back(B.reduce(z));
    r.cycle_basis = Subspace::span(dn.cols(), reps).basis();
    return r;
}

}  // namespace detail

/// HL_n = Ker d_n / Im d_{n+1}.
inline HomologyReport homology(const HomCoRep& C, std::size_t n, const ChainOptions& opt = {}) {
    const Mat dn1 = differential(C, n + 1, opt);
    const Mat dn = differential(C, n, opt);
    return detail::homology_from(n, dn, dn1);
}

/// dim M / M_L with M_L spanned by all m . x.
inline std::size_t hl0_closed_form(const HomCoRep& C) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < C.ldim(); ++i)
        for (std::size_t c = 0; c < C.mdim(); ++c) vs.push_back(C.right(i).column(c));
    return C.mdim() - Subspace::span(C.mdim(), vs).dim();
}

/// dim (M ⊗ L) / (α_M(M) ⊗ [L, L]) for trivial coefficients.
inline std::size_t hl1_trivial_closed_form(const HomCoRep& C) {
    if (!C.is_trivial()) throw PreconditionFailed("closed form for HL_1 needs trivial coefficients");
    return C.mdim() * C.ldim() - rank(C.alpha_m()) * derived(C.base()).dim();
}

struct CartanFailure {
    char identity;  // 'a' .. 'e'
    std::size_t n;
    std::vector<std::size_t> args;  // basis indices of x and/or y
    std::size_t column;             // first basis tensor on which the sides differ
};

struct CartanReport {
    std::size_t n_max = 0;
    std::size_t checked = 0;
    std::vector<CartanFailure> failures;
    bool ok() const { return failures.empty(); }
    bool holds(char identity) const {
        for (const auto& f : failures)
            if (f.identity == identity) return false;
        return true;
    }
};

/// Checks the generalized Cartan formulas for 1 <= n <= n_max as exact matrix
/// identities on all basis elements x, y:
///   (a) d_{n+1} A_n(y) + A_{n-1}(α y) d_n = θ_n(y)
///   (b) θ_n(α x) θ_n(y) - θ_n(α y) θ_n(x) = -θ_n([x, y]) T_n   (also n = 0)
///   (c) θ_n(x) A_{n-1}(y) - A_{n-1}(α y) θ_{n-1}(x) = A_{n-1}([y, x]) T_{n-1}
///   (d) θ_{n-1}(α y) d_n = d_n θ_n(y)
///   (e) d_n d_{n+1} = 0
inline CartanReport cartan_verify(const HomCoRep& C, std::size_t n_max, const ChainOptions& opt = {}) {
    CartanReport rep;
    rep.n_max = n_max;
    const HomAlgebra& L = C.base();
    const std::size_t l = L.dim();
    detail::checked_chain_size(C.mdim(), l, n_max + 1, opt);

    std::vector<Mat> d(n_max + 2), T(n_max + 1);
    for (std::size_t n = 0; n <= n_max + 1; ++n) d[n] = differential(C, n, opt);
    for (std::size_t n = 0; n <= n_max; ++n) T[n] = twist_op(C, n, opt);
    std::vector<Vector> e(l), ae(l);
    for (std::size_t i = 0; i < l; ++i) {
        e[i] = unit_vector(l, i);
        ae[i] = L.alpha().column(i);
    }
    // theta_n of basis vectors, their alpha images and brackets, cached per degree
    std::vector<std::vector<Mat>> th(n_max + 1), th_a(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n)
        for (std::size_t i = 0; i < l; ++i) {
            th[n].push_back(theta(C, n, e[i], opt));
            th_a[n].push_back(theta(C, n, ae[i], opt));
        }
    auto first_diff = [](const Mat& a, const Mat& b) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t i = 0; i < a.rows(); ++i)
                if (a(i, j) != b(i, j)) return j;
        return std::nullopt;
    };
    auto record = [&](char id, std::size_t n, std::vector<std::size_t> args, const Mat& lhs, const Mat& rhs) {
        ++rep.checked;
        if (auto c = first_diff(lhs, rhs)) rep.failures.push_back({id, n, std::move(args), *c});
    };

    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t xi = 0; xi < l; ++xi)
            for (std::size_t yi = 0; yi < l; ++yi) {
                const Mat lhs = th_a[n][xi] * th[n][yi] - th_a[n][yi] * th[n][xi];
                const Mat rhs = -(theta(C, n, L.bracket_basis(xi, yi), opt) * T[n]);
                record('b', n, {xi, yi}, lhs, rhs);
            }
        if (n == 0) continue;
        for (std::size_t yi = 0; yi < l; ++yi) {
            const Mat a_lhs = d[n + 1] * append_op(C, n, e[yi], opt) + append_op(C, n - 1, ae[yi], opt) * d[n];
            record('a', n, {yi}, a_lhs, th[n][yi]);
            record('d', n, {yi}, th_a[n - 1][yi] * d[n], d[n] * th[n][yi]);
        }
        for (std::size_t xi = 0; xi < l; ++xi)
            for (std::size_t yi = 0; yi < l; ++yi) {
                const Mat lhs = th[n][xi] * append_op(C, n - 1, e[yi], opt) -
                                append_op(C, n - 1, ae[yi], opt) * th[n - 1][xi];
                const Mat rhs = append_op(C, n - 1, L.bracket_basis(yi, xi), opt) * T[n - 1];
                record('c', n, {xi, yi}, lhs, rhs);
            }
        record('e', n, {}, d[n] * d[n + 1], Mat(d[n].rows(), d[n + 1].cols()));
    }
    return rep;
}

/// d_n d_{n+1} = 0 for 1 <= n < top.
inline bool squares_to_zero(const HomCoRep& C, std::size_t top, const ChainOptions& opt = {}) {
    Mat prev = differential(C, 1, opt);
    for (std::size_t n = 1; n < top; ++n) {
        Mat next = differential(C, n + 1, opt);
        if (!(prev * next).is_zero()) return false;
        prev = std::move(next);
    }
    return true;
}

struct DegreeShiftReport {
    std::size_t degree = 0;
    std::size_t lhs_dim = 0;  // HL_n(L, L)
    std::size_t rhs_dim = 0;  // HL_{n+1}(L, K)
    bool minus_id_commutes = false;      // d^K (-Id) = (-Id) d^L
    bool minus_id_anticommutes = false;  // d^K_{n+1} = -d^L_n
    bool signed_chain_map = false;       // (-1)^{n+1} Id is a chain map in degrees n, n+1
    bool map_is_iso = false;             // induced map on homology is bijective
};

/// Compares HL_n(L, L) with HL_{n+1}(L, K) under the identification
/// L ⊗ L^{⊗n} = K ⊗ L^{⊗(n+1)} of basis tensors.
inline DegreeShiftReport degree_shift_check(const HomAlgebra& L, std::size_t n, const ChainOptions& opt = {}) {
    DegreeShiftReport r;
    r.degree = n;
    const HomCoRep self = corep_self(L);
    const HomCoRep ground = corep_ground(L);
    const Mat dL_n = differential(self, n, opt), dL_n1 = differential(self, n + 1, opt);
    const Mat dK_n1 = differential(ground, n + 1, opt), dK_n2 = differential(ground, n + 2, opt);

    const auto hl = detail::homology_from(n, dL_n, dL_n1);
    const auto hk = detail::homology_from(n + 1, dK_n1, dK_n2);
    r.lhs_dim = hl.dim;
    r.rhs_dim = hk.dim;

    // Both complexes share bases, so a chain map phi_k = s_k Id reduces to d^K = (s_{k-1}/s_k) d^L.
    // In degree 0 the target of d^L_0 is the zero space and only d^K_1 = 0 is required.
    const bool comm_n = n == 0 ? dK_n1.is_zero() : dK_n1 == dL_n;
    const bool anti_n = n == 0 ? dK_n1.is_zero() : dK_n1 == -dL_n;
    r.minus_id_commutes = comm_n && dK_n2 == dL_n1;
    r.minus_id_anticommutes = anti_n && dK_n2 == -dL_n1;
    r.signed_chain_map = r.minus_id_anticommutes;

    // -Id maps cycles onto cycles and boundaries onto boundaries exactly when kernels and images agree.
    const Subspace zl = kernel(dL_n);
    const Subspace zk = kernel(dK_n1);
    const Subspace bl = Subspace::image(dL_n1);
    const Subspace bk = Subspace::image(dK_n2);
    r.map_is_iso = zl == zk && bl == bk && r.lhs_dim == r.rhs_dim;
    return r;
}

}  // namespace homuce
