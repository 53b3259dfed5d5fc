#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dendcoalg.hpp"
#include "linalg.hpp"
#include "operad.hpp"

namespace dencoh {

/* Truncated formal deformation of a dendriform coalgebra: the families
** Δ_{≺,t} = Σ Δ_{≺,i} t^i and Δ_{≻,t} = Σ Δ_{≻,i} t^i modulo t^{N+1},
** stored as the arity-2 labeled elements Δ_1 … Δ_N (Δ_0 is the base). */
struct TruncDeformation {
    DendCoalgebra base;
    int order = 0;
    std::vector<LabeledElem> terms; // terms[k] = Δ_{k+1}

    bool shape_ok() const {
        if (!base.shape_ok() || static_cast<int>(terms.size()) != order)
            return false;
        for (const auto& t : terms)
            if (t.arity != 2 || t.dim != base.dim)
                return false;
        return true;
    }

    LabeledElem term(int i) const { // Δ_i, including Δ_0
        if (i == 0)
            return dend_multiplication(base);
        return terms[i - 1];
    }
};

inline TruncDeformation trivial_deformation(const DendCoalgebra& base, int order) {
    TruncDeformation d{base, order, {}};
    d.terms.assign(order, LabeledCoEndOps::zero(base.dim, 2));
    return d;
}

/* Formal isomorphism Φ_t = id + Φ_1 t + … + Φ_N t^N. */
struct FormalIso {
    int order = 0;
    std::vector<LinearMap> terms; // terms[k] = Φ_{k+1}, d × d

    LinearMap term(int i, int dim) const {
        if (i == 0)
            return LinearMap::identity(dim);
        return terms[i - 1];
    }
};

/* Violation report for the deformation equations: the order n and label r of
** the first failing Σ_{i+j=n} Δ_i • Δ_j component, if any. */
struct DeformViolation {
    int order = 0;
    Label label = 0;
};

inline std::optional<DeformViolation> check_deformation_violation(const TruncDeformation& d) {
    if (!d.shape_ok())
        throw std::invalid_argument("deformation shape mismatch");
    for (int n = 0; n <= d.order; ++n) {
        LabeledElem acc = LabeledCoEndOps::zero(d.base.dim, 3);
        for (int i = 0; i <= n; ++i)
            acc = LabeledCoEndOps::add(acc, dot<LabeledCoEndOps>(d.term(i), d.term(n - i)));
        for (int r = 1; r <= 3; ++r)
            if (!acc.comps[r - 1].is_zero())
                return DeformViolation{n, r};
    }
    return std::nullopt;
}

inline bool check_deformation(const TruncDeformation& d) {
    return !check_deformation_violation(d).has_value();
}

/* The infinitesimal Δ_1 as a 2-cochain. Validity to order 1 means
** Δ•Δ_1 + Δ_1•Δ = 0, i.e. the infinitesimal is a 2-cocycle; anything else is
** refused. */
inline DendCochain infinitesimal(const TruncDeformation& d) {
    if (d.order < 1)
        throw std::invalid_argument("deformation has no order-1 term");
    LabeledElem mult = dend_multiplication(d.base);
    LabeledElem cocycle = LabeledCoEndOps::add(dot<LabeledCoEndOps>(mult, d.term(1)),
                                               dot<LabeledCoEndOps>(d.term(1), mult));
    if (!cocycle.is_zero())
        throw std::invalid_argument("infinitesimal of an invalid deformation");
    return elem_to_cochain(d.term(1));
}

/* Truncated inverse of Φ_t by the Neumann recursion Ψ_n = −Σ Φ_k∘Ψ_{n−k}. */
inline FormalIso invert(const FormalIso& phi, int dim) {
    FormalIso psi{phi.order, {}};
    std::vector<LinearMap> cache = {LinearMap::identity(dim)};
    for (int n = 1; n <= phi.order; ++n) {
        LinearMap acc = LinearMap::zero(dim, dim);
        for (int k = 1; k <= n; ++k)
            acc = acc - compose(phi.term(k, dim), cache[n - k]);
        cache.push_back(acc);
        psi.terms.push_back(acc);
    }
    return psi;
}

/* Transport of a deformation along Φ_t: the unique D' with
** Δ'_t ∘ Φ_t = (Φ_t ⊗ Φ_t) ∘ Δ_t mod t^{N+1}, computed as
** Δ'_n = Σ_{i+j+k+l=n} (Φ_i ⊗ Φ_j) ∘ Δ_k ∘ Ψ_l. */
inline TruncDeformation apply_equivalence(const FormalIso& phi, const TruncDeformation& d) {
    if (phi.order != d.order)
        throw std::invalid_argument("equivalence order mismatch");
    int dim = d.base.dim;
    FormalIso psi = invert(phi, dim);
    TruncDeformation out{d.base, d.order, {}};
    for (int n = 1; n <= d.order; ++n) {
        LabeledElem acc = LabeledCoEndOps::zero(dim, 2);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j)
                for (int k = 0; i + j + k <= n; ++k) {
                    int l = n - i - j - k;
                    LinearMap pre = tensor(phi.term(i, dim), phi.term(j, dim));
                    const LabeledElem mid = d.term(k);
                    LabeledElem piece{dim, 2, {}};
                    for (int r = 0; r < 2; ++r)
                        piece.comps.push_back(
                            compose(compose(pre, mid.comps[r]), psi.term(l, dim)));
                    acc = LabeledCoEndOps::add(acc, piece);
                }
        out.terms.push_back(acc);
    }
    return out;
}

/* Componentwise check of Σ_{i+j=n} Δ'_i([r])∘Φ_j = Σ_{i+j+k=n} (Φ_i⊗Φ_j)∘Δ_k([r]). */
inline bool check_equivalence(const FormalIso& phi, const TruncDeformation& d,
                              const TruncDeformation& dp) {
    if (phi.order != d.order || d.order != dp.order)
        throw std::invalid_argument("equivalence order mismatch");
    int dim = d.base.dim;
    for (int n = 0; n <= d.order; ++n)
        for (int r = 0; r < 2; ++r) {
            LinearMap lhs = LinearMap::zero(dim * dim, dim);
            for (int i = 0; i <= n; ++i)
                lhs = lhs + compose(dp.term(i).comps[r], phi.term(n - i, dim));
            LinearMap rhs = LinearMap::zero(dim * dim, dim);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; i + j <= n; ++j)
                    rhs = rhs + compose(tensor(phi.term(i, dim), phi.term(j, dim)),
                                        d.term(n - i - j).comps[r]);
            if (!(lhs - rhs).is_zero())
                return false;
        }
    return true;
}

/* Order-1 deformation over the dual numbers from a 2-cocycle. Rejects
** non-cocycles, reporting the label at which the order-1 equation fails. */
inline TruncDeformation infinitesimal_deformation_from_cocycle(const DendCoalgebra& base,
                                                               const DendCochain& z) {
    DendBicomodule self = dend_self_bicomodule(base);
    DendCochain dz = dend_coboundary(self, z);
    for (int r = 0; r < 3; ++r)
        if (!dz.comps[r].is_zero())
            throw std::invalid_argument("not a 2-cocycle: coboundary nonzero at label " +
                                        std::to_string(r + 1));
    TruncDeformation d{base, 1, {cochain_to_elem(base.dim, z)}};
    return d;
}

/* Obstruction to extending a valid order-N deformation:
** Ob = −Σ_{i+j=N+1, i,j≥1} Δ_i • Δ_j, a 3-cochain. */
inline DendCochain obstruction(const TruncDeformation& d) {
    if (auto v = check_deformation_violation(d))
        throw std::invalid_argument("obstruction of an invalid deformation (fails at order " +
                                    std::to_string(v->order) + ")");
    LabeledElem acc = LabeledCoEndOps::zero(d.base.dim, 3);
    for (int i = 1; i <= d.order; ++i) {
        int j = d.order + 1 - i;
        if (j >= 1 && j <= d.order)
            acc = LabeledCoEndOps::add(acc, dot<LabeledCoEndOps>(d.term(i), d.term(j)));
    }
    return elem_to_cochain(LabeledCoEndOps::scale(acc, Rational(-1)));
}

/* One-step extension: solve Δ•x + x•Δ = Ob for x = Δ_{N+1} and append it.
** (Δ•x + x•Δ is d_Δ(x) on arity 2, which is what the order-(N+1) deformation
** equation requires; it equals −δ_c(x) in the coboundary normalization, so
** solvability is exactly "Ob is a coboundary".) Returns the first-pivot
** solution, or nullopt when the obstruction class in H³ is nonzero. */
inline std::optional<TruncDeformation> extend(const TruncDeformation& d) {
    int dim = d.base.dim;
    DendCochain ob = obstruction(d);
    DendBicomodule self = dend_self_bicomodule(d.base);

    // matrix of x ↦ Δ•x + x•Δ from arity-2 to arity-3 coordinates
    LabeledElem mult = dend_multiplication(d.base);
    long long block2 = static_cast<long long>(dim) * dim * dim; // d²×d per component
    long long block3 = block2 * dim;                            // d³×d per component
    SparseMatrix mat(static_cast<int>(3 * block3), static_cast<int>(2 * block2));
    for (int k = 0; k < 2; ++k)
        for (int r = 0; r < dim * dim; ++r)
            for (int c = 0; c < dim; ++c) {
                LabeledElem basis = LabeledCoEndOps::zero(dim, 2);
                basis.comps[k].mat.add_at(r, c, Rational(1));
                LabeledElem image = LabeledCoEndOps::add(dot<LabeledCoEndOps>(mult, basis),
                                                         dot<LabeledCoEndOps>(basis, mult));
                long long col = k * block2 + static_cast<long long>(r) * dim + c;
                for (int kk = 0; kk < 3; ++kk)
                    for (int rr = 0; rr < image.comps[kk].cod_dim(); ++rr)
                        for (const auto& [cc, val] : image.comps[kk].mat.row(rr))
                            mat.add_at(static_cast<int>(kk * block3 +
                                                        static_cast<long long>(rr) * dim + cc),
                                       static_cast<int>(col), val);
            }
    std::vector<Rational> rhs = dend_coords(self, ob);
    auto sol = solve(mat, rhs);
    if (!sol)
        return std::nullopt;

    LabeledElem next = LabeledCoEndOps::zero(dim, 2);
    for (int k = 0; k < 2; ++k)
        for (int r = 0; r < dim * dim; ++r)
            for (int c = 0; c < dim; ++c) {
                const Rational& v = (*sol)[static_cast<size_t>(k * block2 +
                                                               static_cast<long long>(r) * dim + c)];
                if (!v.is_zero())
                    next.comps[k].mat.add_at(r, c, v);
            }
    TruncDeformation out = d;
    out.order += 1;
    out.terms.push_back(next);
    return out;
}

} // namespace dencoh
