#pragma once

#include <stdexcept>
#include <vector>

#include "dendcoalg.hpp"
#include "linalg.hpp"
#include "operad.hpp"

namespace dencoh {

/* Finite-dimensional dendriform algebra: ≺, ≻ : A⊗A → A with the three
** splitting identities; their sum is associative. */
struct DendAlgebra {
    int dim = 0;
    LinearMap prec; // ≺, d × d²
    LinearMap succ; // ≻, d × d²

    bool shape_ok() const {
        return prec.cod_dim() == dim && prec.dom_dim() == dim * dim && succ.cod_dim() == dim &&
               succ.dom_dim() == dim * dim;
    }
};

/* Violated identity indices:
**   1: (a≺b)≺c = a≺(b≺c + b≻c)
**   2: (a≻b)≺c = a≻(b≺c)
**   3: (a≺b + a≻b)≻c = a≻(b≻c) */
inline std::vector<int> dendalg_violation_list(const DendAlgebra& a) {
    if (!a.shape_ok())
        throw std::invalid_argument("dendriform algebra shape mismatch");
    int d = a.dim;
    LinearMap sum = a.prec + a.succ;
    std::vector<int> out;
    if (!(compose(a.prec, pad(a.prec, 0, 1, d)) - compose(a.prec, pad(sum, 1, 0, d))).is_zero())
        out.push_back(1);
    if (!(compose(a.prec, pad(a.succ, 0, 1, d)) - compose(a.succ, pad(a.prec, 1, 0, d))).is_zero())
        out.push_back(2);
    if (!(compose(a.succ, pad(sum, 0, 1, d)) - compose(a.succ, pad(a.succ, 1, 0, d))).is_zero())
        out.push_back(3);
    return out;
}

inline int check_dendalg_violation(const DendAlgebra& a) {
    auto list = dendalg_violation_list(a);
    return list.empty() ? 0 : list.front();
}

inline bool check_dend_algebra(const DendAlgebra& a) { return check_dendalg_violation(a) == 0; }

/* π([1]) = ≺, π([2]) = ≻ in the labeled End operad; a multiplication exactly
** when the algebra identities hold. */
inline LabeledElem alg_multiplication(const DendAlgebra& a) {
    return {a.dim, 2, {a.prec, a.succ}};
}

/* The identification (A*)^{⊗n} ≅ (A^{⊗n})* sending f_1⊗…⊗f_n to the product
** functional. With coordinate dual bases and the global flattening it is the
** identity matrix; it is materialized only to make the convention testable. */
inline LinearMap w_iso(int n, int d) {
    return LinearMap::identity(static_cast<int>(ipow(d, n)));
}

/* Dual dendriform coalgebra on A*: in coordinates the structure matrices
** simply transpose. */
inline DendCoalgebra dualize(const DendAlgebra& a) {
    return {a.dim, a.prec.transpose(), a.succ.transpose()};
}

/* Inverse direction, used for the double-dual round trip. */
inline DendAlgebra dualize_coalgebra(const DendCoalgebra& c) {
    return {c.dim, c.prec.transpose(), c.succ.transpose()};
}

/* Operad isomorphism Hom(K[C_n]⊗A^{⊗n}, A) → Hom(K[C_n]⊗A*, (A*)^{⊗n}):
** componentwise transpose (w is the identity in coordinates). */
inline LabeledElem dualize_elem(const LabeledElem& f) {
    LabeledElem out{f.dim, f.arity, {}};
    for (const auto& c : f.comps)
        out.comps.push_back(c.transpose());
    return out;
}

/* Coordinates of an algebra cochain: components in label order, each (d × d^n)
** matrix flattened row-major; index = (label−1)·d^{n+1} + row·d^n + col. */
inline std::vector<Rational> alg_coords(const LabeledElem& f) {
    long long block = static_cast<long long>(f.comps[0].cod_dim()) * f.comps[0].dom_dim();
    std::vector<Rational> v(static_cast<size_t>(f.arity) * block);
    for (int k = 0; k < f.arity; ++k)
        for (int r = 0; r < f.comps[k].cod_dim(); ++r)
            for (const auto& [c, val] : f.comps[k].mat.row(r))
                v[static_cast<size_t>(k) * block +
                  static_cast<size_t>(r) * f.comps[k].dom_dim() + c] = val;
    return v;
}

/* Matrix of the degree-n coboundary δ_π : C^n → C^{n+1} of the dendriform
** algebra complex with self coefficients. */
inline SparseMatrix alg_coboundary_matrix(const DendAlgebra& a, int degree) {
    LabeledElem pi = alg_multiplication(a);
    if (!is_multiplication<LabeledEndOps>(pi))
        throw std::invalid_argument("not a dendriform algebra");
    int d = a.dim;
    long long dom = ipow(d, degree);
    long long block = d * dom;
    long long out_block = d * dom * d;
    SparseMatrix out(static_cast<int>((degree + 1) * out_block),
                     static_cast<int>(degree * block));
    Rational delta_sign(parity_sign(degree - 1));
    for (int k = 0; k < degree; ++k)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < static_cast<int>(dom); ++c) {
                LabeledElem basis = LabeledEndOps::zero(d, degree);
                basis.comps[k].mat.add_at(r, c, Rational(1));
                LabeledElem image =
                    LabeledEndOps::scale(d_pi_unchecked<LabeledEndOps>(pi, basis), delta_sign);
                long long col = k * block + static_cast<long long>(r) * dom + c;
                for (int kk = 0; kk <= degree; ++kk)
                    for (int rr = 0; rr < d; ++rr)
                        for (const auto& [cc, val] : image.comps[kk].mat.row(rr))
                            out.add_at(static_cast<int>(kk * out_block +
                                                        static_cast<long long>(rr) * dom * d + cc),
                                       static_cast<int>(col), val);
            }
    return out;
}

inline CohomologyTable alg_cohomology(const DendAlgebra& a, int max_degree) {
    if (max_degree < 1)
        throw std::invalid_argument("max_degree must be >= 1");
    CohomologyTable table;
    int prev_rank = 0;
    for (int n = 1; n <= max_degree; ++n) {
        SparseMatrix delta = alg_coboundary_matrix(a, n);
        CohomologyRow row;
        row.degree = n;
        row.dim_cochain = delta.cols();
        row.rank_delta = rank(delta);
        row.dim_kernel = row.dim_cochain - row.rank_delta;
        row.dim_h = row.dim_kernel - prev_rank;
        prev_rank = row.rank_delta;
        table.push_back(row);
    }
    return table;
}

inline std::vector<long long> alg_cohomology_dims(const DendAlgebra& a, int max_degree) {
    std::vector<long long> dims;
    for (const auto& row : alg_cohomology(a, max_degree))
        dims.push_back(row.dim_h);
    return dims;
}

} // namespace dencoh
