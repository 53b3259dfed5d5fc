#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dendcoalg.hpp"
#include "labels.hpp"
#include "linalg.hpp"

namespace dencoh {

/* Finite graded vector space: a sorted list of (degree, dim) pairs. Global
** basis indices run through the support in degree order; tensor tuples over
** the global basis flatten with the usual leftmost-most-significant rule and
** carry the sum of the factor degrees. */
struct GradedSpace {
    std::vector<std::pair<int, int>> support;

    int total_dim() const {
        int d = 0;
        for (const auto& [deg, dim] : support)
            d += dim;
        return d;
    }

    bool shape_ok() const {
        if (support.empty())
            return false;
        for (size_t i = 0; i < support.size(); ++i) {
            if (support[i].second <= 0)
                return false;
            if (i > 0 && support[i - 1].first >= support[i].first)
                return false;
        }
        return true;
    }

    int degree_of(int global) const {
        for (const auto& [deg, dim] : support) {
            if (global < dim)
                return deg;
            global -= dim;
        }
        throw std::out_of_range("graded basis index out of range");
    }

    long long tuple_degree(long long flat, int arity) const {
        int dim = total_dim();
        long long deg = 0;
        for (int k = 0; k < arity; ++k) {
            deg += degree_of(static_cast<int>(flat % dim));
            flat /= dim;
        }
        return deg;
    }
};

/* Homogeneous map C^{⊗src_arity} → C^{⊗dst_arity} of the given degree shift,
** stored over the flattened global bases. */
struct GradedMap {
    int src_arity = 1;
    int dst_arity = 1;
    int shift = 0;
    LinearMap map;

    bool shape_ok(const GradedSpace& space) const {
        int dim = space.total_dim();
        if (map.dom_dim() != ipow(dim, src_arity) || map.cod_dim() != ipow(dim, dst_arity))
            return false;
        for (int r = 0; r < map.cod_dim(); ++r)
            for (const auto& [c, v] : map.mat.row(r))
                if (space.tuple_degree(r, dst_arity) != space.tuple_degree(c, src_arity) + shift)
                    return false;
        return true;
    }

    bool is_zero() const { return map.is_zero(); }
};

inline GradedMap graded_zero(const GradedSpace& space, int src_arity, int dst_arity, int shift) {
    int dim = space.total_dim();
    return {src_arity, dst_arity, shift,
            LinearMap::zero(static_cast<int>(ipow(dim, dst_arity)),
                            static_cast<int>(ipow(dim, src_arity)))};
}

inline GradedMap graded_compose(const GradedMap& f, const GradedMap& g) {
    if (g.dst_arity != f.src_arity)
        throw std::invalid_argument("graded composition arity mismatch");
    return {g.src_arity, f.dst_arity, f.shift + g.shift, compose(f.map, g.map)};
}

inline GradedMap graded_add(const GradedMap& a, const GradedMap& b) {
    if (a.src_arity != b.src_arity || a.dst_arity != b.dst_arity || a.shift != b.shift)
        throw std::invalid_argument("graded sum shape mismatch");
    return {a.src_arity, a.dst_arity, a.shift, a.map + b.map};
}

inline GradedMap graded_scale(const GradedMap& a, const Rational& s) {
    return {a.src_arity, a.dst_arity, a.shift, a.map.scaled(s)};
}

/* id^{⊗r} ⊗ f ⊗ id^{⊗t} for f : C → C^{⊗s}, with the Koszul sign
** (−1)^{|f|·(|x_1|+…+|x_r|)} picked up when f passes the first r factors. */
inline GradedMap graded_pad(const GradedSpace& space, const GradedMap& f, int r, int t) {
    if (f.src_arity != 1)
        throw std::invalid_argument("graded_pad expects a single-input map");
    int dim = space.total_dim();
    int s = f.dst_arity;
    long long dr = ipow(dim, r), dt = ipow(dim, t);
    long long ds = ipow(dim, s);
    GradedMap out = graded_zero(space, r + 1 + t, r + s + t, f.shift);
    bool odd_shift = ((f.shift % 2) + 2) % 2 == 1;
    for (long long p = 0; p < dr; ++p) {
        bool negate = odd_shift && (space.tuple_degree(p, r) % 2 + 2) % 2 == 1;
        for (int row = 0; row < f.map.cod_dim(); ++row)
            for (const auto& [col, v] : f.map.mat.row(row))
                for (long long q = 0; q < dt; ++q) {
                    long long out_row = (p * ds + row) * dt + q;
                    long long out_col = (p * dim + col) * dt + q;
                    out.map.mat.add_at(static_cast<int>(out_row), static_cast<int>(out_col),
                                       negate ? -v : v);
                }
    }
    return out;
}

/* f_1 ⊗ … ⊗ f_k for arity-1 factors of degree 0 (no Koszul signs arise);
** used for the Rota-Baxter prefixes R ⊗ … ⊗ id ⊗ … ⊗ R. */
inline GradedMap graded_slotwise(const GradedSpace& space,
                                 const std::vector<const GradedMap*>& factors) {
    LinearMap acc = LinearMap::identity(1);
    for (const GradedMap* f : factors) {
        if (f->shift != 0 || f->src_arity != 1 || f->dst_arity != 1 ||
            f->map.dom_dim() != space.total_dim())
            throw std::invalid_argument("slotwise tensor expects degree-0 endomorphisms");
        acc = tensor(acc, f->map);
    }
    return {static_cast<int>(factors.size()), static_cast<int>(factors.size()), 0, acc};
}

/* ---- homotopy structures ------------------------------------------------ */

enum class CheckStatus { passed, failed, truncated };

struct IdentityCheck {
    int n = 0;
    Label label = 0; // 0 for unlabeled identities
    CheckStatus status = CheckStatus::passed;
};

struct HomotopyReport {
    std::vector<IdentityCheck> lines;

    bool ok() const {
        for (const auto& l : lines)
            if (l.status == CheckStatus::failed)
                return false;
        return true;
    }
    bool fully_verified() const {
        for (const auto& l : lines)
            if (l.status != CheckStatus::passed)
                return false;
        return true;
    }
};

/* A_∞-coalgebra truncated at max_arity: ops[k−1] : C → C^{⊗k} of shift k−2.
** Arities above max_arity are unspecified (not zero), so identities that
** would involve them report as truncated rather than verified. */
struct AInfCoalgebra {
    GradedSpace space;
    int max_arity = 0;
    std::vector<GradedMap> ops;

    bool shape_ok() const {
        if (!space.shape_ok() || static_cast<int>(ops.size()) != max_arity)
            return false;
        for (int k = 1; k <= max_arity; ++k)
            if (ops[k - 1].src_arity != 1 || ops[k - 1].dst_arity != k ||
                ops[k - 1].shift != k - 2 || !ops[k - 1].shape_ok(space))
                return false;
        return true;
    }
};

/* Σ_{r+s+t=n} (−1)^{rs+t} (id^r ⊗ Δ_s ⊗ id^t) ∘ Δ_{r+1+t} per identity level. */
inline HomotopyReport check_ainf(const AInfCoalgebra& c, int n_max) {
    if (!c.shape_ok())
        throw std::invalid_argument("A-infinity structure shape mismatch");
    HomotopyReport rep;
    for (int n = 1; n <= n_max; ++n) {
        if (n > c.max_arity) {
            rep.lines.push_back({n, 0, CheckStatus::truncated});
            continue;
        }
        GradedMap acc = graded_zero(c.space, 1, n, n - 3); // shift (s−2)+(m−2) = n−3
        for (int r = 0; r + 1 <= n; ++r)
            for (int s = 1; r + s <= n; ++s) {
                int t = n - r - s;
                int m = r + 1 + t;
                GradedMap term =
                    graded_compose(graded_pad(c.space, c.ops[s - 1], r, t), c.ops[m - 1]);
                int sign = parity_sign(static_cast<long long>(r) * s + t);
                acc = graded_add(acc, graded_scale(term, Rational(sign)));
            }
        rep.lines.push_back({n, 0, acc.is_zero() ? CheckStatus::passed : CheckStatus::failed});
    }
    return rep;
}

/* Dend_∞-coalgebra: k labeled ops per arity k. In the standard form the maps
** have shift k−2 and the identities carry (−1)^{rs+t}; in the desuspended
** ([1]) form all maps have shift −1 and the identities are sign-free. */
struct DendInfCoalgebra {
    GradedSpace space;
    int max_arity = 0;
    bool desuspended = false;
    std::vector<std::vector<GradedMap>> ops; // ops[k−1][r−1]

    bool shape_ok() const {
        if (!space.shape_ok() || static_cast<int>(ops.size()) != max_arity)
            return false;
        for (int k = 1; k <= max_arity; ++k) {
            if (static_cast<int>(ops[k - 1].size()) != k)
                return false;
            for (const auto& op : ops[k - 1])
                if (op.src_arity != 1 || op.dst_arity != k ||
                    op.shift != (desuspended ? -1 : k - 2) || !op.shape_ok(space))
                    return false;
        }
        return true;
    }

    GradedMap eval(int arity, const LabelSum& s) const {
        GradedMap acc = graded_zero(space, 1, arity, ops[arity - 1][0].shift);
        for (const auto& [label, coeff] : s.terms())
            acc = graded_add(acc, graded_scale(ops[arity - 1][label - 1], coeff));
        return acc;
    }
};

/* One labeled identity sum: fixed n and [θ] ∈ C_n. */
inline GradedMap dendinf_identity_sum(const DendInfCoalgebra& c, int n, Label theta) {
    int out_shift = c.desuspended ? -2 : n - 3;
    GradedMap acc = graded_zero(c.space, 1, n, out_shift);
    for (int r = 0; r + 1 <= n; ++r)
        for (int s = 1; r + s <= n; ++s) {
            int t = n - r - s;
            int m = r + 1 + t;
            GradedMap inner = c.eval(s, inner_label_sum(m, s, r + 1, theta));
            const GradedMap& outer = c.ops[m - 1][outer_label(m, s, r + 1, theta) - 1];
            GradedMap term = graded_compose(graded_pad(c.space, inner, r, t), outer);
            int sign = c.desuspended ? 1 : parity_sign(static_cast<long long>(r) * s + t);
            acc = graded_add(acc, graded_scale(term, Rational(sign)));
        }
    return acc;
}

inline HomotopyReport check_dendinf(const DendInfCoalgebra& c, int n_max) {
    if (!c.shape_ok())
        throw std::invalid_argument("homotopy dendriform structure shape mismatch");
    HomotopyReport rep;
    for (int n = 1; n <= n_max; ++n) {
        if (n > c.max_arity) {
            for (Label theta = 1; theta <= n; ++theta)
                rep.lines.push_back({n, theta, CheckStatus::truncated});
            continue;
        }
        for (Label theta = 1; theta <= n; ++theta)
            rep.lines.push_back({n, theta,
                                 dendinf_identity_sum(c, n, theta).is_zero()
                                     ? CheckStatus::passed
                                     : CheckStatus::failed});
    }
    return rep;
}

/* Desuspension: V_i = C_{i+1} with the same global basis order, and
** Δ'_{k,[r]} = ω_k ∘ Δ_{k,[r]} ∘ s where ω_k applies s^{−1} to every tensor
** factor, contributing (−1)^{Σ_j (k−j)·|y_j|} on a row tuple (y_1..y_k). The
** resulting maps all have degree −1 and satisfy the sign-free identities. */
inline DendInfCoalgebra shift_to_dendinf1(const DendInfCoalgebra& c) {
    if (c.desuspended)
        throw std::invalid_argument("structure is already desuspended");
    DendInfCoalgebra out;
    for (const auto& [deg, dim] : c.space.support)
        out.space.support.push_back({deg - 1, dim});
    out.max_arity = c.max_arity;
    out.desuspended = true;
    int dim = c.space.total_dim();
    for (int k = 1; k <= c.max_arity; ++k) {
        out.ops.emplace_back();
        for (Label rr = 1; rr <= k; ++rr) {
            const GradedMap& op = c.ops[k - 1][rr - 1];
            GradedMap shifted = graded_zero(out.space, 1, k, -1);
            for (int row = 0; row < op.map.cod_dim(); ++row) {
                long long sign_exp = 0;
                long long rest = row;
                for (int j = k; j >= 1; --j) { // digits right to left: position j
                    int digit = static_cast<int>(rest % dim);
                    rest /= dim;
                    sign_exp += static_cast<long long>(k - j) * c.space.degree_of(digit);
                }
                Rational sgn(parity_sign(sign_exp));
                for (const auto& [col, v] : op.map.mat.row(row))
                    shifted.map.mat.add_at(row, col, v * sgn);
            }
            out.ops[k - 1].push_back(shifted);
        }
    }
    return out;
}

/* Inverse of shift_to_dendinf1; the sign factors are involutive. */
inline DendInfCoalgebra shift_from_dendinf1(const DendInfCoalgebra& c) {
    if (!c.desuspended)
        throw std::invalid_argument("structure is not desuspended");
    DendInfCoalgebra tmp = c;
    tmp.desuspended = false;
    DendInfCoalgebra out;
    for (const auto& [deg, dim] : c.space.support)
        out.space.support.push_back({deg + 1, dim});
    out.max_arity = c.max_arity;
    out.desuspended = false;
    int dim = c.space.total_dim();
    for (int k = 1; k <= c.max_arity; ++k) {
        out.ops.emplace_back();
        for (Label rr = 1; rr <= k; ++rr) {
            const GradedMap& op = c.ops[k - 1][rr - 1];
            GradedMap unshifted = graded_zero(out.space, 1, k, k - 2);
            for (int row = 0; row < op.map.cod_dim(); ++row) {
                long long sign_exp = 0;
                long long rest = row;
                for (int j = k; j >= 1; --j) {
                    int digit = static_cast<int>(rest % dim);
                    rest /= dim;
                    sign_exp += static_cast<long long>(k - j) * out.space.degree_of(digit);
                }
                Rational sgn(parity_sign(sign_exp));
                for (const auto& [col, v] : op.map.mat.row(row))
                    unshifted.map.mat.add_at(row, col, v * sgn);
            }
            out.ops[k - 1].push_back(unshifted);
        }
    }
    return out;
}

/* Splitting: Δ_k = Δ_{k,[1]} + … + Δ_{k,[k]} is an A_∞ structure. The input
** is validated up to check_n (0 skips the validation). */
inline AInfCoalgebra split(const DendInfCoalgebra& c, int check_n) {
    if (check_n > 0 && !check_dendinf(c, check_n).ok())
        throw std::invalid_argument("split of an invalid homotopy dendriform structure");
    if (c.desuspended)
        throw std::invalid_argument("split expects the unshifted form");
    AInfCoalgebra out{c.space, c.max_arity, {}};
    for (int k = 1; k <= c.max_arity; ++k)
        out.ops.push_back(c.eval(k, LabelSum::full(k)));
    return out;
}

/* Rota-Baxter operator of weight 0 on an A_∞-coalgebra: a degree-0 map
** R : C → C with R^{⊗k}∘Δ_k = (Σ_i R⊗…⊗id_i⊗…⊗R)∘Δ_k∘R for every arity. */
struct RBOInf {
    GradedMap R; // 1 → 1, shift 0
};

inline HomotopyReport check_rbo_inf(const AInfCoalgebra& c, const RBOInf& r) {
    if (!c.shape_ok() || r.R.shift != 0 || !r.R.shape_ok(c.space))
        throw std::invalid_argument("Rota-Baxter data shape mismatch");
    HomotopyReport rep;
    GradedMap id{1, 1, 0, LinearMap::identity(c.space.total_dim())};
    for (int k = 1; k <= c.max_arity; ++k) {
        std::vector<const GradedMap*> all(k, &r.R);
        GradedMap lhs = graded_compose(graded_slotwise(c.space, all), c.ops[k - 1]);
        GradedMap rhs = graded_zero(c.space, 1, k, k - 2);
        for (int i = 1; i <= k; ++i) {
            std::vector<const GradedMap*> slots(k, &r.R);
            slots[i - 1] = &id;
            rhs = graded_add(rhs, graded_compose(graded_slotwise(c.space, slots),
                                                 graded_compose(c.ops[k - 1], r.R)));
        }
        rep.lines.push_back({k, 0,
                             graded_add(lhs, graded_scale(rhs, Rational(-1))).is_zero()
                                 ? CheckStatus::passed
                                 : CheckStatus::failed});
    }
    return rep;
}

/* Δ_{k,[r]} = (R ⊗ … ⊗ id at slot r ⊗ … ⊗ R) ∘ Δ_k. Both inputs are checked
** first (the A_∞ identities up to check_n). */
inline DendInfCoalgebra induce_dendinf(const AInfCoalgebra& c, const RBOInf& r, int check_n) {
    if (check_n > 0 && !check_ainf(c, check_n).ok())
        throw std::invalid_argument("induce on an invalid A-infinity structure");
    if (!check_rbo_inf(c, r).ok())
        throw std::invalid_argument("induce with a non-Rota-Baxter operator");
    DendInfCoalgebra out{c.space, c.max_arity, false, {}};
    GradedMap id{1, 1, 0, LinearMap::identity(c.space.total_dim())};
    for (int k = 1; k <= c.max_arity; ++k) {
        out.ops.emplace_back();
        for (int slot = 1; slot <= k; ++slot) {
            std::vector<const GradedMap*> slots(k, &r.R);
            slots[slot - 1] = &id;
            out.ops[k - 1].push_back(
                graded_compose(graded_slotwise(c.space, slots), c.ops[k - 1]));
        }
    }
    return out;
}

} // namespace dencoh
