#pragma once

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace dencoh {

/* Labels are the elements [1], …, [n] of C_n, stored as 1-based ints.
** A LabelSum is an element of K[C_n]: labels with rational coefficients. */
using Label = int;

struct LabelTerm {
    Label label;
    Rational coeff;
};

class LabelSum {
  public:
    LabelSum() = default;
    explicit LabelSum(Label l) { terms_.push_back({l, Rational(1)}); }

    static LabelSum full(int n) {
        LabelSum s;
        for (int r = 1; r <= n; ++r)
            s.terms_.push_back({r, Rational(1)});
        return s;
    }

    const std::vector<LabelTerm>& terms() const { return terms_; }

  private:
    std::vector<LabelTerm> terms_;
};

namespace detail {
inline void check_label_args(int m, int n, int i, int r) {
    if (m < 1 || n < 1)
        throw std::out_of_range("label map arity out of range");
    if (i < 1 || i > m)
        throw std::out_of_range("label map position out of range");
    if (r < 1 || r > m + n - 1)
        throw std::out_of_range("label out of range");
}
} // namespace detail

/* The C_{m+n−1} → C_m relabeling for composing an arity-n element into slot i
** of an arity-m element: the composite position [r] seen from the outer
** element. */
inline Label outer_label(int m, int n, int i, int r) {
    detail::check_label_args(m, n, i, r);
    if (r <= i - 1)
        return r;
    if (r <= i + n - 1)
        return i;
    return r - n + 1;
}

/* The companion C_{m+n−1} → K[C_n] relabeling: the position(s) seen from the
** inner element. Positions outside the inner block smear over all of C_n. */
inline LabelSum inner_label_sum(int m, int n, int i, int r) {
    detail::check_label_args(m, n, i, r);
    if (r >= i && r <= i + n - 1)
        return LabelSum(r - (i - 1));
    return LabelSum::full(n);
}

} // namespace dencoh
