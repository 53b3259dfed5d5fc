#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dencoh {

/* Exact rational scalar over arbitrary-precision integers.
** Canonical form is maintained at all times: gcd(|num|, den) = 1, den > 0,
** zero is 0/1. Everything in the library computes over these; there is no
** floating point anywhere. */
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0)
            throw std::invalid_argument("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /* Accepts "p" or "p/q" with optional leading '-'; q must be a positive
    ** integer after sign normalization. Rejects anything else, in particular
    ** "1/0", floats and empty strings. */
    static Rational parse(const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("empty rational literal");
        auto digits_only = [](const std::string& t) {
            if (t.empty())
                return false;
            for (char c : t)
                if (c < '0' || c > '9')
                    return false;
            return true;
        };
        std::string body = s;
        bool neg = false;
        if (body[0] == '-' || body[0] == '+') {
            neg = body[0] == '-';
            body = body.substr(1);
        }
        std::string num = body, den = "1";
        if (auto slash = body.find('/'); slash != std::string::npos) {
            num = body.substr(0, slash);
            den = body.substr(slash + 1);
        }
        if (!digits_only(num) || !digits_only(den))
            throw std::invalid_argument("malformed rational literal: " + s);
        Rational r;
        r.v_ = mpq_class(mpz_class(num), mpz_class(den));
        if (mpz_sgn(r.v_.get_den().get_mpz_t()) == 0)
            throw std::invalid_argument("rational with zero denominator: " + s);
        r.v_.canonicalize();
        if (neg)
            r.v_ = -r.v_;
        return r;
    }

    bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

    /* "p" when the denominator is 1, else "p/q". */
    std::string str() const {
        if (v_.get_den() == 1)
            return v_.get_num().get_str();
        return v_.get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw std::domain_error("division by zero rational");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }

    static Rational one() { return Rational(1); }

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace dencoh
