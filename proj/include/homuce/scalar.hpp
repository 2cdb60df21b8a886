#pragma once

#include <gmpxx.h>

#include <functional>
#include <ostream>
#include <string>

#include "homuce/errors.hpp"

namespace homuce {

using Rational = mpq_class;

inline bool is_square_free(long d) {
    if (d < 2) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

/// Exact element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// Rationals live in every Q(sqrt(d)); a scalar with b == 0 carries d == 0
/// and combines with any field. Mixing two irrational scalars with
/// different radicands raises FieldMismatch.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& a) : a_(a) { a_.canonicalize(); }  // NOLINT
    Scalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        a_.canonicalize();
        b_.canonicalize();
        if (b_ == 0) {
            d_ = 0;
        } else if (!is_square_free(d_)) {
            throw FieldMismatch("radicand " + std::to_string(d) + " is not a square-free integer > 1");
        }
    }

    static Scalar sqrt_of(long d) { return Scalar(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& irrational_part() const { return b_; }
    long radicand() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return sgn(b_) == 0 && a_ == 1; }
    bool is_rational() const { return sgn(b_) == 0; }

    Scalar operator-() const {
        Scalar r;
        r.a_ = -a_;
        r.b_ = -b_;
        r.d_ = d_;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        a_ += o.a_;
        if (sgn(o.b_) != 0) {
            d_ = join(d_, o.d_);
            b_ += o.b_;
        }
        if (sgn(b_) == 0) d_ = 0;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        a_ -= o.a_;
        if (sgn(o.b_) != 0) {
            d_ = join(d_, o.d_);
            b_ -= o.b_;
        }
        if (sgn(b_) == 0) d_ = 0;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (sgn(b_) == 0 && sgn(o.b_) == 0) {
            a_ *= o.a_;
            return *this;
        }
        const long d = join(d_, o.d_);
        Rational na = a_ * o.a_ + b_ * o.b_ * d;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        d_ = sgn(b_) == 0 ? 0 : d;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    /// *this += x * y without temporaries on the rational path.
    void add_mul(const Scalar& x, const Scalar& y) {
        if (sgn(x.b_) == 0 && sgn(y.b_) == 0) {
            thread_local Rational t;
            mpq_mul(t.get_mpq_t(), x.a_.get_mpq_t(), y.a_.get_mpq_t());
            a_ += t;
            return;
        }
        *this += x * y;
    }

    /// Multiplicative inverse; (a - b*sqrt(d)) / (a^2 - d*b^2).
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero scalar");
        if (sgn(b_) == 0) return Scalar(Rational(1) / a_);
        Rational norm = a_ * a_ - b_ * b_ * d_;
        return Scalar(a_ / norm, -b_ / norm, d_);
    }

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// Canonical text form: "p/q", "p/q*sqrt(d)" or "p/q+r/s*sqrt(d)".
    std::string str() const {
        if (sgn(b_) == 0) return a_.get_str();
        std::string out;
        if (sgn(a_) != 0) out = a_.get_str();
        std::string coef;
        if (b_ == 1) {
            coef = "";
        } else if (b_ == -1) {
            coef = "-";
        } else {
            coef = b_.get_str() + "*";
        }
        if (!out.empty() && sgn(b_) > 0) out += "+";
        out += coef + "sqrt(" + std::to_string(d_) + ")";
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

    std::size_t hash() const {
        std::size_t h = std::hash<std::string>{}(a_.get_str());
        h ^= std::hash<std::string>{}(b_.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h ^ static_cast<std::size_t>(d_);
    }

private:
    static long join(long d1, long d2) {
        if (d1 == 0) return d2;
        if (d2 == 0 || d1 == d2) return d1;
        throw FieldMismatch("cannot combine sqrt(" + std::to_string(d1) + ") with sqrt(" +
                            std::to_string(d2) + ")");
    }

    Rational a_{0};
    Rational b_{0};
    long d_ = 0;
};

}  // namespace homuce
