#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homuce/errors.hpp"
#include "homuce/scalar.hpp"

namespace homuce {

namespace detail {

// Affine value produced while parsing: constant + sum coef[label] * label.
struct LinValue {
    Scalar constant;
    std::map<std::size_t, Scalar> coef;

    bool is_constant() const {
        for (const auto& [k, v] : coef)
            if (!v.is_zero()) return false;
        return true;
    }
    void scale(const Scalar& s) {
        constant *= s;
        for (auto& [k, v] : coef) v *= s;
    }
    void add(const LinValue& o, bool negate) {
        if (negate) {
            constant -= o.constant;
            for (const auto& [k, v] : o.coef) coef[k] -= v;
        } else {
            constant += o.constant;
            for (const auto& [k, v] : o.coef) coef[k] += v;
        }
    }
};

class ExprParser {
public:
    ExprParser(std::string_view text, const std::vector<std::string>* labels, long field_d,
               int line, int column_offset)
        : text_(text), labels_(labels), field_d_(field_d), line_(line), col0_(column_offset) {}

    LinValue parse() {
        LinValue v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("end of expression");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(expected, line_, col0_ + static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LinValue expr() {
        skip_ws();
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        LinValue acc;
        acc.add(term(), negate);
        for (;;) {
            if (accept('+')) {
                acc.add(term(), false);
            } else if (accept('-')) {
                acc.add(term(), true);
            } else {
                break;
            }
        }
        return acc;
    }

    LinValue term() {
        LinValue acc = factor();
        while (accept('*')) {
            LinValue rhs = factor();
            if (rhs.is_constant()) {
                acc.scale(rhs.constant);
            } else if (acc.is_constant()) {
                rhs.scale(acc.constant);
                acc = std::move(rhs);
            } else {
                fail("a linear expression (product of two basis elements)");
            }
        }
        return acc;
    }

    Rational integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("integer");
        return Rational(std::string(text_.substr(start, pos_ - start)));
    }

    LinValue factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("number, sqrt(d), '(' or basis label");
        const char c = text_[pos_];
        LinValue v;
        if (c == '(') {
            ++pos_;
            v = expr();
            if (!accept(')')) fail("')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational num = integer();
            if (accept('/')) {
                std::size_t at = pos_;
                Rational den = integer();
                if (den == 0) {
                    pos_ = at;
                    fail("nonzero denominator");
                }
                num /= den;
            }
            num.canonicalize();
            v.constant = Scalar(num);
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                    text_[pos_] == '\''))
                ++pos_;
            std::string ident(text_.substr(start, pos_ - start));
            if (ident == "sqrt") {
                if (!accept('(')) fail("'(' after sqrt");
                std::size_t at = pos_;
                Rational d = integer();
                if (!accept(')')) fail("')'");
                if (!d.get_num().fits_slong_p() || field_d_ == 0 || d != field_d_) {
                    pos_ = at;
                    fail(field_d_ == 0 ? "rational entries (document field is rational)"
                                       : "sqrt(" + std::to_string(field_d_) + ")");
                }
                v.constant = Scalar::sqrt_of(field_d_);
                return v;
            }
            if (labels_ == nullptr) {
                pos_ = start;
                fail("number or sqrt(d)");
            }
            for (std::size_t i = 0; i < labels_->size(); ++i) {
                if ((*labels_)[i] == ident) {
                    v.coef[i] = Scalar(1);
                    return v;
                }
            }
            throw UnknownLabel(ident, line_, col0_ + static_cast<int>(start) + 1);
        }
        fail("number, sqrt(d), '(' or basis label");
    }

    std::string_view text_;
    const std::vector<std::string>* labels_;
    long field_d_;
    int line_;
    int col0_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "p/q", "p/q+r/s*sqrt(d)" and the like. field_d == 0 means the
/// rational field, in which sqrt(...) is rejected.
inline Scalar parse_scalar(std::string_view text, long field_d = 2, int line = 1, int column = 0) {
    detail::ExprParser p(text, nullptr, field_d, line, column);
    return p.parse().constant;
}

/// Parses a linear combination of basis labels such as "a1 - 1/2*sqrt(2)*a3".
inline std::vector<Scalar> parse_linear(std::string_view text, const std::vector<std::string>& labels,
                                        long field_d = 2, int line = 1, int column = 0) {
    detail::ExprParser p(text, &labels, field_d, line, column);
    detail::LinValue v = p.parse();
    if (!v.constant.is_zero())
        throw ParseError("a linear combination of basis labels", line, column + 1);
    std::vector<Scalar> out(labels.size());
    for (const auto& [k, c] : v.coef) out[k] = c;
    return out;
}

/// Canonical text for a linear combination, in basis order ("0" when empty).
inline std::string format_linear(const std::vector<Scalar>& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Scalar& c = v[i];
        if (c.is_zero()) continue;
        std::string coef;
        bool negative = false;
        if (c.is_rational()) {
            Rational a = c.rational_part();
            if (sgn(a) < 0) {
                negative = true;
                a = -a;
            }
            if (a != 1) coef = a.get_str() + "*";
        } else if (sgn(c.rational_part()) == 0) {
            Scalar m = c;
            if (sgn(c.irrational_part()) < 0) {
                negative = true;
                m = -c;
            }
            coef = m.str() + "*";
        } else {
            coef = "(" + c.str() + ")*";
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coef + labels[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace homuce
