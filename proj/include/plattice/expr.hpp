#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "plattice/lifetime.hpp"

namespace plat {

/// Value of an algebra expression: a point of the algebra or, for an order
/// query, a boolean.
using ExprValue = std::variant<Lifetime, bool>;

inline std::string to_string(const ExprValue& v, unsigned decimals = 0) {
    if (std::holds_alternative<bool>(v))
        return std::get<bool>(v) ? "true" : "false";
    const Lifetime& a = std::get<Lifetime>(v);
    return decimals > 0 ? to_decimal_string(a, decimals) : to_string(a);
}

namespace detail {

/// Recursive-descent evaluator for the algebra surface:
///   expr    := arrow ( '<=' arrow )?
///   arrow   := joined ( '->' joined )*     left associative
///   joined  := met ( 'v' met )*
///   met     := unary ( '^' unary )*
///   unary   := '!' unary | '(' r ',' r ')' | '(' expr ')'
class ExprParser {
public:
    ExprParser(std::string_view text, const Bounds& bounds) : text_(text), bounds_(bounds) {}

    ExprValue parse() {
        ExprValue v = parse_order();
        skip_ws(text_, pos_);
        if (pos_ != text_.size())
            throw ParseError("unexpected input", pos_);
        return v;
    }

private:
    Lifetime expect_point(ExprValue v, std::size_t at, const char* op) {
        if (!std::holds_alternative<Lifetime>(v))
            throw ParseError(std::string("operand of '") + op + "' is a boolean, not a point",
                             at);
        return std::get<Lifetime>(std::move(v));
    }

    bool accept(std::string_view token) {
        skip_ws(text_, pos_);
        if (text_.substr(pos_, token.size()) != token)
            return false;
        // '<=' must not be mistaken for the end of '->' etc.; tokens here
        // are unambiguous by first character.
        pos_ += token.size();
        return true;
    }

    ExprValue parse_order() {
        std::size_t at = pos_;
        ExprValue lhs = parse_arrow();
        if (accept("<=")) {
            Lifetime a = expect_point(std::move(lhs), at, "<=");
            std::size_t rhs_at = pos_;
            Lifetime b = expect_point(parse_arrow(), rhs_at, "<=");
            return leq(a, b);
        }
        return lhs;
    }

    ExprValue parse_arrow() {
        std::size_t at = pos_;
        ExprValue acc = parse_join();
        while (accept("->")) {
            Lifetime a = expect_point(std::move(acc), at, "->");
            std::size_t rhs_at = pos_;
            Lifetime b = expect_point(parse_join(), rhs_at, "->");
            acc = implies(a, b);
        }
        return acc;
    }

    ExprValue parse_join() {
        std::size_t at = pos_;
        ExprValue acc = parse_meet();
        while (accept("v")) {
            Lifetime a = expect_point(std::move(acc), at, "v");
            std::size_t rhs_at = pos_;
            Lifetime b = expect_point(parse_meet(), rhs_at, "v");
            acc = join(a, b);
        }
        return acc;
    }

    ExprValue parse_meet() {
        std::size_t at = pos_;
        ExprValue acc = parse_unary();
        while (accept("^")) {
            Lifetime a = expect_point(std::move(acc), at, "^");
            std::size_t rhs_at = pos_;
            Lifetime b = expect_point(parse_unary(), rhs_at, "^");
            acc = meet(a, b);
        }
        return acc;
    }

    ExprValue parse_unary() {
        skip_ws(text_, pos_);
        if (accept("!")) {
            std::size_t at = pos_;
            Lifetime a = expect_point(parse_unary(), at, "!");
            return pseudo_complement(a);
        }
        if (pos_ >= text_.size() || text_[pos_] != '(')
            throw ParseError("expected a point '(a,b)' or '('", pos_);
        // Try a literal pair first; fall back to a parenthesised expression.
        std::size_t saved = pos_;
        try {
            auto [x1, x2] = read_pair(text_, pos_);
            return Lifetime(std::move(x1), std::move(x2), bounds_);
        } catch (const ParseError&) {
            pos_ = saved;
        }
        ++pos_; // consume '('
        ExprValue inner = parse_order();
        skip_ws(text_, pos_);
        if (pos_ >= text_.size() || text_[pos_] != ')')
            throw ParseError("expected ')'", pos_);
        ++pos_;
        return inner;
    }

    std::string_view text_;
    Bounds bounds_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Evaluates an algebra expression over the given carrier. Throws ParseError
/// for malformed input (with position) and DomainError for points outside
/// the carrier.
inline ExprValue eval_expression(std::string_view text, const Bounds& bounds) {
    return detail::ExprParser(text, bounds).parse();
}

} // namespace plat
