#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plattice/errors.hpp"
#include "plattice/rational.hpp"

namespace plat {

/// Ambient rectangle fixing the carrier [0,eps1] x [0,eps2], and with it
/// top = (0,eps2) and bottom = (eps1,0).
class Bounds {
public:
    Bounds(Rational eps1, Rational eps2) : eps1_(std::move(eps1)), eps2_(std::move(eps2)) {
        if (eps1_ <= 0 || eps2_ <= 0)
            throw DomainError("bounds must be positive, got (" + plat::to_string(eps1_) + "," +
                              plat::to_string(eps2_) + ")");
    }

    const Rational& eps1() const { return eps1_; }
    const Rational& eps2() const { return eps2_; }

    bool operator==(const Bounds& other) const = default;

private:
    Rational eps1_;
    Rational eps2_;
};

inline void require_same_bounds(const Bounds& a, const Bounds& b) {
    if (!(a == b))
        throw BoundsMismatch("values live in different ambient rectangles: (" +
                             to_string(a.eps1()) + "," + to_string(a.eps2()) + ") vs (" +
                             to_string(b.eps1()) + "," + to_string(b.eps2()) + ")");
}

enum class Orientation { Positive, Negative, Degenerate };

/// A point (x1,x2) of the bounded rectangle, read as a generalised time
/// interval with birth x1 and death x2. Order: a <= b iff b1 <= a1 and
/// a2 <= b2 (bar inclusion on the positive triangle).
class Lifetime {
public:
    Lifetime(Rational x1, Rational x2, Bounds context)
        : x1_(std::move(x1)), x2_(std::move(x2)), context_(std::move(context)) {
        if (x1_ < 0 || x1_ > context_.eps1() || x2_ < 0 || x2_ > context_.eps2())
            throw DomainError("lifetime (" + plat::to_string(x1_) + "," + plat::to_string(x2_) +
                              ") outside carrier [0," + plat::to_string(context_.eps1()) +
                              "]x[0," + plat::to_string(context_.eps2()) + "]");
    }

    const Rational& x1() const { return x1_; }
    const Rational& x2() const { return x2_; }
    const Bounds& context() const { return context_; }

    static Lifetime top(const Bounds& b) { return Lifetime(0, b.eps2(), b); }
    static Lifetime bottom(const Bounds& b) { return Lifetime(b.eps1(), 0, b); }

    bool is_top() const { return x1_ == 0 && x2_ == context_.eps2(); }
    bool is_bottom() const { return x1_ == context_.eps1() && x2_ == 0; }

    bool operator==(const Lifetime& other) const = default;

private:
    Rational x1_;
    Rational x2_;
    Bounds context_;
};

inline bool leq(const Lifetime& a, const Lifetime& b) {
    require_same_bounds(a.context(), b.context());
    return b.x1() <= a.x1() && a.x2() <= b.x2();
}

inline Lifetime meet(const Lifetime& a, const Lifetime& b) {
    require_same_bounds(a.context(), b.context());
    return Lifetime(std::max(a.x1(), b.x1()), std::min(a.x2(), b.x2()), a.context());
}

inline Lifetime join(const Lifetime& a, const Lifetime& b) {
    require_same_bounds(a.context(), b.context());
    return Lifetime(std::min(a.x1(), b.x1()), std::max(a.x2(), b.x2()), a.context());
}

/// Meet of a finite family; the empty family yields top.
inline Lifetime meet_family(std::span<const Lifetime> xs, const Bounds& context) {
    Lifetime acc = Lifetime::top(context);
    for (const Lifetime& x : xs)
        acc = meet(acc, x);
    return acc;
}

/// Join of a finite family; the empty family yields bottom.
inline Lifetime join_family(std::span<const Lifetime> xs, const Bounds& context) {
    Lifetime acc = Lifetime::bottom(context);
    for (const Lifetime& x : xs)
        acc = join(acc, x);
    return acc;
}

inline Lifetime meet_family(const std::vector<Lifetime>& xs, const Bounds& context) {
    return meet_family(std::span<const Lifetime>(xs), context);
}

inline Lifetime join_family(const std::vector<Lifetime>& xs, const Bounds& context) {
    return join_family(std::span<const Lifetime>(xs), context);
}

/// Relative pseudo-complement a => b, the largest x with x /\ a <= b.
///
/// Coordinatewise: x /\ a <= b iff b1 <= max(x1,a1) and min(x2,a2) <= b2,
/// so the admissible x form a product of intervals and the supremum is
/// (0 if b1<=a1 else b1, eps2 if a2<=b2 else b2). The supremum is itself
/// admissible, which is what makes the adjunction
///     meet(x,a) <= b  <=>  x <= implies(a,b)
/// hold on the nose.
inline Lifetime implies(const Lifetime& a, const Lifetime& b) {
    require_same_bounds(a.context(), b.context());
    const Bounds& ctx = a.context();
    Rational c1 = b.x1() <= a.x1() ? Rational(0) : b.x1();
    Rational c2 = a.x2() <= b.x2() ? ctx.eps2() : b.x2();
    return Lifetime(std::move(c1), std::move(c2), ctx);
}

/// not a := a => bottom.
inline Lifetime pseudo_complement(const Lifetime& a) {
    return implies(a, Lifetime::bottom(a.context()));
}

/// The complement, when one exists: c with a /\ c = bottom and a \/ c = top.
/// Only the four corners of the carrier are complemented.
inline std::optional<Lifetime> complement_of(const Lifetime& a) {
    const Bounds& ctx = a.context();
    bool corner1 = a.x1() == 0 || a.x1() == ctx.eps1();
    bool corner2 = a.x2() == 0 || a.x2() == ctx.eps2();
    if (!corner1 || !corner2)
        return std::nullopt;
    return Lifetime(a.x1() == 0 ? ctx.eps1() : Rational(0),
                    a.x2() == 0 ? ctx.eps2() : Rational(0), ctx);
}

inline Orientation orientation(const Lifetime& a) {
    if (a.x1() < a.x2())
        return Orientation::Positive;
    if (a.x2() < a.x1())
        return Orientation::Negative;
    return Orientation::Degenerate;
}

/// |x2 - x1|, the persistence of the measured feature.
inline Rational length(const Lifetime& a) {
    Rational d = a.x2() - a.x1();
    return d < 0 ? Rational(-d) : d;
}

/// Closed interval on the time axis spanned by the lifetime.
struct BarInterval {
    Rational lo;
    Rational hi;

    bool operator==(const BarInterval& other) const = default;

    bool contains(const BarInterval& other) const { return lo <= other.lo && other.hi <= hi; }
};

inline BarInterval bar_interval(const Lifetime& a) {
    return BarInterval{std::min(a.x1(), a.x2()), std::max(a.x1(), a.x2())};
}

inline std::string to_string(const Lifetime& a) {
    return "(" + to_string(a.x1()) + "," + to_string(a.x2()) + ")";
}

inline std::string to_decimal_string(const Lifetime& a, unsigned decimals) {
    return "(" + to_decimal_string(a.x1(), decimals) + "," + to_decimal_string(a.x2(), decimals) +
           ")";
}

namespace detail {

inline void skip_ws(std::string_view text, std::size_t& pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
        ++pos;
}

/// Reads a rational starting at pos; advances pos past it.
inline Rational read_rational(std::string_view text, std::size_t& pos) {
    skip_ws(text, pos);
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        ++pos;
    while (pos < text.size() && ((text[pos] >= '0' && text[pos] <= '9') || text[pos] == '/'))
        ++pos;
    if (pos == start)
        throw ParseError("expected rational", start);
    return parse_rational(text.substr(start, pos - start));
}

/// Reads "(r,s)" starting at pos; advances pos past the closing paren.
inline std::pair<Rational, Rational> read_pair(std::string_view text, std::size_t& pos) {
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != '(')
        throw ParseError("expected '('", pos);
    ++pos;
    Rational first = read_rational(text, pos);
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != ',')
        throw ParseError("expected ','", pos);
    ++pos;
    Rational second = read_rational(text, pos);
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != ')')
        throw ParseError("expected ')'", pos);
    ++pos;
    return {std::move(first), std::move(second)};
}

} // namespace detail

/// Parses the canonical "(p/q,r/s)" rendering (interior whitespace allowed).
inline Lifetime parse_lifetime(std::string_view text, const Bounds& context) {
    std::size_t pos = 0;
    auto [x1, x2] = detail::read_pair(text, pos);
    detail::skip_ws(text, pos);
    if (pos != text.size())
        throw ParseError("trailing input after lifetime", pos);
    return Lifetime(std::move(x1), std::move(x2), context);
}

} // namespace plat
