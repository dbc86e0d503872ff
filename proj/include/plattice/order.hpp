#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plattice/lifetime.hpp"

namespace plat {

/// Product of two closed intervals [lo1,hi1] x [lo2,hi2] inside the carrier;
/// the canonical form of principal ideals and filters.
class Rectangle {
public:
    Rectangle(Rational lo1, Rational hi1, Rational lo2, Rational hi2, Bounds context)
        : lo1_(std::move(lo1)), hi1_(std::move(hi1)), lo2_(std::move(lo2)), hi2_(std::move(hi2)),
          context_(std::move(context)) {
        if (lo1_ > hi1_ || lo2_ > hi2_)
            throw DomainError("rectangle has empty interval");
        if (lo1_ < 0 || hi1_ > context_.eps1() || lo2_ < 0 || hi2_ > context_.eps2())
            throw DomainError("rectangle exceeds the carrier");
    }

    const Rational& lo1() const { return lo1_; }
    const Rational& hi1() const { return hi1_; }
    const Rational& lo2() const { return lo2_; }
    const Rational& hi2() const { return hi2_; }
    const Bounds& context() const { return context_; }

    bool contains(const Lifetime& z) const {
        require_same_bounds(context_, z.context());
        return lo1_ <= z.x1() && z.x1() <= hi1_ && lo2_ <= z.x2() && z.x2() <= hi2_;
    }

    bool operator==(const Rectangle& other) const = default;

private:
    Rational lo1_, hi1_, lo2_, hi2_;
    Bounds context_;
};

inline std::string to_string(const Rectangle& r) {
    return "[" + to_string(r.lo1()) + "," + to_string(r.hi1()) + "]x[" + to_string(r.lo2()) +
           "," + to_string(r.hi2()) + "]";
}

/// Down-set of a: [a1,eps1] x [0,a2]. Membership coincides with leq(z,a).
inline Rectangle principal_ideal(const Lifetime& a) {
    const Bounds& ctx = a.context();
    return Rectangle(a.x1(), ctx.eps1(), 0, a.x2(), ctx);
}

/// Up-set of a: [0,a1] x [a2,eps2]. Membership coincides with leq(a,z).
inline Rectangle principal_filter(const Lifetime& a) {
    const Bounds& ctx = a.context();
    return Rectangle(0, a.x1(), a.x2(), ctx.eps2(), ctx);
}

/// Ideal generated by a finite family: the principal ideal of its meet.
inline Rectangle ideal_generated(std::span<const Lifetime> xs, const Bounds& context) {
    return principal_ideal(meet_family(xs, context));
}

inline Rectangle filter_generated(std::span<const Lifetime> xs, const Bounds& context) {
    return principal_filter(join_family(xs, context));
}

inline Rectangle ideal_generated(const std::vector<Lifetime>& xs, const Bounds& context) {
    return ideal_generated(std::span<const Lifetime>(xs), context);
}

inline Rectangle filter_generated(const std::vector<Lifetime>& xs, const Bounds& context) {
    return filter_generated(std::span<const Lifetime>(xs), context);
}

/// Join-irreducibles are the bottom edge and the right edge of the carrier,
/// bottom itself excluded ("nonzero" convention).
inline bool is_join_irreducible(const Lifetime& a) {
    if (a.is_bottom())
        return false;
    return a.x2() == 0 || a.x1() == a.context().eps1();
}

/// Dually: the left edge and the top edge. Bottom is the only excluded
/// element and it never lies on those edges, so no explicit check is needed.
inline bool is_meet_irreducible(const Lifetime& a) {
    return a.x1() == 0 || a.x2() == a.context().eps2();
}

/// Elements whose principal ideal is prime: (0,x2) and (x1,eps2).
inline bool is_prime_element(const Lifetime& a) {
    return a.x1() == 0 || a.x2() == a.context().eps2();
}

/// Spatial decomposition a = (0,a2) /\ (a1,eps2) into prime elements.
inline std::pair<Lifetime, Lifetime> prime_decompose(const Lifetime& a) {
    const Bounds& ctx = a.context();
    return {Lifetime(0, a.x2(), ctx), Lifetime(a.x1(), ctx.eps2(), ctx)};
}

/// Open of the dual space: the union of the vertical filter up(0,a2) and
/// the horizontal filter up(a1,eps2).
struct DualOpen {
    Lifetime vertical_base;   // of form (0, x2)
    Lifetime horizontal_base; // of form (x1, eps2)
};

inline DualOpen dual_open(const Lifetime& a) {
    auto [vert, horiz] = prime_decompose(a);
    return DualOpen{std::move(vert), std::move(horiz)};
}

/// Membership of a point of the dual space (a prime element) in the open.
inline bool dual_open_contains(const DualOpen& open, const Lifetime& p) {
    if (!is_prime_element(p))
        throw DomainError("dual-space membership is defined for prime elements only, got " +
                          to_string(p));
    return leq(open.vertical_base, p) || leq(open.horizontal_base, p);
}

} // namespace plat
