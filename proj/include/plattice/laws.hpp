#pragma once

#include <functional>
#include <string>
#include <vector>

#include "plattice/generate.hpp"
#include "plattice/lifetime.hpp"
#include "plattice/sheaf.hpp"

namespace plat::laws {

/// Outcome of one law suite. `checked` counts samples run; a suite stops at
/// the first counterexample.
struct LawReport {
    std::string name;
    std::size_t checked = 0;
    bool ok = true;
    std::string counterexample;
};

namespace detail {

/// Greedy shrink: try to replace each point of a failing tuple with a
/// simpler one (corners, integer roundings) while the law keeps failing.
inline void shrink(std::vector<Lifetime>& witness, const Bounds& bounds,
                   const std::function<bool(const std::vector<Lifetime>&)>& fails) {
    auto candidates = [&](const Lifetime& x) {
        std::vector<Lifetime> out;
        out.push_back(Lifetime::bottom(bounds));
        out.push_back(Lifetime::top(bounds));
        out.push_back(Lifetime(0, 0, bounds));
        out.push_back(Lifetime(bounds.eps1(), bounds.eps2(), bounds));
        out.push_back(Lifetime(floor_rational(x.x1()), floor_rational(x.x2()), bounds));
        return out;
    };
    for (int round = 0; round < 4; ++round) {
        bool changed = false;
        for (std::size_t i = 0; i < witness.size(); ++i) {
            for (const Lifetime& candidate : candidates(witness[i])) {
                if (candidate == witness[i])
                    continue;
                Lifetime saved = witness[i];
                witness[i] = candidate;
                if (fails(witness))
                    changed = true;
                else
                    witness[i] = saved;
            }
        }
        if (!changed)
            break;
    }
}

inline std::string join_points(const std::vector<Lifetime>& points) {
    std::string out;
    for (const Lifetime& p : points)
        out += (out.empty() ? "" : " ") + to_string(p);
    return out;
}

/// Runs a law over tuples of `arity` random points.
inline LawReport run_pointwise(const std::string& name, gen::Rng& rng, const Bounds& bounds,
                               std::size_t samples, std::size_t arity,
                               const std::function<bool(const std::vector<Lifetime>&)>& holds) {
    LawReport report{name};
    for (std::size_t i = 0; i < samples; ++i) {
        std::vector<Lifetime> points;
        points.reserve(arity);
        for (std::size_t k = 0; k < arity; ++k)
            points.push_back(gen::random_lifetime(rng, bounds));
        ++report.checked;
        if (!holds(points)) {
            report.ok = false;
            auto fails = [&](const std::vector<Lifetime>& w) { return !holds(w); };
            shrink(points, bounds, fails);
            report.counterexample = join_points(points);
            break;
        }
    }
    return report;
}

} // namespace detail

/// meet(x,a) <= b  <=>  x <= implies(a,b)
inline LawReport adjunction_suite(gen::Rng& rng, const Bounds& bounds, std::size_t samples) {
    return detail::run_pointwise("adjunction", rng, bounds, samples, 3,
                                 [](const std::vector<Lifetime>& p) {
                                     const Lifetime &a = p[0], &b = p[1], &x = p[2];
                                     return leq(meet(x, a), b) == leq(x, implies(a, b));
                                 });
}

/// a /\ (y1 \/ ... \/ yk) = (a /\ y1) \/ ... \/ (a /\ yk)
inline LawReport distributivity_suite(gen::Rng& rng, const Bounds& bounds, std::size_t samples,
                                      std::size_t max_family = 8) {
    LawReport report{"distributivity"};
    for (std::size_t i = 0; i < samples; ++i) {
        Lifetime a = gen::random_lifetime(rng, bounds);
        std::vector<Lifetime> family = gen::random_family(rng, bounds, max_family);
        ++report.checked;
        std::vector<Lifetime> met;
        met.reserve(family.size());
        for (const Lifetime& y : family)
            met.push_back(meet(a, y));
        if (!(meet(a, join_family(family, bounds)) == join_family(met, bounds))) {
            report.ok = false;
            report.counterexample =
                "a=" + to_string(a) + " family=" + detail::join_points(family);
            break;
        }
    }
    return report;
}

/// Binary lattice laws: commutativity, associativity, idempotence,
/// absorption, and the order/algebra agreement.
inline LawReport lattice_suite(gen::Rng& rng, const Bounds& bounds, std::size_t samples) {
    return detail::run_pointwise(
        "lattice", rng, bounds, samples, 3, [](const std::vector<Lifetime>& p) {
            const Lifetime &a = p[0], &b = p[1], &c = p[2];
            bool commutative = meet(a, b) == meet(b, a) && join(a, b) == join(b, a);
            bool associative = meet(meet(a, b), c) == meet(a, meet(b, c)) &&
                               join(join(a, b), c) == join(a, join(b, c));
            bool idempotent = meet(a, a) == a && join(a, a) == a;
            bool absorbing = meet(a, join(a, b)) == a && join(a, meet(a, b)) == a;
            bool agree = (leq(a, b) == (meet(a, b) == a)) && (leq(a, b) == (join(a, b) == b));
            return commutative && associative && idempotent && absorbing && agree;
        });
}

/// implies(a,a) = top; implies(top,b) = b; meet(a, implies(a,b)) <= b.
inline LawReport implication_suite(gen::Rng& rng, const Bounds& bounds, std::size_t samples) {
    return detail::run_pointwise(
        "implication", rng, bounds, samples, 2, [&](const std::vector<Lifetime>& p) {
            const Lifetime &a = p[0], &b = p[1];
            Lifetime top = Lifetime::top(a.context());
            return implies(a, a) == top && implies(top, b) == b &&
                   leq(meet(a, implies(a, b)), b);
        });
}

/// Random compatible covers glue, restrict back, and are separated.
inline LawReport gluing_suite(gen::Rng& rng, const Bounds& bounds, std::size_t samples,
                              std::size_t max_patches = 5) {
    LawReport report{"gluing"};
    for (std::size_t i = 0; i < samples; ++i) {
        gen::CoverSample sample = gen::random_compatible_cover(rng, bounds, max_patches);
        ++report.checked;
        std::string failure;
        if (!is_compatible(sample.cover))
            failure = "restriction family not compatible";
        else {
            Lifetime glued = glue(sample.cover);
            if (!(glued == sample.global))
                failure = "glued section differs from the global section";
            else if (!leq(glued, sample.cover.base()))
                failure = "glued section escapes the base";
            else {
                for (const CoverItem& item : sample.cover.items())
                    if (!(restrict_section(glued, sample.cover.base(), item.patch) ==
                          item.section)) {
                        failure = "glued section does not restrict back to the family";
                        break;
                    }
                if (failure.empty()) {
                    // locality: a distinct section agreeing on every patch must not exist
                    std::vector<Lifetime> patches;
                    for (const CoverItem& item : sample.cover.items())
                        patches.push_back(item.patch);
                    Lifetime other =
                        meet(gen::random_lifetime(rng, bounds), sample.cover.base());
                    if (!separated_check(sample.cover.base(), patches, glued, other))
                        failure = "two distinct sections agree on a full cover";
                }
            }
        }
        if (!failure.empty()) {
            report.ok = false;
            report.counterexample = failure + "; cover:\n" + to_string(sample.cover);
            break;
        }
    }
    return report;
}

inline std::vector<LawReport> run_all(std::uint64_t seed, const Bounds& bounds,
                                      std::size_t samples) {
    gen::Rng rng(seed);
    std::vector<LawReport> reports;
    reports.push_back(lattice_suite(rng, bounds, samples));
    reports.push_back(adjunction_suite(rng, bounds, samples));
    reports.push_back(distributivity_suite(rng, bounds, samples));
    reports.push_back(implication_suite(rng, bounds, samples));
    reports.push_back(gluing_suite(rng, bounds, samples));
    return reports;
}

} // namespace plat::laws
