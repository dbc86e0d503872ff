#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "plattice/complex.hpp"
#include "plattice/lifetime.hpp"
#include "plattice/sheaf.hpp"

namespace plat::gen {

/// Seeded deterministic source. Draws avoid std distributions so output is
/// identical for a given seed on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::mt19937_64 engine_;
};

/// Rational in [0, hi] with denominator at most max_den.
inline Rational random_rational(Rng& rng, const Rational& hi, unsigned max_den = 6) {
    Integer den = 1 + static_cast<long>(rng.below(max_den));
    Integer max_num = floor_rational(Rational(hi * den));
    Integer num = 0;
    if (max_num > 0)
        num = static_cast<long>(rng.below(max_num.convert_to<std::uint64_t>() + 1));
    return Rational(num, den);
}

/// Rational in [lo, hi].
inline Rational random_rational_between(Rng& rng, const Rational& lo, const Rational& hi,
                                        unsigned max_den = 6) {
    return lo + random_rational(rng, hi - lo, max_den);
}

inline Lifetime random_lifetime(Rng& rng, const Bounds& bounds) {
    return Lifetime(random_rational(rng, bounds.eps1()), random_rational(rng, bounds.eps2()),
                    bounds);
}

inline std::vector<Lifetime> random_family(Rng& rng, const Bounds& bounds,
                                           std::size_t max_size) {
    std::vector<Lifetime> family;
    std::size_t n = 1 + rng.below(max_size);
    family.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        family.push_back(random_lifetime(rng, bounds));
    return family;
}

/// A compatible cover together with the global section it restricts.
/// Patches are arbitrary; sections are the restrictions of one element under
/// the base, which is exactly how every compatible family arises.
struct CoverSample {
    Cover cover;
    Lifetime global;
};

inline CoverSample random_compatible_cover(Rng& rng, const Bounds& bounds,
                                           std::size_t max_patches) {
    std::vector<Lifetime> patches = random_family(rng, bounds, max_patches);
    Lifetime base = join_family(patches, bounds);
    Lifetime global = meet(random_lifetime(rng, bounds), base);
    std::vector<CoverItem> items;
    items.reserve(patches.size());
    for (Lifetime& patch : patches) {
        Lifetime section = meet(global, patch);
        items.push_back(CoverItem{std::move(patch), std::move(section)});
    }
    return CoverSample{Cover(std::move(items), base), std::move(global)};
}

namespace detail {

struct ProtoSimplex {
    std::string id;
    int dim;
    Rational birth, death;
    std::vector<std::string> faces;
};

/// Geometric random complex on a few vertices: edges join distinct vertices,
/// triangles fill vertex triples whose three edges exist, faces listed in
/// omit-vertex order so the chain condition holds over both fields.
inline VariableComplex random_geometric(Rng& rng, const Bounds& bounds,
                                        std::size_t max_simplices, int max_dim,
                                        bool filtration) {
    const Rational& eps2 = bounds.eps2();
    Rational birth_cap = std::min(bounds.eps1(), eps2);
    std::vector<ProtoSimplex> simplices;

    auto pick_death = [&](const Rational& birth, const Rational& cap) {
        return filtration ? eps2 : random_rational_between(rng, birth, cap);
    };

    std::size_t nv = 2 + rng.below(4);
    nv = std::min(nv, max_simplices);
    for (std::size_t i = 0; i < nv; ++i) {
        Rational birth = random_rational(rng, birth_cap / 2);
        simplices.push_back(ProtoSimplex{"v" + std::to_string(i), 0, birth,
                                         pick_death(birth, eps2), {}});
    }

    std::vector<std::pair<std::size_t, std::size_t>> edge_ends;
    std::vector<std::size_t> edge_index; // position in `simplices`
    if (max_dim >= 1) {
        std::size_t tries = nv * 2;
        for (std::size_t k = 0; k < tries && simplices.size() < max_simplices; ++k) {
            std::size_t i = rng.below(nv), j = rng.below(nv);
            if (i == j)
                continue;
            if (i > j)
                std::swap(i, j);
            bool exists = false;
            for (const auto& e : edge_ends)
                exists = exists || (e.first == i && e.second == j);
            if (exists)
                continue;
            Rational lo = std::max(simplices[i].birth, simplices[j].birth);
            Rational hi = std::min(simplices[i].death, simplices[j].death);
            if (lo > hi)
                continue;
            Rational birth = random_rational_between(rng, lo, hi);
            edge_ends.emplace_back(i, j);
            edge_index.push_back(simplices.size());
            simplices.push_back(ProtoSimplex{"e" + std::to_string(i) + "_" + std::to_string(j),
                                             1, birth, pick_death(birth, hi),
                                             {simplices[i].id, simplices[j].id}});
        }
    }

    if (max_dim >= 2) {
        auto find_edge = [&](std::size_t a, std::size_t b) -> const ProtoSimplex* {
            if (a > b)
                std::swap(a, b);
            for (std::size_t k = 0; k < edge_ends.size(); ++k)
                if (edge_ends[k].first == a && edge_ends[k].second == b)
                    return &simplices[edge_index[k]];
            return nullptr;
        };
        for (std::size_t a = 0; a < nv && simplices.size() < max_simplices; ++a)
            for (std::size_t b = a + 1; b < nv && simplices.size() < max_simplices; ++b)
                for (std::size_t c = b + 1; c < nv && simplices.size() < max_simplices; ++c) {
                    const ProtoSimplex* ab = find_edge(a, b);
                    const ProtoSimplex* ac = find_edge(a, c);
                    const ProtoSimplex* bc = find_edge(b, c);
                    if (!ab || !ac || !bc || !rng.chance(60))
                        continue;
                    Rational lo = std::max(std::max(ab->birth, ac->birth), bc->birth);
                    Rational hi = std::min(std::min(ab->death, ac->death), bc->death);
                    if (lo > hi)
                        continue;
                    Rational birth = random_rational_between(rng, lo, hi);
                    simplices.push_back(ProtoSimplex{
                        "t" + std::to_string(a) + "_" + std::to_string(b) + "_" +
                            std::to_string(c),
                        2, birth, pick_death(birth, hi), {bc->id, ac->id, ab->id}});
                }
    }

    std::vector<SimplexEntry> entries;
    entries.reserve(simplices.size());
    for (ProtoSimplex& s : simplices)
        entries.push_back(SimplexEntry{std::move(s.id), s.dim,
                                       Lifetime(std::move(s.birth), std::move(s.death), bounds),
                                       std::move(s.faces)});
    return VariableComplex(std::move(entries), bounds);
}

} // namespace detail

/// Random filtration: every death at eps2.
inline VariableComplex random_filtration(Rng& rng, const Bounds& bounds,
                                         std::size_t max_simplices = 12, int max_dim = 2) {
    return detail::random_geometric(rng, bounds, max_simplices, max_dim, true);
}

/// Random valid variable complex with finite deaths.
inline VariableComplex random_complex(Rng& rng, const Bounds& bounds,
                                      std::size_t max_simplices = 12, int max_dim = 2) {
    return detail::random_geometric(rng, bounds, max_simplices, max_dim, false);
}

} // namespace plat::gen
