#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plattice/lifetime.hpp"

namespace plat {

/// Sheaf preconditions violated by a caller: bad patch nesting, a section
/// escaping its patch, or gluing an incompatible family.
struct SheafError : Error {
    using Error::Error;
};

struct RestrictPatchError : SheafError {
    using SheafError::SheafError;
};

struct RestrictSectionError : SheafError {
    using SheafError::SheafError;
};

struct GlueError : SheafError {
    GlueError(const std::string& what, std::size_t first, std::size_t second)
        : SheafError(what), first(first), second(second) {}
    std::size_t first;
    std::size_t second;
};

/// One patch of a cover together with the section chosen over it.
/// Sections of the canonical sheaf phi(x) = down(x) are just elements of
/// down(x), so a single lifetime represents the section.
struct CoverItem {
    Lifetime patch;
    Lifetime section;
};

/// A finite cover of `base` with a candidate family of sections.
/// Invariant: base equals the join of the patches and every section lies
/// under its patch.
class Cover {
public:
    Cover(std::vector<CoverItem> items, Lifetime base)
        : items_(std::move(items)), base_(std::move(base)) {
        if (items_.empty())
            throw DomainError("cover needs at least one patch");
        std::vector<Lifetime> patches;
        patches.reserve(items_.size());
        for (std::size_t i = 0; i < items_.size(); ++i) {
            const CoverItem& item = items_[i];
            if (!leq(item.section, item.patch))
                throw DomainError("section " + to_string(item.section) + " of item " +
                                  std::to_string(i) + " is not under its patch " +
                                  to_string(item.patch));
            patches.push_back(item.patch);
        }
        if (!(join_family(patches, base_.context()) == base_))
            throw DomainError("base " + to_string(base_) +
                              " is not the join of the cover's patches");
    }

    /// Base computed as the join of the patches.
    static Cover over_join(std::vector<CoverItem> items) {
        if (items.empty())
            throw DomainError("cover needs at least one patch");
        std::vector<Lifetime> patches;
        patches.reserve(items.size());
        for (const CoverItem& item : items)
            patches.push_back(item.patch);
        Lifetime base = join_family(patches, items.front().patch.context());
        return Cover(std::move(items), std::move(base));
    }

    const std::vector<CoverItem>& items() const { return items_; }
    const Lifetime& base() const { return base_; }

private:
    std::vector<CoverItem> items_;
    Lifetime base_;
};

/// Restriction map of the canonical sheaf: a section z over from_x restricts
/// to z /\ to_y over to_y <= from_x.
inline Lifetime restrict_section(const Lifetime& z, const Lifetime& from_x,
                                 const Lifetime& to_y) {
    if (!leq(to_y, from_x))
        throw RestrictPatchError("cannot restrict from " + to_string(from_x) + " to " +
                                 to_string(to_y) + ": target is not below the source patch");
    if (!leq(z, from_x))
        throw RestrictSectionError("value " + to_string(z) + " is not a section over " +
                                   to_string(from_x));
    return meet(z, to_y);
}

/// First pair of items whose sections disagree on the overlap, if any.
/// The overlap condition reduces to z_i /\ x_j = z_j /\ x_i.
inline std::optional<std::pair<std::size_t, std::size_t>>
find_incompatible_pair(const Cover& cover) {
    const auto& items = cover.items();
    for (std::size_t i = 0; i < items.size(); ++i)
        for (std::size_t j = i + 1; j < items.size(); ++j)
            if (!(meet(items[i].section, items[j].patch) ==
                  meet(items[j].section, items[i].patch)))
                return std::make_pair(i, j);
    return std::nullopt;
}

inline bool is_compatible(const Cover& cover) { return !find_incompatible_pair(cover); }

/// Glues a compatible family: the join of the sections. The result lies
/// under the base and restricts back to every member of the family.
inline Lifetime glue(const Cover& cover) {
    if (auto bad = find_incompatible_pair(cover))
        throw GlueError("cannot glue: sections of items " + std::to_string(bad->first) +
                            " and " + std::to_string(bad->second) +
                            " disagree on their overlap",
                        bad->first, bad->second);
    std::vector<Lifetime> sections;
    sections.reserve(cover.items().size());
    for (const CoverItem& item : cover.items())
        sections.push_back(item.section);
    return join_family(sections, cover.base().context());
}

/// Locality probe: do restrictions of s and t agreeing on every patch force
/// s = t? Always true for the canonical sheaf; the return value exists so a
/// randomized driver can search for counterexamples.
inline bool separated_check(const Lifetime& base, std::span<const Lifetime> patches,
                            const Lifetime& s, const Lifetime& t) {
    if (!(join_family(patches, base.context()) == base))
        throw DomainError("patches do not cover the base");
    if (!leq(s, base) || !leq(t, base))
        throw DomainError("sections must lie under the base");
    for (const Lifetime& patch : patches)
        if (!(meet(s, patch) == meet(t, patch)))
            return true; // hypothesis fails, nothing to check
    return s == t;
}

inline bool separated_check(const Lifetime& base, const std::vector<Lifetime>& patches,
                            const Lifetime& s, const Lifetime& t) {
    return separated_check(base, std::span<const Lifetime>(patches), s, t);
}

/// Subobject-classifier query: is z a section of Omega over x, i.e. z <= x?
/// Restriction of Omega sections is the same meet map as restrict_section.
inline bool omega_contains(const Lifetime& x, const Lifetime& z) { return leq(z, x); }

/// Cover file: one "patch=(a,b) section=(c,d)" line per item plus a
/// "base=(p,q)" line; '#' starts a comment.
inline Cover parse_cover(std::string_view text, const Bounds& context) {
    std::vector<CoverItem> items;
    std::optional<Lifetime> base;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    auto read_key = [](std::string_view l, std::size_t& pos, std::string_view key) {
        detail::skip_ws(l, pos);
        if (l.substr(pos, key.size()) != key)
            throw ParseError("expected '" + std::string(key) + "'", pos);
        pos += key.size();
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::size_t pos = 0;
        detail::skip_ws(line, pos);
        if (pos == line.size())
            continue;
        try {
            if (line.compare(pos, 5, "base=") == 0) {
                pos += 5;
                auto [x1, x2] = detail::read_pair(line, pos);
                if (base)
                    throw ParseError("duplicate base line", pos);
                base = Lifetime(std::move(x1), std::move(x2), context);
            } else {
                read_key(line, pos, "patch=");
                auto [p1, p2] = detail::read_pair(line, pos);
                read_key(line, pos, "section=");
                auto [s1, s2] = detail::read_pair(line, pos);
                items.push_back(CoverItem{Lifetime(std::move(p1), std::move(p2), context),
                                          Lifetime(std::move(s1), std::move(s2), context)});
            }
            detail::skip_ws(line, pos);
            if (pos != line.size())
                throw ParseError("trailing input", pos);
        } catch (const ParseError& e) {
            throw ParseError("cover line " + std::to_string(line_no) + ": " + e.what(),
                             e.position);
        }
    }
    if (items.empty())
        throw ParseError("cover file has no items");
    if (base)
        return Cover(std::move(items), std::move(*base));
    return Cover::over_join(std::move(items));
}

inline std::string to_string(const Cover& cover) {
    std::string out = "base=" + to_string(cover.base()) + "\n";
    for (const CoverItem& item : cover.items())
        out += "patch=" + to_string(item.patch) + " section=" + to_string(item.section) + "\n";
    return out;
}

} // namespace plat
