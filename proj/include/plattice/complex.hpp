#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plattice/lifetime.hpp"

namespace plat {

/// Validation failure of a complex file. Every kind the parser can produce
/// is distinct and carries the offending line.
struct ComplexError : Error {
    enum class Kind {
        Syntax,      // malformed line, bad token, carrier violation
        DuplicateId, // simplex id appears twice
        UnknownFace, // face references a missing id
        FaceCount,   // n-simplex must list n+1 faces (none for n = 0)
        FaceDim,     // face of an n-simplex must have dimension n-1
        Containment, // simplex lifetime must be contained in each face's
    };

    ComplexError(Kind kind, std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), kind(kind), line(line) {}

    Kind kind;
    std::size_t line;
};

inline const char* to_string(ComplexError::Kind kind) {
    switch (kind) {
    case ComplexError::Kind::Syntax: return "syntax";
    case ComplexError::Kind::DuplicateId: return "duplicate-id";
    case ComplexError::Kind::UnknownFace: return "unknown-face";
    case ComplexError::Kind::FaceCount: return "face-count";
    case ComplexError::Kind::FaceDim: return "face-dimension";
    case ComplexError::Kind::Containment: return "lifetime-containment";
    }
    return "unknown";
}

/// One named simplex with its lifetime and ordered face list.
struct SimplexEntry {
    std::string id;
    int dim = 0;
    Lifetime lifetime;
    std::vector<std::string> faces; // dim+1 ids, empty for dim 0

    bool operator==(const SimplexEntry& other) const = default;
};

/// A snapshot of the complex at one instant: per-dimension ordered simplex
/// lists, closed under faces.
class StaticComplex {
public:
    struct Simplex {
        std::string id;
        std::vector<std::string> faces;
    };

    explicit StaticComplex(std::vector<std::vector<Simplex>> by_dim)
        : by_dim_(std::move(by_dim)) {
        while (!by_dim_.empty() && by_dim_.back().empty())
            by_dim_.pop_back();
    }

    int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<Simplex>& simplices(int n) const {
        static const std::vector<Simplex> empty;
        if (n < 0 || n > max_dim())
            return empty;
        return by_dim_[static_cast<std::size_t>(n)];
    }

    std::size_t size(int n) const { return simplices(n).size(); }

    std::size_t total() const {
        std::size_t sum = 0;
        for (const auto& level : by_dim_)
            sum += level.size();
        return sum;
    }

private:
    std::vector<std::vector<Simplex>> by_dim_;
};

/// A semi-simplicial set indexed by the algebra of lifetimes: every simplex
/// carries a (positively oriented or degenerate) lifetime contained in the
/// lifetime of each of its faces, so slices are closed under faces.
class VariableComplex {
public:
    VariableComplex(std::vector<SimplexEntry> entries, Bounds bounds,
                    const std::vector<std::size_t>* lines = nullptr)
        : entries_(std::move(entries)), bounds_(std::move(bounds)) {
        auto line_of = [&](std::size_t i) { return lines ? (*lines)[i] : i + 1; };
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const SimplexEntry& entry = entries_[i];
            if (!index_.emplace(entry.id, i).second)
                throw ComplexError(ComplexError::Kind::DuplicateId, line_of(i),
                                   "duplicate simplex id '" + entry.id + "'");
        }
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const SimplexEntry& entry = entries_[i];
            std::size_t line = line_of(i);
            require_same_bounds(bounds_, entry.lifetime.context());
            if (orientation(entry.lifetime) == Orientation::Negative)
                throw ComplexError(ComplexError::Kind::Syntax, line,
                                   "simplex '" + entry.id +
                                       "' has a negatively oriented lifetime");
            std::size_t expected = entry.dim == 0 ? 0 : static_cast<std::size_t>(entry.dim) + 1;
            if (entry.faces.size() != expected)
                throw ComplexError(ComplexError::Kind::FaceCount, line,
                                   "simplex '" + entry.id + "' of dimension " +
                                       std::to_string(entry.dim) + " must list " +
                                       std::to_string(expected) + " faces, got " +
                                       std::to_string(entry.faces.size()));
            for (const std::string& face_id : entry.faces) {
                auto it = index_.find(face_id);
                if (it == index_.end())
                    throw ComplexError(ComplexError::Kind::UnknownFace, line,
                                       "simplex '" + entry.id + "' references unknown face '" +
                                           face_id + "'");
                const SimplexEntry& face = entries_[it->second];
                if (face.dim != entry.dim - 1)
                    throw ComplexError(ComplexError::Kind::FaceDim, line,
                                       "face '" + face_id + "' of simplex '" + entry.id +
                                           "' has dimension " + std::to_string(face.dim) +
                                           ", expected " + std::to_string(entry.dim - 1));
                if (!leq(entry.lifetime, face.lifetime))
                    throw ComplexError(ComplexError::Kind::Containment, line,
                                       "lifetime " + plat::to_string(entry.lifetime) +
                                           " of simplex '" + entry.id +
                                           "' is not contained in lifetime " +
                                           plat::to_string(face.lifetime) + " of face '" +
                                           face_id + "'");
            }
        }
    }

    const std::vector<SimplexEntry>& entries() const { return entries_; }
    const Bounds& bounds() const { return bounds_; }

    const SimplexEntry& entry(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end())
            throw DomainError("no simplex named '" + id + "'");
        return entries_[it->second];
    }

    int max_dim() const {
        int m = -1;
        for (const SimplexEntry& entry : entries_)
            m = std::max(m, entry.dim);
        return m;
    }

    bool operator==(const VariableComplex& other) const {
        return entries_ == other.entries_ && bounds_ == other.bounds_;
    }

private:
    std::vector<SimplexEntry> entries_;
    Bounds bounds_;
    std::map<std::string, std::size_t> index_;
};

namespace detail {

inline bool valid_id(std::string_view id) {
    if (id.empty())
        return false;
    auto alpha = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); };
    if (!alpha(id[0]))
        return false;
    return std::all_of(id.begin() + 1, id.end(), alnum);
}

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token)
        tokens.push_back(token);
    return tokens;
}

} // namespace detail

/// Parses the line-oriented complex format:
///
///     pcomplex v1
///     bounds <eps1> <eps2>                        (optional)
///     simplex <id> <dim> <birth> <death> [faces]
///
/// '#' starts a comment. Without a bounds line the carrier defaults to the
/// maximum death among the entries on both axes.
inline VariableComplex parse_complex(std::string_view text) {
    struct RawEntry {
        std::string id;
        int dim;
        Rational birth, death;
        std::vector<std::string> faces;
        std::size_t line;
    };
    std::vector<RawEntry> raw;
    std::optional<std::pair<Rational, Rational>> explicit_bounds;
    bool saw_header = false;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto syntax = [&](const std::string& what) {
        return ComplexError(ComplexError::Kind::Syntax, line_no, what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::vector<std::string> tokens = detail::split_tokens(line);
        if (tokens.empty())
            continue;
        if (!saw_header) {
            if (tokens.size() != 2 || tokens[0] != "pcomplex" || tokens[1] != "v1")
                throw syntax("expected header 'pcomplex v1'");
            saw_header = true;
            continue;
        }
        if (tokens[0] == "bounds") {
            if (!raw.empty())
                throw syntax("bounds line must precede simplex entries");
            if (explicit_bounds)
                throw syntax("duplicate bounds line");
            if (tokens.size() != 3)
                throw syntax("bounds line needs two rationals");
            try {
                explicit_bounds = {parse_rational(tokens[1]), parse_rational(tokens[2])};
            } catch (const ParseError& e) {
                throw syntax(e.what());
            }
            continue;
        }
        if (tokens[0] != "simplex")
            throw syntax("unknown directive '" + tokens[0] + "'");
        if (tokens.size() < 5)
            throw syntax("simplex line needs id, dimension, birth and death");
        RawEntry entry;
        entry.line = line_no;
        entry.id = tokens[1];
        if (!detail::valid_id(entry.id))
            throw syntax("invalid simplex id '" + entry.id + "'");
        try {
            std::size_t used = 0;
            entry.dim = std::stoi(tokens[2], &used);
            if (used != tokens[2].size() || entry.dim < 0)
                throw syntax("invalid dimension '" + tokens[2] + "'");
        } catch (const std::logic_error&) {
            throw syntax("invalid dimension '" + tokens[2] + "'");
        }
        try {
            entry.birth = parse_rational(tokens[3]);
            entry.death = parse_rational(tokens[4]);
        } catch (const ParseError& e) {
            throw syntax(e.what());
        }
        for (std::size_t i = 5; i < tokens.size(); ++i) {
            if (!detail::valid_id(tokens[i]))
                throw syntax("invalid face id '" + tokens[i] + "'");
            entry.faces.push_back(tokens[i]);
        }
        raw.push_back(std::move(entry));
    }
    if (!saw_header)
        throw ComplexError(ComplexError::Kind::Syntax, line_no, "missing 'pcomplex v1' header");

    Rational eps1, eps2;
    if (explicit_bounds) {
        eps1 = explicit_bounds->first;
        eps2 = explicit_bounds->second;
    } else {
        Rational max_death = 0;
        for (const RawEntry& entry : raw)
            max_death = std::max(max_death, entry.death);
        if (max_death == 0)
            max_death = 1; // degenerate file; any positive carrier works
        eps1 = eps2 = max_death;
    }
    if (eps1 <= 0 || eps2 <= 0)
        throw ComplexError(ComplexError::Kind::Syntax, 1, "bounds must be positive");
    Bounds bounds(eps1, eps2);

    std::vector<SimplexEntry> entries;
    std::vector<std::size_t> lines;
    entries.reserve(raw.size());
    for (RawEntry& entry : raw) {
        Lifetime lifetime = [&] {
            try {
                return Lifetime(std::move(entry.birth), std::move(entry.death), bounds);
            } catch (const DomainError& e) {
                throw ComplexError(ComplexError::Kind::Syntax, entry.line, e.what());
            }
        }();
        entries.push_back(SimplexEntry{std::move(entry.id), entry.dim, std::move(lifetime),
                                       std::move(entry.faces)});
        lines.push_back(entry.line);
    }
    return VariableComplex(std::move(entries), std::move(bounds), &lines);
}

/// Canonical rendering; parse_complex(print_complex(c)) reproduces c exactly.
inline std::string print_complex(const VariableComplex& c) {
    std::string out = "pcomplex v1\n";
    out += "bounds " + to_string(c.bounds().eps1()) + " " + to_string(c.bounds().eps2()) + "\n";
    for (const SimplexEntry& entry : c.entries()) {
        out += "simplex " + entry.id + " " + std::to_string(entry.dim) + " " +
               to_string(entry.lifetime.x1()) + " " + to_string(entry.lifetime.x2());
        for (const std::string& face : entry.faces)
            out += " " + face;
        out += "\n";
    }
    return out;
}

/// Snapshot at time t: the simplices with birth <= t <= death (closed
/// interval membership). Closed under faces by the containment invariant.
inline StaticComplex slice(const VariableComplex& c, const Rational& t) {
    Rational limit = std::max(c.bounds().eps1(), c.bounds().eps2());
    if (t < 0 || t > limit)
        throw DomainError("slice time " + to_string(t) + " outside [0," + to_string(limit) +
                          "]");
    std::vector<std::vector<StaticComplex::Simplex>> by_dim;
    for (const SimplexEntry& entry : c.entries()) {
        if (entry.lifetime.x1() <= t && t <= entry.lifetime.x2()) {
            if (by_dim.size() <= static_cast<std::size_t>(entry.dim))
                by_dim.resize(static_cast<std::size_t>(entry.dim) + 1);
            by_dim[static_cast<std::size_t>(entry.dim)].push_back(
                StaticComplex::Simplex{entry.id, entry.faces});
        }
    }
    return StaticComplex(std::move(by_dim));
}

/// Ids of the simplices alive over the whole generalised interval q, i.e.
/// those whose lifetime dominates q in the algebra. Antitone in q: this is
/// the section of the barcode sheaf over q.
inline std::set<std::string> alive_over(const VariableComplex& c, const Lifetime& q) {
    if (orientation(q) == Orientation::Negative)
        throw DomainError("alive_over expects a positively oriented or degenerate query, got " +
                          to_string(q));
    std::set<std::string> alive;
    for (const SimplexEntry& entry : c.entries())
        if (leq(q, entry.lifetime))
            alive.insert(entry.id);
    return alive;
}

/// All births and deaths, sorted and deduplicated.
inline std::vector<Rational> critical_values(const VariableComplex& c) {
    std::set<Rational> values;
    for (const SimplexEntry& entry : c.entries()) {
        values.insert(entry.lifetime.x1());
        values.insert(entry.lifetime.x2());
    }
    return {values.begin(), values.end()};
}

/// Critical values plus the midpoint of every consecutive gap; sampling at
/// these sees every value the homology takes over time.
inline std::vector<Rational> sample_points(const VariableComplex& c) {
    std::vector<Rational> criticals = critical_values(c);
    std::vector<Rational> samples;
    for (std::size_t i = 0; i < criticals.size(); ++i) {
        if (i > 0)
            samples.push_back((criticals[i - 1] + criticals[i]) / 2);
        samples.push_back(criticals[i]);
    }
    return samples;
}

} // namespace plat
