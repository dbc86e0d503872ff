#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "plattice/complex.hpp"
#include "plattice/lifetime.hpp"

namespace plat {

enum class FieldTag { F2, Q };

inline const char* to_string(FieldTag field) { return field == FieldTag::F2 ? "f2" : "q"; }

/// The boundary-of-boundary map is nonzero over the requested field.
struct ChainError : Error {
    using Error::Error;
};

/// Input complex is not a filtration (some simplex dies inside the window).
struct FiltrationError : Error {
    using Error::Error;
};

/// Matrix of the boundary map C_n -> C_{n-1} of one slice. Entries are
/// integers; in F2 mode they are already reduced mod 2. A face listed twice
/// accumulates (and may cancel).
class BoundaryMatrix {
public:
    BoundaryMatrix(FieldTag field, std::vector<std::string> row_ids,
                   std::vector<std::string> col_ids)
        : field_(field), row_ids_(std::move(row_ids)), col_ids_(std::move(col_ids)),
          entries_(row_ids_.size() * col_ids_.size(), 0) {}

    FieldTag field() const { return field_; }
    std::size_t rows() const { return row_ids_.size(); }
    std::size_t cols() const { return col_ids_.size(); }
    const std::vector<std::string>& row_ids() const { return row_ids_; }
    const std::vector<std::string>& col_ids() const { return col_ids_; }

    long long& at(std::size_t row, std::size_t col) { return entries_[row * cols() + col]; }
    long long at(std::size_t row, std::size_t col) const {
        return entries_[row * cols() + col];
    }

    std::size_t column_weight(std::size_t col) const {
        std::size_t weight = 0;
        for (std::size_t row = 0; row < rows(); ++row)
            if (at(row, col) != 0)
                ++weight;
        return weight;
    }

private:
    FieldTag field_;
    std::vector<std::string> row_ids_;
    std::vector<std::string> col_ids_;
    std::vector<long long> entries_;
};

/// Boundary matrix of dimension n >= 1 over the slice. Column sigma is
/// sum_i coeff_i * d_i(sigma) with coeff_i = 1 over F2 and (-1)^i over Q.
inline BoundaryMatrix boundary_matrix(const StaticComplex& s, int n, FieldTag field) {
    if (n < 1)
        throw DomainError("boundary matrix is defined for dimension >= 1");
    const auto& rows = s.simplices(n - 1);
    const auto& cols = s.simplices(n);
    std::map<std::string, std::size_t> row_index;
    std::vector<std::string> row_ids, col_ids;
    for (const auto& simplex : rows) {
        row_index.emplace(simplex.id, row_ids.size());
        row_ids.push_back(simplex.id);
    }
    for (const auto& simplex : cols)
        col_ids.push_back(simplex.id);
    BoundaryMatrix m(field, std::move(row_ids), std::move(col_ids));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& faces = cols[j].faces;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            auto it = row_index.find(faces[i]);
            if (it == row_index.end())
                throw DomainError("slice is not closed under faces at '" + cols[j].id + "'");
            long long coeff = field == FieldTag::Q && (i % 2 == 1) ? -1 : 1;
            m.at(it->second, j) += coeff;
        }
    }
    if (field == FieldTag::F2)
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m.at(r, c) = ((m.at(r, c) % 2) + 2) % 2;
    return m;
}

namespace detail {

inline std::size_t rank_f2(const BoundaryMatrix& m) {
    std::vector<std::vector<std::uint8_t>> a(m.rows(), std::vector<std::uint8_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = static_cast<std::uint8_t>(((m.at(r, c) % 2) + 2) % 2);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][col] == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != rank && a[r][col])
                for (std::size_t c = col; c < m.cols(); ++c)
                    a[r][c] ^= a[rank][c];
        ++rank;
    }
    return rank;
}

inline std::size_t rank_q(const BoundaryMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m.at(r, c);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && a[pivot][col] == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][col] == 0)
                continue;
            Rational factor = a[r][col] / a[rank][col];
            for (std::size_t c = col; c < m.cols(); ++c)
                a[r][c] -= factor * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Exact rank over the matrix's field.
inline std::size_t rank(const BoundaryMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return m.field() == FieldTag::F2 ? detail::rank_f2(m) : detail::rank_q(m);
}

/// Does d_{n-1} o d_n vanish over the field? Trivially true for n <= 1.
inline bool chain_condition_holds(const StaticComplex& s, int n, FieldTag field) {
    if (n <= 1 || s.size(n) == 0 || s.size(n - 2) == 0)
        return true;
    BoundaryMatrix outer = boundary_matrix(s, n - 1, field);
    BoundaryMatrix inner = boundary_matrix(s, n, field);
    for (std::size_t r = 0; r < outer.rows(); ++r) {
        for (std::size_t c = 0; c < inner.cols(); ++c) {
            long long sum = 0;
            for (std::size_t k = 0; k < inner.rows(); ++k)
                sum += outer.at(r, k) * inner.at(k, c);
            if (field == FieldTag::F2 ? (sum % 2 != 0) : (sum != 0))
                return false;
        }
    }
    return true;
}

/// Betti number of the slice: dim C_n - rank d_n - rank d_{n+1}.
inline int betti(const StaticComplex& s, int n, FieldTag field) {
    if (n < 0)
        throw DomainError("negative homology dimension");
    if (!chain_condition_holds(s, n + 1, field))
        throw ChainError("boundary of boundary is nonzero over " +
                         std::string(to_string(field)) + " in dimension " +
                         std::to_string(n + 1) +
                         "; check the face orientations or use f2");
    std::size_t dim_cn = s.size(n);
    if (dim_cn == 0)
        return 0;
    std::size_t rank_dn = n == 0 ? 0 : rank(boundary_matrix(s, n, field));
    std::size_t rank_dn1 = s.size(n + 1) == 0
                               ? 0
                               : rank(boundary_matrix(s, n + 1, field));
    return static_cast<int>(dim_cn - rank_dn - rank_dn1);
}

/// Step function of homology ranks over time.
struct BettiStep {
    Rational start;
    Rational end;
    bool end_included;
    int rank;

    bool operator==(const BettiStep& other) const = default;
};

struct BettiCurve {
    int dimension = 0;
    std::vector<BettiStep> steps;

    bool operator==(const BettiCurve& other) const = default;
};

/// Builds the curve from an explicit sample set (the standard samples are
/// always merged in, so every gap between criticals is probed). The rank
/// reported at each critical value is the rank computed at that value;
/// open-interval ranks come from the interior samples.
inline BettiCurve betti_curve_sampled(const VariableComplex& c, int n, FieldTag field,
                                      const std::vector<Rational>& extra_samples) {
    std::vector<Rational> criticals = critical_values(c);
    BettiCurve curve;
    curve.dimension = n;
    if (criticals.empty())
        return curve;

    std::set<Rational> sample_set(extra_samples.begin(), extra_samples.end());
    for (const Rational& s : sample_points(c))
        sample_set.insert(s);

    // One segment per critical value plus one per gap between consecutive
    // criticals, evaluated at the first interior sample.
    struct Segment {
        Rational start, end;
        bool point;
        int rank;
    };
    std::vector<Segment> segments;
    for (std::size_t i = 0; i < criticals.size(); ++i) {
        if (i > 0) {
            auto it = sample_set.upper_bound(criticals[i - 1]);
            // sample_points guarantees an interior sample in every gap
            segments.push_back(Segment{criticals[i - 1], criticals[i], false,
                                       betti(slice(c, *it), n, field)});
        }
        segments.push_back(
            Segment{criticals[i], criticals[i], true, betti(slice(c, criticals[i]), n, field)});
    }

    for (const Segment& seg : segments) {
        if (!curve.steps.empty() && curve.steps.back().rank == seg.rank) {
            curve.steps.back().end = seg.end;
            curve.steps.back().end_included = seg.point;
        } else {
            curve.steps.push_back(BettiStep{seg.start, seg.end, seg.point, seg.rank});
        }
    }
    return curve;
}

/// Glued global view of the pointwise homology: maximal intervals of
/// constant rank partitioning [min birth, max death].
inline BettiCurve betti_curve(const VariableComplex& c, int n, FieldTag field) {
    return betti_curve_sampled(c, n, field, {});
}

inline std::vector<BettiCurve> all_betti_curves(const VariableComplex& c, FieldTag field) {
    std::vector<BettiCurve> curves;
    for (int n = 0; n <= std::max(c.max_dim(), 0); ++n)
        curves.push_back(betti_curve(c, n, field));
    return curves;
}

/// A filtration never loses simplices: every death sits at the end of the
/// observation window.
inline bool is_filtration(const VariableComplex& c) {
    for (const SimplexEntry& entry : c.entries())
        if (entry.lifetime.x2() != c.bounds().eps2())
            return false;
    return true;
}

enum class PairClass { Ordinary, Relative, Essential };

inline const char* to_string(PairClass cls) {
    switch (cls) {
    case PairClass::Ordinary: return "ordinary";
    case PairClass::Relative: return "relative";
    case PairClass::Essential: return "essential";
    }
    return "unknown";
}

/// Birth-death pair of one homology feature; death is absent for classes
/// essential to the whole window.
struct PersistencePair {
    int dimension = 0;
    Rational birth;
    std::optional<Rational> death; // nullopt: essential (infinity sentinel)
    PairClass cls = PairClass::Ordinary;

    bool operator==(const PersistencePair& other) const = default;
};

/// Standard column reduction over the field on simplices ordered by
/// (birth, dimension, file order). Zero-length pairs (birth = death) are
/// discarded; unpaired creators become essential pairs.
inline std::vector<PersistencePair> persistence_pairs(const VariableComplex& c,
                                                      FieldTag field) {
    if (!is_filtration(c))
        throw FiltrationError(
            "not a filtration: some simplex dies before the end of the window; "
            "use betti curves for general variable complexes");

    const auto& entries = c.entries();
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (entries[a].lifetime.x1() != entries[b].lifetime.x1())
            return entries[a].lifetime.x1() < entries[b].lifetime.x1();
        if (entries[a].dim != entries[b].dim)
            return entries[a].dim < entries[b].dim;
        return a < b;
    });
    std::vector<std::size_t> position(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;
    std::map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < entries.size(); ++i)
        by_id.emplace(entries[i].id, i);

    using Column = std::map<std::size_t, Rational>; // row position -> coefficient
    auto normalized = [&](Rational v) {
        if (field == FieldTag::F2) {
            Integer n = rat_num(v) % 2;
            return Rational(n < 0 ? n + 2 : n);
        }
        return v;
    };

    std::vector<std::optional<std::size_t>> pivot_owner(entries.size());
    std::vector<Column> reduced(entries.size());
    std::vector<bool> paired(entries.size(), false);
    std::vector<PersistencePair> pairs;

    for (std::size_t j = 0; j < order.size(); ++j) {
        const SimplexEntry& simplex = entries[order[j]];
        Column col;
        for (std::size_t i = 0; i < simplex.faces.size(); ++i) {
            std::size_t row = position[by_id.at(simplex.faces[i])];
            Rational coeff = field == FieldTag::Q && (i % 2 == 1) ? Rational(-1) : Rational(1);
            Rational v = normalized(col[row] + coeff);
            if (v == 0)
                col.erase(row);
            else
                col[row] = v;
        }
        while (!col.empty()) {
            std::size_t low = col.rbegin()->first;
            if (!pivot_owner[low])
                break;
            const Column& other = reduced[*pivot_owner[low]];
            Rational factor = col.rbegin()->second / other.rbegin()->second;
            for (const auto& [row, coeff] : other) {
                Rational v = normalized(col[row] - factor * coeff);
                if (v == 0)
                    col.erase(row);
                else
                    col[row] = v;
            }
        }
        if (col.empty())
            continue; // creator; may be paired later or stay essential
        std::size_t low = col.rbegin()->first;
        pivot_owner[low] = j;
        reduced[j] = std::move(col);
        paired[j] = true;
        paired[low] = true;
        const SimplexEntry& creator = entries[order[low]];
        if (creator.lifetime.x1() != simplex.lifetime.x1())
            pairs.push_back(PersistencePair{creator.dim, creator.lifetime.x1(),
                                            simplex.lifetime.x1(), PairClass::Ordinary});
    }
    for (std::size_t j = 0; j < order.size(); ++j)
        if (!paired[j]) {
            const SimplexEntry& creator = entries[order[j]];
            pairs.push_back(PersistencePair{creator.dim, creator.lifetime.x1(), std::nullopt,
                                            PairClass::Essential});
        }

    std::sort(pairs.begin(), pairs.end(), [](const PersistencePair& a,
                                             const PersistencePair& b) {
        if (a.dimension != b.dimension)
            return a.dimension < b.dimension;
        if (a.birth != b.birth)
            return a.birth < b.birth;
        if (a.death.has_value() != b.death.has_value())
            return a.death.has_value(); // finite deaths first
        if (a.death && b.death)
            return *a.death < *b.death;
        return false;
    });
    return pairs;
}

enum class PointClass { Ordinary, Relative, Diagonal };

inline const char* to_string(PointClass cls) {
    switch (cls) {
    case PointClass::Ordinary: return "ordinary";
    case PointClass::Relative: return "relative";
    case PointClass::Diagonal: return "diagonal";
    }
    return "unknown";
}

/// Diagram points below the diagonal are relative classes, above ordinary.
inline PointClass classify_point(const Lifetime& p) {
    switch (orientation(p)) {
    case Orientation::Positive: return PointClass::Ordinary;
    case Orientation::Negative: return PointClass::Relative;
    case Orientation::Degenerate: return PointClass::Diagonal;
    }
    return PointClass::Diagonal;
}

/// Multiset of diagram points.
struct PersistenceDiagram {
    std::vector<std::pair<Lifetime, unsigned>> points; // sorted, multiplicity >= 1

    bool operator==(const PersistenceDiagram& other) const = default;
};

/// Diagram of a pair list: essential deaths map to eps2, multiplicities of
/// coinciding points aggregate.
inline PersistenceDiagram diagram(const std::vector<PersistencePair>& pairs,
                                  const Bounds& bounds) {
    std::map<std::pair<Rational, Rational>, unsigned> mult;
    for (const PersistencePair& pair : pairs) {
        Rational death = pair.death ? *pair.death : bounds.eps2();
        ++mult[{pair.birth, death}];
    }
    PersistenceDiagram d;
    for (const auto& [coords, count] : mult)
        d.points.emplace_back(Lifetime(coords.first, coords.second, bounds), count);
    return d;
}

inline PersistenceDiagram collapse_multiplicity(PersistenceDiagram d) {
    for (auto& [point, count] : d.points)
        count = 1;
    return d;
}

/// CSV: dim,start,end,end_included,rank — one step per line.
inline std::string curves_to_csv(const std::vector<BettiCurve>& curves) {
    std::string out;
    for (const BettiCurve& curve : curves)
        for (const BettiStep& step : curve.steps)
            out += std::to_string(curve.dimension) + "," + to_string(step.start) + "," +
                   to_string(step.end) + "," + (step.end_included ? "true" : "false") + "," +
                   std::to_string(step.rank) + "\n";
    return out;
}

/// CSV: dim,birth,death,class — death is "inf" for essential pairs.
inline std::string pairs_to_csv(const std::vector<PersistencePair>& pairs) {
    std::string out;
    for (const PersistencePair& pair : pairs)
        out += std::to_string(pair.dimension) + "," + to_string(pair.birth) + "," +
               (pair.death ? to_string(*pair.death) : std::string("inf")) + "," +
               to_string(pair.cls) + "\n";
    return out;
}

} // namespace plat
