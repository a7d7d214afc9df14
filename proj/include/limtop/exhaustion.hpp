#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "homology.hpp"
#include "simplex.hpp"

namespace limtop {

/// Directed exhaustion presented by a materialized prefix of nested stages
/// plus a star-stability certificate: star(s) inside stage n equals its
/// final value for every n >= stability[s]. An optional generator extends
/// the prefix on demand.
struct Exhaustion {
    std::vector<FiniteComplex> stages;
    std::map<Simplex, int> stability;
    std::function<FiniteComplex(int)> generator;

    int prefix_length() const { return static_cast<int>(stages.size()); }

    const FiniteComplex& stage(int i) const { return stages.at(i); }

    /// Extend the materialized prefix through stage i.
    void materialize(int i) {
        while (prefix_length() <= i) {
            if (!generator)
                throw PreconditionViolatedError(
                    "exhaustion has no generator beyond its materialized prefix");
            FiniteComplex next = generator(prefix_length());
            next.validate();
            if (!stages.empty() && !stages.back().is_subcomplex_of(next))
                throw NotNestedError(prefix_length() - 1);
            stages.push_back(std::move(next));
        }
    }

    /// First stage whose vertex set contains v, or nullopt.
    std::optional<int> vertex_entry_stage(VertexId v) const {
        for (int i = 0; i < prefix_length(); ++i)
            if (stages[i].contains(Simplex{v})) return i;
        return std::nullopt;
    }
};

/// Validate nesting and the star-stability certificate on the prefix.
inline Exhaustion build_exhaustion(std::vector<FiniteComplex> stages,
                                   std::map<Simplex, int> stability,
                                   std::function<FiniteComplex(int)> generator = {}) {
    for (std::size_t i = 0; i < stages.size(); ++i) {
        stages[i].validate();
        if (i + 1 < stages.size() && !stages[i].is_subcomplex_of(stages[i + 1]))
            throw NotNestedError(static_cast<int>(i));
    }
    int m = static_cast<int>(stages.size());
    for (const auto& [s, declared] : stability) {
        if (declared < 0)
            throw StarUnstableError(s.to_string(), declared, -1);
        if (declared >= m) continue; // nothing of the claim is visible yet
        if (!stages[declared].contains(s))
            throw StarUnstableError(s.to_string(), declared, declared);
        FiniteComplex base = stages[declared].star(s);
        for (int j = declared + 1; j < m; ++j)
            if (!(stages[j].star(s) == base))
                throw StarUnstableError(s.to_string(), declared, j);
    }
    Exhaustion x;
    x.stages = std::move(stages);
    x.stability = std::move(stability);
    x.generator = std::move(generator);
    return x;
}

/// Connected components of the colimit, watched along the prefix.
struct ComponentReport {
    std::vector<int> stage_counts;
    std::map<VertexId, int> final_partition; // components of the last stage
    int stable_from = -1; // stage from which inclusions are component bijections
};

inline ComponentReport colimit_components(const Exhaustion& x, int stage_budget) {
    int m = std::min(stage_budget, x.prefix_length());
    if (m <= 0)
        throw PreconditionViolatedError("no materialized stages to inspect");
    std::vector<std::map<VertexId, int>> parts;
    std::vector<int> counts;
    for (int i = 0; i < m; ++i) {
        parts.push_back(x.stage(i).vertex_components());
        int c = 0;
        for (const auto& [v, id] : parts.back()) c = std::max(c, id + 1);
        counts.push_back(c);
    }
    // Inclusion K_i -> K_j is a component bijection iff counts match and no
    // two i-components merge inside j.
    auto bijective = [&](int i, int j) {
        if (counts[i] != counts[j]) return false;
        std::map<int, int> image;
        for (const auto& [v, ci] : parts[i]) {
            int cj = parts[j].at(v);
            auto [it, fresh] = image.emplace(ci, cj);
            if (!fresh && it->second != cj) return false;
        }
        std::set<int> hit;
        for (const auto& [ci, cj] : image) hit.insert(cj);
        return static_cast<int>(hit.size()) == counts[j];
    };
    int stable = -1;
    for (int s = m - 1; s >= 0; --s) {
        bool ok = true;
        for (int j = s + 1; j < m && ok; ++j) ok = bijective(s, j);
        if (ok)
            stable = s;
        else
            break;
    }
    ComponentReport r;
    r.stage_counts = std::move(counts);
    r.final_partition = parts.back();
    r.stable_from = stable;
    return r;
}

/// Simplex subset of an exhaustion defined by a membership predicate,
/// with finite restrictions to stages.
struct AdmissibleSubset {
    int index = 0;
    std::function<bool(const Simplex&)> contains;

    std::set<Simplex> restrict_to(const FiniteComplex& stage) const {
        std::set<Simplex> out;
        for (const auto& s : stage.simplices())
            if (contains(s)) out.insert(s);
        return out;
    }
};

/// Shrinking system of the exhaustion: member n collects the simplices
/// whose earliest vertex entered at stage n-1 or n. Consecutive members
/// overlap; members two apart are disjoint; together they cover.
inline std::vector<AdmissibleSubset> shrink_exhaustion(const Exhaustion& x) {
    auto entry = std::make_shared<std::map<VertexId, int>>();
    for (int i = x.prefix_length() - 1; i >= 0; --i)
        for (VertexId v : x.stage(i).vertices()) (*entry)[v] = i;

    std::vector<AdmissibleSubset> out;
    for (int n = 0; n < x.prefix_length(); ++n) {
        AdmissibleSubset u;
        u.index = n;
        u.contains = [entry, n](const Simplex& s) {
            int mn = -1;
            for (VertexId v : s.vertices()) {
                auto it = entry->find(v);
                if (it == entry->end()) return false; // vertex beyond the prefix
                if (mn < 0 || it->second < mn) mn = it->second;
            }
            return mn >= n - 1 && mn <= n;
        };
        out.push_back(std::move(u));
    }
    return out;
}

/// Homology of the colimit in one dimension: direct limit of the stage
/// groups along inclusion-induced maps, presented as their direct sum
/// modulo x - i(x), plus stabilization diagnostics.
struct ColimitHomology {
    FgAbGroup colimit;
    std::vector<FgAbGroup> stage_groups;
    std::vector<bool> map_is_iso;
    std::vector<bool> map_is_injective;
    int stable_from = -1;
};

inline ColimitHomology colimit_homology(const Exhaustion& x, int n,
                                        int stage_budget) {
    int m = std::min(stage_budget, x.prefix_length());
    if (m <= 0)
        throw PreconditionViolatedError("no materialized stages to inspect");

    std::vector<HomologyResult> hs;
    for (int i = 0; i < m; ++i)
        hs.emplace_back(x.stage(i), FiniteComplex(), n);

    std::vector<GroupHom> maps;
    FiniteComplex empty;
    for (int i = 0; i + 1 < m; ++i) {
        SimplicialMap inc = identity_map(x.stage(i));
        maps.push_back(induced_map(inc, x.stage(i), empty, x.stage(i + 1), empty,
                                   hs[i], hs[i + 1]));
    }

    std::vector<int> offset(m + 1, 0);
    for (int i = 0; i < m; ++i) offset[i + 1] = offset[i] + hs[i].ncoords();
    int total = offset[m];

    int nrel = 0;
    for (int i = 0; i < m; ++i)
        for (const auto& d : hs[i].orders())
            if (d != 0) ++nrel;
    for (int i = 0; i + 1 < m; ++i) nrel += hs[i].ncoords();

    IntegerMatrix rel(total, nrel);
    int c = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < hs[i].ncoords(); ++j)
            if (hs[i].orders()[j] != 0) rel.at(offset[i] + j, c++) = hs[i].orders()[j];
    for (int i = 0; i + 1 < m; ++i)
        for (int j = 0; j < hs[i].ncoords(); ++j) {
            rel.at(offset[i] + j, c) = 1;
            for (int t = 0; t < hs[i + 1].ncoords(); ++t)
                rel.at(offset[i + 1] + t, c) -= maps[i].matrix.at(t, j);
            ++c;
        }

    ColimitHomology out;
    out.colimit = PresentedGroup(total, rel).group();
    for (const auto& h : hs) out.stage_groups.push_back(h.group());
    for (const auto& f : maps) {
        out.map_is_iso.push_back(is_isomorphism(f));
        out.map_is_injective.push_back(is_injective(f));
    }
    int stable = m == 1 ? 0 : -1;
    for (int s = static_cast<int>(maps.size()) - 1; s >= 0; --s) {
        if (!out.map_is_iso[s]) break;
        stable = s;
    }
    out.stable_from = stable;
    return out;
}

/// Per-stage Euler characteristics across the prefix.
inline std::vector<long long> euler_profile(const Exhaustion& x) {
    std::vector<long long> out;
    for (int i = 0; i < x.prefix_length(); ++i)
        out.push_back(x.stage(i).euler_characteristic());
    return out;
}

} // namespace limtop
