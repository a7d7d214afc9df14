#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coset.hpp"
#include "exhaustion.hpp"
#include "presentation.hpp"
#include "simplex.hpp"

namespace limtop {

/// Finite covering space assembled from a completed coset enumeration.
/// Sheet c over base vertex v is cover vertex c * |V| + rank(v).
struct CoverResult {
    FiniteComplex total;
    FiniteComplex base;
    SimplicialMap projection;
    std::map<VertexId, int> sheet_of; // cover vertex -> coset
    int sheets = 0;
    VertexId base_lift = 0; // lift of the base vertex in sheet 0
    EdgePathGroup group;
    CosetTable table;
    std::vector<Word> subgroup;
};

inline CoverResult finite_cover(const FiniteComplex& k, VertexId base,
                                const std::vector<Word>& subgroup,
                                int coset_budget = kDefaultCosetBudget) {
    CoverResult c;
    c.base = k;
    c.group = edge_path_group(k, base);
    c.subgroup = subgroup;
    for (const auto& w : subgroup)
        for (int l : w)
            if (l == 0 || std::abs(l) > c.group.pres.ngens)
                throw PreconditionViolatedError(
                    "subgroup word uses a letter outside the presentation");

    ToddCoxeterResult tc = todd_coxeter(c.group.pres, subgroup, coset_budget);
    if (!tc.completed())
        throw BudgetExceededError("coset enumeration defined " +
                                      std::to_string(tc.defined) + " cosets");
    c.table = tc.table;
    c.sheets = tc.index;

    std::vector<VertexId> verts = k.vertices();
    std::map<VertexId, int> rank;
    for (std::size_t i = 0; i < verts.size(); ++i) rank[verts[i]] = i;
    int nv = static_cast<int>(verts.size());
    auto lift_id = [&](int coset, VertexId v) {
        return static_cast<VertexId>(coset * nv + rank.at(v));
    };

    for (int coset = 0; coset < c.sheets; ++coset)
        for (const auto& s : k.simplices()) {
            auto vs = s.vertices();
            std::vector<VertexId> lifted;
            for (VertexId v : vs) {
                int cs = coset;
                if (int l = c.group.letter(vs[0], v)) cs = c.table.act(coset, l);
                lifted.push_back(lift_id(cs, v));
            }
            c.total.insert_closed(Simplex(lifted));
        }

    for (int coset = 0; coset < c.sheets; ++coset)
        for (VertexId v : verts) {
            VertexId x = lift_id(coset, v);
            if (c.total.contains(Simplex{x})) {
                c.projection.vertex_map[x] = v;
                c.sheet_of[x] = coset;
            }
        }
    c.base_lift = lift_id(0, base);
    c.projection.validate(c.total, c.base);
    return c;
}

/// Number of deck transformations: cosets whose stabilizer contains the
/// subgroup, i.e. fixed by every subgroup generator. The cover is normal
/// exactly when this reaches the sheet count.
inline int deck_count(const CoverResult& c) {
    int n = 0;
    for (int coset = 0; coset < c.sheets; ++coset) {
        bool fixed = true;
        for (const auto& w : c.subgroup)
            if (c.table.act_word(coset, w) != coset) {
                fixed = false;
                break;
            }
        if (fixed) ++n;
    }
    return n;
}

inline bool is_normal_cover(const CoverResult& c) {
    return deck_count(c) == c.sheets;
}

/// Local homeomorphism check: the projection must map the closed star of
/// every vertex bijectively onto the closed star of its image. Vertices
/// in `skip` (a lazy cover's frontier) are exempt.
struct CoveringReport {
    bool ok = true;
    int checked = 0;
    std::string witness;
};

inline CoveringReport verify_covering(const FiniteComplex& total,
                                      const SimplicialMap& proj,
                                      const FiniteComplex& base,
                                      const std::set<VertexId>& skip = {}) {
    CoveringReport r;
    for (VertexId x : total.vertices()) {
        if (skip.count(x)) continue;
        ++r.checked;
        FiniteComplex sx = total.star(Simplex{x});
        FiniteComplex tx = base.star(Simplex{proj(x)});
        std::set<Simplex> image;
        for (const auto& s : sx.simplices()) {
            Simplex img = proj.image(s);
            if (img.dim() != s.dim() || !image.insert(img).second) {
                r.ok = false;
                r.witness = "star of vertex " + std::to_string(x) +
                            " does not embed: simplex " + s.to_string();
                return r;
            }
        }
        std::set<Simplex> target(tx.simplices().begin(), tx.simplices().end());
        if (image != target) {
            r.ok = false;
            r.witness = "star of vertex " + std::to_string(x) +
                        " does not match the star of " +
                        std::to_string(proj(x));
            return r;
        }
    }
    return r;
}

/// Recompute, from the finished complex, that the projected fundamental
/// group lands in the subgroup: every loop generator of the cover is
/// projected to a word that fixes coset 0. Together with the sheet count
/// equalling the subgroup index, that pins the image to the subgroup.
struct SubgroupImageReport {
    bool ok = true;
    int loops_checked = 0;
    std::string witness;
};

inline SubgroupImageReport verify_subgroup_image(const CoverResult& c) {
    SubgroupImageReport r;
    for (const auto& w : c.subgroup)
        if (c.table.act_word(0, w) != 0) {
            r.ok = false;
            r.witness = "subgroup word does not stabilize the base coset";
            return r;
        }

    EdgePathGroup cg = edge_path_group(c.total, c.base_lift);
    for (const auto& [edge, gen] : cg.generator_of) {
        auto vs = edge.vertices();
        std::vector<VertexId> seq = cg.tree_path(vs[0]);
        seq.push_back(vs[1]);
        std::vector<VertexId> back = cg.tree_path(vs[1]);
        seq.insert(seq.end(), back.rbegin(), back.rend());

        std::vector<VertexId> projected;
        for (VertexId x : seq) projected.push_back(c.projection(x));
        Word w = c.group.path_word(projected);
        ++r.loops_checked;
        if (c.table.act_word(0, w) != 0) {
            r.ok = false;
            r.witness = "cover loop through edge " + edge.to_string() +
                        " projects outside the subgroup";
            return r;
        }
    }
    return r;
}

/// Canonical-form strategies for labelling sheets of a lazily built cover.
/// FreeReduction is exact when the edge-path group is free (no relators),
/// Abelianization when it is abelian, CosetTable for any finite-index
/// subgroup. verify_covering reports when a strategy was unsound for the
/// complex at hand.
enum class Rewriting { FreeReduction, Abelianization, CosetTable };

struct LazyCoverResult {
    FiniteComplex ball;
    FiniteComplex base;
    SimplicialMap projection;
    std::map<VertexId, int> dist;
    std::set<VertexId> frontier; // distance == radius: stars may be cut off
    int radius = 0;
    Rewriting rewriting = Rewriting::FreeReduction;
    VertexId base_lift = 0;
    Exhaustion exhaustion; // stage n: lifts with all vertices within n

    /// Full subcomplex on the non-frontier vertices.
    FiniteComplex interior() const {
        FiniteComplex k;
        for (const auto& s : ball.simplices()) {
            bool in = true;
            for (VertexId v : s.vertices())
                if (frontier.count(v)) {
                    in = false;
                    break;
                }
            if (in) k.insert_raw(s);
        }
        return k;
    }
};

namespace detail {

/// Word canonicalizer for sheet labels.
class SheetLabels {
public:
    SheetLabels(Rewriting rw, const Presentation& pres, const CosetTable* table)
        : rw_(rw), table_(table) {
        if (rw_ == Rewriting::Abelianization) {
            IntegerMatrix m(pres.ngens, static_cast<int>(pres.relators.size()));
            for (std::size_t c = 0; c < pres.relators.size(); ++c)
                for (int l : pres.relators[c]) {
                    int g = std::abs(l) - 1;
                    m.at(g, static_cast<int>(c)) += l > 0 ? 1 : -1;
                }
            ab_.emplace(pres.ngens, m);
            ngens_ = pres.ngens;
        }
    }

    std::string key(const Word& w) const {
        switch (rw_) {
        case Rewriting::FreeReduction: {
            std::string out;
            for (int l : free_reduce(w)) out += std::to_string(l) + ".";
            return out;
        }
        case Rewriting::Abelianization: {
            std::vector<Int> e(ngens_, 0);
            for (int l : w) e[std::abs(l) - 1] += l > 0 ? 1 : -1;
            std::string out;
            for (const Int& x : ab_->coords_of(e)) out += x.str() + ".";
            return out;
        }
        case Rewriting::CosetTable:
            return std::to_string(table_->act_word(0, w));
        }
        return {};
    }

private:
    Rewriting rw_;
    const CosetTable* table_;
    std::optional<PresentedGroup> ab_;
    int ngens_ = 0;
};

} // namespace detail

inline LazyCoverResult lazy_cover(const FiniteComplex& k, VertexId base,
                                  Rewriting rewriting, int radius,
                                  const std::vector<Word>& subgroup = {},
                                  int coset_budget = kDefaultCosetBudget) {
    if (rewriting != Rewriting::CosetTable && !subgroup.empty())
        throw PreconditionViolatedError(
            "word rewriting builds universal covers; a proper subgroup needs "
            "the coset table strategy");

    LazyCoverResult r;
    r.base = k;
    r.radius = radius;
    r.rewriting = rewriting;

    EdgePathGroup g = edge_path_group(k, base);
    CosetTable table;
    if (rewriting == Rewriting::CosetTable) {
        ToddCoxeterResult tc = todd_coxeter(g.pres, subgroup, coset_budget);
        if (!tc.completed())
            throw BudgetExceededError("coset enumeration defined " +
                                      std::to_string(tc.defined) + " cosets");
        table = tc.table;
    }
    detail::SheetLabels labels(rewriting, g.pres, &table);

    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& e : k.simplices_of_dim(1)) {
        auto vs = e.vertices();
        adj[vs[0]].push_back(vs[1]);
        adj[vs[1]].push_back(vs[0]);
    }
    for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());

    // BFS over (group element, base vertex) pairs out to the radius.
    std::map<std::pair<std::string, VertexId>, VertexId> ids;
    std::map<VertexId, Word> word_of;
    auto intern = [&](const std::string& key, VertexId v) {
        auto [it, fresh] =
            ids.emplace(std::make_pair(key, v), static_cast<VertexId>(ids.size()));
        return std::make_pair(it->second, fresh);
    };

    auto [start, fresh0] = intern(labels.key({}), base);
    r.base_lift = start;
    word_of[start] = {};
    r.dist[start] = 0;
    r.projection.vertex_map[start] = base;
    std::deque<VertexId> queue = {start};
    std::map<VertexId, VertexId> proj = {{start, base}};

    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        if (r.dist[x] == radius) continue;
        VertexId v = proj[x];
        for (VertexId u : adj[v]) {
            Word w = word_of[x];
            if (int l = g.letter(v, u)) w.push_back(l);
            auto [y, fresh] = intern(labels.key(w), u);
            if (fresh) {
                word_of[y] = std::move(w);
                r.dist[y] = r.dist[x] + 1;
                proj[y] = u;
                r.projection.vertex_map[y] = u;
                queue.push_back(y);
            }
        }
    }

    // Lift every base simplex wherever all of its vertices materialized.
    for (const auto& [key, x] : ids) r.ball.insert_raw(Simplex{x});
    for (const auto& s : k.simplices()) {
        if (s.dim() == 0) continue;
        auto vs = s.vertices();
        for (const auto& [key, x] : ids) {
            if (key.second != vs[0]) continue;
            std::vector<VertexId> lifted = {x};
            for (std::size_t i = 1; i < vs.size(); ++i) {
                Word w = word_of[x];
                if (int l = g.letter(vs[0], vs[i])) w.push_back(l);
                auto it = ids.find({labels.key(w), vs[i]});
                if (it == ids.end()) {
                    lifted.clear();
                    break;
                }
                lifted.push_back(it->second);
            }
            if (!lifted.empty()) r.ball.insert_closed(Simplex(lifted));
        }
    }

    for (const auto& [x, d] : r.dist)
        if (d == radius) r.frontier.insert(x);

    // The balls form an exhaustion; every star is certified one stage
    // after its simplex completes. The certificate is filled in directly:
    // for a sound rewriting choice it passes build_exhaustion, which the
    // tests assert, while an unsound one is left for verify_covering to
    // expose rather than aborting construction here.
    r.exhaustion.stages.assign(radius + 1, FiniteComplex());
    for (const auto& s : r.ball.simplices()) {
        int stage = 0;
        for (VertexId v : s.vertices()) stage = std::max(stage, r.dist.at(v));
        for (int n = stage; n <= radius; ++n) r.exhaustion.stages[n].insert_raw(s);
        r.exhaustion.stability[s] = stage + 1;
    }
    return r;
}

} // namespace limtop
