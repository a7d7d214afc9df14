#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "simplex.hpp"

namespace limtop {

/// Group word: letter +(g+1) is generator g, -(g+1) its inverse.
using Word = std::vector<int>;

inline Word word_inverse(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

inline Word word_concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline Word free_reduce(const Word& w) {
    Word out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline std::vector<std::string> default_generator_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        if (i < 26)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            names.push_back("g" + std::to_string(i));
    }
    return names;
}

struct Presentation {
    int ngens = 0;
    std::vector<Word> relators;
    std::vector<std::string> names;

    std::string word_to_string(const Word& w) const {
        if (w.empty()) return "1";
        std::string out;
        for (int l : w) {
            if (!out.empty()) out += ' ';
            int g = std::abs(l) - 1;
            std::string n = names.at(g);
            if (l < 0) {
                if (n.size() == 1 && n[0] >= 'a' && n[0] <= 'z')
                    n[0] = static_cast<char>(n[0] - 'a' + 'A');
                else
                    n += "^-1";
            }
            out += n;
        }
        return out;
    }
};

/// Abelianized presentation: column per relator, row per generator.
inline FgAbGroup abelianization(const Presentation& p) {
    IntegerMatrix m(p.ngens, static_cast<int>(p.relators.size()));
    for (std::size_t c = 0; c < p.relators.size(); ++c)
        for (int l : p.relators[c]) {
            int g = std::abs(l) - 1;
            m.at(g, static_cast<int>(c)) += l > 0 ? 1 : -1;
        }
    return PresentedGroup(p.ngens, m).group();
}

/// Edge-path group of a connected complex: spanning tree from the base
/// vertex, one generator per non-tree edge, one relator per triangle.
struct EdgePathGroup {
    Presentation pres;
    VertexId base = 0;
    FiniteComplex complex;
    std::set<Simplex> tree;
    std::map<Simplex, int> generator_of; // non-tree edge, oriented low->high
    std::map<VertexId, VertexId> parent; // BFS tree, base maps to itself

    /// Vertex sequence of the tree path base -> v.
    std::vector<VertexId> tree_path(VertexId v) const {
        std::vector<VertexId> out = {v};
        while (v != base) {
            v = parent.at(v);
            out.push_back(v);
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    /// Letter traversing u -> v: 0 on tree edges and fixed vertices.
    int letter(VertexId u, VertexId v) const {
        if (u == v) return 0;
        Simplex e{u, v};
        if (tree.count(e)) return 0;
        int g = generator_of.at(e);
        return u < v ? g + 1 : -(g + 1);
    }

    /// Word of an edge path given as a vertex sequence.
    Word path_word(const std::vector<VertexId>& vs) const {
        Word w;
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            if (int l = letter(vs[i], vs[i + 1])) w.push_back(l);
        return w;
    }
};

inline EdgePathGroup edge_path_group(const FiniteComplex& k, VertexId base) {
    if (!k.contains(Simplex{base}))
        throw SimplexNotFoundError("base vertex " + std::to_string(base));
    if (!k.is_connected())
        throw DisconnectedError("edge-path group needs a connected complex");

    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& e : k.simplices_of_dim(1)) {
        auto vs = e.vertices();
        adj[vs[0]].push_back(vs[1]);
        adj[vs[1]].push_back(vs[0]);
    }
    for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());

    EdgePathGroup g;
    g.base = base;
    g.complex = k;

    std::set<VertexId> seen = {base};
    std::deque<VertexId> queue = {base};
    g.parent[base] = base;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId v : adj[u])
            if (seen.insert(v).second) {
                g.tree.insert(Simplex{u, v});
                g.parent[v] = u;
                queue.push_back(v);
            }
    }

    for (const auto& e : k.simplices_of_dim(1))
        if (!g.tree.count(e)) {
            int idx = static_cast<int>(g.generator_of.size());
            g.generator_of[e] = idx;
        }

    g.pres.ngens = static_cast<int>(g.generator_of.size());
    g.pres.names = default_generator_names(g.pres.ngens);
    for (const auto& t : k.simplices_of_dim(2)) {
        auto vs = t.vertices();
        Word r;
        for (int l : {g.letter(vs[0], vs[1]), g.letter(vs[1], vs[2]),
                      g.letter(vs[2], vs[0])})
            if (l) r.push_back(l);
        if (!r.empty()) g.pres.relators.push_back(std::move(r));
    }
    return g;
}

} // namespace limtop
