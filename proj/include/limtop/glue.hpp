#pragma once

#include <array>
#include <map>
#include <vector>

#include "simplex.hpp"
#include "union_find.hpp"

namespace limtop {

/// Gluing data: a list of parts and vertex identifications across them.
/// Each identification reads (part a, vertex in a, part b, vertex in b).
struct GlueSpec {
    std::vector<FiniteComplex> parts;
    std::vector<std::array<int, 4>> identifications;
};

struct GlueResult {
    FiniteComplex glued;
    std::vector<SimplicialMap> part_maps; // embedding of each part
};

/// Quotient of the disjoint union of the parts by the identifications.
/// Two vertices of the same part may never end up identified; that would
/// collapse a simplex, so it is rejected rather than silently degenerated.
inline GlueResult glue_complexes(const GlueSpec& spec) {
    int nparts = static_cast<int>(spec.parts.size());

    std::vector<std::vector<VertexId>> verts(nparts);
    std::map<std::pair<int, VertexId>, int> node_of;
    for (int p = 0; p < nparts; ++p) {
        spec.parts[p].validate();
        verts[p] = spec.parts[p].vertices();
        for (VertexId v : verts[p]) {
            int id = static_cast<int>(node_of.size());
            node_of[{p, v}] = id;
        }
    }

    UnionFind uf(static_cast<int>(node_of.size()));
    for (const auto& [pa, va, pb, vb] : spec.identifications) {
        auto a = node_of.find({pa, va});
        auto b = node_of.find({pb, vb});
        if (a == node_of.end() || b == node_of.end())
            throw SimplexNotFoundError("identified vertex is not in its part");
        uf.unite(a->second, b->second);
    }

    // Deterministic output ids: classes numbered by first appearance in
    // (part, vertex) order.
    std::map<int, VertexId> class_id;
    for (int p = 0; p < nparts; ++p)
        for (VertexId v : verts[p]) {
            int root = uf.find(node_of[{p, v}]);
            if (!class_id.count(root)) {
                VertexId next = static_cast<VertexId>(class_id.size());
                class_id[root] = next;
            }
        }

    GlueResult out;
    for (int p = 0; p < nparts; ++p) {
        SimplicialMap f;
        std::map<VertexId, VertexId> seen; // output id -> source vertex
        for (VertexId v : verts[p]) {
            VertexId w = class_id[uf.find(node_of[{p, v}])];
            auto [it, fresh] = seen.emplace(w, v);
            if (!fresh)
                throw InconsistentIdentificationError(
                    "vertices " + std::to_string(it->second) + " and " +
                    std::to_string(v) + " of part " + std::to_string(p) +
                    " would be identified");
            f.vertex_map[v] = w;
        }
        for (const auto& s : spec.parts[p].simplices())
            out.glued.insert_raw(f.image(s));
        out.part_maps.push_back(std::move(f));
    }
    out.glued.validate();
    return out;
}

/// Convenience: glue two complexes along a vertex correspondence.
inline GlueResult glue_pair(const FiniteComplex& a, const FiniteComplex& b,
                            const std::vector<std::pair<VertexId, VertexId>>& along) {
    GlueSpec spec;
    spec.parts = {a, b};
    for (const auto& [va, vb] : along)
        spec.identifications.push_back({0, va, 1, vb});
    return glue_complexes(spec);
}

} // namespace limtop
