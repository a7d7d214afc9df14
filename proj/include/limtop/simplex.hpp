#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "union_find.hpp"

namespace limtop {

using VertexId = int;

/// Abstract simplex: a nonempty, strictly increasing vertex list.
class Simplex {
public:
    Simplex() = default;

    Simplex(std::initializer_list<VertexId> vs)
        : Simplex(std::vector<VertexId>(vs)) {}

    explicit Simplex(std::vector<VertexId> vs) : verts_(std::move(vs)) {
        std::sort(verts_.begin(), verts_.end());
        if (verts_.empty())
            throw NotSimplicialError("empty vertex list");
        if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
            throw NotSimplicialError("repeated vertex in " + to_string());
        if (verts_.front() < 0)
            throw NotSimplicialError("negative vertex id in " + to_string());
    }

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<VertexId>& vertices() const { return verts_; }

    bool has_vertex(VertexId v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool is_face_of(const Simplex& other) const {
        return std::includes(other.verts_.begin(), other.verts_.end(),
                             verts_.begin(), verts_.end());
    }

    /// Codimension-1 faces; empty for vertices.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        if (dim() == 0) return out;
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            std::vector<VertexId> f;
            f.reserve(verts_.size() - 1);
            for (std::size_t j = 0; j < verts_.size(); ++j)
                if (j != i) f.push_back(verts_[j]);
            out.emplace_back(std::move(f));
        }
        return out;
    }

    /// The facet opposite verts_[i], paired with the sign (-1)^i.
    Simplex facet_opposite(std::size_t i) const {
        std::vector<VertexId> f;
        f.reserve(verts_.size() - 1);
        for (std::size_t j = 0; j < verts_.size(); ++j)
            if (j != i) f.push_back(verts_[j]);
        return Simplex(std::move(f));
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            if (i) os << ',';
            os << verts_[i];
        }
        os << '}';
        return os.str();
    }

    bool operator==(const Simplex& o) const { return verts_ == o.verts_; }
    bool operator!=(const Simplex& o) const { return verts_ != o.verts_; }
    bool operator<(const Simplex& o) const { return verts_ < o.verts_; }

private:
    std::vector<VertexId> verts_;
};

/// Finite abstract simplicial complex. Stores every simplex explicitly;
/// mutation goes through insert_closed so face closure is preserved.
class FiniteComplex {
public:
    FiniteComplex() = default;

    static FiniteComplex from_maximal(const std::vector<Simplex>& maximal) {
        FiniteComplex k;
        for (const auto& s : maximal) k.insert_closed(s);
        return k;
    }

    void insert_closed(const Simplex& s) {
        if (simplices_.insert(s).second && s.dim() > 0)
            for (const auto& f : s.facets()) insert_closed(f);
    }

    /// Raw insert, for building candidates that validate_complex inspects.
    void insert_raw(const Simplex& s) { simplices_.insert(s); }

    bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }

    const std::set<Simplex>& simplices() const { return simplices_; }

    int dim() const {
        int d = -1;
        for (const auto& s : simplices_) d = std::max(d, s.dim());
        return d;
    }

    std::vector<Simplex> simplices_of_dim(int n) const {
        std::vector<Simplex> out;
        for (const auto& s : simplices_)
            if (s.dim() == n) out.push_back(s);
        return out;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        for (const auto& s : simplices_)
            if (s.dim() == 0) out.push_back(s.vertices()[0]);
        return out;
    }

    /// Throws MissingFaceError if some facet of a stored simplex is absent.
    void validate() const {
        for (const auto& s : simplices_)
            for (const auto& f : s.facets())
                if (!contains(f))
                    throw MissingFaceError(s.to_string(), f.to_string());
    }

    bool is_subcomplex_of(const FiniteComplex& other) const {
        return std::includes(other.simplices_.begin(), other.simplices_.end(),
                             simplices_.begin(), simplices_.end());
    }

    /// Closed star: every simplex containing s, together with all faces.
    FiniteComplex star(const Simplex& s) const {
        if (!contains(s)) throw SimplexNotFoundError(s.to_string());
        FiniteComplex out;
        for (const auto& t : simplices_)
            if (s.is_face_of(t)) out.insert_closed(t);
        return out;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (const auto& s : simplices_) chi += (s.dim() % 2 == 0) ? 1 : -1;
        return chi;
    }

    /// Component id per vertex, ids numbered by smallest member vertex order.
    std::map<VertexId, int> vertex_components() const {
        std::vector<VertexId> vs = vertices();
        std::map<VertexId, std::size_t> idx;
        for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
        UnionFind uf(vs.size());
        for (const auto& s : simplices_)
            if (s.dim() == 1)
                uf.unite(idx[s.vertices()[0]], idx[s.vertices()[1]]);
        std::map<std::size_t, int> root_id;
        std::map<VertexId, int> out;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::size_t r = uf.find(i);
            auto it = root_id.find(r);
            if (it == root_id.end())
                it = root_id.emplace(r, static_cast<int>(root_id.size())).first;
            out[vs[i]] = it->second;
        }
        return out;
    }

    int component_count() const {
        auto comp = vertex_components();
        int m = 0;
        for (const auto& [v, c] : comp) m = std::max(m, c + 1);
        return m;
    }

    bool is_connected() const { return component_count() <= 1; }

    bool operator==(const FiniteComplex& o) const {
        return simplices_ == o.simplices_;
    }

private:
    std::set<Simplex> simplices_;
};

/// Checks face closure and returns the complex unchanged.
inline FiniteComplex validate_complex(const FiniteComplex& candidate) {
    candidate.validate();
    return candidate;
}

/// Vertex map between complexes. Simplicial if every simplex image
/// (after collapsing repeats) is a simplex of the target.
struct SimplicialMap {
    std::map<VertexId, VertexId> vertex_map;

    VertexId operator()(VertexId v) const {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end())
            throw PreconditionViolatedError("vertex " + std::to_string(v) +
                                            " has no image under the map");
        return it->second;
    }

    /// Image simplex, with repeated image vertices collapsed.
    Simplex image(const Simplex& s) const {
        std::set<VertexId> img;
        for (VertexId v : s.vertices()) img.insert((*this)(v));
        return Simplex(std::vector<VertexId>(img.begin(), img.end()));
    }

    void validate(const FiniteComplex& source, const FiniteComplex& target) const {
        for (const auto& s : source.simplices())
            if (!target.contains(image(s)))
                throw PreconditionViolatedError(
                    "image of " + s.to_string() + " is not a simplex of the target");
    }
};

inline SimplicialMap identity_map(const FiniteComplex& k) {
    SimplicialMap f;
    for (VertexId v : k.vertices()) f.vertex_map[v] = v;
    return f;
}

} // namespace limtop
