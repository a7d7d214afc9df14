#pragma once

#include <limtop/exhaustion.hpp>
#include <limtop/simplex.hpp>

#include <map>
#include <vector>

namespace fixtures {

using limtop::FiniteComplex;
using limtop::Simplex;
using limtop::VertexId;

inline FiniteComplex point() { return FiniteComplex::from_maximal({Simplex{0}}); }

inline FiniteComplex interval() {
    return FiniteComplex::from_maximal({Simplex{0, 1}});
}

/// Path 0-1-...-k.
inline FiniteComplex path(int k) {
    std::vector<Simplex> m;
    if (k == 0) m.push_back(Simplex{0});
    for (int i = 0; i < k; ++i) m.push_back(Simplex{i, i + 1});
    return FiniteComplex::from_maximal(m);
}

/// Cycle graph on m >= 3 vertices.
inline FiniteComplex circle(int m = 3) {
    std::vector<Simplex> e;
    for (int i = 0; i < m; ++i) e.push_back(Simplex{i, (i + 1) % m});
    return FiniteComplex::from_maximal(e);
}

/// Solid triangle.
inline FiniteComplex disc() {
    return FiniteComplex::from_maximal({Simplex{0, 1, 2}});
}

/// Boundary of the 3-simplex.
inline FiniteComplex sphere() {
    return FiniteComplex::from_maximal(
        {Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 2, 3}, Simplex{1, 2, 3}});
}

/// 7-vertex triangulated torus: faces {i,i+1,i+3} and {i,i+2,i+3} mod 7.
inline FiniteComplex torus7() {
    std::vector<Simplex> f;
    for (int i = 0; i < 7; ++i) {
        f.push_back(Simplex{i, (i + 1) % 7, (i + 3) % 7});
        f.push_back(Simplex{i, (i + 2) % 7, (i + 3) % 7});
    }
    return FiniteComplex::from_maximal(f);
}

/// 6-vertex triangulated projective plane (icosahedron antipodal quotient).
inline FiniteComplex rp2_6() {
    return FiniteComplex::from_maximal(
        {Simplex{1, 2, 3}, Simplex{1, 2, 4}, Simplex{1, 3, 5}, Simplex{1, 4, 6},
         Simplex{1, 5, 6}, Simplex{2, 3, 6}, Simplex{2, 4, 5}, Simplex{2, 5, 6},
         Simplex{3, 4, 5}, Simplex{3, 4, 6}});
}

/// Klein bottle: 4x4 grid on the square, vertical sides glued with a flip,
/// horizontal sides glued straight.
inline FiniteComplex klein() {
    const int N = 4;
    auto norm = [&](int i, int j) {
        j = ((j % N) + N) % N;
        if (i == N) {
            i = 0;
            j = (N - j) % N;
        }
        return i * N + j;
    };
    std::vector<Simplex> f;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            f.push_back(Simplex{norm(i, j), norm(i + 1, j), norm(i + 1, j + 1)});
            f.push_back(Simplex{norm(i, j), norm(i + 1, j + 1), norm(i, j + 1)});
        }
    return FiniteComplex::from_maximal(f);
}

/// Triangulated annulus (prism shell): boundary circles {0,1,2} and {3,4,5}.
inline FiniteComplex cylinder() {
    return FiniteComplex::from_maximal(
        {Simplex{0, 1, 3}, Simplex{1, 3, 4}, Simplex{1, 2, 4}, Simplex{2, 4, 5},
         Simplex{0, 2, 5}, Simplex{0, 3, 5}});
}

/// Wedge of m triangle circles sharing vertex 0.
inline FiniteComplex wedge(int m) {
    std::vector<Simplex> e;
    if (m == 0) e.push_back(Simplex{0});
    for (int j = 0; j < m; ++j) {
        int a = 3 * j + 1, b = 3 * j + 2;
        e.push_back(Simplex{0, a});
        e.push_back(Simplex{a, b});
        e.push_back(Simplex{0, b});
    }
    return FiniteComplex::from_maximal(e);
}

/// Annulus between two hexagonal rings given by their base vertex ids.
inline void add_annulus(std::vector<Simplex>& f, int ring_a, int ring_b) {
    for (int i = 0; i < 6; ++i) {
        int a0 = ring_a + i, a1 = ring_a + (i + 1) % 6;
        int b0 = ring_b + i, b1 = ring_b + (i + 1) % 6;
        f.push_back(Simplex{a0, a1, b0});
        f.push_back(Simplex{a1, b0, b1});
    }
}

/// Disc: hexagon fan around vertex 0 (ring 1..6) plus two collar annuli
/// (rings 7..12 and 13..18). Boundary is the ring 13..18.
inline FiniteComplex disc_collar() {
    std::vector<Simplex> f;
    for (int i = 0; i < 6; ++i)
        f.push_back(Simplex{0, 1 + i, 1 + (i + 1) % 6});
    add_annulus(f, 1, 7);
    add_annulus(f, 7, 13);
    return FiniteComplex::from_maximal(f);
}

/// The two-ring collar of disc_collar's boundary: full subcomplex on 1..18.
inline FiniteComplex disc_collar_rim() {
    std::vector<Simplex> f;
    add_annulus(f, 1, 7);
    add_annulus(f, 7, 13);
    return FiniteComplex::from_maximal(f);
}

/// Growing line: stage i is the path 0-1-...-i. Every star freezes one
/// stage after its simplex appears, and the certificate says so.
inline limtop::Exhaustion line_exhaustion(int stages) {
    std::vector<FiniteComplex> ks;
    std::map<Simplex, int> stab;
    for (int i = 0; i < stages; ++i) ks.push_back(path(i));
    for (int v = 0; v < stages; ++v) {
        stab[Simplex{v}] = v + 1;
        if (v + 1 < stages) stab[Simplex{v, v + 1}] = v + 1;
    }
    return limtop::build_exhaustion(std::move(ks), std::move(stab),
                                    [](int i) { return path(i); });
}

/// Growing wedge: stage 0 is the base point, stage i the wedge of i circles.
/// The base point's star grows forever, so it carries no finite certificate.
inline limtop::Exhaustion wedge_exhaustion(int stages) {
    std::vector<FiniteComplex> ks;
    std::map<Simplex, int> stab;
    for (int i = 0; i < stages; ++i) ks.push_back(wedge(i));
    for (int j = 1; j < stages; ++j) {
        int a = 3 * (j - 1) + 1, b = 3 * (j - 1) + 2;
        for (const Simplex& s :
             {Simplex{a}, Simplex{b}, Simplex{a, b}, Simplex{0, a}, Simplex{0, b}})
            stab[s] = j;
    }
    return limtop::build_exhaustion(std::move(ks), std::move(stab),
                                    [](int i) { return wedge(i); });
}

} // namespace fixtures
