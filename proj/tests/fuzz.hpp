#pragma once

#include <limtop/exhaustion.hpp>
#include <limtop/simplex.hpp>

#include <random>
#include <set>
#include <vector>

namespace fuzz {

using limtop::Exhaustion;
using limtop::FiniteComplex;
using limtop::Simplex;
using limtop::VertexId;

inline FiniteComplex random_complex(std::mt19937& rng, int max_vertices,
                                    int max_maximal, int max_dim = 3) {
    std::vector<Simplex> maximal;
    int nm = 1 + static_cast<int>(rng() % max_maximal);
    for (int i = 0; i < nm; ++i) {
        std::set<VertexId> vs;
        int s = 1 + static_cast<int>(rng() % (max_dim + 1));
        while (static_cast<int>(vs.size()) < s)
            vs.insert(static_cast<VertexId>(rng() % max_vertices));
        maximal.emplace_back(std::vector<VertexId>(vs.begin(), vs.end()));
    }
    return FiniteComplex::from_maximal(maximal);
}

inline FiniteComplex random_subcomplex(std::mt19937& rng, const FiniteComplex& k) {
    FiniteComplex a;
    for (const auto& s : k.simplices())
        if (rng() % 3 == 0) a.insert_closed(s);
    return a;
}

/// Random nested stage sequence: each stage extends the previous one with a
/// few fresh maximal simplices drawn from a slowly widening vertex pool.
inline Exhaustion random_exhaustion(std::mt19937& rng, int stages,
                                    int growth = 3) {
    std::vector<FiniteComplex> ks;
    FiniteComplex cur = random_complex(rng, 4, 2, 2);
    ks.push_back(cur);
    for (int i = 1; i < stages; ++i) {
        int pool = 4 + growth * i;
        int adds = 1 + static_cast<int>(rng() % growth);
        for (int a = 0; a < adds; ++a) {
            std::set<VertexId> vs;
            int s = 1 + static_cast<int>(rng() % 3);
            while (static_cast<int>(vs.size()) < s)
                vs.insert(static_cast<VertexId>(rng() % pool));
            cur.insert_closed(Simplex(std::vector<VertexId>(vs.begin(), vs.end())));
        }
        ks.push_back(cur);
    }
    return limtop::build_exhaustion(std::move(ks), {});
}

} // namespace fuzz
