#pragma once

#include <string>

#include "coset.hpp"
#include "homology.hpp"
#include "presentation.hpp"

namespace limtop {

/// Degree-one comparison of the abelianized edge-path group with first
/// homology. They agree on every connected complex; the report carries
/// both sides so disagreement would be visible, not just boolean.
struct HurewiczReport {
    Presentation pi1;
    FgAbGroup abelianized_pi1;
    FgAbGroup h1;
    bool agree = false;
};

inline HurewiczReport hurewicz_h1(const FiniteComplex& k, VertexId base) {
    HurewiczReport r;
    EdgePathGroup g = edge_path_group(k, base);
    r.pi1 = g.pres;
    r.abelianized_pi1 = abelianization(g.pres);
    r.h1 = homology(k, 1).group();
    r.agree = r.abelianized_pi1 == r.h1;
    return r;
}

/// Second homotopy group via the degree-two comparison: once the
/// fundamental group is certified trivial by a completed coset
/// enumeration of index 1, pi_2 is H_2. Anything short of that
/// certificate is reported, never guessed.
struct Pi2Report {
    enum class Status { Certified, NotSimplyConnected, BudgetExceeded };
    Status status = Status::BudgetExceeded;
    FgAbGroup pi2;      // meaningful only when Certified
    int pi1_index = -1; // order of the fundamental group when enumerable
    int defined = 0;
};

inline Pi2Report pi2_via_hurewicz(const FiniteComplex& k, VertexId base,
                                  int coset_budget) {
    EdgePathGroup g = edge_path_group(k, base);
    ToddCoxeterResult tc = todd_coxeter(g.pres, {}, coset_budget);
    Pi2Report r;
    r.defined = tc.defined;
    if (!tc.completed()) {
        r.status = Pi2Report::Status::BudgetExceeded;
        return r;
    }
    r.pi1_index = tc.index;
    if (tc.index != 1) {
        r.status = Pi2Report::Status::NotSimplyConnected;
        return r;
    }
    r.status = Pi2Report::Status::Certified;
    r.pi2 = homology(k, 2).group();
    return r;
}

/// Certificate-based homotopy equivalence check for a simplicial map.
/// A failed homology comparison refutes equivalence outright. The
/// positive direction needs both sides certified simply connected; when
/// that certificate is out of reach the verdict is undetermined, with
/// the reason spelled out.
struct WhiteheadReport {
    enum class Verdict { Equivalence, NotEquivalence, Undetermined };
    Verdict verdict = Verdict::Undetermined;
    std::string reason;
};

inline WhiteheadReport whitehead_check(const SimplicialMap& f,
                                       const FiniteComplex& k,
                                       const FiniteComplex& l,
                                       int coset_budget) {
    f.validate(k, l);
    WhiteheadReport r;

    int maxd = std::max(k.dim(), l.dim());
    for (int n = 0; n <= maxd; ++n) {
        GroupHom h = induced_map(f, k, l, n);
        if (!is_isomorphism(h)) {
            r.verdict = WhiteheadReport::Verdict::NotEquivalence;
            r.reason = "induced map on H_" + std::to_string(n) +
                       " is not an isomorphism: " + h.source.to_string() +
                       " -> " + h.target.to_string();
            return r;
        }
    }

    if (!k.is_connected() || !l.is_connected()) {
        r.reason = "homology matches but the complexes are disconnected; "
                   "no componentwise certificate is attempted";
        return r;
    }

    for (const FiniteComplex* side : {&k, &l}) {
        EdgePathGroup g = edge_path_group(*side, side->vertices().front());
        ToddCoxeterResult tc = todd_coxeter(g.pres, {}, coset_budget);
        if (!tc.completed()) {
            r.reason = "homology matches but a fundamental group could not be "
                       "certified trivial within the coset budget";
            return r;
        }
        if (tc.index != 1) {
            r.reason = "homology matches but a fundamental group has order " +
                       std::to_string(tc.index) +
                       "; equivalence is beyond this certificate";
            return r;
        }
    }

    r.verdict = WhiteheadReport::Verdict::Equivalence;
    r.reason = "both complexes certified simply connected and the map is a "
               "homology isomorphism";
    return r;
}

} // namespace limtop
