#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "matrix.hpp"
#include "simplex.hpp"

namespace limtop {

/// Integer chain: finitely supported function from simplices.
using Chain = std::map<Simplex, Int>;

inline void chain_add(Chain& a, const Simplex& s, const Int& coef) {
    if (coef == 0) return;
    auto [it, inserted] = a.emplace(s, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) a.erase(it);
    }
}

/// Boundary of one simplex with the alternating-sign facet convention on
/// sorted vertex order.
inline Chain boundary_chain(const Simplex& s) {
    Chain out;
    if (s.dim() == 0) return out;
    for (std::size_t i = 0; i < s.vertices().size(); ++i)
        chain_add(out, s.facet_opposite(i), (i % 2 == 0) ? 1 : -1);
    return out;
}

namespace detail {

inline void require_subcomplex(const FiniteComplex& a, const FiniteComplex& k) {
    if (!a.is_subcomplex_of(k))
        throw NotSubcomplexError("the designated subcomplex has simplices outside the complex");
}

/// Sorted n-simplices of K not lying in A.
inline std::vector<Simplex> pair_basis(const FiniteComplex& k,
                                       const FiniteComplex& a, int n) {
    std::vector<Simplex> out;
    for (const auto& s : k.simplices_of_dim(n))
        if (!a.contains(s)) out.push_back(s);
    return out;
}

} // namespace detail

/// Matrix of the boundary map C_n -> C_{n-1} of the pair (K, A): rows are
/// the (n-1)-simplices of the pair, columns the n-simplices, both sorted.
inline IntegerMatrix boundary_matrix(const FiniteComplex& k,
                                     const FiniteComplex& a, int n) {
    auto rows = detail::pair_basis(k, a, n - 1);
    auto cols = detail::pair_basis(k, a, n);
    std::map<Simplex, int> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i)
        row_index[rows[i]] = static_cast<int>(i);
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [f, coef] : boundary_chain(cols[j])) {
            auto it = row_index.find(f);
            if (it != row_index.end()) m.at(it->second, static_cast<int>(j)) = coef;
        }
    return m;
}

inline IntegerMatrix boundary_matrix(const FiniteComplex& k, int n) {
    return boundary_matrix(k, FiniteComplex(), n);
}

/// Homology of a pair in one dimension, with generator cycles and canonical
/// class coordinates. Generator choice follows the Smith bases and is not
/// canonical across triangulations.
class HomologyResult {
public:
    HomologyResult() = default;

    HomologyResult(const FiniteComplex& k, const FiniteComplex& a, int n)
        : basis_(detail::pair_basis(k, a, n)) {
        boundary_n_ = boundary_matrix(k, a, n);
        IntegerMatrix boundary_next = boundary_matrix(k, a, n + 1);
        SmithForm s = smith_normal_form(boundary_n_);
        brank_ = s.rank();
        v_ = s.v;
        vinv_ = s.vinv;
        int kdim = static_cast<int>(basis_.size()) - brank_;

        IntegerMatrix coords = s.vinv * boundary_next;
        IntegerMatrix q(kdim, boundary_next.cols());
        for (int i = 0; i < kdim; ++i)
            for (int j = 0; j < boundary_next.cols(); ++j)
                q.at(i, j) = coords.at(brank_ + i, j);
        quotient_ = PresentedGroup(kdim, q);

        for (int g = 0; g < quotient_.ncoords(); ++g) {
            std::vector<Int> y = quotient_.generator(g);
            Chain c;
            for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
                Int coef = 0;
                for (int j = 0; j < kdim; ++j)
                    if (y[j] != 0 && v_.at(i, brank_ + j) != 0)
                        coef += v_.at(i, brank_ + j) * y[j];
                if (coef != 0) c.emplace(basis_[i], coef);
            }
            generators_.push_back(std::move(c));
        }
    }

    const FgAbGroup& group() const { return quotient_.group(); }
    const std::vector<Simplex>& basis() const { return basis_; }
    const std::vector<Chain>& generators() const { return generators_; }
    const std::vector<Int>& orders() const { return quotient_.orders(); }
    int ncoords() const { return quotient_.ncoords(); }

    std::vector<Int> chain_vector(const Chain& c) const {
        std::map<Simplex, int> index;
        for (std::size_t i = 0; i < basis_.size(); ++i)
            index[basis_[i]] = static_cast<int>(i);
        std::vector<Int> x(basis_.size());
        for (const auto& [s, coef] : c) {
            auto it = index.find(s);
            if (it == index.end()) {
                if (coef != 0)
                    throw SimplexNotFoundError(s.to_string());
            } else {
                x[it->second] = coef;
            }
        }
        return x;
    }

    bool is_cycle(const Chain& c) const {
        return boundary_n_.apply(chain_vector(c)) ==
               std::vector<Int>(boundary_n_.rows());
    }

    /// Canonical coordinates of the homology class of a cycle.
    std::vector<Int> class_coordinates(const Chain& cycle) const {
        std::vector<Int> x = chain_vector(cycle);
        std::vector<Int> c = vinv_.apply(x);
        for (int i = 0; i < brank_; ++i)
            if (c[i] != 0)
                throw PreconditionViolatedError("chain is not a cycle");
        std::vector<Int> kc(c.begin() + brank_, c.end());
        return quotient_.coords_of(kc);
    }

    bool is_zero_class(const std::vector<Int>& coords) const {
        return quotient_.is_zero_class(coords);
    }

private:
    std::vector<Simplex> basis_;
    IntegerMatrix boundary_n_;
    IntegerMatrix v_, vinv_;
    int brank_ = 0;
    PresentedGroup quotient_;
    std::vector<Chain> generators_;
};

inline HomologyResult homology(const FiniteComplex& k, int n) {
    return HomologyResult(k, FiniteComplex(), n);
}

inline HomologyResult relative_homology(const FiniteComplex& k,
                                        const FiniteComplex& a, int n) {
    detail::require_subcomplex(a, k);
    return HomologyResult(k, a, n);
}

/// Sign of the permutation sorting the image vertices, or 0 on collapse.
inline int image_sign(const SimplicialMap& f, const Simplex& s,
                      Simplex* image_out) {
    std::vector<VertexId> img;
    for (VertexId v : s.vertices()) img.push_back(f(v));
    int sign = 1;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j) {
            if (img[i] == img[j]) return 0;
            if (img[i] > img[j]) sign = -sign;
        }
    if (image_out) *image_out = Simplex(img);
    return sign;
}

/// Push a chain through a simplicial map; degenerate images vanish and
/// images inside the target subcomplex are dropped.
inline Chain push_chain(const SimplicialMap& f, const Chain& c,
                        const FiniteComplex& target_sub) {
    Chain out;
    for (const auto& [s, coef] : c) {
        Simplex img;
        int sign = image_sign(f, s, &img);
        if (sign == 0) continue;
        if (target_sub.contains(img)) continue;
        chain_add(out, img, coef * sign);
    }
    return out;
}

/// Induced map on homology of pairs. For absolute homology pass empty
/// subcomplexes. Requires f to carry A into B.
inline GroupHom induced_map(const SimplicialMap& f, const FiniteComplex& k,
                            const FiniteComplex& a, const FiniteComplex& l,
                            const FiniteComplex& b,
                            const HomologyResult& source,
                            const HomologyResult& target) {
    f.validate(k, l);
    for (const auto& s : a.simplices())
        if (!b.contains(f.image(s)))
            throw PreconditionViolatedError(
                "map does not carry the source subcomplex into the target one: " +
                s.to_string());
    IntegerMatrix m(target.ncoords(), source.ncoords());
    for (int j = 0; j < source.ncoords(); ++j) {
        Chain img = push_chain(f, source.generators()[j], b);
        m.set_col(j, target.class_coordinates(img));
    }
    return GroupHom{source.group(), target.group(), source.orders(),
                    target.orders(), m};
}

inline GroupHom induced_map(const SimplicialMap& f, const FiniteComplex& k,
                            const FiniteComplex& l, int n) {
    HomologyResult src = homology(k, n);
    HomologyResult dst = homology(l, n);
    return induced_map(f, k, FiniteComplex(), l, FiniteComplex(), src, dst);
}

/// Connecting map H_n(K, A) -> H_{n-1}(A): lift a relative cycle, take its
/// boundary, read it off inside A.
inline GroupHom connecting_map(const FiniteComplex& k, const FiniteComplex& a,
                               const HomologyResult& rel_n,
                               const HomologyResult& a_prev) {
    IntegerMatrix m(a_prev.ncoords(), rel_n.ncoords());
    for (int j = 0; j < rel_n.ncoords(); ++j) {
        Chain full;
        for (const auto& [s, coef] : rel_n.generators()[j])
            for (const auto& [fct, fcoef] : boundary_chain(s))
                chain_add(full, fct, coef * fcoef);
        for (const auto& [s, coef] : full)
            if (!a.contains(s))
                throw PreconditionViolatedError(
                    "relative generator boundary leaves the subcomplex at " +
                    s.to_string());
        m.set_col(j, a_prev.class_coordinates(full));
    }
    return GroupHom{rel_n.group(), a_prev.group(), rel_n.orders(),
                    a_prev.orders(), m};
}

/// One node of the long exact sequence, with its exactness verdict.
struct LesNode {
    std::string label;
    FgAbGroup group;
    bool exact = true;
};

struct LesReport {
    std::vector<LesNode> nodes;
    bool exact = true;
    std::string failure; // first failing node label, empty when exact
};

namespace detail {

/// im(incoming) == ker(outgoing) inside the node group.
inline bool exact_at(const GroupHom& incoming, const GroupHom& outgoing) {
    IntegerMatrix image = incoming.matrix;
    IntegerMatrix kernel = kernel_generators(outgoing);
    return subgroups_equal(incoming.target_orders, image, kernel);
}

} // namespace detail

/// Long exact homology sequence of the pair (K, A), checked from dimension
/// dim K down to 0.
inline LesReport long_exact_sequence(const FiniteComplex& k,
                                     const FiniteComplex& a) {
    detail::require_subcomplex(a, k);
    int top = k.dim();

    std::vector<HomologyResult> ha, hk, hrel;
    for (int n = 0; n <= top; ++n) {
        ha.emplace_back(a, FiniteComplex(), n);
        hk.emplace_back(k, FiniteComplex(), n);
        hrel.emplace_back(k, a, n);
    }

    SimplicialMap inc = identity_map(a);
    SimplicialMap idk = identity_map(k);
    FiniteComplex empty;

    // Maps, downward: i_n : H_n(A) -> H_n(K), j_n : H_n(K) -> H_n(K, A),
    // d_n : H_n(K, A) -> H_{n-1}(A).
    std::vector<GroupHom> im, jm, dm;
    for (int n = 0; n <= top; ++n) {
        im.push_back(induced_map(inc, a, empty, k, empty, ha[n], hk[n]));
        jm.push_back(induced_map(idk, k, empty, k, a, hk[n], hrel[n]));
        if (n > 0) dm.push_back(connecting_map(k, a, hrel[n], ha[n - 1]));
    }

    LesReport report;
    auto note = [&](const std::string& label, const FgAbGroup& g, bool ok) {
        report.nodes.push_back({label, g, ok});
        if (!ok && report.exact) {
            report.exact = false;
            report.failure = label;
        }
    };

    for (int n = top; n >= 0; --n) {
        std::string sn = std::to_string(n);
        // At H_n(A): incoming d_{n+1} (zero above top), outgoing i_n.
        bool ok_a;
        if (n == top) {
            GroupHom zero{FgAbGroup{}, ha[n].group(), {}, ha[n].orders(),
                          IntegerMatrix(ha[n].ncoords(), 0)};
            ok_a = detail::exact_at(zero, im[n]);
        } else {
            ok_a = detail::exact_at(dm[n], im[n]);
        }
        note("H_" + sn + "(A)", ha[n].group(), ok_a);

        note("H_" + sn + "(K)", hk[n].group(), detail::exact_at(im[n], jm[n]));

        bool ok_rel;
        if (n > 0) {
            ok_rel = detail::exact_at(jm[n], dm[n - 1]);
        } else {
            // The sequence ends at H_0(K, A) -> 0, so j_0 must be onto.
            ok_rel = is_surjective(jm[0]);
        }
        note("H_" + sn + "(K,A)", hrel[n].group(), ok_rel);
    }
    return report;
}

struct ExcisionReport {
    bool passed = true;
    std::vector<int> failed_dims;
};

/// Combinatorial openness: U is closed under taking cofaces inside K.
inline void require_coface_closed(const FiniteComplex& k,
                                  const std::set<Simplex>& u) {
    for (const auto& s : u) {
        if (!k.contains(s)) throw SimplexNotFoundError(s.to_string());
        for (const auto& t : k.simplices())
            if (s.is_face_of(t) && !u.count(t))
                throw PreconditionViolatedError(
                    "excised set is not open: missing coface " + t.to_string());
    }
}

/// Excision: removing an open U buried inside A leaves relative homology
/// unchanged. Precondition (strict combinatorial form): every simplex of K
/// sharing a vertex with U lies in A.
inline ExcisionReport excision_check(const FiniteComplex& k,
                                     const FiniteComplex& a,
                                     const std::set<Simplex>& u) {
    detail::require_subcomplex(a, k);
    require_coface_closed(k, u);

    std::set<VertexId> uverts;
    for (const auto& s : u)
        for (VertexId v : s.vertices()) uverts.insert(v);
    for (const auto& t : k.simplices())
        for (VertexId v : t.vertices())
            if (uverts.count(v) && !a.contains(t))
                throw PreconditionViolatedError(
                    "simplex " + t.to_string() +
                    " meets the excised set but is not in the subcomplex");

    FiniteComplex k2, a2;
    for (const auto& s : k.simplices())
        if (!u.count(s)) k2.insert_raw(s);
    for (const auto& s : a.simplices())
        if (!u.count(s)) a2.insert_raw(s);
    k2.validate();
    a2.validate();

    SimplicialMap inc = identity_map(k2);
    ExcisionReport report;
    for (int n = 0; n <= k.dim(); ++n) {
        HomologyResult src(k2, a2, n);
        HomologyResult dst(k, a, n);
        GroupHom h = induced_map(inc, k2, a2, k, a, src, dst);
        if (!is_isomorphism(h)) {
            report.passed = false;
            report.failed_dims.push_back(n);
        }
    }
    return report;
}

} // namespace limtop
