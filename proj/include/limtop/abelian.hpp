#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace limtop {

/// Finitely generated abelian group: free rank plus invariant-factor
/// torsion chain d1 | d2 | ... with every di > 1.
struct FgAbGroup {
    int rank = 0;
    std::vector<Int> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }

    bool operator==(const FgAbGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    std::string to_string() const {
        if (trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (rank > 0) {
            os << "Z";
            if (rank > 1) os << "^" << rank;
            first = false;
        }
        for (const auto& d : torsion) {
            if (!first) os << " + ";
            os << "Z/" << d;
            first = false;
        }
        return os.str();
    }
};

inline FgAbGroup free_abelian(int rank) { return FgAbGroup{rank, {}}; }

/// Quotient Z^ngens / column lattice of a relation matrix, with canonical
/// coordinates. Coordinates are indexed by the surviving Smith positions:
/// torsion coordinates first (order di > 1), then free coordinates (order 0).
class PresentedGroup {
public:
    PresentedGroup() = default;

    PresentedGroup(int ngens, const IntegerMatrix& relations) : ngens_(ngens) {
        SmithForm s = smith_normal_form(relations);
        int r = s.rank();
        std::vector<int> torsion_idx, free_idx;
        for (int i = 0; i < r; ++i)
            if (s.invariants[i] > 1) torsion_idx.push_back(i);
        for (int i = r; i < ngens; ++i) free_idx.push_back(i);

        for (int i : torsion_idx) {
            kept_.push_back(i);
            orders_.push_back(s.invariants[i]);
            group_.torsion.push_back(s.invariants[i]);
        }
        for (int i : free_idx) {
            kept_.push_back(i);
            orders_.push_back(0);
        }
        group_.rank = static_cast<int>(free_idx.size());

        to_coords_ = IntegerMatrix(static_cast<int>(kept_.size()), ngens);
        for (std::size_t k = 0; k < kept_.size(); ++k)
            for (int j = 0; j < ngens; ++j) to_coords_.at(static_cast<int>(k), j) = s.u.at(kept_[k], j);
        gen_columns_ = IntegerMatrix(ngens, static_cast<int>(kept_.size()));
        for (std::size_t k = 0; k < kept_.size(); ++k)
            for (int i = 0; i < ngens; ++i)
                gen_columns_.at(i, static_cast<int>(k)) = s.uinv.at(i, kept_[k]);
    }

    int ngens() const { return ngens_; }
    const FgAbGroup& group() const { return group_; }
    int ncoords() const { return static_cast<int>(kept_.size()); }

    /// Per-coordinate order: di > 1 for torsion coordinates, 0 for free ones.
    const std::vector<Int>& orders() const { return orders_; }

    /// Representative of the coordinate-k generator, in ambient Z^ngens.
    std::vector<Int> generator(int k) const { return gen_columns_.col(k); }

    /// Canonical coordinates of the class of x in Z^ngens.
    std::vector<Int> coords_of(const std::vector<Int>& x) const {
        return reduce(to_coords_.apply(x));
    }

    /// Reduce torsion coordinates into [0, di).
    std::vector<Int> reduce(std::vector<Int> z) const {
        for (std::size_t k = 0; k < orders_.size(); ++k)
            if (orders_[k] != 0) {
                z[k] %= orders_[k];
                if (z[k] < 0) z[k] += orders_[k];
            }
        return z;
    }

    bool is_zero_class(const std::vector<Int>& coords) const {
        auto z = reduce(coords);
        for (const auto& c : z)
            if (c != 0) return false;
        return true;
    }

private:
    int ngens_ = 0;
    FgAbGroup group_;
    std::vector<int> kept_;
    std::vector<Int> orders_;
    IntegerMatrix to_coords_;
    IntegerMatrix gen_columns_;
};

/// Diagonal relation matrix of the torsion coordinates (columns only for
/// coordinates of finite order).
inline IntegerMatrix torsion_relations(const std::vector<Int>& orders) {
    int k = static_cast<int>(orders.size());
    int t = 0;
    for (const auto& d : orders)
        if (d != 0) ++t;
    IntegerMatrix out(k, t);
    int c = 0;
    for (int i = 0; i < k; ++i)
        if (orders[i] != 0) out.at(i, c++) = orders[i];
    return out;
}

/// Homomorphism between groups in canonical coordinates: column j of matrix
/// is the image of the source's j-th coordinate generator.
struct GroupHom {
    FgAbGroup source, target;
    std::vector<Int> source_orders, target_orders;
    IntegerMatrix matrix;

    std::vector<Int> apply(const std::vector<Int>& coords) const {
        return matrix.apply(coords);
    }
};

inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
    return GroupHom{f.source, g.target, f.source_orders, g.target_orders,
                    g.matrix * f.matrix};
}

/// Surjectivity: the images together with the target torsion relations must
/// generate all of Z^k, i.e. the stacked matrix has all invariants 1.
inline bool is_surjective(const GroupHom& h) {
    int k = static_cast<int>(h.target_orders.size());
    if (k == 0) return true;
    IntegerMatrix stacked = h.matrix.hcat(torsion_relations(h.target_orders));
    SmithForm s = smith_normal_form(stacked);
    if (s.rank() < k) return false;
    for (const auto& d : s.invariants)
        if (d != 1) return false;
    return true;
}

/// Generators of the kernel, as source-coordinate columns: project the
/// kernel lattice of [matrix | target torsion] onto the matrix block.
inline IntegerMatrix kernel_generators(const GroupHom& h) {
    int ka = h.matrix.cols();
    IntegerMatrix stacked = h.matrix.hcat(torsion_relations(h.target_orders));
    SmithForm s = smith_normal_form(stacked);
    IntegerMatrix full = kernel_basis(s);
    IntegerMatrix out(ka, full.cols());
    for (int j = 0; j < full.cols(); ++j)
        for (int i = 0; i < ka; ++i) out.at(i, j) = full.at(i, j);
    // Source torsion also lands in the kernel lattice of classes.
    IntegerMatrix st = torsion_relations(h.source_orders);
    return out.hcat(st);
}

/// Does x lie in the subgroup generated by the columns of gens (inside the
/// group whose coordinate orders are given)?
inline bool subgroup_contains_vector(const std::vector<Int>& orders,
                                     const IntegerMatrix& gens,
                                     const std::vector<Int>& x) {
    IntegerMatrix sys = gens.hcat(torsion_relations(orders));
    return solve_integer(sys, x).has_value();
}

inline bool subgroup_contains(const std::vector<Int>& orders,
                              const IntegerMatrix& haystack,
                              const IntegerMatrix& needles) {
    IntegerMatrix sys = haystack.hcat(torsion_relations(orders));
    SmithForm s = smith_normal_form(sys);
    for (int j = 0; j < needles.cols(); ++j)
        if (!solve_integer(s, needles.col(j)).has_value()) return false;
    return true;
}

inline bool subgroups_equal(const std::vector<Int>& orders,
                            const IntegerMatrix& a, const IntegerMatrix& b) {
    return subgroup_contains(orders, a, b) && subgroup_contains(orders, b, a);
}

inline bool is_injective(const GroupHom& h) {
    IntegerMatrix ker = kernel_generators(h);
    IntegerMatrix none(static_cast<int>(h.source_orders.size()), 0);
    // Injective iff every kernel generator is the zero class.
    return subgroup_contains(h.source_orders, none, ker);
}

/// Finitely generated abelian groups are Hopfian, so a surjection between
/// abstractly isomorphic groups is an isomorphism.
inline bool is_isomorphism(const GroupHom& h) {
    return h.source == h.target && is_surjective(h);
}

} // namespace limtop
