#pragma once

// Exact arithmetic in the ordered field Q(eps), where eps is a positive
// infinitesimal: 0 < eps < q for every positive rational q.  Elements are
// reduced rational functions p(eps)/q(eps); the order is determined by the
// sign of the lowest-degree nonzero coefficient of the Laurent expansion at
// eps -> 0+.  Q(eps) is not real closed; it is exactly enough ordered-field
// structure for interval combinatorics with infinitesimal and infinite
// elements.

#include <string>
#include <utility>
#include <vector>

#include "limtop/errors.hpp"
#include "limtop/numeric.hpp"

namespace limtop {

/// Dense polynomial in eps over Q.  Coefficient k is the coefficient of
/// eps^k; the vector carries no trailing zeros, so the zero polynomial is
/// the empty vector.
class Poly {
public:
    Poly() = default;
    Poly(int v) : Poly(Rat(v)) {}
    Poly(const Rat& v) {
        if (v != 0) c_.push_back(v);
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly eps() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int low_degree() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<int>(k);
        return -1;
    }

    Rat coeff(int k) const {
        if (k < 0 || k > degree()) return Rat(0);
        return c_[static_cast<std::size_t>(k)];
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
        for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly scaled(const Rat& s) const {
        if (s == 0) return Poly();
        Poly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Renders low degree first, so the dominant part near eps = 0 leads:
    /// "1 - 2*eps + eps^2".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = 0; k <= degree(); ++k) {
            Rat c = coeff(k);
            if (c == 0) continue;
            bool neg = c < 0;
            Rat a = neg ? Rat(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mag = a.str();
            if (k == 0) {
                out += mag;
            } else {
                std::string pw = k == 1 ? "eps" : "eps^" + std::to_string(k);
                out += (a == 1) ? pw : mag + "*" + pw;
            }
        }
        return out;
    }

private:
    std::vector<Rat> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Quotient and remainder of a by b over Q; b must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw PreconditionViolatedError("polynomial division by zero");
    std::vector<Rat> rem(static_cast<std::size_t>(a.degree() + 1));
    for (int k = 0; k <= a.degree(); ++k) rem[static_cast<std::size_t>(k)] = a.coeff(k);
    int db = b.degree();
    Rat lead = b.coeff(db);
    std::vector<Rat> quot;
    int dr = a.degree();
    if (dr >= db) quot.assign(static_cast<std::size_t>(dr - db + 1), Rat(0));
    while (dr >= db) {
        Rat top = rem[static_cast<std::size_t>(dr)];
        if (top != 0) {
            Rat f = top / lead;
            quot[static_cast<std::size_t>(dr - db)] = f;
            for (int k = 0; k <= db; ++k)
                rem[static_cast<std::size_t>(dr - db + k)] -= f * b.coeff(k);
        }
        --dr;
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Monic gcd over Q; gcd(0, 0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(Rat(1) / a.coeff(a.degree()));
}

/// Element of Q(eps) in canonical form: num/den with gcd(num, den) = 1 and
/// the lowest nonzero coefficient of den equal to +1.  That normalization
/// makes den > 0 in the field order, so the sign of the element is the sign
/// of the lowest nonzero coefficient of num.  Canonical forms are unique,
/// hence == is structural.
class FieldElem {
public:
    FieldElem() : num_(), den_(1) {}
    FieldElem(int v) : num_(v), den_(1) {}
    FieldElem(const Rat& v) : num_(v), den_(1) {}
    explicit FieldElem(Poly num) : num_(std::move(num)), den_(1) {}
    FieldElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw PreconditionViolatedError("field element with zero denominator");
        reduce();
    }

    static FieldElem eps() { return FieldElem(Poly::eps()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    /// True for elements of Q itself.
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }

    Rat rational() const {
        if (!is_rational())
            throw PreconditionViolatedError("field element " + to_string() + " is not rational");
        return num_.coeff(0) / den_.coeff(0);
    }

    /// Sign under the order with eps -> 0+: the lowest nonzero coefficient of
    /// num decides (den is positive by canonicality).
    int sign() const {
        int k = num_.low_degree();
        if (k < 0) return 0;
        return num_.coeff(k) < 0 ? -1 : 1;
    }

    /// eps-adic valuation: > 0 for infinitesimals, < 0 for infinite elements,
    /// 0 for elements with a nonzero standard part.  Zero has no valuation.
    int valuation() const {
        if (is_zero())
            throw PreconditionViolatedError("valuation of zero");
        return num_.low_degree() - den_.low_degree();
    }

    bool is_finite() const { return is_zero() || valuation() >= 0; }

    /// Standard part: the value at eps = 0.  Defined for finite elements.
    Rat std_part() const {
        if (!is_finite())
            throw PreconditionViolatedError("standard part of infinite element " + to_string());
        if (den_.coeff(0) == 0) return Rat(0); // valuation > 0 forces num(0) = 0 too
        return num_.coeff(0) / den_.coeff(0);
    }

    FieldElem operator-() const {
        FieldElem r = *this;
        r.num_ = -r.num_;
        return r;
    }

    FieldElem operator+(const FieldElem& o) const {
        return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    FieldElem operator-(const FieldElem& o) const { return *this + (-o); }
    FieldElem operator*(const FieldElem& o) const {
        return FieldElem(num_ * o.num_, den_ * o.den_);
    }
    FieldElem operator/(const FieldElem& o) const {
        if (o.is_zero()) throw PreconditionViolatedError("field division by zero");
        return FieldElem(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    bool operator<(const FieldElem& o) const { return (*this - o).sign() < 0; }
    bool operator>(const FieldElem& o) const { return o < *this; }
    bool operator<=(const FieldElem& o) const { return !(o < *this); }
    bool operator>=(const FieldElem& o) const { return !(*this < o); }

    std::string to_string() const {
        if (den_ == Poly(1)) return num_.to_string();
        std::string n = num_.to_string();
        std::string d = den_.to_string();
        if (num_.low_degree() == num_.degree() && num_.coeff(num_.degree()) > 0) {
            // single positive term needs no wrapping
        } else {
            n = "(" + n + ")";
        }
        if (den_.low_degree() != den_.degree()) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    Poly num_, den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divmod(num_, g).first;
            den_ = poly_divmod(den_, g).first;
        }
        int k = den_.low_degree();
        Rat low = den_.coeff(k);
        num_ = num_.scaled(Rat(1) / low);
        den_ = den_.scaled(Rat(1) / low);
    }
};

inline int field_sign(const FieldElem& a) { return a.sign(); }

/// Total order comparison: -1, 0, +1.
inline int field_compare(const FieldElem& a, const FieldElem& b) {
    return (a - b).sign();
}

inline FieldElem field_abs(const FieldElem& a) { return a.sign() < 0 ? -a : a; }

inline FieldElem field_min(const FieldElem& a, const FieldElem& b) { return a < b ? a : b; }
inline FieldElem field_max(const FieldElem& a, const FieldElem& b) { return a < b ? b : a; }

/// Floor of a rational.
inline Int rat_floor(const Rat& r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r); // positive by cpp_rational invariant
    Int q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

/// The unique integer m with m <= x < m + 1.  Requires x finite: infinite
/// elements have no integer floor.
inline Int field_floor(const FieldElem& x) {
    if (!x.is_finite())
        throw PreconditionViolatedError("floor of infinite element " + x.to_string());
    Int m = rat_floor(x.std_part());
    // x differs from its standard part by an infinitesimal, so m is off by at
    // most one, and only when the standard part is an integer.
    if (x < FieldElem(Rat(m))) m -= 1;
    if (x >= FieldElem(Rat(m + 1))) m += 1;
    return m;
}

} // namespace limtop
