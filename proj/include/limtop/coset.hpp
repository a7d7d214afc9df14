#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"

namespace limtop {

inline constexpr int kDefaultCosetBudget = 10000;

/// Action of the generators on right cosets. Slot 2g is generator g,
/// slot 2g+1 its inverse. -1 marks an undefined image (partial tables
/// only; a completed enumeration is total).
struct CosetTable {
    int ngens = 0;
    std::vector<std::vector<int>> rows;

    static int slot(int letter) {
        int g = letter > 0 ? letter - 1 : -letter - 1;
        return 2 * g + (letter > 0 ? 0 : 1);
    }

    int ncosets() const { return static_cast<int>(rows.size()); }

    int act(int c, int letter) const { return rows[c][slot(letter)]; }

    int act_word(int c, const Word& w) const {
        for (int l : w) {
            c = act(c, l);
            if (c < 0) return -1;
        }
        return c;
    }

    bool complete() const {
        for (const auto& r : rows)
            for (int e : r)
                if (e < 0) return false;
        return true;
    }
};

struct ToddCoxeterResult {
    enum class Status { Completed, BudgetExceeded };
    Status status = Status::BudgetExceeded;
    CosetTable table;
    int index = -1;   // number of cosets when completed
    int defined = 0;  // cosets ever defined, the budget currency

    bool completed() const { return status == Status::Completed; }
};

namespace detail {

struct BudgetBlown {};

/// Coset enumeration working state: raw table plus a union-find of
/// coincided cosets. Live rows stay mutually consistent; dead rows keep
/// their entries until the coincidence queue migrates them.
class TcState {
public:
    TcState(int ngens, int budget) : ngens_(ngens), budget_(budget) {
        new_coset();
    }

    int rep(int c) {
        while (p_[c] != c) {
            p_[c] = p_[p_[c]];
            c = p_[c];
        }
        return c;
    }

    bool alive(int c) { return rep(c) == c; }
    int raw_size() const { return static_cast<int>(tab_.size()); }
    int defined_total() const { return defined_; }
    int get(int c, int letter) const { return tab_[c][CosetTable::slot(letter)]; }

    int define(int c, int letter) {
        if (defined_ >= budget_) throw BudgetBlown{};
        int n = new_coset();
        tab_[c][CosetTable::slot(letter)] = n;
        tab_[n][CosetTable::slot(-letter)] = c;
        return n;
    }

    void scan_and_fill(int c, const Word& w) {
        int n = static_cast<int>(w.size());
        int f = rep(c), b = rep(c);
        int i = 0, j = n - 1;
        while (true) {
            while (i <= j && get(f, w[i]) >= 0) f = rep(get(f, w[i])), ++i;
            if (i > j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j >= i && get(b, -w[j]) >= 0) b = rep(get(b, -w[j])), --j;
            if (j < i) {
                if (f != b) coincidence(f, b);
                return;
            }
            if (j == i) {
                // both slots are open: a deduction closes the gap
                tab_[f][CosetTable::slot(w[i])] = b;
                tab_[b][CosetTable::slot(-w[i])] = f;
                return;
            }
            f = define(f, w[i]);
            ++i;
        }
    }

    void fill_letters(int c) {
        for (int g = 1; g <= ngens_; ++g)
            for (int l : {g, -g}) {
                if (!alive(c)) return;
                if (get(c, l) < 0) define(c, l);
            }
    }

    CosetTable compact() {
        std::vector<int> id(tab_.size(), -1);
        int next = 0;
        for (int c = 0; c < raw_size(); ++c)
            if (alive(c)) id[c] = next++;
        CosetTable t;
        t.ngens = ngens_;
        t.rows.assign(next, std::vector<int>(2 * ngens_, -1));
        for (int c = 0; c < raw_size(); ++c) {
            if (id[c] < 0) continue;
            for (int s = 0; s < 2 * ngens_; ++s)
                if (tab_[c][s] >= 0) t.rows[id[c]][s] = id[rep(tab_[c][s])];
        }
        return t;
    }

private:
    int new_coset() {
        int n = static_cast<int>(tab_.size());
        tab_.emplace_back(2 * ngens_, -1);
        p_.push_back(n);
        ++defined_;
        return n;
    }

    void merge(int a, int b, std::vector<int>& dead) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[b] = a;
        dead.push_back(b);
    }

    void coincidence(int a, int b) {
        std::vector<int> dead;
        merge(a, b, dead);
        while (!dead.empty()) {
            int g = dead.back();
            dead.pop_back();
            for (int s = 0; s < 2 * ngens_; ++s) {
                int d = tab_[g][s];
                if (d < 0) continue;
                int inv = s ^ 1;
                tab_[d][inv] = -1; // unhook the raw backpointer
                int mu = rep(g), nu = rep(d);
                if (tab_[mu][s] >= 0)
                    merge(nu, rep(tab_[mu][s]), dead);
                else if (tab_[nu][inv] >= 0)
                    merge(mu, rep(tab_[nu][inv]), dead);
                else {
                    tab_[mu][s] = nu;
                    tab_[nu][inv] = mu;
                }
            }
        }
    }

    int ngens_;
    int budget_;
    int defined_ = 0;
    std::vector<std::vector<int>> tab_;
    std::vector<int> p_;
};

} // namespace detail

/// Enumerate the cosets of the subgroup generated by the given words.
/// Relator-driven filling with immediate coincidence handling; cosets are
/// numbered in definition order, so runs are deterministic. The budget
/// bounds the total number of cosets ever defined; blowing it is a
/// reported status, not an error.
inline ToddCoxeterResult todd_coxeter(const Presentation& p,
                                      const std::vector<Word>& subgroup,
                                      int coset_budget) {
    detail::TcState st(p.ngens, coset_budget);
    std::vector<Word> rels;
    for (const auto& r : p.relators)
        if (Word w = free_reduce(r); !w.empty()) rels.push_back(std::move(w));

    ToddCoxeterResult out;
    try {
        for (const auto& w : subgroup)
            if (Word v = free_reduce(w); !v.empty()) st.scan_and_fill(0, v);
        for (int c = 0; c < st.raw_size(); ++c) {
            if (!st.alive(c)) continue;
            for (const auto& r : rels) {
                st.scan_and_fill(c, r);
                if (!st.alive(c)) break;
            }
            if (st.alive(c)) st.fill_letters(c);
        }
        out.status = ToddCoxeterResult::Status::Completed;
        out.table = st.compact();
        out.index = out.table.ncosets();
    } catch (const detail::BudgetBlown&) {
        out.status = ToddCoxeterResult::Status::BudgetExceeded;
        out.table = st.compact();
        out.index = -1;
    }
    out.defined = st.defined_total();
    return out;
}

/// Index of a finitely generated subgroup, when enumeration completes.
inline ToddCoxeterResult subgroup_index(const Presentation& p,
                                        const std::vector<Word>& subgroup,
                                        int coset_budget) {
    return todd_coxeter(p, subgroup, coset_budget);
}

} // namespace limtop
