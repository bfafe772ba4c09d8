#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "rmc/errors.hpp"

namespace rmc {

/// A variable occurrence with polarity.
struct Literal {
    int var = 0;
    bool negated = false;

    static Literal pos(int v) { return Literal{v, false}; }
    static Literal neg(int v) { return Literal{v, true}; }

    Literal operator~() const { return Literal{var, !negated}; }

    friend bool operator==(Literal a, Literal b) {
        return a.var == b.var && a.negated == b.negated;
    }
};

/// CNF formula whose clauses have one or two literals. Unit clauses are stored
/// as-is; the solver widens them to (l v l).
class TwoCnf {
  public:
    struct Clause {
        Literal a;
        Literal b;
    };

    int new_variable() { return vars_++; }

    int variable_count() const { return vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }

    void add_unit(Literal l) {
        check(l);
        clauses_.push_back({l, l});
    }

    void add_clause(Literal a, Literal b) {
        check(a);
        check(b);
        clauses_.push_back({a, b});
    }

    /// DIMACS text; variables are numbered 1..V in allocation order.
    void write_dimacs(std::ostream& os) const {
        os << "p cnf " << vars_ << ' ' << clauses_.size() << '\n';
        auto num = [](Literal l) { return (l.negated ? -1 : 1) * (l.var + 1); };
        for (const Clause& c : clauses_) {
            os << num(c.a);
            if (!(c.b == c.a))
                os << ' ' << num(c.b);
            os << " 0\n";
        }
    }

  private:
    void check(Literal l) const {
        if (l.var < 0 || l.var >= vars_)
            throw UsageError("literal references unknown variable");
    }

    int vars_ = 0;
    std::vector<Clause> clauses_;
};

using Assignment = std::vector<bool>;

/// Sequential at-most-one encoding over the given literals. For m >= 2 it
/// allocates m-1 fresh commander variables in f and emits 3m-4 clauses; for
/// m <= 1 the constraint is vacuous and nothing is emitted.
inline void at_most_one(const std::vector<Literal>& lits, TwoCnf& f) {
    const int m = static_cast<int>(lits.size());
    if (m <= 1)
        return;
    std::vector<int> r(m - 1);
    for (int j = 0; j < m - 1; ++j)
        r[j] = f.new_variable();
    f.add_clause(~lits[0], Literal::pos(r[0]));
    for (int j = 1; j <= m - 2; ++j) {
        f.add_clause(~lits[j], Literal::neg(r[j - 1]));
        f.add_clause(~lits[j], Literal::pos(r[j]));
        f.add_clause(Literal::neg(r[j - 1]), Literal::pos(r[j]));
    }
    f.add_clause(~lits[m - 1], Literal::neg(r[m - 2]));
}

namespace detail {

/// Iterative Tarjan SCC over the implication graph of a 2-CNF formula.
/// Node 2v is the positive literal of variable v, node 2v+1 the negative.
class ImplicationGraph {
  public:
    explicit ImplicationGraph(const TwoCnf& f) : n_(2 * f.variable_count()) {
        adj_.resize(n_);
        for (const auto& c : f.clauses()) {
            // (a v b) yields ~a -> b and ~b -> a.
            adj_[node(~c.a)].push_back(node(c.b));
            adj_[node(~c.b)].push_back(node(c.a));
        }
    }

    /// Component ids in reverse topological order (sinks get smaller ids).
    std::vector<int> components() {
        comp_.assign(n_, -1);
        index_.assign(n_, -1);
        low_.assign(n_, 0);
        on_stack_.assign(n_, false);
        int next_index = 0;
        int next_comp = 0;

        struct Frame {
            int node;
            size_t edge;
        };
        std::vector<Frame> call;
        std::vector<int> stack;

        for (int start = 0; start < n_; ++start) {
            if (index_[start] != -1)
                continue;
            call.push_back({start, 0});
            while (!call.empty()) {
                Frame& fr = call.back();
                int u = fr.node;
                if (fr.edge == 0) {
                    index_[u] = low_[u] = next_index++;
                    stack.push_back(u);
                    on_stack_[u] = true;
                }
                bool descended = false;
                while (fr.edge < adj_[u].size()) {
                    int w = adj_[u][fr.edge++];
                    if (index_[w] == -1) {
                        call.push_back({w, 0});
                        descended = true;
                        break;
                    }
                    if (on_stack_[w])
                        low_[u] = std::min(low_[u], index_[w]);
                }
                if (descended)
                    continue;
                if (low_[u] == index_[u]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack_[w] = false;
                        comp_[w] = next_comp;
                    } while (w != u);
                    ++next_comp;
                }
                call.pop_back();
                if (!call.empty())
                    low_[call.back().node] = std::min(low_[call.back().node], low_[u]);
            }
        }
        return comp_;
    }

  private:
    static int node(Literal l) { return 2 * l.var + (l.negated ? 1 : 0); }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> comp_, index_, low_;
    std::vector<bool> on_stack_;
};

} // namespace detail

/// Satisfying assignment via strong connectivity, or nullopt if unsatisfiable.
inline std::optional<Assignment> solve_two_sat(const TwoCnf& f) {
    detail::ImplicationGraph graph(f);
    std::vector<int> comp = graph.components();
    Assignment a(static_cast<size_t>(f.variable_count()));
    for (int v = 0; v < f.variable_count(); ++v) {
        int cp = comp[2 * v];
        int cn = comp[2 * v + 1];
        if (cp == cn)
            return std::nullopt;
        // Smaller component id = closer to a sink = safe to set true.
        a[v] = cp < cn;
    }
    return a;
}

} // namespace rmc
