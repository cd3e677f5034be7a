#pragma once

#include <vector>

#include "fanoq/lattice.hpp"

namespace fanoq {

struct Label {
    Int w = 0;
    Int l = 0;
};

inline bool operator==(const Label& a, const Label& b) { return a.w == b.w && a.l == b.l; }
inline bool operator!=(const Label& a, const Label& b) { return !(a == b); }

// Quiver with no self-loops or 2-cycles, each vertex labelled by (w, l).
// The signed arrow counts form an antisymmetric exchange matrix.
class DecoratedQuiver {
public:
    DecoratedQuiver(std::vector<Label> labels, IntMatrix exchange);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& label(int v) const { return labels_[v]; }
    const IntMatrix& exchange() const { return exchange_; }
    Int arrows(int from, int to) const { return exchange_(from, to); }

    std::vector<int> out_of(int v) const;
    std::vector<int> into(int v) const;

private:
    std::vector<Label> labels_;
    IntMatrix exchange_;
};

bool operator==(const DecoratedQuiver& a, const DecoratedQuiver& b);
inline bool operator!=(const DecoratedQuiver& a, const DecoratedQuiver& b) { return !(a == b); }

struct BalancingReport {
    struct Vertex {
        bool balanced = false;
        Int defect = 0;    // S(v) = sum_y w_y * arr(v, y)
        Int diameter = 0;  // D(v), meaningful when balanced
    };
    std::vector<Vertex> vertices;

    bool all_balanced() const;
};

BalancingReport balancing(const DecoratedQuiver& quiver);

bool is_balanced_at(const DecoratedQuiver& quiver, int vertex);
Int diameter(const DecoratedQuiver& quiver, int vertex);
int balanced_vertex_count(const DecoratedQuiver& quiver);

// Generalized mutation at a balanced vertex: reverse arrows at m, add k
// arrows t -> h per path t -> m -> h, cancel 2-cycles, and relabel m with
// (k*D(m) - w, D(m) - l). k = 1 is classical quiver mutation.
DecoratedQuiver mutate(const DecoratedQuiver& quiver, int vertex, Int k = 1);

// Exact check of mut^t(mut^s(Q, m), m) == mut^0(mut^{s-t}(Q, m), m).
bool mutation_group_check(const DecoratedQuiver& quiver, int vertex, Int s, Int t);

Int gcd_arrows(const DecoratedQuiver& quiver);
Int gcd_weights(const DecoratedQuiver& quiver);

// Quotient merging vertices with equal local index and identical exchange
// columns; merged weights add. Idempotent.
DecoratedQuiver block(const DecoratedQuiver& quiver);
bool is_block(const DecoratedQuiver& quiver);

// Splits vertex v with label (w, l), w = tau*l + rho, into labels (k*l, l)
// and ((tau-k)*l + rho, l) that inherit v's arrows and do not interact.
DecoratedQuiver split_vertex(const DecoratedQuiver& quiver, int vertex, Int k);

// Integer basis of the vertex labellings under which the quiver balances.
IntMatrix balanced_weight_space(const DecoratedQuiver& quiver);

bool quivers_isomorphic(const DecoratedQuiver& a, const DecoratedQuiver& b);

DecoratedQuiver opposite(const DecoratedQuiver& quiver);

}  // namespace fanoq
