#include "fanoq/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fanoq {

DecoratedQuiver::DecoratedQuiver(std::vector<Label> labels, IntMatrix exchange)
    : labels_(std::move(labels)), exchange_(std::move(exchange)) {
    const auto n = static_cast<Eigen::Index>(labels_.size());
    if (exchange_.rows() != n || exchange_.cols() != n)
        throw std::invalid_argument("exchange matrix size does not match labels");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (exchange_(i, i) != 0) throw std::invalid_argument("quiver has a self-loop");
        for (Eigen::Index j = 0; j < i; ++j)
            if (exchange_(i, j) != -exchange_(j, i))
                throw std::invalid_argument("exchange matrix is not antisymmetric");
    }
}

std::vector<int> DecoratedQuiver::out_of(int v) const {
    std::vector<int> result;
    for (int y = 0; y < size(); ++y)
        if (exchange_(v, y) > 0) result.push_back(y);
    return result;
}

std::vector<int> DecoratedQuiver::into(int v) const {
    std::vector<int> result;
    for (int y = 0; y < size(); ++y)
        if (exchange_(y, v) > 0) result.push_back(y);
    return result;
}

bool operator==(const DecoratedQuiver& a, const DecoratedQuiver& b) {
    return a.labels() == b.labels() && a.exchange() == b.exchange();
}

bool BalancingReport::all_balanced() const {
    return std::all_of(vertices.begin(), vertices.end(),
                       [](const Vertex& v) { return v.balanced; });
}

BalancingReport balancing(const DecoratedQuiver& quiver) {
    BalancingReport report;
    report.vertices.resize(quiver.size());
    for (int v = 0; v < quiver.size(); ++v) {
        Int defect = 0, out_sum = 0;
        for (int y = 0; y < quiver.size(); ++y) {
            Int arr = quiver.arrows(v, y);
            defect += quiver.label(y).w * arr;
            if (arr > 0) out_sum += quiver.label(y).w * arr;
        }
        report.vertices[v] = {defect == 0, defect, out_sum};
    }
    return report;
}

bool is_balanced_at(const DecoratedQuiver& quiver, int vertex) {
    Int defect = 0;
    for (int y = 0; y < quiver.size(); ++y) defect += quiver.label(y).w * quiver.arrows(vertex, y);
    return defect == 0;
}

Int diameter(const DecoratedQuiver& quiver, int vertex) {
    if (!is_balanced_at(quiver, vertex))
        throw std::invalid_argument("diameter undefined: vertex is not balanced");
    Int out_sum = 0;
    for (int y = 0; y < quiver.size(); ++y) {
        Int arr = quiver.arrows(vertex, y);
        if (arr > 0) out_sum += quiver.label(y).w * arr;
    }
    return out_sum;
}

int balanced_vertex_count(const DecoratedQuiver& quiver) {
    int count = 0;
    for (int v = 0; v < quiver.size(); ++v)
        if (is_balanced_at(quiver, v)) ++count;
    return count;
}

DecoratedQuiver mutate(const DecoratedQuiver& quiver, int vertex, Int k) {
    const Int d = diameter(quiver, vertex);
    const int n = quiver.size();
    IntMatrix next = quiver.exchange();
    for (int t = 0; t < n; ++t) {
        if (t == vertex) continue;
        for (int h = 0; h < n; ++h) {
            if (h == vertex || h == t) continue;
            Int through = std::max<Int>(quiver.arrows(t, vertex), 0) *
                              std::max<Int>(quiver.arrows(vertex, h), 0) -
                          std::max<Int>(quiver.arrows(h, vertex), 0) *
                              std::max<Int>(quiver.arrows(vertex, t), 0);
            next(t, h) += k * through;
        }
    }
    next.row(vertex) = -quiver.exchange().row(vertex);
    next.col(vertex) = -quiver.exchange().col(vertex);

    std::vector<Label> labels = quiver.labels();
    labels[vertex] = {k * d - labels[vertex].w, d - labels[vertex].l};
    return DecoratedQuiver(std::move(labels), std::move(next));
}

bool mutation_group_check(const DecoratedQuiver& quiver, int vertex, Int s, Int t) {
    DecoratedQuiver lhs = mutate(mutate(quiver, vertex, s), vertex, t);
    DecoratedQuiver rhs = mutate(mutate(quiver, vertex, s - t), vertex, 0);
    return lhs == rhs;
}

Int gcd_arrows(const DecoratedQuiver& quiver) {
    Int g = 0;
    for (int i = 0; i < quiver.size(); ++i)
        for (int j = 0; j < quiver.size(); ++j) g = std::gcd(g, quiver.arrows(i, j));
    if (g == 0) throw std::invalid_argument("gcd undefined: quiver has no arrows");
    return g;
}

Int gcd_weights(const DecoratedQuiver& quiver) {
    Int g = 0;
    for (const Label& label : quiver.labels()) g = std::gcd(g, label.w);
    if (g == 0) throw std::invalid_argument("gcd undefined: all weights are zero");
    return g;
}

DecoratedQuiver block(const DecoratedQuiver& quiver) {
    const int n = quiver.size();
    // Vertices merge iff their local indices agree and their exchange
    // columns coincide (which forces zero arrows between them).
    std::vector<int> class_of(n, -1);
    std::vector<int> reps;
    for (int v = 0; v < n; ++v) {
        for (std::size_t c = 0; c < reps.size(); ++c) {
            int r = reps[c];
            if (quiver.label(v).l == quiver.label(r).l &&
                quiver.exchange().col(v) == quiver.exchange().col(r)) {
                class_of[v] = static_cast<int>(c);
                break;
            }
        }
        if (class_of[v] < 0) {
            class_of[v] = static_cast<int>(reps.size());
            reps.push_back(v);
        }
    }

    const int m = static_cast<int>(reps.size());
    std::vector<Label> labels(m);
    for (int c = 0; c < m; ++c) labels[c] = {0, quiver.label(reps[c]).l};
    for (int v = 0; v < n; ++v) labels[class_of[v]].w += quiver.label(v).w;

    IntMatrix exchange(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) exchange(i, j) = quiver.arrows(reps[i], reps[j]);
    return DecoratedQuiver(std::move(labels), std::move(exchange));
}

bool is_block(const DecoratedQuiver& quiver) { return block(quiver).size() == quiver.size(); }

DecoratedQuiver split_vertex(const DecoratedQuiver& quiver, int vertex, Int k) {
    const Label label = quiver.label(vertex);
    if (label.l < 1) throw std::invalid_argument("split needs a positive local index");
    Int tau = label.w / label.l;
    Int rho = label.w % label.l;
    if (k < 1 || k > tau) throw std::invalid_argument("split count out of range");

    const int n = quiver.size();
    std::vector<Label> labels = quiver.labels();
    labels[vertex] = {k * label.l, label.l};
    labels.push_back({(tau - k) * label.l + rho, label.l});

    IntMatrix exchange(n + 1, n + 1);
    exchange.setZero();
    exchange.topLeftCorner(n, n) = quiver.exchange();
    for (int x = 0; x < n; ++x) {
        exchange(x, n) = quiver.arrows(x, vertex);
        exchange(n, x) = quiver.arrows(vertex, x);
    }
    exchange(vertex, n) = 0;
    exchange(n, vertex) = 0;
    return DecoratedQuiver(std::move(labels), std::move(exchange));
}

IntMatrix balanced_weight_space(const DecoratedQuiver& quiver) {
    return integer_kernel(quiver.exchange());
}

namespace {

bool extend_isomorphism(const DecoratedQuiver& a, const DecoratedQuiver& b, std::vector<int>& map,
                        std::vector<bool>& used, int v) {
    const int n = a.size();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || a.label(v) != b.label(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = a.arrows(v, u) == b.arrows(w, map[u]);
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_isomorphism(a, b, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool quivers_isomorphic(const DecoratedQuiver& a, const DecoratedQuiver& b) {
    if (a.size() != b.size()) return false;
    auto key = [](const DecoratedQuiver& q) {
        std::vector<std::pair<Int, Int>> ls;
        for (const Label& l : q.labels()) ls.emplace_back(l.w, l.l);
        std::sort(ls.begin(), ls.end());
        return ls;
    };
    if (key(a) != key(b)) return false;
    std::vector<int> map(a.size(), -1);
    std::vector<bool> used(a.size(), false);
    return extend_isomorphism(a, b, map, used, 0);
}

DecoratedQuiver opposite(const DecoratedQuiver& quiver) {
    return DecoratedQuiver(quiver.labels(), (-quiver.exchange()).eval());
}

}  // namespace fanoq
