#include "frobsing/dual_graph.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include <json.hpp>

#include "frobsing/errors.hpp"

namespace frobsing {

namespace {

using Matrix = std::vector<std::vector<__int128>>;

std::int64_t narrow128(__int128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw SizingError(std::string(what) + " overflows 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

// Fraction-free (Bareiss) determinant; exact over the integers.
__int128 bareiss_det(Matrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            }
            if (m[pivot][k] == 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Matrix intersection_matrix(const DualGraph& g) {
    const std::size_t n = g.size();
    Matrix m(n, std::vector<__int128>(n, 0));
    for (std::size_t j = 0; j < n; ++j) m[j][j] = -static_cast<__int128>(g.b[j]);
    for (const auto& [u, v] : g.edges) {
        m[u][v] = 1;
        m[v][u] = 1;
    }
    return m;
}

}  // namespace

void DualGraph::validate() const {
    const std::size_t n = size();
    if (n == 0) throw Error("graph has no vertices");
    if (boundary.size() != n) throw Error("boundary mark list length mismatch");
    for (std::int64_t bj : b) {
        if (bj < 1) throw Error("self-intersection weight b must be >= 1");
    }
    for (std::int64_t t : boundary) {
        if (t < 0) throw Error("boundary marks must be nonnegative");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw Error("edge endpoint out of range");
        if (u == v) throw Error("self-loop in dual graph");
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) {
            throw Error("duplicate edge in dual graph (intersections must be simple)");
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    // Connected?
    std::vector<bool> vis(n, false);
    std::vector<std::size_t> stack{0};
    vis[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v]) {
            if (!vis[w]) {
                vis[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) throw Error("dual graph is not connected");

    // Negative definite: leading principal minors alternate, (-1)^k det_k > 0.
    Matrix full = intersection_matrix(*this);
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix sub(k, std::vector<__int128>(k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = full[i][j];
        }
        __int128 det = bareiss_det(std::move(sub));
        bool ok = (k % 2 == 0) ? det > 0 : det < 0;
        if (!ok) throw Error("intersection matrix is not negative definite");
    }
}

const char* lc_class_name(LcClass c) {
    switch (c) {
        case LcClass::KLT: return "KLT";
        case LcClass::PLT: return "PLT";
        case LcClass::LC: return "LC";
        case LcClass::NotLC: return "not-LC";
    }
    return "?";
}

DiscrepancyVector solve_discrepancies(const DualGraph& graph) {
    graph.validate();
    const std::size_t n = graph.size();
    Matrix m = intersection_matrix(graph);
    std::vector<__int128> rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        rhs[j] = static_cast<__int128>(graph.b[j]) - 2 + graph.boundary[j];
    }

    // Bareiss forward elimination on the augmented system.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            }
            if (m[pivot][k] == 0) throw Error("singular intersection matrix");
            std::swap(m[k], m[pivot]);
            std::swap(rhs[k], rhs[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            rhs[i] = (rhs[i] * m[k][k] - m[i][k] * rhs[k]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if (m[n - 1][n - 1] == 0) throw Error("singular intersection matrix");

    std::vector<Rational> a(n, Rational(0));
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(narrow128(rhs[ii], "solver entry"));
        for (std::size_t j = ii + 1; j < n; ++j) {
            acc = acc - Rational(narrow128(m[ii][j], "solver entry")) * a[j];
        }
        a[ii] = acc / Rational(narrow128(m[ii][ii], "solver pivot"));
    }

    // Exactness: the residual must vanish identically.
    Matrix check = intersection_matrix(graph);
    for (std::size_t j = 0; j < n; ++j) {
        Rational dot(0);
        for (std::size_t i = 0; i < n; ++i) {
            dot = dot + Rational(narrow128(check[j][i], "residual")) * a[i];
        }
        Rational want(static_cast<std::int64_t>(graph.b[j] - 2 + graph.boundary[j]));
        if (dot != want) throw Error("internal: nonzero residual in discrepancy solve");
    }

    Rational minimum = a[0];
    for (const Rational& x : a) {
        if (x < minimum) minimum = x;
    }
    LcClass cls;
    const Rational minus_one(-1);
    std::int64_t total_marks = 0;
    for (std::int64_t t : graph.boundary) total_marks += t;
    if (minimum < minus_one) {
        cls = LcClass::NotLC;
    } else if (minimum == minus_one) {
        cls = LcClass::LC;
    } else {
        cls = total_marks == 0 ? LcClass::KLT : LcClass::PLT;
    }
    return {std::move(a), cls};
}

const char* graph_type_name(GraphType t) {
    switch (t) {
        case GraphType::A: return "a";
        case GraphType::B: return "b";
        case GraphType::C: return "c";
        case GraphType::Other: return "other";
    }
    return "?";
}

namespace {

struct Shape {
    std::vector<std::vector<std::size_t>> adj;
    std::vector<std::size_t> deg;
};

Shape shape_of(const DualGraph& g) {
    Shape s;
    s.adj.resize(g.size());
    for (const auto& [u, v] : g.edges) {
        s.adj[u].push_back(v);
        s.adj[v].push_back(u);
    }
    s.deg.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) s.deg[i] = s.adj[i].size();
    return s;
}

// Is the induced subgraph on `keep` a simple path with the given endpoints?
// (`keep` is connected by construction in the caller's use.)
bool induced_is_path(const Shape& s, const std::vector<bool>& keep, std::size_t from,
                     std::size_t to) {
    std::size_t count = 0;
    for (bool k : keep) count += k;
    if (count == 0) return false;
    if (count == 1) return from == to && keep[from];
    if (from == to) return false;
    std::size_t cur = from, prev = from;
    std::size_t steps = 1;
    while (cur != to) {
        std::size_t next = std::numeric_limits<std::size_t>::max();
        std::size_t options = 0;
        for (std::size_t w : s.adj[cur]) {
            if (!keep[w] || w == prev) continue;
            next = w;
            ++options;
        }
        if (options != 1) return false;
        prev = cur;
        cur = next;
        if (++steps > count) return false;
    }
    // Every kept vertex must be on the walk and have induced degree <= 2.
    if (steps != count) return false;
    for (std::size_t v = 0; v < keep.size(); ++v) {
        if (!keep[v]) continue;
        std::size_t d = 0;
        for (std::size_t w : s.adj[v]) d += keep[w];
        if (d > 2) return false;
    }
    return true;
}

}  // namespace

GraphType classify_graph_type(const DualGraph& graph) {
    graph.validate();
    std::int64_t total = 0;
    for (std::int64_t t : graph.boundary) total += t;
    if (total == 0) throw Error("graph type classification needs a boundary mark");

    const std::size_t n = graph.size();
    Shape s = shape_of(graph);

    bool is_path = true;
    std::vector<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        if (s.deg[v] > 2) is_path = false;
        if (s.deg[v] <= 1) leaves.push_back(v);
    }
    if (n == 1) is_path = true;

    if (is_path) {
        if (n == 1) {
            if (total == 1) return GraphType::A;
            if (total == 2) return GraphType::B;
        } else if (leaves.size() == 2) {
            std::size_t e0 = leaves[0], e1 = leaves[1];
            if (total == 1) {
                if (graph.boundary[e0] == 1 || graph.boundary[e1] == 1) return GraphType::A;
            }
            if (total == 2 && graph.boundary[e0] == 1 && graph.boundary[e1] == 1) {
                return GraphType::B;
            }
        }
    }

    // Type (c): one mark, two unmarked (-2) leaves off a common vertex, the
    // rest a chain running from the marked vertex to that fork.
    if (total == 1 && n >= 3) {
        std::size_t marked = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (graph.boundary[v] == 1) marked = v;
        }
        for (std::size_t fork = 0; fork < n; ++fork) {
            std::vector<std::size_t> hang;
            for (std::size_t w : s.adj[fork]) {
                if (s.deg[w] == 1 && graph.b[w] == 2 && graph.boundary[w] == 0) {
                    hang.push_back(w);
                }
            }
            if (hang.size() < 2) continue;
            for (std::size_t i = 0; i < hang.size(); ++i) {
                for (std::size_t j = i + 1; j < hang.size(); ++j) {
                    if (hang[i] == marked || hang[j] == marked) continue;
                    std::vector<bool> keep(n, true);
                    keep[hang[i]] = false;
                    keep[hang[j]] = false;
                    if (induced_is_path(s, keep, marked, fork)) return GraphType::C;
                }
            }
        }
    }
    return GraphType::Other;
}

const char* fclass_name(FClass c) {
    switch (c) {
        case FClass::DivisoriallyFRegular: return "divisorially_f_regular";
        case FClass::FPureNotDivisoriallyFRegular: return "f_pure_not_divisorially_f_regular";
        case FClass::NotFPure: return "not_f_pure";
    }
    return "?";
}

FClass predict_fclass(const DualGraph& graph, std::uint32_t p) {
    switch (classify_graph_type(graph)) {
        case GraphType::A: return FClass::DivisoriallyFRegular;
        case GraphType::B: return FClass::FPureNotDivisoriallyFRegular;
        case GraphType::C:
            return p != 2 ? FClass::FPureNotDivisoriallyFRegular : FClass::NotFPure;
        case GraphType::Other: return FClass::NotFPure;
    }
    return FClass::NotFPure;
}

Rational graded_discrepancy(std::int64_t index, std::int64_t b) {
    if (index < 1) throw Error("graded blowup index must be positive");
    return Rational(-1) - Rational(b, index);
}

DualGraph DualGraph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what(),
                         static_cast<std::size_t>(e.byte));
    }
    DualGraph g;
    if (!j.contains("vertices") || !j["vertices"].is_array()) {
        throw Error("graph JSON needs a 'vertices' array");
    }
    for (const auto& v : j["vertices"]) {
        if (!v.contains("b")) throw Error("graph vertex without 'b'");
        g.b.push_back(v["b"].get<std::int64_t>());
    }
    if (j.contains("edges")) {
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw Error("graph edge must be a pair");
            g.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
    }
    if (j.contains("boundary")) {
        for (const auto& t : j["boundary"]) g.boundary.push_back(t.get<std::int64_t>());
    } else {
        g.boundary.assign(g.b.size(), 0);
    }
    g.validate();
    return g;
}

}  // namespace frobsing
