#include "quadstar/graphs.hpp"

#include "quadstar/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace quadstar {

StarlikeSpec::StarlikeSpec(std::vector<unsigned> leg_counts) : legs_(std::move(leg_counts)) {
    while (!legs_.empty() && legs_.back() == 0) legs_.pop_back();
}

StarlikeSpec StarlikeSpec::parse(std::string_view text) {
    std::vector<unsigned> legs;
    if (text.empty()) throw InvalidParams("empty starlike spec");
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw InvalidParams("malformed leg count '" + std::string(field) + "' in spec '" +
                                std::string(text) + "'");
        legs.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return StarlikeSpec(std::move(legs));
}

unsigned StarlikeSpec::count(std::size_t length) const noexcept {
    return length >= 1 && length <= legs_.size() ? legs_[length - 1] : 0;
}

std::size_t StarlikeSpec::vertex_count() const noexcept {
    std::size_t n = 1;
    for (std::size_t i = 0; i < legs_.size(); ++i) n += (i + 1) * legs_[i];
    return n;
}

unsigned StarlikeSpec::center_degree() const noexcept {
    return std::accumulate(legs_.begin(), legs_.end(), 0U);
}

std::string StarlikeSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < legs_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(legs_[i]);
    }
    return out.empty() ? "0" : out;
}

GraphAdj::GraphAdj(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), adj_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("parallel edges are not allowed");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

std::string GraphAdj::edge_list() const {
    std::string out;
    for (auto [u, v] : edges_) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

IntPoly path_charpoly(std::size_t n) {
    IntPoly prev{1};
    if (n == 0) return prev;
    IntPoly cur = IntPoly::x();
    for (std::size_t k = 2; k <= n; ++k) {
        IntPoly next = IntPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly cycle_charpoly(std::size_t n) {
    if (n < 3) throw InvalidParams("cycle needs at least 3 vertices");
    return path_charpoly(n) - path_charpoly(n - 2) - IntPoly{2};
}

IntPoly starlike_charpoly(const StarlikeSpec& spec) {
    const std::size_t k = spec.longest_leg();
    std::vector<IntPoly> fp;
    fp.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i) fp.push_back(path_charpoly(i));

    // powers[i] = f_{P_i}^{n_i}
    std::vector<IntPoly> powers(k + 1, IntPoly{1});
    for (std::size_t i = 1; i <= k; ++i) powers[i] = pow(fp[i], spec.count(i));

    IntPoly all{1};
    for (std::size_t i = 1; i <= k; ++i) all *= powers[i];
    IntPoly result = IntPoly::x() * all;

    for (std::size_t i = 1; i <= k; ++i) {
        const unsigned ni = spec.count(i);
        if (ni == 0) continue;
        IntPoly term = fp[i - 1] * pow(fp[i], ni - 1);
        for (std::size_t j = 1; j <= k; ++j)
            if (j != i) term *= powers[j];
        result -= term * mpz_class(ni);
    }
    return result;
}

GraphAdj build_starlike(const StarlikeSpec& spec) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t next = 1;
    for (std::size_t len = 1; len <= spec.longest_leg(); ++len) {
        for (unsigned c = 0; c < spec.count(len); ++c) {
            std::size_t prev = 0;
            for (std::size_t step = 0; step < len; ++step) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
        }
    }
    return GraphAdj(next, std::move(edges));
}

GraphAdj path_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
    return GraphAdj(n, std::move(edges));
}

GraphAdj cycle_graph(std::size_t n) {
    if (n < 3) throw InvalidParams("cycle needs at least 3 vertices");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return GraphAdj(n, std::move(edges));
}

SmithKind parse_smith_kind(std::string_view name) {
    if (name == "Wn" || name == "W") return SmithKind::Wn;
    if (name == "S5") return SmithKind::S5;
    if (name == "E7") return SmithKind::E7;
    if (name == "E8") return SmithKind::E8;
    if (name == "E9") return SmithKind::E9;
    if (name == "Cn" || name == "C") return SmithKind::Cn;
    throw InvalidParams("unknown Smith graph kind '" + std::string(name) + "'");
}

std::string_view to_string(SmithKind kind) {
    switch (kind) {
        case SmithKind::Wn: return "Wn";
        case SmithKind::S5: return "S5";
        case SmithKind::E7: return "E7";
        case SmithKind::E8: return "E8";
        case SmithKind::E9: return "E9";
        case SmithKind::Cn: return "Cn";
    }
    return "?";
}

GraphAdj smith_graph(SmithKind kind, std::size_t n) {
    switch (kind) {
        case SmithKind::Cn:
            if (n < 3) throw InvalidParams("C_n requires n >= 3");
            return cycle_graph(n);
        case SmithKind::Wn: {
            if (n < 6) throw InvalidParams("W_n requires n >= 6");
            // Spine 0..n-5, two pendant vertices on each spine end.
            const std::size_t spine = n - 4;
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            for (std::size_t i = 1; i < spine; ++i) edges.emplace_back(i - 1, i);
            edges.emplace_back(0, spine);
            edges.emplace_back(0, spine + 1);
            edges.emplace_back(spine - 1, spine + 2);
            edges.emplace_back(spine - 1, spine + 3);
            return GraphAdj(n, std::move(edges));
        }
        case SmithKind::S5: return build_starlike(StarlikeSpec({4}));
        case SmithKind::E7: return build_starlike(StarlikeSpec({0, 3}));
        case SmithKind::E8: return build_starlike(StarlikeSpec({1, 0, 2}));
        case SmithKind::E9: return build_starlike(StarlikeSpec({1, 1, 0, 0, 1}));
    }
    throw InvalidParams("unknown Smith graph kind");
}

IntPoly charpoly_matrix(const GraphAdj& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return IntPoly{1};
    using Matrix = std::vector<std::vector<mpz_class>>;

    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    std::vector<mpz_class> c(n + 1);
    c[n] = 1;
    Matrix m(n, std::vector<mpz_class>(n));
    Matrix am(n, std::vector<mpz_class>(n));
    const auto& adj = g.adjacency();

    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
        // am = A * m, exploiting the 0/1 adjacency.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) am[i][j] = 0;
            for (std::size_t v : adj[i])
                for (std::size_t j = 0; j < n; ++j) am[i][j] += m[v][j];
        }
        mpz_class trace = 0;
        for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
        mpz_class kk = static_cast<unsigned long>(k);
        mpz_divexact(c[n - k].get_mpz_t(), trace.get_mpz_t(), kk.get_mpz_t());
        c[n - k] = -c[n - k];
        std::swap(m, am);
    }
    return IntPoly(std::move(c));
}

namespace {

std::pair<std::size_t, std::size_t> farthest(const GraphAdj& g, std::size_t start) {
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.vertex_count(), unseen);
    std::deque<std::size_t> queue{start};
    dist[start] = 0;
    std::size_t best = start;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        if (dist[u] > dist[best]) best = u;
        for (std::size_t v : g.adjacency()[u]) {
            if (dist[v] != unseen) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return {best, dist[best]};
}

}  // namespace

std::size_t tree_diameter(const GraphAdj& g) {
    if (g.vertex_count() == 0) return 0;
    const std::size_t end = farthest(g, 0).first;
    return farthest(g, end).second;
}

}  // namespace quadstar
