#pragma once

#include "quadstar/polyring.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quadstar {

/// Starlike tree T_{n_1,...,n_k}: n_i pendant paths on i vertices hanging
/// off one center vertex. Stored canonically (no trailing zero counts).
class StarlikeSpec {
public:
    StarlikeSpec() = default;
    explicit StarlikeSpec(std::vector<unsigned> leg_counts);

    /// Parses "1,1,0,0,3". Throws InvalidParams on malformed input.
    static StarlikeSpec parse(std::string_view text);

    const std::vector<unsigned>& leg_counts() const noexcept { return legs_; }
    /// n_i for leg length i >= 1, zero past the longest leg.
    unsigned count(std::size_t length) const noexcept;
    std::size_t longest_leg() const noexcept { return legs_.size(); }
    /// 1 + sum i * n_i
    std::size_t vertex_count() const noexcept;
    /// d_T(u) = sum n_i
    unsigned center_degree() const noexcept;

    std::string to_string() const;

    friend auto operator<=>(const StarlikeSpec&, const StarlikeSpec&) = default;

private:
    std::vector<unsigned> legs_;
};

/// Simple undirected graph on vertices 0..n-1 with a sorted edge list.
class GraphAdj {
public:
    GraphAdj(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    const std::vector<std::vector<std::size_t>>& adjacency() const noexcept { return adj_; }

    /// One "u v" line per edge.
    std::string edge_list() const;

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

/// f_{P_n}: f_{P_0} = 1, f_{P_1} = x, f_{P_n} = x f_{P_{n-1}} - f_{P_{n-2}}.
IntPoly path_charpoly(std::size_t n);

/// f_{C_n} = f_{P_n} - f_{P_{n-2}} - 2, n >= 3.
IntPoly cycle_charpoly(std::size_t n);

/// x prod f_{P_i}^{n_i} - sum_i n_i f_{P_{i-1}} f_{P_i}^{n_i - 1} prod_{j != i} f_{P_j}^{n_j}
IntPoly starlike_charpoly(const StarlikeSpec& spec);

/// Center is vertex 0; legs follow in spec order, each numbered outward.
GraphAdj build_starlike(const StarlikeSpec& spec);

GraphAdj path_graph(std::size_t n);
GraphAdj cycle_graph(std::size_t n);

enum class SmithKind { Wn, S5, E7, E8, E9, Cn };

SmithKind parse_smith_kind(std::string_view name);
std::string_view to_string(SmithKind kind);

/// The connected graphs of spectral radius 2. `n` is read only for Wn (n >= 6)
/// and Cn (n >= 3). E_k and S_5 have k and 5 vertices respectively.
GraphAdj smith_graph(SmithKind kind, std::size_t n = 0);

/// det(xI - A) by Faddeev-LeVerrier over Z.
IntPoly charpoly_matrix(const GraphAdj& g);

/// Eccentricity maximum by double breadth-first search; exact on trees.
std::size_t tree_diameter(const GraphAdj& g);

}  // namespace quadstar
