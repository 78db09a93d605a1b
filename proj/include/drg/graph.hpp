#pragma once

// Explicit graphs and BFS verification of distance-regularity. Everything in
// here is brute force on purpose: it is the reference the closed forms and
// the spectral code are tested against.

#include "drg/derived.hpp"
#include "drg/intersection_array.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace drg {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Graph {
  std::string name;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists, 0-indexed

  int n() const noexcept { return static_cast<int>(adj.size()); }
  int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
  bool adjacent(int x, int y) const {
    const auto& a = adj[static_cast<std::size_t>(x)];
    return std::binary_search(a.begin(), a.end(), y);
  }
};

/// Distances from `source`; -1 for unreachable vertices.
inline std::vector<int> bfs(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.adj[static_cast<std::size_t>(v)])
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

/// Throws GraphError unless the graph is nonempty, loop-free, symmetric,
/// free of repeated edges and connected.
inline void validate(const Graph& g) {
  if (g.n() == 0) throw GraphError("graph has no vertices");
  for (int v = 0; v < g.n(); ++v) {
    const auto& a = g.adj[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < a.size(); ++i) {
      int w = a[i];
      if (w < 0 || w >= g.n()) throw GraphError("vertex " + std::to_string(v) + ": neighbor " + std::to_string(w) + " out of range");
      if (w == v) throw GraphError("loop at vertex " + std::to_string(v));
      if (i > 0 && a[i - 1] >= w) throw GraphError("vertex " + std::to_string(v) + ": neighbors not strictly increasing");
    }
  }
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.adj[static_cast<std::size_t>(v)])
      if (!g.adjacent(w, v)) throw GraphError("asymmetric adjacency: " + std::to_string(v) + " -> " + std::to_string(w));
  auto dist = bfs(g, 0);
  for (int v = 0; v < g.n(); ++v)
    if (dist[static_cast<std::size_t>(v)] < 0) throw GraphError("disconnected: vertex " + std::to_string(v) + " unreachable from 0");
}

/// Builds a graph from an edge list, sorting and deduplicating neighbors.
inline Graph make_graph(std::string name, int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g{std::move(name), std::vector<std::vector<int>>(static_cast<std::size_t>(n))};
  for (auto [x, y] : edges) {
    g.adj[static_cast<std::size_t>(x)].push_back(y);
    g.adj[static_cast<std::size_t>(y)].push_back(x);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  validate(g);
  return g;
}

/// Bit strings of length D, adjacent at Hamming distance 1. D = 1 is K_2.
inline Graph build_cube(int D) {
  if (D < 1 || D > 20) throw std::invalid_argument("build_cube requires 1 <= D <= 20");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < (1 << D); ++v)
    for (int bit = 0; bit < D; ++bit)
      if (!(v & (1 << bit))) edges.emplace_back(v, v | (1 << bit));
  return make_graph(std::to_string(D) + "-cube", 1 << D, edges);
}

/// K_{k+1,k+1} minus a perfect matching: u_i ~ w_j iff i != j.
inline Graph build_crown(int k) {
  if (k < 1) throw std::invalid_argument("build_crown requires k >= 1");
  const int m = k + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) edges.emplace_back(i, m + j);
  return make_graph("crown-" + std::to_string(k), 2 * m, edges);
}

/// Hadamard graph of the Sylvester matrix of order 2^m, H_ij = (-1)^popcount(i & j).
/// Vertices: rows r_i^+ (i), r_i^- (N + i), columns c_j^+ (2N + j), c_j^- (3N + j);
/// r_i^e ~ c_j^d iff H_ij = e*d.
inline Graph build_hadamard(int m) {
  if (m < 2 || m > 10) throw std::invalid_argument("build_hadamard requires 2 <= m <= 10");
  const int N = 1 << m;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      const bool positive = std::popcount(static_cast<unsigned>(i & j)) % 2 == 0;
      for (int e = 0; e < 2; ++e)
        for (int d = 0; d < 2; ++d)
          if (positive == (e == d)) edges.emplace_back(e * N + i, 2 * N + d * N + j);
    }
  return make_graph("hadamard-" + std::to_string(N), 4 * N, edges);
}

/// Top vertex 0, upper pentagon 1..5, lower pentagon 6..10, bottom 11.
inline Graph build_icosahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, un = 1 + (i + 1) % 5;
    const int l = 6 + i, ln = 6 + (i + 1) % 5;
    edges.emplace_back(0, u);
    edges.emplace_back(u, un);
    edges.emplace_back(u, l);
    edges.emplace_back(u, ln);
    edges.emplace_back(l, ln);
    edges.emplace_back(l, 11);
  }
  return make_graph("icosahedron", 12, edges);
}

/// Path on n vertices; n = 3 is the smallest connected non-regular graph.
inline Graph build_path(int n) {
  if (n < 1) throw std::invalid_argument("build_path requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph("path-" + std::to_string(n), n, edges);
}

inline Graph build_complete(int n) {
  if (n < 2) throw std::invalid_argument("build_complete requires n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return make_graph("K" + std::to_string(n), n, edges);
}

/// Proper 2-colouring (0/1 per vertex), or nullopt when the graph has an odd cycle.
inline std::optional<std::vector<int>> two_colouring(const Graph& g) {
  auto dist = bfs(g, 0);
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.adj[static_cast<std::size_t>(v)])
      if (dist[static_cast<std::size_t>(v)] % 2 == dist[static_cast<std::size_t>(w)] % 2) return std::nullopt;
  std::vector<int> colour;
  for (int d : dist) colour.push_back(d % 2);
  return colour;
}

/// Vertices of colour class `side` (the class of vertex 0 is side 0),
/// adjacent when at distance 2 in g. Vertex order is preserved.
inline Graph halved_graph(const Graph& g, int side) {
  if (side != 0 && side != 1) throw std::invalid_argument("halved_graph: side must be 0 or 1");
  auto colour = two_colouring(g);
  if (!colour) throw GraphError("halved_graph: graph is not bipartite");
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  int m = 0;
  for (int v = 0; v < g.n(); ++v)
    if ((*colour)[static_cast<std::size_t>(v)] == side) index[static_cast<std::size_t>(v)] = m++;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.n(); ++v) {
    if (index[static_cast<std::size_t>(v)] < 0) continue;
    for (int w : g.adj[static_cast<std::size_t>(v)])
      for (int x : g.adj[static_cast<std::size_t>(w)])
        if (x > v) edges.emplace_back(index[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(x)]);
  }
  return make_graph(g.name + "-halved-" + std::to_string(side), m, edges);
}

inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) d.push_back(bfs(g, v));
  return d;
}

/// Lexicographically first (a, b, c, d) with a < b, c, d; cycle a-b-c-d-a,
/// b < d, and both diagonals a-c, b-d absent.
inline std::optional<std::array<int, 4>> find_induced_quadrangle(const Graph& g) {
  for (int a = 0; a < g.n(); ++a) {
    const auto& na = g.adj[static_cast<std::size_t>(a)];
    for (int b : na) {
      if (b < a) continue;
      for (int c : g.adj[static_cast<std::size_t>(b)]) {
        if (c <= a || c == b || g.adjacent(a, c)) continue;
        for (int d : g.adj[static_cast<std::size_t>(c)]) {
          if (d <= b || !g.adjacent(a, d) || g.adjacent(b, d)) continue;
          return std::array<int, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

struct DrgCertificate {
  IntersectionArray array;
  std::vector<std::int64_t> layer_sizes;  // |Gamma_i(x)|, identical for every x
  bool bipartite = false;
  bool antipodal2 = false;
  bool has_induced_quadrangle = false;
};

struct NotDrg {
  int x = -1, y = -1, i = -1;  // first disagreeing pair (y at distance i from x), -1 if not pair-specific
  std::string reason;
};

using DrgVerdict = std::variant<DrgCertificate, NotDrg>;

/// BFS from every vertex; c_i, a_i, b_i must be the same for every pair at
/// distance i. Valency 1 (K_2) is reported as NotDrg: arrays need k >= 2.
inline DrgVerdict verify_drg(const Graph& g) {
  validate(g);
  const int n = g.n();
  const int k = g.degree(0);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != k) return NotDrg{0, v, -1, "not regular: deg(0)=" + std::to_string(k) + ", deg(" + std::to_string(v) + ")=" + std::to_string(g.degree(v))};
  if (k < 2) return NotDrg{0, -1, -1, "valency " + std::to_string(k) + " < 2"};

  std::vector<std::int64_t> b, c, layers;
  int D = -1;
  for (int x = 0; x < n; ++x) {
    auto dist = bfs(g, x);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (D < 0) {
      D = ecc;
      b.assign(static_cast<std::size_t>(D + 1), -1);
      c.assign(static_cast<std::size_t>(D + 1), -1);
      layers.assign(static_cast<std::size_t>(D + 1), 0);
      for (int d : dist) ++layers[static_cast<std::size_t>(d)];
    } else if (ecc != D) {
      return NotDrg{x, -1, ecc, "eccentricity " + std::to_string(ecc) + " differs from " + std::to_string(D)};
    }
    for (int y = 0; y < n; ++y) {
      const int i = dist[static_cast<std::size_t>(y)];
      std::int64_t ci = 0, bi = 0;
      for (int z : g.adj[static_cast<std::size_t>(y)]) {
        const int dz = dist[static_cast<std::size_t>(z)];
        if (dz == i - 1) ++ci;
        else if (dz == i + 1) ++bi;
      }
      auto& cs = c[static_cast<std::size_t>(i)];
      auto& bs = b[static_cast<std::size_t>(i)];
      if (cs < 0) {
        cs = ci;
        bs = bi;
      } else if (cs != ci || bs != bi) {
        return NotDrg{x, y, i, "c_" + std::to_string(i) + "/b_" + std::to_string(i) + " = " + std::to_string(ci) + "/" +
                                   std::to_string(bi) + ", expected " + std::to_string(cs) + "/" + std::to_string(bs)};
      }
    }
  }
  std::vector<std::int64_t> bseq(b.begin(), b.begin() + D), cseq(c.begin() + 1, c.end());
  DrgCertificate cert{IntersectionArray(bseq, cseq), layers, false, false, false};
  cert.bipartite = two_colouring(g).has_value();
  cert.antipodal2 = layers.back() == 1;
  cert.has_induced_quadrangle = find_induced_quadrangle(g).has_value();
  return cert;
}

/// p^i_{jh} by direct counting: for one pair (x, y) at each distance i,
/// the number of z with d(x,z) = j and d(y,z) = h. For a DRG every pair
/// gives the same count; `all_pairs` checks that too and throws if not.
inline PTable count_p_table(const Graph& g, bool all_pairs = false) {
  auto dm = distance_matrix(g);
  int D = 0;
  for (const auto& row : dm) D = std::max(D, *std::max_element(row.begin(), row.end()));
  const auto size = static_cast<std::size_t>(D + 1);
  PTable p(size, std::vector<std::vector<Rational>>(size, std::vector<Rational>(size, Rational(0))));
  std::vector<bool> seen(size, false);
  for (int x = 0; x < g.n(); ++x) {
    for (int y = 0; y < g.n(); ++y) {
      const auto i = static_cast<std::size_t>(dm[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      if (seen[i] && !all_pairs) continue;
      std::vector<std::vector<std::int64_t>> cnt(size, std::vector<std::int64_t>(size, 0));
      for (int z = 0; z < g.n(); ++z)
        ++cnt[static_cast<std::size_t>(dm[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)])]
             [static_cast<std::size_t>(dm[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)])];
      for (std::size_t j = 0; j < size; ++j)
        for (std::size_t h = 0; h < size; ++h) {
          if (seen[i] && p[i][j][h] != cnt[j][h])
            throw GraphError("count_p_table: pairs at distance " + std::to_string(i) + " disagree");
          p[i][j][h] = cnt[j][h];
        }
      seen[i] = true;
    }
    if (!all_pairs && std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) break;
  }
  return p;
}

// --- drg-graph v1 file format -------------------------------------------------

inline constexpr const char* kGraphHeader = "# drg-graph v1";

inline std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << kGraphHeader << "\n" << "name=" << g.name << "\n" << "n=" << g.n() << "\n";
  for (int v = 0; v < g.n(); ++v) {
    out << v << ":";
    for (int w : g.adj[static_cast<std::size_t>(v)]) out << " " << w;
    out << "\n";
  }
  return out.str();
}

/// Strict parser: the text must be exactly what render_graph produces for
/// the resulting graph, so a save/load round trip is bit-exact.
inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next = [&](const char* what) {
    if (!std::getline(in, line)) throw GraphError(std::string("unexpected end of file, expected ") + what);
    ++lineno;
    return line;
  };
  auto fail = [&](const std::string& msg) { throw GraphError("line " + std::to_string(lineno) + ": " + msg); };

  if (next("header") != kGraphHeader) fail("bad header '" + line + "', expected '" + kGraphHeader + "'");
  if (next("name=").rfind("name=", 0) != 0) fail("expected 'name=<string>'");
  Graph g;
  g.name = line.substr(5);
  if (next("n=").rfind("n=", 0) != 0) fail("expected 'n=<int>'");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(line.substr(2), &used);
    if (used != line.size() - 2 || n <= 0) throw std::invalid_argument("n");
  } catch (const std::exception&) {
    fail("invalid vertex count '" + line.substr(2) + "'");
  }
  g.adj.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    next("adjacency line");
    const std::string prefix = std::to_string(v) + ":";
    if (line.rfind(prefix, 0) != 0) fail("expected adjacency line for vertex " + std::to_string(v));
    std::istringstream ls(line.substr(prefix.size()));
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int w = -1;
      try {
        w = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) fail("invalid neighbor '" + tok + "'");
      g.adj[static_cast<std::size_t>(v)].push_back(w);
    }
  }
  if (std::getline(in, line)) fail("trailing content after " + std::to_string(n) + " adjacency lines");
  validate(g);
  if (render_graph(g) != text) throw GraphError("graph text is not in canonical form (spacing or trailing newline)");
  return g;
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GraphError("cannot write graph file '" + path + "'");
  out << render_graph(g);
}

}  // namespace drg
