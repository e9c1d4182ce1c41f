#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "beireg/graph.hpp"
#include "beireg/graph_algorithms.hpp"
#include "beireg/interval.hpp"

namespace beireg {

// ---------------------------------------------------------------------------
// CL-graphs
// ---------------------------------------------------------------------------

/// One connected component realised as the intersection graph of a family.
/// bijection[k] is the graph vertex behind family member k, with members in
/// intersection_graph order: J_0..J_ell, then I_1..I_r.
struct CLComponentCertificate {
  CLFamily family;
  VertexList bijection;
};

struct CLCertificate {
  std::vector<CLComponentCertificate> components;
};

/// Witness that ell(G_i) != c(G_i) on component i.
struct NotCLReason {
  int component_index = 0;
  int ell = 0;
  int clique_count = 0;
};

using CLRecognition = std::variant<CLCertificate, NotCLReason>;

/// nullopt on success, otherwise a description of the first failure.
using CertificateCheck = std::optional<std::string>;

namespace detail {

inline VertexMask list_to_mask(const VertexList& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

// Family construction from a longest induced path. Every off-path vertex u
// gets I(u) = union over maximal runs a..a+t of its path neighbourhood of
// [a, a + t - 1/2].
inline CLComponentCertificate build_cl_component(const Graph& g, VertexMask comp) {
  const InducedPath p = longest_induced_path(g, comp);
  const int ell = p.length;
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (int j = 0; j <= ell; ++j) position[p.path[j]] = j;

  VertexList bijection = p.path;
  std::vector<IntervalUnion> sets;
  for (Vertex u : mask_to_list(comp & ~list_to_mask(p.path))) {
    std::vector<bool> hit(static_cast<std::size_t>(ell + 1), false);
    bool any = false;
    for (Vertex w : g.neighbor_list(u))
      if (position[w] >= 0) hit[position[w]] = any = true;
    if (!any)
      throw std::logic_error("CL construction: vertex " + std::to_string(u) + " has no path neighbour");
    std::vector<Segment> segs;
    int prev_end = -1;
    for (int j = 0; j <= ell;) {
      if (!hit[j]) {
        ++j;
        continue;
      }
      int end = j;
      while (end + 1 <= ell && hit[end + 1]) ++end;
      if (end == j)
        throw std::logic_error("CL construction: vertex " + std::to_string(u) +
                               " sees path vertex " + std::to_string(j) + " without a path neighbour of it");
      if (prev_end >= 0 && prev_end + 2 > j)
        throw std::logic_error("CL construction: runs of vertex " + std::to_string(u) + " too close");
      segs.push_back({2 * j, 2 * end - 1});
      prev_end = end;
      j = end + 1;
    }
    sets.emplace_back(std::move(segs));
    bijection.push_back(u);
  }
  return {CLFamily::make(ell, std::move(sets)), std::move(bijection)};
}

inline CertificateCheck check_cl_component(const Graph& g, const CLComponentCertificate& c,
                                           VertexMask& claimed) {
  if (auto v = validate_cl_family(c.family))
    return "family violates condition " + to_string(v->condition) + ": " + v->message;
  const FamilyGraph fg = intersection_graph(c.family);
  const int size = fg.graph.order();
  if (static_cast<int>(c.bijection.size()) != size)
    return "bijection has " + std::to_string(c.bijection.size()) + " entries, family has " + std::to_string(size);
  VertexMask image = 0;
  for (Vertex v : c.bijection) {
    if (v < 0 || v >= g.order()) return "bijection maps to invalid vertex " + std::to_string(v);
    if ((image | claimed) >> v & 1U) return "vertex " + std::to_string(v) + " is used twice";
    image |= bit(v);
  }
  claimed |= image;
  if (reach(g, c.bijection.front(), g.vertex_mask()) != image)
    return "bijection image is not a connected component";
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (fg.graph.adjacent(a, b) != g.adjacent(c.bijection[a], c.bijection[b]))
        return "edge mismatch between " + fg.members[a].name() + " and " + fg.members[b].name();

  // The maximal cliques are exactly F_j = {J_j, J_{j+1}} ∪ {I_i : j ∈ I_i}.
  std::set<VertexMask> expected;
  const int ell = c.family.ell;
  for (int j = 0; j < ell; ++j) {
    VertexMask f = bit(c.bijection[j]) | bit(c.bijection[j + 1]);
    for (int i = 0; i < c.family.r(); ++i)
      if (contains_integer(c.family.I[static_cast<std::size_t>(i)], j)) f |= bit(c.bijection[ell + 1 + i]);
    expected.insert(f);
  }
  const auto found = maximal_clique_masks(g, image);
  const std::set<VertexMask> actual(found.begin(), found.end());
  if (actual != expected) return "maximal cliques differ from the family cliques F_0..F_{ell-1}";
  return std::nullopt;
}

}  // namespace detail

inline CertificateCheck validate_cl_certificate(const Graph& g, const CLCertificate& cert) {
  VertexMask claimed = 0;
  for (std::size_t k = 0; k < cert.components.size(); ++k)
    if (auto fail = detail::check_cl_component(g, cert.components[k], claimed))
      return "component " + std::to_string(k) + ": " + *fail;
  if (claimed != g.vertex_mask()) return "certificate does not cover every vertex";
  return std::nullopt;
}

/// Decides ell(G) = c(G) per component and, when it holds, assembles and
/// self-checks the interval-union family realising each component.
inline CLRecognition recognize_cl(const Graph& g) {
  CLCertificate cert;
  const auto comps = component_masks(g);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const int l = longest_induced_path(g, comps[k]).length;
    const int c = clique_count(g, comps[k]);
    if (l != c) return NotCLReason{static_cast<int>(k), l, c};
  }
  for (VertexMask comp : comps) cert.components.push_back(detail::build_cl_component(g, comp));
  if (auto fail = validate_cl_certificate(g, cert))
    throw std::logic_error("recognize_cl: constructed certificate is invalid: " + *fail);
  return cert;
}

// ---------------------------------------------------------------------------
// Strongly interval graphs
// ---------------------------------------------------------------------------

struct SIGRecognition {
  bool recognized = false;
  /// One family per component, present when every component's constructed
  /// family uses single intervals only.
  std::optional<std::vector<SIGFamily>> families;
};

inline SIGRecognition recognize_sig(const Graph& g) {
  SIGRecognition out;
  if (!is_chordal(g)) return out;
  auto cl = recognize_cl(g);
  if (!std::holds_alternative<CLCertificate>(cl)) return out;
  out.recognized = true;
  std::vector<SIGFamily> families;
  for (const auto& comp : std::get<CLCertificate>(cl).components) {
    SIGFamily f{comp.family.ell, {}};
    for (const IntervalUnion& u : comp.family.I) {
      if (u.segments().size() != 1) return out;
      f.I.push_back(u.segments().front());
    }
    families.push_back(std::move(f));
  }
  out.families = std::move(families);
  return out;
}

// ---------------------------------------------------------------------------
// WL-graphs
// ---------------------------------------------------------------------------

/// G = P ∪ K ∪ H: induced path v_0..v_ell, maximum clique K meeting it in
/// v_t, v_{t+1}, and the remaining path-to-clique edges H.
struct WLDecomposition {
  VertexList path;
  VertexList clique;  ///< sorted
  int t = 0;
  std::vector<Edge> h_edges;  ///< sorted, u < v
};

struct NotWL {
  int ell = 0;
  int n = 0;
  int omega = 0;
};

using WLRecognition = std::variant<WLDecomposition, NotWL>;

inline CertificateCheck validate_wl_decomposition(const Graph& g, const WLDecomposition& d) {
  if (!is_connected(g)) throw std::invalid_argument("validate_wl_decomposition: graph is disconnected");
  const int n = g.order();
  const int ell = static_cast<int>(d.path.size()) - 1;
  if (ell < 1) return "path must have at least one edge";
  VertexMask path = 0;
  for (Vertex v : d.path) {
    if (v < 0 || v >= n) return "path vertex " + std::to_string(v) + " out of range";
    if (path >> v & 1U) return "path repeats vertex " + std::to_string(v);
    path |= detail::bit(v);
  }
  for (int i = 0; i <= ell; ++i)
    for (int k = i + 1; k <= ell; ++k)
      if (g.adjacent(d.path[i], d.path[k]) != (k == i + 1))
        return "path is not induced at positions " + std::to_string(i) + ", " + std::to_string(k);
  if (ell != beireg::ell(g)) return "path length " + std::to_string(ell) + " is not ell(G)";

  VertexMask clique = 0;
  for (Vertex v : d.clique) {
    if (v < 0 || v >= n) return "clique vertex " + std::to_string(v) + " out of range";
    clique |= detail::bit(v);
  }
  if (!is_clique(g, clique)) return "clique vertices are not pairwise adjacent";
  if (detail::popcount(clique) != clique_number(g)) return "clique is not of maximum size";
  if (d.t < 0 || d.t >= ell) return "t out of range";
  if ((clique & path) != (detail::bit(d.path[d.t]) | detail::bit(d.path[d.t + 1])))
    return "clique meets the path in something other than {v_t, v_{t+1}}";
  if ((clique | path) != g.vertex_mask()) return "path and clique do not cover V(G)";

  const VertexMask extra = clique & ~path;
  std::set<std::pair<int, int>> listed;
  for (const Edge& e : d.h_edges) {
    const bool ok = ((path >> e.u & 1U) && (extra >> e.v & 1U)) || ((path >> e.v & 1U) && (extra >> e.u & 1U));
    if (!ok) return "H edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} does not join v_i to u_j";
    if (!g.adjacent(e.u, e.v)) return "H edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in G";
    listed.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  for (const Edge& e : g.edges()) {
    const bool in_k = (clique >> e.u & 1U) && (clique >> e.v & 1U);
    bool in_p = false;
    for (int i = 0; i < ell; ++i)
      if (std::minmax(d.path[i], d.path[i + 1]) == std::minmax(e.u, e.v)) in_p = true;
    if (!in_k && !in_p && !listed.count({e.u, e.v}))
      return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not covered by P, K or H";
  }
  return std::nullopt;
}

/// Decides ell(G) = n - omega(G) + 1 for connected G and, when it holds,
/// returns the decomposition built from the deterministic longest induced
/// path and the lexicographically least maximum clique.
inline WLRecognition recognize_wl(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("recognize_wl: graph must be connected");
  const int n = g.order();
  const InducedPath p = longest_induced_path(g);
  const int omega = clique_number(g);
  if (p.length != n - omega + 1) return NotWL{p.length, n, omega};

  WLDecomposition d;
  d.path = p.path;
  d.clique = maximum_clique(g);
  const VertexMask clique = detail::list_to_mask(d.clique);
  std::vector<int> shared;
  for (int i = 0; i <= p.length; ++i)
    if (clique >> p.path[i] & 1U) shared.push_back(i);
  if (shared.size() != 2 || shared[1] != shared[0] + 1)
    throw std::logic_error("recognize_wl: maximum clique does not meet the path in two consecutive vertices");
  d.t = shared[0];
  const VertexMask path = detail::list_to_mask(d.path);
  const VertexMask shared_mask = detail::bit(p.path[d.t]) | detail::bit(p.path[d.t + 1]);
  for (const Edge& e : g.edges()) {
    const bool pu = path >> e.u & 1U;
    const bool pv = path >> e.v & 1U;
    if (pu == pv) continue;
    const Vertex on_path = pu ? e.u : e.v;
    if (shared_mask >> on_path & 1U) continue;  // already a clique edge
    d.h_edges.push_back(e);
  }
  if (auto fail = validate_wl_decomposition(g, d))
    throw std::logic_error("recognize_wl: assembled decomposition is invalid: " + *fail);
  return d;
}

}  // namespace beireg
