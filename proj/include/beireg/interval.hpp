#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "beireg/graph.hpp"
#include "beireg/graph_algorithms.hpp"

namespace beireg {

/// Closed segment [lo, hi] on the half-integer grid. Endpoints are stored in
/// half-units: the stored value is twice the real coordinate.
struct Segment {
  int lo = 0;
  int hi = 0;

  bool is_point() const { return lo == hi; }
  bool contains(int half) const { return lo <= half && half <= hi; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

inline std::string format_half(int half) {
  return half % 2 == 0 ? std::to_string(half / 2) : std::to_string(half / 2) + ".5";
}

/// Finite union of pairwise disjoint closed segments, sorted left to right.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  explicit IntervalUnion(std::vector<Segment> segments) : segments_(std::move(segments)) {
    for (std::size_t k = 0; k < segments_.size(); ++k) {
      const Segment& s = segments_[k];
      if (s.lo < 0) throw std::invalid_argument("interval endpoints must be non-negative");
      if (s.lo > s.hi) throw std::invalid_argument("segment with lo > hi");
      if (k > 0 && segments_[k - 1].hi >= s.lo)
        throw std::invalid_argument("segments must be sorted and strictly separated");
    }
  }

  IntervalUnion(std::initializer_list<Segment> segments)
      : IntervalUnion(std::vector<Segment>(segments)) {}

  /// Single segment given in half-units.
  static IntervalUnion half_units(int lo, int hi) { return IntervalUnion({Segment{lo, hi}}); }

  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }

  bool contains_half(int half) const {
    return std::any_of(segments_.begin(), segments_.end(),
                       [half](const Segment& s) { return s.contains(half); });
  }

  std::string to_string() const {
    if (segments_.empty()) return "{}";
    std::string out;
    for (const Segment& s : segments_) {
      if (!out.empty()) out += "∪";
      out += s.is_point() ? "[" + format_half(s.lo) + "]"
                          : "[" + format_half(s.lo) + "," + format_half(s.hi) + "]";
    }
    return out;
  }

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  std::vector<Segment> segments_;
};

inline IntervalUnion intersection(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Segment> out;
  const auto& sa = a.segments();
  const auto& sb = b.segments();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < sa.size() && j < sb.size()) {
    const int lo = std::max(sa[i].lo, sb[j].lo);
    const int hi = std::min(sa[i].hi, sb[j].hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (sa[i].hi < sb[j].hi) ++i; else ++j;
  }
  return IntervalUnion(std::move(out));
}

/// Closed-set semantics: touching endpoints count as intersecting.
inline bool intersects(const IntervalUnion& a, const IntervalUnion& b) {
  return !intersection(a, b).empty();
}

inline bool contains_integer(const IntervalUnion& u, int j) { return u.contains_half(2 * j); }

/// Least common point (in half-units) of a non-empty list of unions.
inline std::optional<int> common_point(std::span<const IntervalUnion> unions) {
  if (unions.empty()) throw std::invalid_argument("common_point: empty list");
  IntervalUnion acc = unions.front();
  for (const IntervalUnion& u : unions.subspan(1)) acc = intersection(acc, u);
  if (acc.empty()) return std::nullopt;
  return acc.segments().front().lo;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// The path sets J_0 = [0] and J_j = [j-1, j].
inline IntervalUnion path_set(int j) {
  return j == 0 ? IntervalUnion::half_units(0, 0) : IntervalUnion::half_units(2 * j - 2, 2 * j);
}

/// Family {J_0..J_ell, I_1..I_r}. J is filled by make(); it is kept as data so
/// that validation can check it like every other condition.
struct CLFamily {
  int ell = 0;
  std::vector<IntervalUnion> J;
  std::vector<IntervalUnion> I;

  static CLFamily make(int ell, std::vector<IntervalUnion> I) {
    CLFamily f;
    f.ell = ell;
    for (int j = 0; j <= ell; ++j) f.J.push_back(path_set(j));
    f.I = std::move(I);
    return f;
  }

  int r() const { return static_cast<int>(I.size()); }
};

/// Single-interval special case: every I_i = [a_i, b_i] with a_i integral.
struct SIGFamily {
  int ell = 0;
  std::vector<Segment> I;
};

enum class Condition { i, ii, iii, iv };

inline std::string to_string(Condition c) {
  switch (c) {
    case Condition::i: return "i";
    case Condition::ii: return "ii";
    case Condition::iii: return "iii";
    case Condition::iv: return "iv";
  }
  return "?";
}

struct Violation {
  Condition condition;
  std::vector<int> members;  ///< 1-based indices into I
  std::optional<int> j;      ///< the integer point for condition iv
  std::string message;
};

namespace detail {

inline std::optional<Violation> check_condition_i(const CLFamily& f) {
  if (f.ell < 1) return Violation{Condition::i, {}, std::nullopt, "ell must be at least 1"};
  if (static_cast<int>(f.J.size()) != f.ell + 1)
    return Violation{Condition::i, {}, std::nullopt, "expected ell + 1 path sets J"};
  for (int j = 0; j <= f.ell; ++j)
    if (f.J[static_cast<std::size_t>(j)] != path_set(j))
      return Violation{Condition::i, {}, j, "J_" + std::to_string(j) + " is not the prescribed set"};
  return std::nullopt;
}

inline std::optional<Violation> check_condition_ii(const CLFamily& f) {
  for (int i = 0; i < f.r(); ++i) {
    const auto& segs = f.I[static_cast<std::size_t>(i)].segments();
    const std::string name = "I_" + std::to_string(i + 1);
    auto fail = [&](const std::string& why) {
      return Violation{Condition::ii, {i + 1}, std::nullopt, name + ": " + why};
    };
    if (segs.empty()) return fail("no segments");
    for (std::size_t k = 0; k < segs.size(); ++k) {
      if (segs[k].lo % 2 != 0) return fail("left endpoint " + format_half(segs[k].lo) + " is not an integer");
      if (segs[k].lo >= segs[k].hi) return fail("point segment [" + format_half(segs[k].lo) + "]");
      if (k > 0 && segs[k].lo - segs[k - 1].hi <= 4)
        return fail("gap " + format_half(segs[k].lo - segs[k - 1].hi) + " between segments is not > 2");
    }
    if (segs.back().hi >= 2 * f.ell) return fail("right endpoint " + format_half(segs.back().hi) + " is not < ell");
  }
  return std::nullopt;
}

inline Graph member_intersection_graph(std::span<const IntervalUnion> sets) {
  Graph g(static_cast<int>(sets.size()));
  for (std::size_t p = 0; p < sets.size(); ++p)
    for (std::size_t q = p + 1; q < sets.size(); ++q)
      if (intersects(sets[p], sets[q])) g.add_edge(static_cast<Vertex>(p), static_cast<Vertex>(q));
  return g;
}

// A pairwise-intersecting subfamily with empty intersection exists iff some
// maximal one exists, and the maximal pairwise-intersecting subfamilies are
// the maximal cliques of the intersection graph.
inline std::optional<Violation> check_condition_iii(const CLFamily& f) {
  if (f.I.empty()) return std::nullopt;
  const Graph g = member_intersection_graph(f.I);
  for (const VertexList& clique : maximal_cliques(g)) {
    std::vector<IntervalUnion> members;
    for (Vertex v : clique) members.push_back(f.I[static_cast<std::size_t>(v)]);
    if (!common_point(members)) {
      std::vector<int> ids;
      std::string names;
      for (Vertex v : clique) {
        ids.push_back(v + 1);
        names += (names.empty() ? "I_" : ", I_") + std::to_string(v + 1);
      }
      return Violation{Condition::iii, ids, std::nullopt,
                       "pairwise intersecting {" + names + "} have no common point"};
    }
  }
  return std::nullopt;
}

inline std::optional<Violation> check_condition_iv(const CLFamily& f) {
  for (int p = 0; p < f.r(); ++p) {
    for (int q = 0; q < f.r(); ++q) {
      const IntervalUnion& ip = f.I[static_cast<std::size_t>(p)];
      const IntervalUnion& iq = f.I[static_cast<std::size_t>(q)];
      if (p == q || !intersects(ip, iq)) continue;
      for (int j = 0; j <= f.ell; ++j) {
        if (!contains_integer(ip, j) || contains_integer(iq, j)) continue;
        for (int step : {+1, -1}) {
          const int k = j + step;
          if (k < 0) continue;
          if (!contains_integer(ip, k) && contains_integer(iq, k))
            return Violation{Condition::iv, {p + 1, q + 1}, j,
                             std::to_string(j) + " in I_" + std::to_string(p + 1) + " \\ I_" +
                                 std::to_string(q + 1) + ", " + std::to_string(k) + " in I_" +
                                 std::to_string(q + 1) + " only"};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Checks conditions i-iv in order; nullopt means the family is valid.
inline std::optional<Violation> validate_cl_family(const CLFamily& f) {
  if (auto v = detail::check_condition_i(f)) return v;
  if (auto v = detail::check_condition_ii(f)) return v;
  if (auto v = detail::check_condition_iii(f)) return v;
  return detail::check_condition_iv(f);
}

/// Condition iii alone, for families that may violate earlier conditions.
inline std::optional<Violation> check_helly_condition(const CLFamily& f) {
  return detail::check_condition_iii(f);
}

inline std::optional<Violation> validate_sig_family(const SIGFamily& f) {
  if (f.ell < 1) return Violation{Condition::i, {}, std::nullopt, "ell must be at least 1"};
  for (std::size_t i = 0; i < f.I.size(); ++i) {
    const Segment& s = f.I[i];
    const std::string name = "I_" + std::to_string(i + 1);
    auto fail = [&](const std::string& why) {
      return Violation{Condition::ii, {static_cast<int>(i) + 1}, std::nullopt, name + ": " + why};
    };
    if (s.lo < 0 || s.lo % 2 != 0) return fail("left endpoint " + format_half(s.lo) + " is not in N_0");
    if (s.lo >= s.hi) return fail("requires a < b");
    if (s.hi >= 2 * f.ell) return fail("requires b < ell");
  }
  return std::nullopt;
}

inline CLFamily to_cl_family(const SIGFamily& f) {
  std::vector<IntervalUnion> I;
  for (const Segment& s : f.I) I.push_back(IntervalUnion::half_units(s.lo, s.hi));
  return CLFamily::make(f.ell, std::move(I));
}

// ---------------------------------------------------------------------------
// Intersection graphs
// ---------------------------------------------------------------------------

struct FamilyMember {
  enum class Kind { J, I } kind;
  int index;  ///< j for J_j, i (1-based) for I_i

  std::string name() const { return (kind == Kind::J ? "J" : "I") + std::to_string(index); }

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

struct FamilyGraph {
  Graph graph;
  std::vector<FamilyMember> members;  ///< members[v] is the set behind vertex v
};

/// Vertices 0..ell are J_0..J_ell, vertices ell+1..ell+r are I_1..I_r.
inline FamilyGraph intersection_graph(const CLFamily& f) {
  std::vector<IntervalUnion> sets = f.J;
  std::vector<FamilyMember> members;
  for (int j = 0; j < static_cast<int>(f.J.size()); ++j) members.push_back({FamilyMember::Kind::J, j});
  for (int i = 0; i < f.r(); ++i) {
    sets.push_back(f.I[static_cast<std::size_t>(i)]);
    members.push_back({FamilyMember::Kind::I, i + 1});
  }
  FamilyGraph out{detail::member_intersection_graph(sets), members};
  std::vector<std::string> labels;
  for (const FamilyMember& m : members) labels.push_back(m.name());
  out.graph.set_labels(std::move(labels));
  return out;
}

}  // namespace beireg
