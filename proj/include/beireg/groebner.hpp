#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beireg/graph.hpp"
#include "beireg/monomial_ideal.hpp"

namespace beireg {

inline constexpr int kMaxVariables = 20;

/// Exponent vector over at most 20 variables. Variable 0 is the largest in
/// the lexicographic order.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial variable(int index) {
    Monomial m;
    m.exps_.at(static_cast<std::size_t>(index)) = 1;
    return m;
  }

  static Monomial product(int a, int b) { return variable(a) * variable(b); }

  int exponent(int index) const { return exps_.at(static_cast<std::size_t>(index)); }

  int degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e <= 1; });
  }

  FaceMask support() const {
    FaceMask s = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i]) s |= FaceMask{1} << i;
    return s;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] && other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) {
      const int e = a.exps_[i] + b.exps_[i];
      if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
      m.exps_[i] = static_cast<std::uint8_t>(e);
    }
    return m;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) {
      if (b.exps_[i] > a.exps_[i]) throw std::logic_error("Monomial: inexact division");
      m.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
    }
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return m;
  }

  /// Lexicographic: compare exponents of variable 0 first.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_;
};

/// S = K[x_1..x_n, y_1..y_n] with x_1 > ... > x_n > y_1 > ... > y_n.
/// Graph vertex v (0-based) owns x_{v+1} at index v and y_{v+1} at n + v.
struct PolynomialContext {
  int n = 0;

  explicit PolynomialContext(int vertices) : n(vertices) {
    if (vertices < 0 || 2 * vertices > kMaxVariables)
      throw std::invalid_argument("PolynomialContext: 2n = " + std::to_string(2 * vertices) +
                                  " exceeds the limit of " + std::to_string(kMaxVariables));
  }

  int variable_count() const { return 2 * n; }
  int x(Vertex v) const { return v; }
  int y(Vertex v) const { return n + v; }

  std::string variable_name(int index) const {
    return index < n ? "x" + std::to_string(index + 1) : "y" + std::to_string(index - n + 1);
  }

  std::string format(const Monomial& m) const {
    std::string out;
    for (int i = 0; i < variable_count(); ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      out += variable_name(i);
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
  }
};

/// lead + sign * trail with lead > trail; the lead coefficient is +1.
struct Binomial {
  Monomial lead;
  Monomial trail;
  int sign = -1;

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

class NonBinomialError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string format(const PolynomialContext& ctx, const Binomial& b) {
  return ctx.format(b.lead) + (b.sign < 0 ? " - " : " + ") + ctx.format(b.trail);
}

namespace detail {

// c1*m1 + c2*m2 with c in {-1, +1}, normalised; nullopt when it vanishes.
inline std::optional<Binomial> make_binomial(const Monomial& m1, int c1, const Monomial& m2, int c2) {
  if (m1 == m2) {
    if (c1 + c2 == 0) return std::nullopt;
    throw NonBinomialError("two-term combination collapsed to a monomial with coefficient 2");
  }
  if (m1 > m2) return Binomial{m1, m2, c1 * c2};
  return Binomial{m2, m1, c1 * c2};
}

}  // namespace detail

/// f_ij = x_i y_j - x_j y_i for every edge {i, j}, i < j.
inline std::vector<Binomial> binomial_edge_ideal(const Graph& g) {
  const PolynomialContext ctx(g.order());
  std::vector<Binomial> out;
  for (const Edge& e : g.edges())
    out.push_back({Monomial::product(ctx.x(e.u), ctx.y(e.v)), Monomial::product(ctx.x(e.v), ctx.y(e.u)), -1});
  return out;
}

inline std::optional<Binomial> s_polynomial(const Binomial& f, const Binomial& g) {
  const Monomial l = lcm(f.lead, g.lead);
  return detail::make_binomial((l / f.lead) * f.trail, f.sign, (l / g.lead) * g.trail, -g.sign);
}

/// Full reduction of b modulo the basis (leading term, then trailing term).
inline std::optional<Binomial> reduce(Binomial b, const std::vector<Binomial>& basis) {
  for (bool progress = true; progress;) {
    progress = false;
    for (const Binomial& g : basis) {
      if (!g.lead.divides(b.lead)) continue;
      const Monomial q = b.lead / g.lead;
      auto next = detail::make_binomial(b.trail, b.sign, q * g.trail, -g.sign);
      if (!next) return std::nullopt;
      b = *next;
      progress = true;
      break;
    }
  }
  for (bool progress = true; progress;) {
    progress = false;
    for (const Binomial& g : basis) {
      if (!g.lead.divides(b.trail)) continue;
      const Monomial q = b.trail / g.lead;
      b.trail = q * g.trail;
      b.sign = -b.sign * g.sign;
      progress = true;
      break;
    }
  }
  return b;
}

/// Every S-polynomial of the basis reduces to zero.
inline bool is_groebner_basis(const std::vector<Binomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto s = s_polynomial(basis[i], basis[j]);
      if (s && reduce(*s, basis)) return false;
    }
  return true;
}

/// Reduced lexicographic Gröbner basis by Buchberger's algorithm with the
/// coprime-leading-term criterion. Sorted by leading monomial, descending.
inline std::vector<Binomial> lex_groebner(const std::vector<Binomial>& gens, const PolynomialContext& ctx) {
  (void)ctx;
  std::vector<Binomial> basis;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  auto add = [&](const Binomial& b) {
    for (std::size_t i = 0; i < basis.size(); ++i) pairs.emplace_back(i, basis.size());
    basis.push_back(b);
  };
  for (const Binomial& g : gens)
    if (auto r = reduce(g, basis)) add(*r);
  while (!pairs.empty()) {
    const auto [i, j] = pairs.front();
    pairs.pop_front();
    if (basis[i].lead.coprime(basis[j].lead)) continue;
    auto s = s_polynomial(basis[i], basis[j]);
    if (!s) continue;
    if (auto r = reduce(*s, basis)) add(*r);
  }

  // Minimalise, then reduce trailing terms against the survivors.
  std::sort(basis.begin(), basis.end(), [](const Binomial& a, const Binomial& b) { return a.lead < b.lead; });
  std::vector<Binomial> minimal;
  for (const Binomial& b : basis)
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Binomial& m) { return m.lead.divides(b.lead); }))
      minimal.push_back(b);
  std::vector<Binomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Binomial> others;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k) others.push_back(minimal[o]);
    auto r = reduce(minimal[k], others);
    if (!r || r->lead != minimal[k].lead) throw std::logic_error("lex_groebner: interreduction changed a lead term");
    reduced.push_back(*r);
  }
  std::sort(reduced.begin(), reduced.end(), [](const Binomial& a, const Binomial& b) { return a.lead > b.lead; });
  return reduced;
}

class NonSquarefreeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ideal of leading monomials; they must be squarefree.
inline MonomialIdeal initial_ideal(const std::vector<Binomial>& gb, int variable_count) {
  std::vector<FaceMask> gens;
  for (const Binomial& b : gb) {
    if (!b.lead.is_squarefree()) throw NonSquarefreeError("initial_ideal: non-squarefree leading monomial");
    gens.push_back(b.lead.support());
  }
  return MonomialIdeal(variable_count, std::move(gens));
}

}  // namespace beireg
