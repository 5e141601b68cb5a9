#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eulermin/edge_set.hpp"
#include "eulermin/graph.hpp"

namespace eulermin {

// Exponent vector over the edges of one graph: t^a = prod t_e^a(e).
class Monomial {
 public:
  static constexpr std::uint32_t kMaxExponent = 64;

  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial from_set(int edge_count, EdgeSet j);
  static Monomial square(int edge_count, int edge);

  int edge_count() const { return static_cast<int>(exponents_.size()); }
  std::uint32_t operator[](int edge) const { return exponents_[static_cast<std::size_t>(edge)]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }

  int degree() const;
  // J in t^a = t^(2mu) * t_J.
  EdgeSet squarefree_part() const;
  // mu in t^a = t^(2mu) * t_J.
  std::vector<std::uint32_t> square_part() const;
  EdgeSet support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

// t^lhs - t^rhs with coefficients +1/-1, oriented so that lhs has the
// lexicographically larger exponent vector.
class Binomial {
 public:
  Binomial(Monomial a, Monomial b);

  const Monomial& lhs() const { return lhs_; }
  const Monomial& rhs() const { return rhs_; }
  int degree() const { return lhs_.degree(); }
  bool is_homogeneous() const { return lhs_.degree() == rhs_.degree(); }
  bool is_coprime() const { return gcd(lhs_, rhs_).degree() == 0; }
  // Both sides divided by their gcd.
  Binomial reduced() const;

  auto operator<=>(const Binomial&) const = default;

 private:
  Monomial lhs_;
  Monomial rhs_;
};

// Text forms, e.g. "t[1,2]*t[3,4]^2" and "t[1,2]*t[3,4] - t[2,3]*t[1,4]".
std::string format_monomial(const Graph& g, const Monomial& m);
std::string format_binomial(const Graph& g, const Binomial& b);
Monomial parse_monomial(const Graph& g, std::string_view text);
Binomial parse_binomial(const Graph& g, std::string_view text);

}  // namespace eulermin
