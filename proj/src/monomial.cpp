#include "eulermin/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "eulermin/error.hpp"

namespace eulermin {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {
  for (auto e : exponents_) {
    if (e > kMaxExponent) throw Error(ErrorKind::CapExceeded, "edge exponent exceeds 64");
  }
}

Monomial Monomial::from_set(int edge_count, EdgeSet j) {
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(edge_count), 0);
  j.for_each([&](int e) { exps[static_cast<std::size_t>(e)] = 1; });
  return Monomial(std::move(exps));
}

Monomial Monomial::square(int edge_count, int edge) {
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(edge_count), 0);
  exps.at(static_cast<std::size_t>(edge)) = 2;
  return Monomial(std::move(exps));
}

int Monomial::degree() const {
  return static_cast<int>(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0}));
}

EdgeSet Monomial::squarefree_part() const {
  EdgeSet out;
  for (std::size_t e = 0; e < exponents_.size(); ++e) {
    if (exponents_[e] % 2 == 1) out |= EdgeSet::single(static_cast<int>(e));
  }
  return out;
}

std::vector<std::uint32_t> Monomial::square_part() const {
  std::vector<std::uint32_t> mu(exponents_.size());
  std::transform(exponents_.begin(), exponents_.end(), mu.begin(), [](std::uint32_t a) { return a / 2; });
  return mu;
}

EdgeSet Monomial::support() const {
  EdgeSet out;
  for (std::size_t e = 0; e < exponents_.size(); ++e) {
    if (exponents_[e] > 0) out |= EdgeSet::single(static_cast<int>(e));
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (other.exponents_.size() != exponents_.size()) return false;
  for (std::size_t e = 0; e < exponents_.size(); ++e) {
    if (exponents_[e] > other.exponents_[e]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exponents_.size() != exponents_.size()) throw Error(ErrorKind::Precondition, "monomials over different edge sets");
  std::vector<std::uint32_t> out(exponents_.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = exponents_[e] + other.exponents_[e];
  return Monomial(std::move(out));
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error(ErrorKind::Precondition, "monomial does not divide");
  std::vector<std::uint32_t> out(exponents_.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = exponents_[e] - divisor.exponents_[e];
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<std::uint32_t> out(a.exponents_.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = std::min(a.exponents_[e], b.exponents_.at(e));
  return Monomial(std::move(out));
}

Binomial::Binomial(Monomial a, Monomial b) {
  if (a.edge_count() != b.edge_count()) throw Error(ErrorKind::Precondition, "binomial sides over different edge sets");
  if (a == b) throw Error(ErrorKind::Precondition, "binomial sides are equal");
  if (a.exponents() < b.exponents()) std::swap(a, b);
  lhs_ = std::move(a);
  rhs_ = std::move(b);
}

Binomial Binomial::reduced() const {
  Monomial common = gcd(lhs_, rhs_);
  return Binomial(lhs_ / common, rhs_ / common);
}

std::string format_monomial(const Graph& g, const Monomial& m) {
  std::string out;
  for (int e = 0; e < m.edge_count(); ++e) {
    if (m[e] == 0) continue;
    if (!out.empty()) out += "*";
    const auto& ed = g.edge(e);
    out += "t[" + std::to_string(ed.u) + "," + std::to_string(ed.v) + "]";
    if (m[e] > 1) out += "^" + std::to_string(m[e]);
  }
  return out.empty() ? "1" : out;
}

std::string format_binomial(const Graph& g, const Binomial& b) {
  return format_monomial(g, b.lhs()) + " - " + format_monomial(g, b.rhs());
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Monomial read_product(const Graph& g, Cursor& in) {
  std::vector<std::uint32_t> exps(static_cast<std::size_t>(g.edge_count()), 0);
  if (in.accept('1')) return Monomial(std::move(exps));
  do {
    in.expect('t');
    in.expect('[');
    int u = in.integer();
    in.expect(',');
    int v = in.integer();
    in.expect(']');
    int power = 1;
    if (in.accept('^')) power = in.integer();
    if (power < 0) in.fail("negative exponent");
    auto edge = g.find_edge(u, v);
    if (!edge) in.fail("no edge {" + std::to_string(u) + "," + std::to_string(v) + "} in graph");
    auto& slot = exps[static_cast<std::size_t>(*edge)];
    if (slot + static_cast<std::uint32_t>(power) > Monomial::kMaxExponent) in.fail("exponent exceeds 64");
    slot += static_cast<std::uint32_t>(power);
  } while (in.accept('*'));
  return Monomial(std::move(exps));
}

}  // namespace

Monomial parse_monomial(const Graph& g, std::string_view text) {
  Cursor in(text);
  Monomial m = read_product(g, in);
  if (!in.done()) in.fail("trailing input");
  return m;
}

Binomial parse_binomial(const Graph& g, std::string_view text) {
  Cursor in(text);
  Monomial a = read_product(g, in);
  in.expect('-');
  Monomial b = read_product(g, in);
  if (!in.done()) in.fail("trailing input");
  if (a == b) throw Error(ErrorKind::Parse, "binomial sides are equal");
  return Binomial(std::move(a), std::move(b));
}

}  // namespace eulermin
