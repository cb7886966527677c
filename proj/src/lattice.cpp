#include "k3lat/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "k3lat/linalg.hpp"

namespace k3lat {

namespace {

IntMatrix scaled(IntMatrix g, const Integer& twist) {
  if (twist == 0) throw Error("bad_twist", "twist must be nonzero");
  g *= twist;
  return g;
}

std::vector<std::string> numbered(const std::string& stem, std::size_t n, std::size_t first = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(first + i));
  return out;
}

std::string twist_suffix(const Integer& t) { return t == 1 ? "" : "(" + t.get_str() + ")"; }

}  // namespace

Lattice::Lattice(IntMatrix gram, std::vector<std::string> labels, std::string name)
    : gram_(std::move(gram)), labels_(std::move(labels)), name_(std::move(name)) {
  if (!gram_.is_symmetric()) throw Error("shape", "Gram matrix must be square and symmetric");
  if (!labels_.empty() && labels_.size() != gram_.rows())
    throw Error("shape", "label count does not match rank");
  det_ = k3lat::determinant(gram_);
  if (det_ == 0) throw Error("degenerate", "Gram matrix is degenerate (det = 0)");
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

bool Lattice::is_negative_definite() const {
  Signature s = signature(*this);
  return s.positive == 0;
}

bool Lattice::is_positive_definite() const {
  Signature s = signature(*this);
  return s.negative == 0;
}

Integer Lattice::pair(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank() || y.size() != rank()) throw Error("shape", "vector length does not match rank");
  return dot(x, gram_, y);
}

Rational Lattice::pair(const RatVector& x, const RatVector& y) const {
  if (x.size() != rank() || y.size() != rank()) throw Error("shape", "vector length does not match rank");
  Rational acc = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) acc += x[i] * Rational(gram_(i, j)) * y[j];
  }
  return acc;
}

Lattice Lattice::renamed(std::string name) const {
  Lattice l = *this;
  l.name_ = std::move(name);
  return l;
}

std::size_t Lattice::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error("unknown_label", "no basis vector labelled " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

Signature signature_of(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw Error("shape", "signature needs a symmetric matrix");
  RatMatrix a = to_rational(gram);
  std::vector<std::size_t> live(gram.rows());
  std::iota(live.begin(), live.end(), 0);
  Signature sig;
  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return a(i, i) != 0; });
    if (diag == live.end()) {
      // no usable diagonal pivot: replace b_i by b_i + b_j for some a_ij != 0,
      // which makes the new diagonal entry 2 a_ij
      bool fixed = false;
      for (std::size_t x = 0; x < live.size() && !fixed; ++x)
        for (std::size_t y = x + 1; y < live.size() && !fixed; ++y) {
          std::size_t i = live[x], j = live[y];
          if (a(i, j) == 0) continue;
          Rational new_diag = a(i, i) + 2 * a(i, j) + a(j, j);
          for (std::size_t k : live) {
            if (k == i) continue;
            a(i, k) += a(j, k);
            a(k, i) = a(i, k);
          }
          a(i, i) = new_diag;
          fixed = true;
        }
      if (!fixed) throw Error("degenerate", "quadratic form is degenerate");
      continue;
    }
    std::size_t p = *diag;
    Rational piv = a(p, p);
    if (piv > 0)
      ++sig.positive;
    else
      ++sig.negative;
    live.erase(diag);
    for (std::size_t i : live) {
      if (a(i, p) == 0) continue;
      Rational f = a(i, p) / piv;
      for (std::size_t j : live) a(i, j) -= f * a(p, j);
    }
  }
  return sig;
}

Signature signature(const Lattice& l) { return signature_of(l.gram()); }

Integer determinant(const Lattice& l) { return l.determinant(); }

StandardKind parse_standard_kind(const std::string& name) {
  static const std::map<std::string, StandardKind> kinds = {
      {"U", StandardKind::U},           {"E8", StandardKind::E8},
      {"A", StandardKind::A},           {"rank1", StandardKind::Rank1},
      {"N", StandardKind::NikulinN},    {"NikulinN", StandardKind::NikulinN},
      {"Gamma16", StandardKind::Gamma16}};
  auto it = kinds.find(name);
  if (it == kinds.end()) throw Error("unknown_kind", "unknown standard lattice kind: " + name);
  return it->second;
}

std::string to_string(StandardKind kind) {
  switch (kind) {
    case StandardKind::U: return "U";
    case StandardKind::E8: return "E8";
    case StandardKind::A: return "A";
    case StandardKind::Rank1: return "rank1";
    case StandardKind::NikulinN: return "N";
    case StandardKind::Gamma16: return "Gamma16";
  }
  return "?";
}

Lattice make_standard(StandardKind kind, const Integer& twist, long param) {
  switch (kind) {
    case StandardKind::U: return lattice_U(twist);
    case StandardKind::E8: return lattice_E8(twist);
    case StandardKind::A: return lattice_A(param, twist);
    case StandardKind::Rank1: return lattice_rank1(Integer(param) * twist);
    case StandardKind::NikulinN: return lattice_nikulin(twist);
    case StandardKind::Gamma16: return lattice_gamma16(twist);
  }
  throw Error("unknown_kind", "unknown standard lattice kind");
}

Lattice lattice_U(const Integer& twist) {
  return Lattice(scaled(IntMatrix{{0, 1}, {1, 0}}, twist), {"e", "f"}, "U" + twist_suffix(twist));
}

Lattice lattice_E8(const Integer& twist) {
  // Cartan matrix, Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 attached to 4
  IntMatrix c(8, 8);
  for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2;
  const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (auto [a, b] : edges) c(a - 1, b - 1) = c(b - 1, a - 1) = -1;
  return Lattice(scaled(c, twist), numbered("a", 8), "E8" + twist_suffix(twist));
}

Lattice lattice_A(long n, const Integer& twist) {
  if (n < 1) throw Error("bad_parameter", "A_n needs n >= 1");
  IntMatrix c(n, n);
  for (long i = 0; i < n; ++i) {
    c(i, i) = 2;
    if (i + 1 < n) c(i, i + 1) = c(i + 1, i) = -1;
  }
  return Lattice(scaled(c, twist), numbered("a", n), "A" + std::to_string(n) + twist_suffix(twist));
}

Lattice lattice_rank1(const Integer& m) {
  if (m == 0) throw Error("bad_parameter", "rank1(m) needs m != 0");
  IntMatrix g(1, 1);
  g(0, 0) = m;
  return Lattice(g, {"g"}, "<" + m.get_str() + ">");
}

Lattice lattice_nikulin(const Integer& twist) {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 7; ++i) {
    g(i, i) = -2;
    g(i, 7) = g(7, i) = -1;
  }
  g(7, 7) = -4;
  auto labels = numbered("N", 7);
  labels.push_back("Nhat");
  return Lattice(scaled(g, twist), labels, "N" + twist_suffix(twist));
}

RatMatrix gamma16_basis_vectors() {
  RatMatrix b(16, 16);
  for (std::size_t k = 0; k < 14; ++k) {  // e_{k+2} - e_{k+3}
    b(k + 1, k) = 1;
    b(k + 2, k) = -1;
  }
  b(14, 14) = 1;  // e15 + e16
  b(15, 14) = 1;
  for (std::size_t i = 0; i < 16; ++i) b(i, 15) = Rational(1, 2);
  return b;
}

Lattice lattice_gamma16(const Integer& twist) {
  RatMatrix b = gamma16_basis_vectors();
  IntMatrix g = to_integer(b.transpose() * b);
  auto labels = numbered("d", 15, 2);
  labels.push_back("h");
  return Lattice(scaled(g, twist), labels, "Gamma16" + twist_suffix(twist));
}

bool gamma16_contains(const RatVector& x) {
  if (x.size() != 16) return false;
  Rational sum = 0;
  for (std::size_t i = 0; i < 16; ++i) {
    Rational twice = 2 * x[i];
    twice.canonicalize();
    if (twice.get_den() != 1) return false;
    Rational diff = x[i] - x[0];
    diff.canonicalize();
    if (diff.get_den() != 1) return false;
    sum += x[i];
  }
  sum.canonicalize();
  return sum.get_den() == 1 && sum.get_num() % 2 == 0;
}

IntVector gamma16_coords(const RatVector& x) {
  if (!gamma16_contains(x)) throw Error("not_in_lattice", "vector is not in Gamma16");
  RatVector c = solve(gamma16_basis_vectors(), x);
  return to_integer(c);
}

Lattice twist(const Lattice& l, const Integer& n) {
  std::string name = l.name().empty() ? std::string() : l.name() + "(" + n.get_str() + ")";
  return Lattice(scaled(l.gram(), n), l.labels(), name);
}

Lattice direct_sum(const std::vector<Lattice>& parts, std::string name) {
  if (parts.empty()) throw Error("empty", "direct sum of an empty list");
  if (parts.size() == 1) return name.empty() ? parts.front() : parts.front().renamed(name);
  std::map<std::string, std::size_t> seen_in;
  for (const auto& p : parts) {
    std::vector<std::string> uniq(p.labels().begin(), p.labels().end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (const auto& s : uniq) ++seen_in[s];
  }
  std::vector<IntMatrix> blocks;
  std::vector<std::string> labels;
  bool all_labelled = true;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    blocks.push_back(parts[k].gram());
    if (parts[k].labels().empty() && parts[k].rank() > 0) all_labelled = false;
    for (const auto& s : parts[k].labels())
      labels.push_back(seen_in[s] > 1 ? s + "_" + std::to_string(k + 1) : s);
  }
  if (!all_labelled) labels.clear();
  if (name.empty()) {
    for (std::size_t k = 0; k < parts.size(); ++k) name += (k ? "+" : "") + parts[k].name();
  }
  return Lattice(block_diagonal(blocks), labels, name);
}

IntVector nikulin_coords(const RatVector& c) {
  if (c.size() != 8) throw Error("shape", "expected eight nodal coefficients");
  RatVector coords(8);
  for (std::size_t i = 0; i < 7; ++i) coords[i] = c[i] - c[7];
  coords[7] = 2 * c[7];
  for (auto& v : coords) v.canonicalize();
  if (!is_integral(coords)) throw Error("not_in_lattice", "combination of nodal classes is not in N");
  return to_integer(coords);
}

RatVector nikulin_node_coeffs(const IntVector& coords) {
  if (coords.size() != 8) throw Error("shape", "expected a rank-8 vector");
  RatVector c(8);
  Rational half = Rational(coords[7]) / 2;
  for (std::size_t i = 0; i < 7; ++i) c[i] = Rational(coords[i]) + half;
  c[7] = half;
  for (auto& v : c) v.canonicalize();
  return c;
}

Sublattice sublattice(const Lattice& l, const IntMatrix& columns) {
  if (columns.rows() != l.rank()) throw Error("shape", "embedding rows must match ambient rank");
  IntMatrix g = columns.transpose() * l.gram() * columns;
  return {Lattice(g), columns};
}

Sublattice orthogonal_complement(const Lattice& l, const std::vector<IntVector>& s) {
  const std::size_t n = l.rank();
  IntMatrix pairing(s.size(), n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].size() != n) throw Error("shape", "vector length does not match rank");
    IntVector row = l.gram() * s[i];  // Gram is symmetric
    for (std::size_t j = 0; j < n; ++j) pairing(i, j) = row[j];
  }
  IntMatrix k = integer_kernel(pairing);
  IntMatrix g = k.transpose() * l.gram() * k;
  if (k.cols() > 0 && k3lat::determinant(g) == 0)
    throw Error("isotropic_complement", "orthogonal complement is degenerate");
  return {Lattice(g), k};
}

Integer sublattice_index(const Lattice& l, const IntMatrix& s) {
  if (s.rows() != l.rank() || !s.square()) throw Error("shape", "finite-index sublattice needs a square matrix");
  Integer d = k3lat::determinant(s);
  if (d == 0) throw Error("singular", "sublattice does not have finite index");
  return abs(d);
}

}  // namespace k3lat
