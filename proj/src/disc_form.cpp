#include "k3lat/disc_form.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "k3lat/linalg.hpp"

namespace k3lat {

namespace {

constexpr std::size_t kMaxSubgroupsPerLevel = std::size_t(1) << 16;

long mod_long(const Integer& v, long m) {
  Integer r = v % m;
  if (r < 0) r += m;
  return r.get_si();
}

}  // namespace

DiscriminantForm::DiscriminantForm(Lattice l) : lattice_(std::move(l)) {
  if (!lattice_.is_even()) throw Error("not_even", "discriminant form needs an even lattice");
  const std::size_t n = lattice_.rank();
  SmithForm s = smith_normal_form(lattice_.gram());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < s.diagonal.size(); ++i)
    if (s.diagonal[i] != 1) keep.push_back(i);

  reduce_rows_ = IntMatrix(keep.size(), n);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const Integer& d = s.diagonal[keep[k]];
    if (!d.fits_slong_p()) throw Error("too_large", "invariant factor exceeds machine range");
    factors_.push_back(d);
    moduli_.push_back(d.get_si());
    RatVector g(n);
    for (std::size_t r = 0; r < n; ++r) g[r] = Rational(s.right(r, keep[k]), d);
    for (auto& v : g) v.canonicalize();
    gens_.push_back(std::move(g));
    for (std::size_t c = 0; c < n; ++c) reduce_rows_(k, c) = s.left(keep[k], c);
  }
  const std::size_t k = gens_.size();
  pairing_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) pairing_[i * k + j] = lattice_.pair(gens_[i], gens_[j]);
}

Integer DiscriminantForm::order() const {
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

std::size_t DiscriminantForm::size() const {
  Integer o = order();
  if (o > Integer(static_cast<unsigned long>(kMaxElements)))
    throw Error("too_large", "discriminant group has " + o.get_str() + " elements");
  return o.get_ui();
}

bool DiscriminantForm::two_elementary() const {
  return std::all_of(moduli_.begin(), moduli_.end(), [](long d) { return d == 2; });
}

bool DiscriminantForm::is_dual(const RatVector& x) const {
  if (x.size() != lattice_.rank()) return false;
  return is_integral(to_rational(lattice_.gram()) * x);
}

DiscElement DiscriminantForm::reduce(const RatVector& x) const {
  if (!is_dual(x)) throw Error("not_dual", "vector does not pair integrally with the lattice");
  IntVector y = to_integer(to_rational(lattice_.gram()) * x);
  IntVector u = reduce_rows_ * y;
  DiscElement e;
  e.coeffs.resize(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) e.coeffs[i] = mod_long(u[i], moduli_[i]);
  return e;
}

RatVector DiscriminantForm::lift(const DiscElement& e) const {
  RatVector v(lattice_.rank(), Rational(0));
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (e.coeffs[i] == 0) continue;
    for (std::size_t r = 0; r < v.size(); ++r) v[r] += gens_[i][r] * e.coeffs[i];
  }
  return v;
}

DiscElement DiscriminantForm::zero() const { return DiscElement{std::vector<long>(moduli_.size(), 0)}; }

DiscElement DiscriminantForm::add(const DiscElement& x, const DiscElement& y) const {
  DiscElement z = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) z.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % moduli_[i];
  return z;
}

DiscElement DiscriminantForm::scale(const DiscElement& x, long n) const {
  DiscElement z = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    long m = moduli_[i];
    long r = ((n % m) + m) % m;
    z.coeffs[i] = static_cast<long>((static_cast<__int128>(r) * x.coeffs[i]) % m);
  }
  return z;
}

bool DiscriminantForm::is_zero(const DiscElement& x) const {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](long c) { return c == 0; });
}

Rational DiscriminantForm::q(const DiscElement& x) const {
  const std::size_t k = gens_.size();
  Rational acc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x.coeffs[i] == 0) continue;
    acc += pairing_[i * k + i] * x.coeffs[i] * x.coeffs[i];
    for (std::size_t j = i + 1; j < k; ++j)
      if (x.coeffs[j] != 0) acc += 2 * pairing_[i * k + j] * x.coeffs[i] * x.coeffs[j];
  }
  return reduce_mod(acc, Rational(2));
}

Rational DiscriminantForm::b(const DiscElement& x, const DiscElement& y) const {
  const std::size_t k = gens_.size();
  Rational acc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (y.coeffs[j] != 0) acc += pairing_[i * k + j] * x.coeffs[i] * y.coeffs[j];
  }
  return reduce_mod(acc, Rational(1));
}

std::size_t DiscriminantForm::index_of(const DiscElement& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) idx = idx * moduli_[i] + x.coeffs[i];
  return idx;
}

DiscElement DiscriminantForm::element_at(std::size_t index) const {
  DiscElement e = zero();
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    e.coeffs[i] = static_cast<long>(index % moduli_[i]);
    index /= moduli_[i];
  }
  return e;
}

std::vector<DiscElement> DiscriminantForm::elements() const {
  std::size_t n = size();
  std::vector<DiscElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::string to_string(const DiscElement& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(e.coeffs[i]);
  return s + ")";
}

QHistogram q_histogram_serial(const DiscriminantForm& f) {
  QHistogram h;
  std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) ++h[to_string(f.q(f.element_at(i)))];
  return h;
}

QHistogram q_histogram_parallel(const DiscriminantForm& f) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
  QHistogram total;
#pragma omp parallel
  {
    QHistogram local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) ++local[to_string(f.q(f.element_at(static_cast<std::size_t>(i))))];
#pragma omp critical
    for (const auto& [k, v] : local) total[k] += v;
  }
  return total;
}

QHistogram q_histogram(const DiscriminantForm& f, Execution exec) {
  return exec == Execution::serial ? q_histogram_serial(f) : q_histogram_parallel(f);
}

QHistogram negated(const QHistogram& h) {
  QHistogram out;
  for (const auto& [k, v] : h) out[to_string(reduce_mod(-Rational(k), Rational(2)))] += v;
  return out;
}

QKReport qK_on_U2_cubed() {
  DiscriminantForm f(direct_sum({lattice_U(2), lattice_U(2), lattice_U(2)}));
  QKReport r;
  r.two_elementary_rank6 = f.two_elementary() && f.invariant_factors().size() == 6;
  r.matches_hyperbolic = r.two_elementary_rank6;
  for (const auto& e : f.elements()) {
    ++r.elements;
    Rational q = f.q(e);
    if (q == 0) ++r.q_zero;
    if (q == 1) ++r.q_one;
    RatVector v = f.lift(e);
    long x[6];
    for (int i = 0; i < 6; ++i) x[i] = mod_long(Integer(v[i] * 2), 2);
    long h = (x[0] * x[1] + x[2] * x[3] + x[4] * x[5]) % 2;
    if (q != h) r.matches_hyperbolic = false;
  }
  return r;
}

std::vector<DiscElement> generated_subgroup(const DiscriminantForm& f, const std::vector<DiscElement>& gens) {
  std::set<DiscElement> seen{f.zero()};
  std::deque<DiscElement> todo{f.zero()};
  while (!todo.empty()) {
    DiscElement x = todo.front();
    todo.pop_front();
    for (const auto& g : gens) {
      DiscElement y = f.add(x, g);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<DiscElement> subgroup_generators(const DiscriminantForm& f, const std::vector<DiscElement>& subgroup) {
  std::vector<DiscElement> gens;
  std::set<DiscElement> span{f.zero()};
  for (const auto& x : subgroup) {
    if (span.count(x)) continue;
    gens.push_back(x);
    auto s = generated_subgroup(f, gens);
    span = std::set<DiscElement>(s.begin(), s.end());
  }
  return gens;
}

std::vector<std::vector<DiscElement>> enumerate_isotropic_subgroups(const DiscriminantForm& f, std::size_t order) {
  if (!f.two_elementary() && f.order() > Integer(1 << 12))
    throw Error("too_large", "isotropic subgroup search needs a 2-elementary group or |A| <= 2^12");
  const std::size_t n = f.size();
  if (order == 0 || n % order != 0) return {};

  std::vector<DiscElement> elems = f.elements();
  std::vector<std::size_t> isotropic;
  for (std::size_t i = 1; i < n; ++i)
    if (f.q(elems[i]) == 0) isotropic.push_back(i);

  using Subgroup = std::vector<std::size_t>;
  std::set<Subgroup> level{{0}};
  std::set<Subgroup> result;
  while (!level.empty()) {
    std::set<Subgroup> next;
    for (const auto& s : level) {
      if (s.size() == order) {
        result.insert(s);
        continue;
      }
      for (std::size_t xi : isotropic) {
        if (std::binary_search(s.begin(), s.end(), xi)) continue;
        const DiscElement& x = elems[xi];
        bool orthogonal = true;
        for (std::size_t si : s)
          if (f.b(x, elems[si]) != 0) {
            orthogonal = false;
            break;
          }
        if (!orthogonal) continue;
        std::set<std::size_t> grown(s.begin(), s.end());
        DiscElement m = x;
        while (!f.is_zero(m)) {
          for (std::size_t si : s) grown.insert(f.index_of(f.add(elems[si], m)));
          m = f.add(m, x);
        }
        if (order % grown.size() != 0) continue;
        next.insert(Subgroup(grown.begin(), grown.end()));
      }
    }
    if (next.size() > kMaxSubgroupsPerLevel)
      throw Error("too_large", "isotropic subgroup search exceeded its work limit");
    level = std::move(next);
  }

  std::vector<std::vector<DiscElement>> out;
  for (const auto& s : result) {
    std::vector<DiscElement> sub;
    for (std::size_t i : s) sub.push_back(elems[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<std::size_t> induced_permutation(const DiscriminantForm& f, const IntMatrix& g) {
  const Lattice& l = f.lattice();
  if (g.rows() != l.rank() || g.cols() != l.rank() || g.transpose() * l.gram() * g != l.gram())
    throw Error("not_isometry", "matrix does not preserve the Gram matrix");
  RatMatrix gq = to_rational(g);
  std::size_t n = f.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = f.index_of(f.reduce(gq * f.lift(f.element_at(i))));
  return perm;
}

std::vector<std::vector<DiscElement>> orbits_under_generators(const DiscriminantForm& f,
                                                              const std::vector<std::vector<std::size_t>>& gens) {
  const std::size_t n = f.size();
  std::vector<Rational> qs(n);
  for (std::size_t i = 0; i < n; ++i) qs[i] = f.q(f.element_at(i));
  for (const auto& p : gens) {
    if (p.size() != n) throw Error("shape", "permutation size does not match the group");
    for (std::size_t i = 0; i < n; ++i)
      if (qs[p[i]] != qs[i]) throw Error("not_q_preserving", "generator does not preserve q");
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<DiscElement>> orbits;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& p : gens) {
        std::size_t y = p[orbit[k]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    std::vector<DiscElement> o;
    for (std::size_t i : orbit) o.push_back(f.element_at(i));
    orbits.push_back(std::move(o));
  }
  return orbits;
}

std::vector<std::vector<DiscElement>> orbits_under_isometries(const DiscriminantForm& f,
                                                              const std::vector<IntMatrix>& gens) {
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& g : gens) perms.push_back(induced_permutation(f, g));
  return orbits_under_generators(f, perms);
}

std::vector<IntMatrix> e8_simple_reflections() {
  const IntMatrix c = lattice_E8().gram();
  std::vector<IntMatrix> out;
  for (std::size_t k = 0; k < 8; ++k) {
    IntMatrix s = IntMatrix::identity(8);
    for (std::size_t j = 0; j < 8; ++j) s(k, j) -= c(k, j);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<IntMatrix> nikulin_s8_generators() {
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < 6; ++i) {
    IntMatrix p = IntMatrix::identity(8);
    p(i, i) = 0;
    p(i + 1, i + 1) = 0;
    p(i, i + 1) = 1;
    p(i + 1, i) = 1;
    out.push_back(std::move(p));
  }
  // N7 <-> N8 with N8 = 2 Nhat - N1 - ... - N7
  IntMatrix t = IntMatrix::identity(8);
  for (std::size_t r = 0; r < 7; ++r) t(r, 6) = -1;
  t(7, 6) = 2;
  out.push_back(std::move(t));
  return out;
}

}  // namespace k3lat
