#include "k3lat/fingerprint.hpp"

#include <sstream>

#include "k3lat/linalg.hpp"

namespace k3lat {

Fingerprint fingerprint(const Lattice& l) {
  Fingerprint f;
  f.rank = l.rank();
  f.signature = signature(l);
  f.determinant = l.determinant();
  f.even = l.is_even();
  for (const auto& d : smith_invariants(l.gram()))
    if (d != 1) f.invariant_factors.push_back(d);
  if (f.even) {
    DiscriminantForm disc(l);
    if (disc.order() <= Integer(1 << 16)) f.q_histogram = q_histogram(disc);
  }
  return f;
}

std::string describe(const Fingerprint& f) {
  std::ostringstream os;
  os << "rank " << f.rank << ", signature (" << f.signature.positive << "," << f.signature.negative << "), det "
     << f.determinant << (f.even ? ", even" : ", odd") << ", A = ";
  if (f.invariant_factors.empty()) os << "0";
  for (std::size_t i = 0; i < f.invariant_factors.size(); ++i) os << (i ? " x " : "") << "Z/" << f.invariant_factors[i];
  if (f.q_histogram) {
    os << ", q {";
    bool first = true;
    for (const auto& [k, v] : *f.q_histogram) {
      os << (first ? "" : ", ") << k << ": " << v;
      first = false;
    }
    os << "}";
  }
  return os.str();
}

}  // namespace k3lat
