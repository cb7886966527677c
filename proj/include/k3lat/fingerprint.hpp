#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/disc_form.hpp"

namespace k3lat {

/// Isometry invariants cheap enough to compare directly. The q histogram is
/// filled for even lattices with |A| <= 2^16.
struct Fingerprint {
  std::size_t rank = 0;
  Signature signature;
  Integer determinant = 1;
  bool even = false;
  std::vector<Integer> invariant_factors;
  std::optional<QHistogram> q_histogram;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Lattice& l);
std::string describe(const Fingerprint& f);

}  // namespace k3lat
