#pragma once

#include <cstdint>
#include <vector>

#include "stacky/butterfly.hpp"

namespace stacky {

/// Butterflies Z_p x Z_q -> X counted by brute force, without cohomology.
/// Gamma = direct_product(Z_p, Z_q) with a = (1,0) and b = (0,1); q = 1 gives Z_p.
/// An extension is written down from a tuple (w1, w2, w3) of G2 elements with
///   a^p = w1, b^q = w2, ba = ab w3
/// acting on the points g a^i b^j; it is kept when the permutation group is regular.
/// Changing the lifts a, b by elements of pi2 moves the tuple inside its orbit.
class ButterflyOracle {
 public:
  ButterflyOracle(int p, int q, const CrossedModule& X);

  const FiniteGroup& Gamma() const { return Gamma_; }
  std::int64_t orbit_count() const { return static_cast<std::int64_t>(orbit_chi_.size()); }
  std::int64_t tuples_valid() const { return valid_; }
  std::int64_t tuples_invalid() const { return invalid_; }
  /// pi1 image of a and b for the orbit.
  std::pair<int, int> orbit_chi(std::int64_t orbit) const;

  /// Orbit of a butterfly over Gamma(); -1 if it matches no tuple.
  std::int64_t classify(const ButterflyDiagram& b) const;

 private:
  struct Chi {
    int x = 0, y = 0;    // images in pi1
    int ua = 0, ub = 0;  // section values in G1
    std::vector<int> f1, f2, f3;
    std::vector<int> pos1, pos2, pos3;  // G2 element -> fiber position or -1
    std::vector<std::int64_t> orbit_of;
  };
  void scan(Chi& c);

  int p_, q_;
  CrossedModule X_;
  HomotopyGroups hg_;
  FiniteGroup Gamma_;
  std::vector<Chi> chis_;
  std::vector<int> orbit_chi_;
  std::int64_t valid_ = 0, invalid_ = 0;
};

}  // namespace stacky
