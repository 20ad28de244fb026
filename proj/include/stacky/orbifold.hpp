#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "stacky/abelian.hpp"
#include "stacky/finite_group.hpp"
#include "stacky/presentation.hpp"

namespace stacky {

using Rational = boost::rational<std::int64_t>;

/// Genus, finite orbifold orders (each >= 2, kept sorted), punctures.
class OrbifoldCurveData {
 public:
  OrbifoldCurveData() = default;
  OrbifoldCurveData(int genus, std::vector<int> orders, int punctures);

  int genus() const { return g_; }
  const std::vector<int>& orders() const { return orders_; }
  int punctures() const { return l_; }
  int k() const { return static_cast<int>(orders_.size()); }
  std::string str() const;

  friend bool operator==(const OrbifoldCurveData&, const OrbifoldCurveData&) = default;

 private:
  int g_ = 0;
  std::vector<int> orders_;
  int l_ = 0;
};

struct UniformizationType {
  enum class Kind { Hyperbolic, Euclidean, Spherical };
  Kind kind = Kind::Hyperbolic;
  // cover weights, only for Spherical
  std::int64_t m = 0, n = 0;
  std::string str() const;  // "hyperbolic", "euclidean", "spherical(m,n)"
  friend bool operator==(const UniformizationType&, const UniformizationType&) = default;
};

/// 2g - 2 + sum (n_i - 1)/n_i + l.  compact requires l = 0.
Rational euler_weight(const OrbifoldCurveData& c, bool compact);
/// gerbe_degree is the order of the generic stabilizer (1 for orbifolds).
UniformizationType uniformization_type(const OrbifoldCurveData& c, bool compact, std::int64_t gerbe_degree = 1);

/// Generators a1,b1,...,ag,bg, r1..rk, s1..sl.
GroupPresentation pi1_presentation(const OrbifoldCurveData& c);
bool is_simply_connected(const OrbifoldCurveData& c, bool compact);

struct TriangleGroup {
  UniformizationType::Kind kind = UniformizationType::Kind::Hyperbolic;
  std::string name;        // spherical only
  std::int64_t order = 0;  // spherical only
};

/// <x,y | x^p, y^q, (xy)^r>
GroupPresentation triangle_presentation(int p, int q, int r);
TriangleGroup triangle_group(int p, int q, int r);

struct Football {
  FinAbGroup pi1;
  std::int64_t cover_m = 1, cover_n = 1;
};
Football football(std::int64_t m, std::int64_t n);

/// Orbifold point data of a DM curve: G with a marked normal copy of H and G/H cyclic.
struct LocalExtension {
  FiniteGroup G;
  std::vector<int> embedding;  // H element -> G element
};

class DMCurveData {
 public:
  /// band: 2g+l-1 automorphisms of H given as permutations of its elements.
  DMCurveData(OrbifoldCurveData base, FiniteGroup H, std::vector<Perm> band, std::vector<LocalExtension> local);

  const OrbifoldCurveData& base() const { return base_; }
  const FiniteGroup& H() const { return H_; }
  const std::vector<Perm>& band() const { return band_; }
  const std::vector<LocalExtension>& local() const { return local_; }

 private:
  OrbifoldCurveData base_;
  FiniteGroup H_;
  std::vector<Perm> band_;
  std::vector<LocalExtension> local_;
};

/// Trivial generic group with G_i = Z_{n_i}.
DMCurveData plain_dm_curve(const OrbifoldCurveData& c);
/// H-gerbe with trivial band and G_i = H x Z_{n_i}.
DMCurveData trivial_band_gerbe(const OrbifoldCurveData& c, const FiniteGroup& H);

/// (H x| F_{2g+l-1}) *_H (*_H G_i).  Throws RequiresOpenCurve when l = 0.
GroupPresentation graph_of_groups_pi1(const DMCurveData& d);

struct HeisenbergWitness {
  FiniteGroup group;
  int x = 0, y = 0, z = 0;
};
HeisenbergWitness heisenberg_witness(int n);

struct Psl2Witness {
  int q = 0;
  std::array<int, 4> x{}, y{};  // matrices (a,b,c,d) over GF(q), field elements encoded as integers
  Perm x_perm, y_perm;          // action on the projective line, infinity = q
};
/// Odd prime powers q <= q_max, smallest first.  q_max <= 101.
std::optional<Psl2Witness> psl2_witness(int m, int n, int p, int q_max);

}  // namespace stacky
