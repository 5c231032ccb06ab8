#ifndef LIECOMB_PICTOGRAPH_HPP
#define LIECOMB_PICTOGRAPH_HPP

// The three label-isomorphic 9-integer combinatorial models of an SU(3)
// intertwiner lambda (x) mu -> nu: BZ-triangles, O-blades and SU(3)-
// honeycombs.  One storage type carries the nine labels; the kind only
// selects a renderer.  The labels obey a single hexagon constraint; the
// external Dynkin labels are pairwise sums of them.  Valid pictographs
// with fixed externals form a fiber walked by the virtual step operator
// Delta = (-1,-1,1, -1,-1,1, -1,-1,1), whose externals vanish; the fiber
// size is the tensor multiplicity.
//
// Every pictograph decomposes over the seven-element "left" basis: the six
// non-primitive fundamental pictographs (intertwiners of a fundamental,
// its conjugate and the trivial representation, in all positions) and the
// left primitive one (the cube of the defining representation).  The
// remaining right primitive is a signed combination, which is the single
// linear relation among the eight fundamentals.

#include <array>
#include <string>
#include <vector>

#include "liecomb/honeycomb.hpp"
#include "liecomb/weights.hpp"

namespace liecomb::pictograph {

struct NineLabels {
  int m12 = 0, m23 = 0, m13 = 0;
  int n12 = 0, n23 = 0, n13 = 0;
  int l12 = 0, l23 = 0, l13 = 0;

  std::array<int, 9> as_array() const { return {m12, m23, m13, n12, n23, n13, l12, l23, l13}; }
  bool nonnegative() const;
  bool hexagon_ok() const;  // opposite hexagon sides equal
  NineLabels operator+(const NineLabels&) const;
  NineLabels operator*(int k) const;
  bool operator==(const NineLabels&) const = default;
  auto operator<=>(const NineLabels&) const = default;
};

enum class Kind { bz_triangle, oblade, su3_honeycomb };

struct Pictograph {
  Kind kind = Kind::oblade;
  NineLabels labels;

  bool operator==(const Pictograph&) const = default;
};

// Coordinates (a,b,c,d,e,f;g) in the left fundamental basis.  For a valid
// pictograph a..f are labels (hence >= 0) while g = n12 - n23 may be
// negative (the right primitive has g = -1).
struct Components7 {
  int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, g = 0;
  bool operator==(const Components7&) const = default;
};

// The step operator: externals (0,0),(0,0),(0,0), not itself a valid
// pictograph.
extern const NineLabels kDelta;

// (lambda, mu, nu) read off the labels.
std::array<Weight, 3> external_weights(const Pictograph& p);

// All valid pictographs with the given externals; count == mult(lambda,
// mu, nu).  Implemented as a Delta-walk from the extremal pictograph.
std::vector<Pictograph> enumerate(const Weight& lambda, const Weight& mu, const Weight& nu,
                                  Kind kind = Kind::oblade);

Components7 to_components(const Pictograph& p);
Pictograph from_components(const Components7& c, Kind kind = Kind::oblade);

// The KT-honeycomb of a pictograph; the hive parameter satisfies
// alpha = lambda1 + 2 lambda2 + mu1 + mu2 - n13.
honeycomb::Honeycomb to_kt(const Pictograph& p);

// The eight fundamental pictographs and the single linear relation among
// them (coefficients in the order of `items`; the relation evaluates to
// the zero label set).
struct Fundamentals {
  std::array<Pictograph, 8> items;
  std::array<const char*, 8> names;
  std::array<int, 8> relation;
};

Fundamentals fundamentals();

// p + k*Delta; throws StepOutOfFiber if any label would turn negative.
Pictograph step_delta(const Pictograph& p, int k);

}  // namespace liecomb::pictograph

#endif
