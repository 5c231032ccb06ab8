#ifndef LIECOMB_CONJMAP_HPP
#define LIECOMB_CONJMAP_HPP

// The piecewise-linear, layer-dependent bijection between the honeycomb
// data (nu, alpha) of lambda (x) mu and (nu', alpha') of lambda (x)
// conj(mu).  In the frame where lambda_1 is the largest of the four input
// labels, a point of multiplicity index m maps by
//
//   nu' = nu + (mu2 - mu1) * (1, -1)
//            if 2nu1+nu2 > 5l1+4l2-m1-2m2 - 3(m-1)
//            or  nu1+nu2 > 2l1+l2 - (m-1)
//   nu' = (2l1+l2 - nu1 - nu2, nu2)   otherwise   (reflection t1)
//
// with alpha' fixed by preserving the multiplicity index.  Inputs are
// normalized into that frame (swap the pair and/or conjugate both weights)
// and results mapped back, so callers never see the precondition.

#include <cstdint>
#include <string>
#include <vector>

#include "liecomb/weights.hpp"

namespace liecomb::conjmap {

enum class Regime { reflection, translation };

struct MappedPoint {
  Weight nu;
  int alpha = 0;
  int index = 0;  // multiplicity index m(nu, alpha)
  Weight nu_out;
  int alpha_out = 0;
  int index_out = 0;
  Regime regime = Regime::reflection;
  int case_tag = 1;            // geometric regime of the normalized pair
  std::string pipeline;        // normalization applied ("id", "swap", ...)
};

struct BijectionReport {
  Weight lambda, mu;
  int case_tag = 1;
  std::string pipeline;
  long long total_points = 0;
  long long reflections = 0;
  long long translations = 0;
  bool valid_images = true;     // every image is an admissible (nu', alpha')
  bool injective = true;
  bool surjective = true;       // image set == full point set of lambda (x) conj(mu)
  bool index_preserved = true;
  bool triality_ok = true;
  bool wesslen_ok = true;
  bool multiset_match = true;   // per-nu multiplicity multisets agree (Theorem 2)
  std::vector<std::string> failures;

  bool passed() const {
    return valid_images && injective && surjective && index_preserved && triality_ok &&
           wesslen_ok && multiset_match;
  }
};

// Geometric regime of the (normalized) pair:
//   1: lambda1 >= mu1+mu2            (pure reflection)
//   2: mu1+mu2-lambda2 <= lambda1 < mu1+mu2
//   3: lambda1 < mu1+mu2-lambda2
int classify(const Weight& lambda, const Weight& mu);

// The reflection t1; involutive for fixed lambda.
Weight t1(const Weight& lambda, const Weight& nu);

// Maps one admissible (nu, alpha); throws OutOfRange when the input point
// is not admissible for lambda (x) mu.
MappedPoint map_point(const Weight& lambda, const Weight& mu, const Weight& nu, int alpha);

// Maps every admissible point and verifies bijectivity onto the point set
// of lambda (x) conj(mu), index preservation, triality and Wesslen
// containment of the images.  Failures are reported, not thrown.
BijectionReport verify_bijection(const Weight& lambda, const Weight& mu);

}  // namespace liecomb::conjmap

#endif
