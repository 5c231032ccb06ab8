#ifndef LIECOMB_WEIGHTS_HPP
#define LIECOMB_WEIGHTS_HPP

// Exact integer arithmetic on dominant SU(N) highest weights in Dynkin
// labels (N = 2..4, default 3): triality, conjugation, pairings with the
// weights eps_i of the defining representation, and the GL(3) partition
// relabeling used by the Knutson-Tao pictures.
//
// Everything here is a pure value type; all pairings with the eps_i are
// kept as integers scaled by 3 so that no rational arithmetic leaks into
// the rest of the library.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include "liecomb/error.hpp"

namespace liecomb {

// A dominant SU(N) highest weight.  Carries its own rank so SU(3) and
// SU(4) weights can coexist in one API.  Labels are always >= 0.
class Weight {
 public:
  Weight() = default;  // trivial SU(3) weight (0,0)

  Weight(std::initializer_list<int> labels) : Weight(std::span<const int>(labels.begin(), labels.size())) {}

  explicit Weight(std::span<const int> labels);

  static Weight su3(int l1, int l2) { return Weight({l1, l2}); }
  static Weight su4(int l1, int l2, int l3) { return Weight({l1, l2, l3}); }

  int rank() const { return rank_; }                 // the N of SU(N)
  int size() const { return rank_ - 1; }             // number of labels
  int operator[](int i) const { return labels_[static_cast<size_t>(i)]; }
  std::span<const int> labels() const { return {labels_.data(), static_cast<size_t>(size())}; }

  int level() const;  // sum of Dynkin labels

  // (l1,...,l_{N-1}) -> (l_{N-1},...,l1); for N=3 this swaps the labels.
  Weight conjugate() const;

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  std::string str() const;  // "(21,6)"

 private:
  int rank_ = 3;
  std::array<int, 3> labels_{0, 0, 0};
};

// GL(3) highest weight written as a weakly decreasing integer triple
// (entries may be negative).
struct GlPartition {
  std::array<int, 3> parts{0, 0, 0};

  GlPartition() = default;
  GlPartition(int a, int b, int c);

  bool operator==(const GlPartition&) const = default;
  std::string str() const;  // "{27,6,0}"
};

// An exact multiple of 1/3.
struct Third {
  int num3 = 0;  // value = num3 / 3

  bool is_integer() const { return num3 % 3 == 0; }
  int as_int() const;
  friend Third operator+(Third a, Third b) { return {a.num3 + b.num3}; }
  bool operator==(const Third&) const = default;
};

// The three pairings (eps_1.lam, eps_2.lam, eps_3.lam), each an exact third.
struct EpsWeight {
  std::array<Third, 3> dots;
};

// tau(lambda) = lambda_1 + 2 lambda_2 mod 3.  SU(3) only.
int triality(const Weight& lambda);

// eps_i . lambda for i in {1,2,3}; SU(3) only.
//   eps_1.lam =  (2 l1 + l2)/3
//   eps_2.lam = -(l1 - l2)/3
//   eps_3.lam = -(l1 + 2 l2)/3
Third eps_dot(int i, const Weight& lambda);
EpsWeight eps_weight(const Weight& lambda);

// SU(3) weight -> GL(3) partition {l1+l2+l3, l2+l3, l3}; l3 = 0 gives the
// usual embedding.
GlPartition to_gl3(const Weight& lambda, int l3 = 0);

// The GL(3) partition of the dual, {-n3, -n2-n3, -n1-n2-n3}, given the
// U(1) charge n3 of the triple (see nu3 below).
GlPartition to_gl3_dual(const Weight& nu, int n3);

// The third GL(3) label of nu forced by U(1)-charge conservation when
// lambda_3 = mu_3 = 0:
//   nu3 = (l1 + 2 l2 + m1 + 2 m2 - n1 - 2 n2) / 3.
// Throws NotInProduct when triality is not conserved.
int nu3(const Weight& lambda, const Weight& mu, const Weight& nu);

// True iff tau(lambda) + tau(mu) - tau(nu) = 0 mod 3.
bool triality_conserved(const Weight& lambda, const Weight& mu, const Weight& nu);

namespace detail {
// Raw SU(3) helpers used by the hot enumeration loops.
inline int triality3(int l1, int l2) { return ((l1 + 2 * l2) % 3 + 3) % 3; }
inline bool conserved3(int l1, int l2, int m1, int m2, int n1, int n2) {
  return (l1 + 2 * l2 + m1 + 2 * m2 - n1 - 2 * n2) % 3 == 0;
}
}  // namespace detail

}  // namespace liecomb

template <>
struct std::hash<liecomb::Weight> {
  size_t operator()(const liecomb::Weight& w) const noexcept {
    uint64_t h = static_cast<uint64_t>(w.rank());
    for (int i = 0; i < w.size(); ++i)
      h = h * 1000003u + static_cast<uint64_t>(w[i] + 1);
    return static_cast<size_t>(h * 0x9e3779b97f4a7c15ull >> 16);
  }
};

#endif
