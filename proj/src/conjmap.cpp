#include "liecomb/conjmap.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "liecomb/honeycomb.hpp"
#include "liecomb/multiplicity.hpp"

namespace liecomb::conjmap {

namespace {

struct Frame {
  bool swapped = false;
  bool conjugated = false;
  Weight lambda, mu;

  std::string name() const {
    if (swapped && conjugated) return "swap+conjugate";
    if (swapped) return "swap";
    if (conjugated) return "conjugate";
    return "id";
  }
};

Frame normalize(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != 3 || mu.rank() != 3)
    throw RankError("conjugation map requires SU(3) weights");
  const int c[4] = {lambda[0], mu[0], lambda[1], mu[1]};
  const int top = *std::max_element(c, c + 4);
  for (const bool conj : {false, true})
    for (const bool swap : {false, true}) {
      Weight l = swap ? mu : lambda, m = swap ? lambda : mu;
      if (conj) {
        l = l.conjugate();
        m = m.conjugate();
      }
      if (l[0] == top) return {swap, conj, l, m};
    }
  throw Error("unreachable: some label is maximal");
}

int classify_normalized(const Weight& l, const Weight& m) {
  if (l[0] >= m[0] + m[1]) return 1;
  if (m[0] + m[1] - l[1] <= l[0]) return 2;
  return 3;
}

// Point transport between frames: swapping the pair keeps nu, conjugating
// both conjugates it; the multiplicity index is canonical either way.
Weight to_frame(const Frame& f, const Weight& nu) { return f.conjugated ? nu.conjugate() : nu; }

// Whether the image must be conjugated on the way back to the caller's
// target product lambda (x) conj(mu).  Exactly one of {swap, conjugate}
// flips the conjugation of the second factor.
bool conjugate_output(const Frame& f) { return f.swapped != f.conjugated; }

}  // namespace

int classify(const Weight& lambda, const Weight& mu) {
  const Frame f = normalize(lambda, mu);
  return classify_normalized(f.lambda, f.mu);
}

Weight t1(const Weight& lambda, const Weight& nu) {
  if (lambda.rank() != 3 || nu.rank() != 3) throw RankError("t1 requires SU(3) weights");
  return Weight::su3(2 * lambda[0] + lambda[1] - nu[0] - nu[1], nu[1]);
}

MappedPoint map_point(const Weight& lambda, const Weight& mu, const Weight& nu, int alpha) {
  const auto iv = honeycomb::alpha_bounds(lambda, mu, nu);
  if (!iv.contains(alpha))
    throw OutOfRange("(" + nu.str() + ", alpha=" + std::to_string(alpha) +
                     ") is not an admissible point of " + lambda.str() + " (x) " + mu.str());
  const int m = alpha - iv.lo + 1;

  const Frame f = normalize(lambda, mu);
  const Weight nun = to_frame(f, nu);
  const int l1 = f.lambda[0], l2 = f.lambda[1];
  const int m1 = f.mu[0], m2 = f.mu[1];
  const int x = nun[0], y = nun[1];

  MappedPoint out;
  out.nu = nu;
  out.alpha = alpha;
  out.index = m;
  out.case_tag = classify_normalized(f.lambda, f.mu);
  out.pipeline = f.name();

  Weight image;
  if (2 * x + y > 5 * l1 + 4 * l2 - m1 - 2 * m2 - 3 * (m - 1) ||
      x + y > 2 * l1 + l2 - (m - 1)) {
    out.regime = Regime::translation;
    image = Weight::su3(x + (m2 - m1), y - (m2 - m1));
  } else {
    out.regime = Regime::reflection;
    image = t1(f.lambda, nun);
  }

  out.nu_out = conjugate_output(f) ? image.conjugate() : image;
  const auto iv_out = honeycomb::alpha_bounds(lambda, mu.conjugate(), out.nu_out);
  if (iv_out.empty())
    throw Error("conjugation map produced an image outside the target product: " +
                out.nu_out.str());
  out.alpha_out = iv_out.lo + (m - 1);
  out.index_out = m;
  return out;
}

BijectionReport verify_bijection(const Weight& lambda, const Weight& mu) {
  BijectionReport rep;
  rep.lambda = lambda;
  rep.mu = mu;
  const Frame f = normalize(lambda, mu);
  rep.case_tag = classify_normalized(f.lambda, f.mu);
  rep.pipeline = f.name();

  const Weight mubar = mu.conjugate();
  const DecompositionTable source = decompose(lambda, mu);
  const DecompositionTable target = decompose(lambda, mubar);
  const int tau_target = (triality(lambda) + triality(mubar)) % 3;
  const auto wesslen = honeycomb::wesslen_bounds(lambda, mubar);

  std::set<std::pair<Weight, int>> images;
  std::map<Weight, std::vector<int>> per_nu_source, per_nu_image;

  for (const auto& e : source.entries) {
    const auto iv = honeycomb::alpha_bounds(lambda, mu, e.nu);
    for (int a = iv.lo; a <= iv.hi; ++a) {
      ++rep.total_points;
      const MappedPoint p = map_point(lambda, mu, e.nu, a);
      (p.regime == Regime::reflection ? rep.reflections : rep.translations) += 1;

      const auto iv_out = honeycomb::alpha_bounds(lambda, mubar, p.nu_out);
      if (!iv_out.contains(p.alpha_out)) {
        rep.valid_images = false;
        rep.failures.push_back("image of (" + e.nu.str() + "," + std::to_string(a) +
                               ") is not admissible");
        continue;
      }
      if (p.alpha_out - iv_out.lo + 1 != p.index) {
        rep.index_preserved = false;
        rep.failures.push_back("index not preserved at (" + e.nu.str() + "," + std::to_string(a) + ")");
      }
      if (triality(p.nu_out) != tau_target) {
        rep.triality_ok = false;
        rep.failures.push_back("wrong triality at image " + p.nu_out.str());
      }
      if (!wesslen.all_hold(p.nu_out)) {
        rep.wesslen_ok = false;
        rep.failures.push_back("image " + p.nu_out.str() + " violates the Wesslen bounds");
      }
      if (!images.emplace(p.nu_out, p.alpha_out).second) {
        rep.injective = false;
        rep.failures.push_back("collision at image (" + p.nu_out.str() + "," +
                               std::to_string(p.alpha_out) + ")");
      }
      per_nu_source[e.nu].push_back(p.index);
      per_nu_image[p.nu_out].push_back(p.index);
    }
  }

  // Surjectivity: all admissible points of the target are hit.
  long long target_points = 0;
  for (const auto& e : target.entries) {
    const auto iv = honeycomb::alpha_bounds(lambda, mubar, e.nu);
    for (int a = iv.lo; a <= iv.hi; ++a) {
      ++target_points;
      if (!images.count({e.nu, a})) {
        rep.surjective = false;
        rep.failures.push_back("target point (" + e.nu.str() + "," + std::to_string(a) +
                               ") is never reached");
      }
    }
  }
  if (target_points != rep.total_points) rep.surjective = false;

  // Theorem 2 as a consequence: the per-multiplicity counts coincide.
  rep.multiset_match = source.multiset() == target.multiset();
  if (!rep.multiset_match) rep.failures.push_back("multiplicity multisets differ");
  return rep;
}

}  // namespace liecomb::conjmap
