#include "liecomb/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace liecomb::oracle {

namespace {

using Dyn = std::array<int, 3>;  // Dynkin coordinates, rank-1 entries used

// Static data per rank: Cartan matrix, the integer Gram matrix
// G = N * C^{-1} (so S(u,v) = u^T G v = N * (u,v) stays integral), the
// positive roots in Dynkin and in simple-root coordinates, and a linear
// functional that is strictly positive on every positive root (used as the
// peel order; for SU(3) it reduces to the level).
struct RankData {
  int n = 0;  // rank of A_n = number of labels
  int cartan[3][3] = {};
  int gram[3][3] = {};
  std::vector<std::pair<Dyn, Dyn>> pos_roots;  // (dynkin, root-coords)
  Dyn height_coef = {0, 0, 0};
};

const RankData& rank_data(int rank) {
  static const auto make = [](int n) {
    RankData d;
    d.n = n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d.cartan[i][j] = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
    // N * inverse Cartan for A_n: G_ij = min(i,j)*(n+1-max(i,j)), 1-based.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d.gram[i][j] = (std::min(i, j) + 1) * (n + 1 - (std::max(i, j) + 1));
    // positive roots are the intervals alpha_i + ... + alpha_j
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        Dyn dyn{0, 0, 0}, rc{0, 0, 0};
        for (int k = i; k <= j; ++k) {
          rc[static_cast<size_t>(k)] = 1;
          for (int c = 0; c < n; ++c) dyn[static_cast<size_t>(c)] += d.cartan[k][c];
        }
        d.pos_roots.emplace_back(dyn, rc);
      }
    }
    // 2*(w, rho) scaled by N: row sums of G; positive on all simple roots.
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += d.gram[i][j];
      d.height_coef[static_cast<size_t>(i)] = s;
    }
    return d;
  };
  static const RankData d1 = make(1), d2 = make(2), d3 = make(3);
  switch (rank) {
    case 2: return d1;
    case 3: return d2;
    case 4: return d3;
    default: throw RankError("oracle supports SU(2..4), got rank " + std::to_string(rank));
  }
}

long long sform(const RankData& d, const Dyn& u, const Dyn& v) {
  long long s = 0;
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) s += static_cast<long long>(d.gram[i][j]) * u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
  return s;
}

uint64_t key_of(const RankData& d, const Dyn& w) {
  uint64_t k = 0;
  for (int i = 0; i < d.n; ++i) k = (k << 13) | static_cast<uint64_t>(w[static_cast<size_t>(i)] + 4096);
  return k;
}

// eps-coordinates p with p_N = 0: p_i = sum_{j >= i} w_j.
std::array<int, 4> to_eps(const RankData& d, const Dyn& w) {
  std::array<int, 4> p{0, 0, 0, 0};
  for (int i = d.n - 1; i >= 0; --i) p[static_cast<size_t>(i)] = p[static_cast<size_t>(i + 1)] + w[static_cast<size_t>(i)];
  return p;
}

Dyn from_eps(const RankData& d, const std::array<int, 4>& p) {
  Dyn w{0, 0, 0};
  for (int i = 0; i < d.n; ++i) w[static_cast<size_t>(i)] = p[static_cast<size_t>(i)] - p[static_cast<size_t>(i + 1)];
  return w;
}

Dyn dominant_rep(const RankData& d, const Dyn& w) {
  auto p = to_eps(d, w);
  std::sort(p.begin(), p.begin() + d.n + 1, std::greater<int>());
  return from_eps(d, p);
}

struct Candidate {
  Dyn dyn;
  Dyn rc;  // root coordinates of lambda - mu
  int height;
};

// All dominant mu with lambda - mu a non-negative root combination; every
// such mu is a weight of V(lambda).
std::vector<Candidate> dominant_candidates(const RankData& d, const Dyn& lambda) {
  // box bound: c <= C^{-1}(lambda + rev lambda), rounded up
  Dyn rev = lambda;
  std::reverse(rev.begin(), rev.begin() + d.n);
  Dyn cmax{0, 0, 0};
  for (int i = 0; i < d.n; ++i) {
    long long s = 0;
    for (int j = 0; j < d.n; ++j) s += static_cast<long long>(d.gram[i][j]) * (lambda[static_cast<size_t>(j)] + rev[static_cast<size_t>(j)]);
    cmax[static_cast<size_t>(i)] = static_cast<int>((s + d.n) / (d.n + 1));
  }
  std::vector<Candidate> out;
  Dyn c{0, 0, 0};
  const auto mu_of = [&](const Dyn& cc) {
    Dyn mu = lambda;
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j) mu[static_cast<size_t>(i)] -= d.cartan[j][i] * cc[static_cast<size_t>(j)];
    return mu;
  };
  for (c[0] = 0; c[0] <= cmax[0]; ++c[0])
    for (c[1] = 0; c[1] <= (d.n > 1 ? cmax[1] : 0); ++c[1])
      for (c[2] = 0; c[2] <= (d.n > 2 ? cmax[2] : 0); ++c[2]) {
        const Dyn mu = mu_of(c);
        bool dom = true;
        for (int i = 0; i < d.n; ++i) dom &= mu[static_cast<size_t>(i)] >= 0;
        if (dom) out.push_back({mu, c, c[0] + c[1] + c[2]});
      }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.dyn < b.dyn;
  });
  return out;
}

std::shared_ptr<const WeightSystem> compute_weight_system(const Weight& lambda) {
  const RankData& d = rank_data(lambda.rank());
  Dyn top{0, 0, 0};
  for (int i = 0; i < d.n; ++i) top[static_cast<size_t>(i)] = lambda[i];

  const auto cands = dominant_candidates(d, top);
  std::unordered_map<uint64_t, long long> dom_mult;
  dom_mult.reserve(cands.size() * 2);

  Dyn rho{0, 0, 0};
  for (int i = 0; i < d.n; ++i) rho[static_cast<size_t>(i)] = 1;
  Dyn top_rho = top;
  for (int i = 0; i < d.n; ++i) top_rho[static_cast<size_t>(i)] += 1;
  const long long top_norm = sform(d, top_rho, top_rho);

  for (const Candidate& cand : cands) {
    if (cand.height == 0) {
      dom_mult[key_of(d, cand.dyn)] = 1;
      continue;
    }
    // Freudenthal: ((l+rho)^2 - (mu+rho)^2) m_mu = 2 sum_{a>0,k>=1} (mu+ka, a) m_{mu+ka}
    long long num = 0;
    for (const auto& [adyn, arc] : d.pos_roots) {
      for (int k = 1;; ++k) {
        bool in_cone = true;
        for (int i = 0; i < d.n; ++i)
          in_cone &= cand.rc[static_cast<size_t>(i)] - k * arc[static_cast<size_t>(i)] >= 0;
        if (!in_cone) break;
        Dyn w = cand.dyn;
        for (int i = 0; i < d.n; ++i) w[static_cast<size_t>(i)] += k * adyn[static_cast<size_t>(i)];
        const auto it = dom_mult.find(key_of(d, dominant_rep(d, w)));
        if (it != dom_mult.end() && it->second > 0) num += sform(d, w, adyn) * it->second;
      }
    }
    if (num == 0) continue;  // not a weight (cannot happen for dominant candidates)
    Dyn mu_rho = cand.dyn;
    for (int i = 0; i < d.n; ++i) mu_rho[static_cast<size_t>(i)] += 1;
    const long long denom = top_norm - sform(d, mu_rho, mu_rho);
    if (denom <= 0 || (2 * num) % denom != 0)
      throw Error("Freudenthal recursion produced a non-integer multiplicity");
    dom_mult[key_of(d, cand.dyn)] = 2 * num / denom;
  }

  auto ws = std::make_shared<WeightSystem>();
  ws->rank = lambda.rank();
  for (const Candidate& cand : cands) {
    const auto it = dom_mult.find(key_of(d, cand.dyn));
    if (it == dom_mult.end() || it->second == 0) continue;
    const int m = static_cast<int>(it->second);
    auto p = to_eps(d, cand.dyn);
    std::sort(p.begin(), p.begin() + d.n + 1);  // ascending for next_permutation
    do {
      ws->entries.emplace_back(from_eps(d, p), m);
    } while (std::next_permutation(p.begin(), p.begin() + d.n + 1));
  }
  return ws;
}

std::mutex cache_mutex;
std::unordered_map<uint64_t, std::shared_ptr<const WeightSystem>> cache;

uint64_t cache_key(const Weight& w) {
  uint64_t k = static_cast<uint64_t>(w.rank());
  for (int i = 0; i < w.size(); ++i) k = (k << 13) | static_cast<uint64_t>(w[i] + 1);
  return k;
}

}  // namespace

long long WeightSystem::total() const {
  long long t = 0;
  for (const auto& [w, m] : entries) t += m;
  return t;
}

std::shared_ptr<const WeightSystem> weight_system(const Weight& lambda) {
  const uint64_t key = cache_key(lambda);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto ws = compute_weight_system(lambda);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, std::move(ws)).first->second;
}

DecompositionTable decompose_oracle(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank())
    throw RankError("decompose_oracle: rank mismatch " + lambda.str() + " vs " + mu.str());
  const RankData& d = rank_data(lambda.rank());
  const auto wl = weight_system(lambda);
  const auto wm = weight_system(mu);

  std::unordered_map<uint64_t, std::pair<Dyn, long long>> product;
  product.reserve(wl->entries.size() * 4);
  for (const auto& [a, ma] : wl->entries)
    for (const auto& [b, mb] : wm->entries) {
      Dyn w{0, 0, 0};
      for (int i = 0; i < d.n; ++i) w[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)];
      auto& slot = product[key_of(d, w)];
      slot.first = w;
      slot.second += static_cast<long long>(ma) * mb;
    }

  // Peel from the top in an order refining dominance: descending rho-height
  // (row sums of the Gram matrix; equals the level for SU(3)), ties broken
  // lexicographically.
  std::vector<std::pair<Dyn, long long>> order;
  order.reserve(product.size());
  for (const auto& [k, v] : product) order.push_back(v);
  const auto fheight = [&](const Dyn& w) {
    long long h = 0;
    for (int i = 0; i < d.n; ++i) h += static_cast<long long>(d.height_coef[static_cast<size_t>(i)]) * w[static_cast<size_t>(i)];
    return h;
  };
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const long long ha = fheight(a.first), hb = fheight(b.first);
    if (ha != hb) return ha > hb;
    return a.first > b.first;
  });

  DecompositionTable table;
  table.lambda = lambda;
  table.mu = mu;
  std::vector<std::pair<Weight, int>> found;
  for (const auto& entry : order) {
    const Dyn& w = entry.first;
    const long long coeff = product.find(key_of(d, w))->second.second;
    if (coeff == 0) continue;
    if (coeff < 0) throw Error("oracle peel-off produced a negative coefficient");
    for (int i = 0; i < d.n; ++i)
      if (w[static_cast<size_t>(i)] < 0) throw Error("oracle peel-off reached a non-dominant maximum");
    const Weight nu(std::span<const int>(w.data(), static_cast<size_t>(d.n)));
    found.emplace_back(nu, static_cast<int>(coeff));
    const auto wn = weight_system(nu);
    for (const auto& [u, m] : wn->entries) {
      auto it = product.find(key_of(d, u));
      if (it == product.end()) throw Error("oracle peel-off left the product support");
      it->second.second -= coeff * m;
      if (it->second.second < 0) throw Error("oracle peel-off produced a negative coefficient");
    }
  }
  std::sort(found.begin(), found.end());
  for (auto& [nu, m] : found) table.entries.push_back({nu, m});
  return table;
}

long long weyl_dim(const Weight& lambda) {
  const RankData& d = rank_data(lambda.rank());
  Dyn lr{0, 0, 0}, rho{0, 0, 0};
  for (int i = 0; i < d.n; ++i) {
    lr[static_cast<size_t>(i)] = lambda[i] + 1;
    rho[static_cast<size_t>(i)] = 1;
  }
  long long num = 1, den = 1;
  for (const auto& [adyn, arc] : d.pos_roots) {
    num *= sform(d, lr, adyn);
    den *= sform(d, rho, adyn);
    const long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw Error("Weyl dimension did not reduce to an integer");
  return num;
}

Su4PolytopeReport su4_polytope_check() {
  Su4PolytopeReport rep;
  const Weight lambda = Weight::su4(1, 2, 2);
  const Weight mu = Weight::su4(2, 2, 1);
  const DecompositionTable table = decompose_oracle(lambda, mu);
  rep.total = table.total_multiplicity();

  using V3 = std::array<long long, 3>;
  const std::vector<V3> verts = {
      {0, 0, 0}, {0, 0, 4}, {4, 0, 0}, {6, 1, 0}, {0, 1, 6}, {0, 6, 0}, {2, 0, 6}, {6, 0, 2},
      {4, 4, 0}, {0, 4, 4}, {5, 0, 5}, {3, 4, 3}, {1, 5, 3}, {3, 5, 1}, {1, 6, 1}, {4, 2, 4}};

  const auto mult_of = [&](int a, int b, int c) { return table.mult_of(Weight::su4(a, b, c)); };

  rep.vertices_mult1_ok = true;
  for (const auto& v : verts) {
    if (mult_of(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])) != 1) {
      rep.vertices_mult1_ok = false;
      std::ostringstream os;
      os << "vertex (" << v[0] << "," << v[1] << "," << v[2] << ") does not have multiplicity 1";
      rep.failures.push_back(os.str());
    }
  }
  rep.mult2_ok = mult_of(5, 0, 1) == 2 && mult_of(1, 0, 5) == 2;
  if (!rep.mult2_ok) rep.failures.push_back("(5,0,1)/(1,0,5) multiplicity != 2");
  rep.mult5_ok = mult_of(2, 0, 2) == 5;
  if (!rep.mult5_ok) rep.failures.push_back("(2,0,2) multiplicity != 5");

  // nu2 = 0 must be a supporting face, and the quoted higher-multiplicity
  // points sit on it.
  int min_n2 = 1 << 20;
  for (const auto& e : table.entries) min_n2 = std::min(min_n2, e.nu[1]);
  rep.face_ok = (min_n2 == 0);
  if (!rep.face_ok) rep.failures.push_back("nu2 = 0 is not a face of the weight polytope");

  // Convex-hull membership by brute-force facet enumeration over vertex
  // triples; all arithmetic exact.
  struct Facet {
    V3 n;
    long long d;
  };
  std::vector<Facet> facets;
  const auto sub = [](const V3& a, const V3& b) { return V3{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
  const auto cross = [](const V3& a, const V3& b) {
    return V3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  const auto dot = [](const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      for (size_t k = j + 1; k < verts.size(); ++k) {
        const V3 n = cross(sub(verts[j], verts[i]), sub(verts[k], verts[i]));
        if (n == V3{0, 0, 0}) continue;
        const long long dd = dot(n, verts[i]);
        bool all_le = true, all_ge = true;
        for (const auto& v : verts) {
          const long long s = dot(n, v);
          all_le &= s <= dd;
          all_ge &= s >= dd;
        }
        if (all_le) facets.push_back({n, dd});
        if (all_ge) facets.push_back({{-n[0], -n[1], -n[2]}, -dd});
      }
  rep.hull_ok = !facets.empty();
  for (const auto& e : table.entries) {
    const V3 q{e.nu[0], e.nu[1], e.nu[2]};
    for (const auto& f : facets) {
      if (dot(f.n, q) > f.d) {
        rep.hull_ok = false;
        rep.failures.push_back("weight " + e.nu.str() + " falls outside the vertex hull");
        break;
      }
    }
  }

  const DecompositionTable conj_table = decompose_oracle(lambda, mu.conjugate());
  rep.theorem1_ok = table.total_multiplicity() == conj_table.total_multiplicity() &&
                    table.sum_of_squares() == conj_table.sum_of_squares();
  if (!rep.theorem1_ok) rep.failures.push_back("conjugation totals differ");
  return rep;
}

}  // namespace liecomb::oracle
