#include "liecomb/weights.hpp"

#include <algorithm>
#include <sstream>

namespace liecomb {

Weight::Weight(std::span<const int> labels) {
  if (labels.size() < 1 || labels.size() > 3)
    throw RankError("weight must have 1..3 Dynkin labels, got " + std::to_string(labels.size()));
  rank_ = static_cast<int>(labels.size()) + 1;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0)
      throw Error("Dynkin labels must be non-negative, got " + std::to_string(labels[i]));
    labels_[i] = labels[i];
  }
}

int Weight::level() const {
  int s = 0;
  for (int i = 0; i < size(); ++i) s += labels_[static_cast<size_t>(i)];
  return s;
}

Weight Weight::conjugate() const {
  Weight w = *this;
  std::reverse(w.labels_.begin(), w.labels_.begin() + size());
  return w;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << labels_[static_cast<size_t>(i)];
  os << ')';
  return os.str();
}

GlPartition::GlPartition(int a, int b, int c) : parts{a, b, c} {
  if (!(a >= b && b >= c))
    throw Error("GL(3) partition must be weakly decreasing: {" + std::to_string(a) + "," +
                std::to_string(b) + "," + std::to_string(c) + "}");
}

std::string GlPartition::str() const {
  std::ostringstream os;
  os << '{' << parts[0] << ',' << parts[1] << ',' << parts[2] << '}';
  return os.str();
}

int Third::as_int() const {
  if (!is_integer()) throw Error("third " + std::to_string(num3) + "/3 is not an integer");
  return num3 / 3;
}

static void require_rank3(const Weight& w, const char* op) {
  if (w.rank() != 3)
    throw RankError(std::string(op) + " requires an SU(3) weight, got rank " + std::to_string(w.rank()));
}

int triality(const Weight& lambda) {
  require_rank3(lambda, "triality");
  return detail::triality3(lambda[0], lambda[1]);
}

Third eps_dot(int i, const Weight& lambda) {
  require_rank3(lambda, "eps_dot");
  const int l1 = lambda[0], l2 = lambda[1];
  switch (i) {
    case 1: return {2 * l1 + l2};
    case 2: return {-(l1 - l2)};
    case 3: return {-(l1 + 2 * l2)};
    default: throw Error("eps_dot index must be 1, 2 or 3");
  }
}

EpsWeight eps_weight(const Weight& lambda) {
  return {{eps_dot(1, lambda), eps_dot(2, lambda), eps_dot(3, lambda)}};
}

GlPartition to_gl3(const Weight& lambda, int l3) {
  require_rank3(lambda, "to_gl3");
  return GlPartition(lambda[0] + lambda[1] + l3, lambda[1] + l3, l3);
}

GlPartition to_gl3_dual(const Weight& nu, int n3) {
  require_rank3(nu, "to_gl3_dual");
  return GlPartition(-n3, -nu[1] - n3, -nu[0] - nu[1] - n3);
}

bool triality_conserved(const Weight& lambda, const Weight& mu, const Weight& nu) {
  require_rank3(lambda, "triality_conserved");
  require_rank3(mu, "triality_conserved");
  require_rank3(nu, "triality_conserved");
  return detail::conserved3(lambda[0], lambda[1], mu[0], mu[1], nu[0], nu[1]);
}

int nu3(const Weight& lambda, const Weight& mu, const Weight& nu) {
  if (!triality_conserved(lambda, mu, nu))
    throw NotInProduct("triality violated for " + lambda.str() + " (x) " + mu.str() + " -> " + nu.str());
  return (lambda[0] + 2 * lambda[1] + mu[0] + 2 * mu[1] - nu[0] - 2 * nu[1]) / 3;
}

}  // namespace liecomb
