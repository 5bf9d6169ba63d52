#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <map>
#include <ranges>
#include <string>

namespace termcomp {

using SparseVector = std::map<std::string, double, std::less<>>;

template <class M>
concept SparseMap = requires(const M& m) {
  { m.begin()->second } -> std::convertible_to<double>;
  { m.find(m.begin()->first) } -> std::same_as<typename M::const_iterator>;
  { m.size() } -> std::convertible_to<std::size_t>;
};

template <SparseMap M>
double squared_norm(const M& v) {
  double s = 0;
  for (const auto& [_, w] : v) s += static_cast<double>(w) * static_cast<double>(w);
  return s;
}

template <SparseMap A, SparseMap B>
double dot(const A& a, const B& b) {
  if (b.size() < a.size()) return dot(b, a);
  double s = 0;
  for (const auto& [k, w] : a) {
    if (auto it = b.find(k); it != b.end()) s += static_cast<double>(w) * it->second;
  }
  return s;
}

/// Cosine over the union vocabulary; absent words count as 0. A zero-norm
/// operand yields 0.
template <SparseMap A, SparseMap B>
double cosine(const A& a, const B& b) {
  const double na = squared_norm(a);
  const double nb = squared_norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  // sqrt(n*n) == n exactly, so cosine(a, a) is exactly 1
  const double c = dot(a, b) / std::sqrt(na * nb);
  return std::clamp(c, -1.0, 1.0);
}

/// Scales to unit Euclidean length in place; empty or zero vectors are left alone.
inline void normalize_l2(SparseVector& v) {
  const double n = std::sqrt(squared_norm(v));
  if (n == 0.0) return;
  for (auto& [_, w] : v) w /= n;
}

}  // namespace termcomp
