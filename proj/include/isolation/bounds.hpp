#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isolation {

/// C(k, 2) + 2: edges per clique constituent of a special graph plus one
/// tree edge.
inline std::size_t t_k(int k) {
  if (k < 1) throw std::invalid_argument("t_k needs k >= 1, got " + std::to_string(k));
  const auto kk = static_cast<std::size_t>(k);
  return kk * (kk - 1) / 2 + 2;
}

/// floor((m + 1) / t_k): the edge bound on the isolation number of a
/// connected m-edge graph that is not a k-clique.
inline std::size_t bound_value(std::size_t m, int k) { return (m + 1) / t_k(k); }

/// True iff size attains the bound exactly, i.e. size * t_k == m + 1.
inline bool attains_bound(std::size_t size, std::size_t m, int k) { return size * t_k(k) == m + 1; }

}  // namespace isolation
