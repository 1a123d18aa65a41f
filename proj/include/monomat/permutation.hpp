#pragma once

#include <monomat/dense_matrix.hpp>
#include <monomat/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace monomat {

/// A bijection of {1..n}. All public indices are 1-based; `at(i)` is sigma(i).
///
/// The matrix realization is P_sigma = [delta_{sigma(i), j}], so row i has its
/// single 1 in column sigma(i).
class Permutation {
 public:
  /// Validates that `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    if (images_.empty()) throw InvalidArgument("permutation order must be at least 1");
    std::vector<bool> seen(images_.size() + 1, false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      const std::size_t v = images_[i];
      if (v < 1 || v > images_.size())
        throw InvalidArgument("permutation image " + std::to_string(v) + " out of range at position " +
                              std::to_string(i + 1));
      if (seen[v]) throw InvalidArgument("permutation image " + std::to_string(v) + " repeated");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    if (n == 0) throw InvalidArgument("permutation order must be at least 1");
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i + 1;
    return Permutation(std::move(images), Unchecked{});
  }

  /// pi_n(i) = (i mod n) + 1.
  static Permutation cyclic(std::size_t n) {
    if (n == 0) throw InvalidArgument("permutation order must be at least 1");
    std::vector<std::size_t> images(n);
    for (std::size_t i = 1; i <= n; ++i) images[i - 1] = (i % n) + 1;
    return Permutation(std::move(images), Unchecked{});
  }

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t at(std::size_t i) const { return images_.at(i - 1); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
    return Permutation(std::move(inv), Unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::size_t> images, Unchecked) : images_(std::move(images)) {}

  std::vector<std::size_t> images_;
};

/// i -> tau(sigma(i)); to_matrix(compose(s, t)) == to_matrix(s) * to_matrix(t).
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size())
    throw DimensionMismatch("compose: orders " + std::to_string(sigma.size()) + " and " +
                            std::to_string(tau.size()));
  std::vector<std::size_t> images(sigma.size());
  for (std::size_t i = 1; i <= sigma.size(); ++i) images[i - 1] = tau.at(sigma.at(i));
  return Permutation(std::move(images));
}

inline Permutation inverse(const Permutation& sigma) { return sigma.inverse(); }

/// sigma(x): entry i is x_{sigma(i)}. Equals to_matrix(sigma) * x.
inline RationalVector permute(const Permutation& sigma, const RationalVector& x) {
  if (x.size() != sigma.size())
    throw DimensionMismatch("permute: permutation order " + std::to_string(sigma.size()) +
                            " vs vector length " + std::to_string(x.size()));
  RationalVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[sigma.images()[i] - 1];
  return out;
}

inline DenseMatrix to_matrix(const Permutation& sigma) {
  DenseMatrix m(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) m(i, sigma.images()[i] - 1) = 1;
  return m;
}

struct CycleDecomposition {
  Permutation gamma;               // Q = to_matrix(gamma)
  std::vector<std::size_t> sizes;  // block sizes, in block order
  /// order[i] (0-based position) is the original 1-based index placed at
  /// position i + 1; it is gamma^{-1} as an image list.
  std::vector<std::size_t> order;
};

/// Canonical cycle decomposition: cycles sorted by their minimal element,
/// each traversed from that element along sigma. With Q = to_matrix(gamma),
/// Q^T P_sigma Q is the direct sum of C_{sizes[i]}.
inline CycleDecomposition cycle_decomposition(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<bool> visited(n + 1, false);
  std::vector<std::size_t> order;
  std::vector<std::size_t> sizes;
  order.reserve(n);
  for (std::size_t start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !visited[i]; i = sigma.at(i)) {
      visited[i] = true;
      order.push_back(i);
      ++len;
    }
    sizes.push_back(len);
  }
  Permutation gamma = Permutation(order).inverse();
  return {std::move(gamma), std::move(sizes), std::move(order)};
}

}  // namespace monomat
