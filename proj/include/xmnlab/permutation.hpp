#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xmnlab {

using point_t = std::uint32_t;

// Raised when an operation would exceed a configured size cap
// (group order, subset size, oracle limits).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bijection on {0, ..., degree-1}; images()[i] is the image of point i.
class Permutation {
 public:
  // Identity on `degree` points.
  explicit Permutation(std::size_t degree = 1);

  // Validates that `images` is a bijection on 0..size-1.
  explicit Permutation(std::vector<point_t> images);

  // Parses cycle notation such as "(0 1 2)(3 4)" on `degree` points.
  // "()" and "" both denote the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::span<const point_t> images() const { return images_; }
  point_t operator[](std::size_t i) const { return images_[i]; }

  bool is_identity() const;
  Permutation inverse() const;

  // Cycle notation, fixed points omitted; identity prints as "()".
  std::string to_cycle_string() const;

  // Lexicographic on image arrays (the canonical element order).
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<point_t> images_;
};

// (p ∘ q)(i) = p(q(i)): apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);

// Least k >= 1 with p^k = identity (lcm of cycle lengths).
std::uint64_t perm_order(const Permutation& p);

// Image array relabeled to live on `degree` points, points shifted by `offset`.
Permutation shifted(const Permutation& p, std::size_t offset, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace xmnlab
