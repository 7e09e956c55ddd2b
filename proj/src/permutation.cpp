#include "xmnlab/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace xmnlab {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) throw std::invalid_argument("permutation degree must be at least 1");
  std::iota(images_.begin(), images_.end(), point_t{0});
}

Permutation::Permutation(std::vector<point_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (point_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("image array is not a bijection on 0.." +
                                  std::to_string(images_.size() - 1));
    }
    seen[v] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<point_t> images(degree);
  if (degree == 0) throw std::invalid_argument("permutation degree must be at least 1");
  std::iota(images.begin(), images.end(), point_t{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad cycle notation \"" + std::string(text) + "\": " + why);
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<point_t> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point index");
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value >= degree) fail("point " + std::to_string(value) + " outside degree " +
                                  std::to_string(degree));
        ++pos;
      }
      if (used[value]) fail("point " + std::to_string(value) + " appears twice");
      used[value] = true;
      cycle.push_back(static_cast<point_t>(value));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<point_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<point_t>(i);
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out << ' ';
      out << i;
      first = false;
      i = images_[i];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(p.degree()) + " and " + std::to_string(q.degree()));
  }
  std::vector<point_t> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p[q[i]];
  return Permutation(std::move(images));
}

std::uint64_t perm_order(const Permutation& p) {
  std::vector<bool> done(p.degree(), false);
  std::uint64_t order = 1;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t i = start; !done[i]; i = p[i]) {
      done[i] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

Permutation shifted(const Permutation& p, std::size_t offset, std::size_t degree) {
  if (offset + p.degree() > degree) throw std::invalid_argument("shifted permutation does not fit");
  std::vector<point_t> images(degree);
  std::iota(images.begin(), images.end(), point_t{0});
  for (std::size_t i = 0; i < p.degree(); ++i) {
    images[offset + i] = static_cast<point_t>(offset + p[i]);
  }
  return Permutation(std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (point_t v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace xmnlab
