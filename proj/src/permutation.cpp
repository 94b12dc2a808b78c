#include "ample/permutation.hpp"

#include "ample/error.hpp"

#include <numeric>
#include <string>

namespace ample {

Permutation::Permutation(std::vector<std::int64_t> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (std::int64_t v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw DomainError("not a permutation: bad or repeated image " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::int64_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::int64_t a, std::int64_t b) {
  return cycle(n, {a, b});
}

Permutation Permutation::cycle(std::size_t n, const std::vector<std::int64_t>& points) {
  std::vector<std::int64_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 0 || static_cast<std::size_t>(points[i]) >= n)
      throw DomainError("cycle point out of range");
    images[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<std::int64_t>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::int64_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<std::int64_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::vector<std::vector<std::int64_t>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::int64_t> cyc;
    for (auto i = static_cast<std::int64_t>(start); !seen[static_cast<std::size_t>(i)];
         i = images_[static_cast<std::size_t>(i)]) {
      seen[static_cast<std::size_t>(i)] = 1;
      cyc.push_back(i);
    }
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

std::int64_t Permutation::order() const {
  std::int64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::int64_t>(c.size()));
  return result;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError("permutation sizes differ");
  Permutation r;
  r.images_.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r.images_[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  return r;
}

std::vector<std::pair<std::int64_t, std::int64_t>> transposition_word(const Permutation& p) {
  std::vector<std::pair<std::int64_t, std::int64_t>> word;
  for (const auto& c : p.cycles())
    for (std::size_t i = 0; i + 1 < c.size(); ++i) word.emplace_back(c[i], c[i + 1]);
  return word;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = p.size();
  for (std::int64_t v : p.images()) h = h * 1000003u ^ static_cast<std::size_t>(v);
  return h;
}

}  // namespace ample
