#ifndef MAPSYM_PERMUTATION_HPP
#define MAPSYM_PERMUTATION_HPP

#include <stdexcept>
#include <vector>

namespace mapsym {

/// A permutation of {0, ..., n-1}, stored as its image table.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
        throw std::invalid_argument("Permutation: image table is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    return Permutation(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }

  const std::vector<int>& images() const { return images_; }

  /// this after other: (a * b)(i) == a(b(i))
  Permutation operator*(const Permutation& other) const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[i] = images_[other.images_[i]];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  bool is_involution() const {
    for (int i = 0; i < size(); ++i)
      if (images_[images_[i]] != i) return false;
    return true;
  }

  bool is_fixed_point_free() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] == i) return false;
    return true;
  }

  bool operator==(const Permutation& other) const { return images_ == other.images_; }
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

private:
  std::vector<int> images_;
};

}  // namespace mapsym

#endif
