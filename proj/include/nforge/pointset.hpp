#ifndef NFORGE_POINTSET_HPP_
#define NFORGE_POINTSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nforge {

// A finite universe of points 0..n-1. Sets over it are single machine words,
// so n is capped at 64.
class Universe {
 public:
  explicit Universe(int n) : n_(n) {
    if (n < 1 || n > 64) {
      throw std::invalid_argument("universe size must be in 1..64, got " +
                                  std::to_string(n));
    }
  }

  int size() const { return n_; }

  std::uint64_t full_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  friend bool operator==(Universe a, Universe b) { return a.n_ == b.n_; }
  friend bool operator!=(Universe a, Universe b) { return a.n_ != b.n_; }

 private:
  int n_;
};

// A subset of a universe, stored as a word mask. Value type; all operations
// are pure. Ordered by mask value, which fixes every canonical element order
// in the project.
class PointSet {
 public:
  PointSet(Universe u, std::uint64_t bits) : bits_(bits), n_(u.size()) {
    if (bits & ~u.full_mask()) {
      throw std::invalid_argument("point set has members outside universe");
    }
  }

  static PointSet empty(Universe u) { return PointSet(u, 0); }
  static PointSet full(Universe u) { return PointSet(u, u.full_mask()); }
  static PointSet single(Universe u, int x) {
    if (x < 0 || x >= u.size()) {
      throw std::invalid_argument("point " + std::to_string(x) +
                                  " outside universe");
    }
    return PointSet(u, std::uint64_t{1} << x);
  }
  static PointSet of(Universe u, std::initializer_list<int> xs) {
    std::uint64_t m = 0;
    for (int x : xs) m |= PointSet::single(u, x).bits();
    return PointSet(u, m);
  }

  Universe universe() const { return Universe(n_); }
  std::uint64_t bits() const { return bits_; }
  int count() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool contains(int x) const { return (bits_ >> x) & 1; }
  bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

  PointSet complement() const {
    return PointSet(universe(), ~bits_ & universe().full_mask());
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int x = 0; x < n_; ++x) {
      if (contains(x)) out.push_back(x);
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int x : members()) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    return s + "}";
  }

  friend PointSet operator|(PointSet a, PointSet b) {
    return PointSet(a.universe(), a.bits_ | b.bits_);
  }
  friend PointSet operator&(PointSet a, PointSet b) {
    return PointSet(a.universe(), a.bits_ & b.bits_);
  }
  friend PointSet operator-(PointSet a, PointSet b) {
    return PointSet(a.universe(), a.bits_ & ~b.bits_);
  }

  friend bool operator==(PointSet a, PointSet b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(PointSet a, PointSet b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  std::uint64_t bits_;
  std::uint8_t n_;
};

}  // namespace nforge

#endif  // NFORGE_POINTSET_HPP_
