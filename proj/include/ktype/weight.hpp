#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktype {

using Coord = std::int64_t;

/// Which Cartan-type lattice a weight lives in: the maximal torus t of K,
/// the compact part t_M of the Cartan of M, or the split part a.
enum class Lattice { t, tM, a };

const char* to_string(Lattice l);

class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integral weight in a fixed lattice basis.
class Weight {
 public:
  Weight() = default;
  Weight(Lattice lattice, std::vector<Coord> coords)
      : lattice_(lattice), coords_(std::move(coords)) {}

  static Weight zero(Lattice lattice, std::size_t rank) {
    return Weight(lattice, std::vector<Coord>(rank, 0));
  }

  Lattice lattice() const { return lattice_; }
  std::size_t rank() const { return coords_.size(); }
  const std::vector<Coord>& coords() const { return coords_; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator*(Coord k, const Weight& w);

  auto operator<=>(const Weight&) const = default;

 private:
  void require_same(const Weight& o) const;

  Lattice lattice_ = Lattice::t;
  std::vector<Coord> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Weight with coordinates in (1/2)Z, stored as the integral vector 2*mu.
class HalfWeight {
 public:
  HalfWeight() = default;
  HalfWeight(Lattice lattice, std::vector<Coord> doubled)
      : lattice_(lattice), doubled_(std::move(doubled)) {}
  explicit HalfWeight(const Weight& w);

  static HalfWeight zero(Lattice lattice, std::size_t rank) {
    return HalfWeight(lattice, std::vector<Coord>(rank, 0));
  }

  Lattice lattice() const { return lattice_; }
  std::size_t rank() const { return doubled_.size(); }
  const std::vector<Coord>& doubled() const { return doubled_; }

  bool is_integral() const;
  /// Throws LatticeError when some coordinate is a proper half-integer.
  Weight to_weight() const;

  HalfWeight operator+(const HalfWeight& o) const;
  HalfWeight operator-(const HalfWeight& o) const;
  HalfWeight operator-() const;

  auto operator<=>(const HalfWeight&) const = default;

 private:
  Lattice lattice_ = Lattice::t;
  std::vector<Coord> doubled_;
};

std::ostream& operator<<(std::ostream& os, const HalfWeight& w);

/// Plain coordinate dot product (pairing of a weight with a Lie algebra vector).
Coord dot(const std::vector<Coord>& a, const std::vector<Coord>& b);

}  // namespace ktype
