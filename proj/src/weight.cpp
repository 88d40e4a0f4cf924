#include "ktype/weight.hpp"

#include <algorithm>
#include <ostream>

namespace ktype {

const char* to_string(Lattice l) {
  switch (l) {
    case Lattice::t:
      return "t";
    case Lattice::tM:
      return "t_M";
    case Lattice::a:
      return "a";
  }
  return "?";
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

void Weight::require_same(const Weight& o) const {
  if (lattice_ != o.lattice_ || coords_.size() != o.coords_.size()) {
    throw LatticeError(std::string("weight lattice mismatch: ") + to_string(lattice_) + "^" +
                       std::to_string(coords_.size()) + " vs " + to_string(o.lattice_) + "^" +
                       std::to_string(o.coords_.size()));
  }
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  r += o;
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  r -= o;
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Weight& Weight::operator+=(const Weight& o) {
  require_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight operator*(Coord k, const Weight& w) {
  Weight r = w;
  for (auto& c : r.coords_) c *= k;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  os << '(';
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os << ')';
}

HalfWeight::HalfWeight(const Weight& w) : lattice_(w.lattice()), doubled_(w.coords()) {
  for (auto& c : doubled_) c *= 2;
}

bool HalfWeight::is_integral() const {
  return std::all_of(doubled_.begin(), doubled_.end(), [](Coord c) { return c % 2 == 0; });
}

Weight HalfWeight::to_weight() const {
  if (!is_integral()) {
    throw LatticeError("half-integral weight is not integral");
  }
  std::vector<Coord> c(doubled_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = doubled_[i] / 2;
  return Weight(lattice_, std::move(c));
}

HalfWeight HalfWeight::operator+(const HalfWeight& o) const {
  if (lattice_ != o.lattice_ || rank() != o.rank()) throw LatticeError("half-weight lattice mismatch");
  HalfWeight r = *this;
  for (std::size_t i = 0; i < r.doubled_.size(); ++i) r.doubled_[i] += o.doubled_[i];
  return r;
}

HalfWeight HalfWeight::operator-(const HalfWeight& o) const { return *this + (-o); }

HalfWeight HalfWeight::operator-() const {
  HalfWeight r = *this;
  for (auto& c : r.doubled_) c = -c;
  return r;
}

std::ostream& operator<<(std::ostream& os, const HalfWeight& w) {
  os << '(';
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) os << ',';
    Coord d = w.doubled()[i];
    if (d % 2 == 0)
      os << d / 2;
    else
      os << d << "/2";
  }
  return os << ')';
}

Coord dot(const std::vector<Coord>& a, const std::vector<Coord>& b) {
  if (a.size() != b.size()) throw LatticeError("dot product of vectors of different length");
  Coord s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace ktype
