#ifndef SP62V_PERM_HPP
#define SP62V_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sp62v/cycle_type.hpp"

namespace sp62v {

// Permutation of {0, ..., n-1}. All I/O uses 1-based disjoint-cycle notation;
// the composition convention is apply-left-first throughout:
// (g * h)(pt) = h(g(pt)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<uint8_t> images);
  static Perm identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  uint8_t operator[](int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<uint8_t>& images() const { return img_; }
  bool is_identity() const;

  // Apply-left-first product: (*this) then o.
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  // g * x * g^-1 (same convention), i.e. x with points relabeled through g^-1.
  static Perm conjugate(const Perm& x, const Perm& g);

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  int count_fixed() const;

  // 1-based cycle notation, cycles sorted by smallest member, fixed points
  // omitted; "()" for the identity.
  std::string cycle_str() const;
  static Perm parse_cycles(const std::string& text, int degree);

 private:
  std::vector<uint8_t> img_;
};

CycleType cycle_type(const Perm& g);

struct PermHash {
  size_t operator()(const Perm& p) const;
};

}  // namespace sp62v

#endif
