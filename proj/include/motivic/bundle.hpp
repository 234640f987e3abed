#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace motivic {

// F2 coordinates with trailing zeros removed. The trivial bundle is the empty vector.
using Bits = std::vector<bool>;

Bits trimmed(Bits bits);
Bits xor_bits(const Bits& a, const Bits& b);
bool is_zero(const Bits& bits);

// Isomorphism class of a principal Z2-bundle on a registered space, as a
// vector over that space's declared generators. Tensor product is XOR.
class BundleClass {
 public:
  BundleClass() = default;
  BundleClass(std::string space, std::size_t dim) : space_(std::move(space)), bits_(dim, false) {}
  BundleClass(std::string space, std::vector<bool> bits)
      : space_(std::move(space)), bits_(std::move(bits)) {}

  const std::string& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return bits_.size(); }
  const std::vector<bool>& bits() const noexcept { return bits_; }
  bool bit(std::size_t i) const { return i < bits_.size() && bits_[i]; }
  void set(std::size_t i, bool value = true);
  bool is_trivial() const { return is_zero(bits_); }
  Bits key() const { return trimmed(bits_); }

  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.space_ == b.space_ && trimmed(a.bits_) == trimmed(b.bits_);
  }

 private:
  std::string space_;
  std::vector<bool> bits_;
};

// [P]·[Q] = [P ⊗_{Z2} Q]. Throws SpaceMismatch.
BundleClass bundle_tensor(const BundleClass& p, const BundleClass& q);

}  // namespace motivic
