#include "motivic/bundle.hpp"

#include "motivic/error.hpp"

namespace motivic {

Bits trimmed(Bits bits) {
  while (!bits.empty() && !bits.back()) bits.pop_back();
  return bits;
}

Bits xor_bits(const Bits& a, const Bits& b) {
  Bits r(std::max(a.size(), b.size()), false);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const bool x = i < a.size() && a[i];
    const bool y = i < b.size() && b[i];
    r[i] = x != y;
  }
  return trimmed(std::move(r));
}

bool is_zero(const Bits& bits) {
  for (bool b : bits) {
    if (b) return false;
  }
  return true;
}

void BundleClass::set(std::size_t i, bool value) {
  if (i >= bits_.size()) bits_.resize(i + 1, false);
  bits_[i] = value;
}

BundleClass bundle_tensor(const BundleClass& p, const BundleClass& q) {
  if (p.space() != q.space()) {
    throw Error(ErrorKind::SpaceMismatch,
                "bundle classes on '" + p.space() + "' and '" + q.space() + "'");
  }
  std::vector<bool> bits(std::max(p.dim(), q.dim()), false);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = p.bit(i) != q.bit(i);
  return BundleClass(p.space(), std::move(bits));
}

}  // namespace motivic
