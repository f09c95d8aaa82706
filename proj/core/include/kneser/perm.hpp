#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace kneser {

/// Permutation of the four vertices {0,1,2,3} of a tetrahedron.
class Perm4 {
 public:
  constexpr Perm4() : image_{0, 1, 2, 3} {}
  constexpr Perm4(int a, int b, int c, int d)
      : image_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
               static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

  constexpr int operator[](int v) const { return image_[v]; }

  constexpr Perm4 inverse() const {
    Perm4 out;
    for (int i = 0; i < 4; ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return out;
  }

  /// (*this) after `inner`: v -> this[inner[v]].
  constexpr Perm4 operator*(const Perm4& inner) const {
    Perm4 out;
    for (int i = 0; i < 4; ++i) out.image_[i] = image_[inner.image_[i]];
    return out;
  }

  /// +1 for even permutations, -1 for odd ones.
  constexpr int sign() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (image_[i] > image_[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
  }

  constexpr bool is_permutation() const {
    int seen = 0;
    for (auto v : image_) {
      if (v > 3) return false;
      seen |= 1 << v;
    }
    return seen == 0xF;
  }

  constexpr bool operator==(const Perm4&) const = default;

  static constexpr Perm4 transposition(int a, int b) {
    Perm4 p;
    p.image_[a] = static_cast<std::uint8_t>(b);
    p.image_[b] = static_cast<std::uint8_t>(a);
    return p;
  }

  std::string str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + image_[i]);
    return s;
  }

 private:
  std::array<std::uint8_t, 4> image_;
};

}  // namespace kneser
