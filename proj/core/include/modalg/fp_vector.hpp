#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace modalg {

// Residue arithmetic for the supported primes.
bool is_supported_prime(unsigned p);
unsigned fp_inverse(unsigned a, unsigned p);

/// A vector over F_p, p in {2, 3, 5}.
///
/// Storage is packed into 64-bit words: one bit per coordinate for p = 2,
/// one byte per coordinate otherwise. Coordinates are always reduced, so
/// two vectors compare equal iff their words do.
class FpVector {
 public:
  FpVector() = default;
  FpVector(unsigned p, std::size_t dim);

  static FpVector unit(unsigned p, std::size_t dim, std::size_t i);
  static FpVector from_coords(unsigned p, std::span<const int> coords);

  unsigned prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return dim_; }

  unsigned operator[](std::size_t i) const noexcept {
    if (p_ == 2) return static_cast<unsigned>((words_[i >> 6] >> (i & 63)) & 1u);
    return static_cast<unsigned>((words_[i >> 3] >> ((i & 7) * 8)) & 0xffu);
  }
  void set(std::size_t i, unsigned value);

  bool is_zero() const noexcept;
  // Index of the first nonzero coordinate, or dim() for the zero vector.
  std::size_t leading_index() const noexcept;
  std::size_t weight() const noexcept;

  // this += a * other
  FpVector& add_scaled(const FpVector& other, unsigned a);
  FpVector& scale(unsigned a);
  FpVector& operator+=(const FpVector& other) { return add_scaled(other, 1); }
  FpVector& operator-=(const FpVector& other) { return add_scaled(other, p_ - 1); }
  FpVector operator-() const;

  friend FpVector operator+(FpVector a, const FpVector& b) { return a += b; }
  friend FpVector operator-(FpVector a, const FpVector& b) { return a -= b; }
  friend FpVector operator*(unsigned a, FpVector v) { return v.scale(a); }

  friend bool operator==(const FpVector& a, const FpVector& b) noexcept {
    return a.p_ == b.p_ && a.dim_ == b.dim_ && a.words_ == b.words_;
  }
  friend bool operator<(const FpVector& a, const FpVector& b) noexcept;

  // Calls f(index, coefficient) for every nonzero coordinate, ascending.
  template <typename F>
  void for_each_nonzero(F&& f) const {
    if (p_ == 2) {
      for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits) {
          const int b = std::countr_zero(bits);
          f(w * 64 + static_cast<std::size_t>(b), 1u);
          bits &= bits - 1;
        }
      }
      return;
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        const int byte = std::countr_zero(word) / 8;
        f(w * 8 + static_cast<std::size_t>(byte),
          static_cast<unsigned>((word >> (byte * 8)) & 0xffu));
        word &= ~(std::uint64_t{0xff} << (byte * 8));
      }
    }
  }

  std::vector<int> coords() const;
  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  unsigned p_ = 2;
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

FpVector concat(const FpVector& a, const FpVector& b);
FpVector slice(const FpVector& v, std::size_t begin, std::size_t length);

struct FpVectorHash {
  std::size_t operator()(const FpVector& v) const noexcept { return v.hash(); }
};

}  // namespace modalg
