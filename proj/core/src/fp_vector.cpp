#include "modalg/fp_vector.hpp"

#include <algorithm>
#include <sstream>

#include "modalg/error.hpp"

namespace modalg {

bool is_supported_prime(unsigned p) { return p == 2 || p == 3 || p == 5; }

unsigned fp_inverse(unsigned a, unsigned p) {
  a %= p;
  if (a == 0) throw InvalidInput("fp_inverse: zero has no inverse");
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw InvalidInput("fp_inverse: modulus is not prime");
}

namespace {

std::size_t word_count(unsigned p, std::size_t dim) {
  return p == 2 ? (dim + 63) / 64 : (dim + 7) / 8;
}

}  // namespace

FpVector::FpVector(unsigned p, std::size_t dim) : p_(p), dim_(dim), words_(word_count(p, dim), 0) {
  if (!is_supported_prime(p)) throw InvalidInput("unsupported prime " + std::to_string(p));
}

FpVector FpVector::unit(unsigned p, std::size_t dim, std::size_t i) {
  FpVector v(p, dim);
  v.set(i, 1);
  return v;
}

FpVector FpVector::from_coords(unsigned p, std::span<const int> coords) {
  FpVector v(p, coords.size());
  const int ip = static_cast<int>(p);
  for (std::size_t i = 0; i < coords.size(); ++i) v.set(i, static_cast<unsigned>(((coords[i] % ip) + ip) % ip));
  return v;
}

void FpVector::set(std::size_t i, unsigned value) {
  value %= p_;
  if (p_ == 2) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
    return;
  }
  const int shift = static_cast<int>((i & 7) * 8);
  words_[i >> 3] = (words_[i >> 3] & ~(std::uint64_t{0xff} << shift)) | (std::uint64_t{value} << shift);
}

bool FpVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t FpVector::leading_index() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] == 0) continue;
    const auto tz = static_cast<std::size_t>(std::countr_zero(words_[w]));
    return p_ == 2 ? w * 64 + tz : w * 8 + tz / 8;
  }
  return dim_;
}

std::size_t FpVector::weight() const noexcept {
  std::size_t n = 0;
  for_each_nonzero([&](std::size_t, unsigned) { ++n; });
  return n;
}

FpVector& FpVector::add_scaled(const FpVector& other, unsigned a) {
  if (other.p_ != p_ || other.dim_ != dim_) throw InvalidInput("FpVector: prime or dimension mismatch");
  a %= p_;
  if (a == 0) return *this;
  if (p_ == 2) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t src = other.words_[w];
    if (src == 0) continue;
    std::uint64_t dst = words_[w];
    std::uint64_t out = 0;
    for (int b = 0; b < 8; ++b) {
      const unsigned x = static_cast<unsigned>((dst >> (b * 8)) & 0xffu);
      const unsigned y = static_cast<unsigned>((src >> (b * 8)) & 0xffu);
      out |= std::uint64_t{(x + a * y) % p_} << (b * 8);
    }
    words_[w] = out;
  }
  return *this;
}

FpVector& FpVector::scale(unsigned a) {
  a %= p_;
  if (a == 1) return *this;
  if (a == 0) {
    std::fill(words_.begin(), words_.end(), 0);
    return *this;
  }
  // p == 2 never gets here.
  for (auto& word : words_) {
    std::uint64_t out = 0;
    for (int b = 0; b < 8; ++b) {
      const unsigned x = static_cast<unsigned>((word >> (b * 8)) & 0xffu);
      out |= std::uint64_t{(x * a) % p_} << (b * 8);
    }
    word = out;
  }
  return *this;
}

FpVector FpVector::operator-() const {
  FpVector out = *this;
  return out.scale(p_ - 1);
}

bool operator<(const FpVector& a, const FpVector& b) noexcept {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
  for (std::size_t i = 0; i < a.dim_; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<int> FpVector::coords() const {
  std::vector<int> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = static_cast<int>((*this)[i]);
  return out;
}

std::string FpVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dim_; ++i) os << (i ? "," : "") << (*this)[i];
  os << ']';
  return os.str();
}

std::size_t FpVector::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ dim_;
  for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ull;
  return h;
}

FpVector concat(const FpVector& a, const FpVector& b) {
  if (a.prime() != b.prime()) throw InvalidInput("concat: prime mismatch");
  FpVector out(a.prime(), a.dim() + b.dim());
  a.for_each_nonzero([&](std::size_t i, unsigned c) { out.set(i, c); });
  b.for_each_nonzero([&](std::size_t i, unsigned c) { out.set(a.dim() + i, c); });
  return out;
}

FpVector slice(const FpVector& v, std::size_t begin, std::size_t length) {
  FpVector out(v.prime(), length);
  v.for_each_nonzero([&](std::size_t i, unsigned c) {
    if (i >= begin && i < begin + length) out.set(i - begin, c);
  });
  return out;
}

}  // namespace modalg
