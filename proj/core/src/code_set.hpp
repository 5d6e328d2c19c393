#pragma once

// Internal: membership sets keyed by Mat2::code() and an incremental
// closure builder shared by the group constructors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "gl2lab/error.hpp"
#include "gl2lab/mat2.hpp"

namespace gl2lab::detail {

// Dense bitmap over all n^4 codes when that fits in 2^27 bits (n <= 107),
// hash set otherwise.
class CodeSet {
 public:
  explicit CodeSet(std::uint32_t n) {
    const std::uint64_t m = n;
    const std::uint64_t universe = m * m * m * m;
    if (universe <= (std::uint64_t{1} << 27)) {
      dense_ = true;
      bits_.assign((universe + 63) / 64, 0);
    }
  }

  bool insert(std::uint64_t code) {
    if (dense_) {
      std::uint64_t& word = bits_[code >> 6];
      const std::uint64_t mask = std::uint64_t{1} << (code & 63U);
      if (word & mask) return false;
      word |= mask;
      return true;
    }
    return sparse_.insert(code).second;
  }

  bool contains(std::uint64_t code) const {
    if (dense_) return (bits_[code >> 6] >> (code & 63U)) & 1U;
    return sparse_.count(code) != 0;
  }

 private:
  bool dense_ = false;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> sparse_;
};

// Maintains the closure of a growing generator list.
class IncrementalClosure {
 public:
  explicit IncrementalClosure(std::uint32_t n) : n_(n), seen_(n), cap_(gl2_order(n)) {
    const Mat2 id = Mat2::identity(n);
    seen_.insert(id.code());
    elements_.push_back(id);
  }

  bool contains(const Mat2& m) const { return seen_.contains(m.code()); }

  void add_generator(const Mat2& g) {
    generators_.push_back(g);
    // A generator already inside the finite group changes nothing.
    if (contains(g)) return;
    // Right-multiply every known element by every generator until stable.
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (const auto& gen : generators_) {
        const Mat2 p = mul_same_modulus(elements_[i], gen);
        if (seen_.insert(p.code())) {
          elements_.push_back(p);
          if (elements_.size() > cap_) {
            throw Error(ErrorCode::ClosureOverflow, "closure exceeded |GL_2(Z/nZ)|");
          }
        }
      }
    }
  }

  const std::vector<Mat2>& generators() const { return generators_; }
  std::vector<Mat2>& elements() { return elements_; }

  std::vector<Mat2> take_sorted_elements() {
    std::vector<std::uint64_t> codes;
    codes.reserve(elements_.size());
    for (const auto& m : elements_) codes.push_back(m.code());
    std::sort(codes.begin(), codes.end());
    std::vector<Mat2> out;
    out.reserve(codes.size());
    for (const auto c : codes) out.push_back(Mat2::from_code(n_, c));
    elements_.clear();
    return out;
  }

 private:
  std::uint32_t n_;
  CodeSet seen_;
  std::uint64_t cap_;
  std::vector<Mat2> generators_;
  std::vector<Mat2> elements_;
};

}  // namespace gl2lab::detail
