#include "gl2lab/subgroup_lattice.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

#include "gl2lab/error.hpp"

namespace gl2lab {

namespace {

constexpr std::size_t kMaxAmbientOrder = 8192;

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& bits) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto w : bits) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

bool test(const Bits& bits, std::size_t i) { return (bits[i >> 6] >> (i & 63U)) & 1U; }
void set(Bits& bits, std::size_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63U); }

// The ambient group as indices 0..N-1 (in sorted element order) with a full
// multiplication table.
class IndexedGroup {
 public:
  explicit IndexedGroup(const MatrixGroup& ambient) : elements_(ambient.elements()), size_(elements_.size()) {
    std::unordered_map<std::uint64_t, std::uint16_t> index;
    index.reserve(size_ * 2);
    for (std::size_t i = 0; i < size_; ++i) index.emplace(elements_[i].code(), static_cast<std::uint16_t>(i));
    table_.resize(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        table_[i * size_ + j] = index.at(mul_same_modulus(elements_[i], elements_[j]).code());
      }
    }
    identity_ = index.at(Mat2::identity(ambient.modulus()).code());
    lookup_ = std::move(index);
  }

  std::size_t size() const { return size_; }
  std::size_t words() const { return (size_ + 63) / 64; }
  std::uint16_t identity() const { return identity_; }
  std::uint16_t mul(std::uint16_t i, std::uint16_t j) const { return table_[std::size_t{i} * size_ + j]; }
  std::uint16_t index_of(const Mat2& m) const {
    const auto it = lookup_.find(m.code());
    if (it == lookup_.end()) throw Error(ErrorCode::NotASubgroup, to_string(m) + " is not in the ambient group");
    return it->second;
  }
  const Mat2& element(std::size_t i) const { return elements_[i]; }

 private:
  const std::vector<Mat2>& elements_;
  std::size_t size_;
  std::vector<std::uint16_t> table_;
  std::unordered_map<std::uint64_t, std::uint16_t> lookup_;
  std::uint16_t identity_ = 0;
};

struct Node {
  Bits bits;
  std::vector<std::uint16_t> gens;
};

// <S, extra> for a subgroup S, built as a union of right cosets S r: with T a
// union of such cosets, T is closed under right multiplication by a generator
// g as soon as r g lies in T for every coset representative r.
Node extend(const IndexedGroup& g, const Node& base, std::uint16_t extra) {
  Node out{base.bits, base.gens};
  out.gens.push_back(extra);
  std::vector<std::uint16_t> members;
  for (std::size_t w = 0; w < base.bits.size(); ++w) {
    for (std::uint64_t word = base.bits[w]; word != 0; word &= word - 1) {
      members.push_back(static_cast<std::uint16_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
    }
  }
  std::vector<std::uint16_t> reps{g.identity()};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (const auto gen : out.gens) {
      const auto r = g.mul(reps[i], gen);
      if (test(out.bits, r)) continue;
      reps.push_back(r);
      for (const auto s : members) set(out.bits, g.mul(s, r));
    }
  }
  return out;
}

}  // namespace

std::vector<MatrixGroup> subgroups_containing(const MatrixGroup& ambient, const MatrixGroup& base) {
  if (ambient.order() > kMaxAmbientOrder) {
    throw Error(ErrorCode::RangeTooLarge,
                fmt::format("subgroup lattice search is capped at order {}, got {}", kMaxAmbientOrder, ambient.order()));
  }
  if (!ambient.contains_group(base)) throw Error(ErrorCode::NotASubgroup, "base is not inside the ambient group");
  const IndexedGroup g(ambient);

  // Distinct cyclic subgroups of prime-power order, each with one generator.
  // Every element is a product of commuting powers of prime-power order, so
  // these generate every subgroup.
  std::vector<std::uint16_t> cyclic;
  {
    std::unordered_set<Bits, BitsHash> seen;
    for (std::size_t i = 0; i < g.size(); ++i) {
      Bits bits(g.words(), 0);
      const auto x = static_cast<std::uint16_t>(i);
      std::uint64_t order = 1;
      set(bits, g.identity());
      for (auto p = x; p != g.identity(); p = g.mul(p, x)) {
        set(bits, p);
        ++order;
      }
      if (order == 1 || as_prime_power(order).prime == 0) continue;
      if (seen.insert(std::move(bits)).second) cyclic.push_back(x);
    }
  }

  Node start{Bits(g.words(), 0), {}};
  set(start.bits, g.identity());
  for (const auto& m : base.generators()) {
    const auto idx = g.index_of(m);
    if (!test(start.bits, idx)) start = extend(g, start, idx);
  }

  std::vector<Node> found{start};
  std::unordered_set<Bits, BitsHash> known{start.bits};
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (const auto gen : cyclic) {
      if (test(found[next].bits, gen)) continue;
      Node candidate = extend(g, found[next], gen);
      if (known.insert(candidate.bits).second) found.push_back(std::move(candidate));
    }
  }

  std::vector<MatrixGroup> result;
  result.reserve(found.size());
  for (const auto& node : found) {
    std::vector<Mat2> gens;
    for (const auto idx : node.gens) gens.push_back(g.element(idx));
    result.push_back(MatrixGroup::generate(ambient.modulus(), gens));
  }
  std::sort(result.begin(), result.end(), [](const MatrixGroup& x, const MatrixGroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  return result;
}

std::vector<MatrixGroup> all_subgroups(const MatrixGroup& ambient) {
  return subgroups_containing(ambient, MatrixGroup::generate(ambient.modulus(), {}));
}

}  // namespace gl2lab
