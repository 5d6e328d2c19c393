#include "gl2lab/matrix_group.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "code_set.hpp"
#include "gl2lab/error.hpp"

namespace gl2lab {

namespace {

constexpr std::uint32_t kCartanExponents[] = {1, 2, 3, 4, 6};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept {
  h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

void validate_generators(std::uint32_t n, std::span<const Mat2> generators) {
  if (n < 2) throw Error(ErrorCode::InvalidModulus, "modulus must be >= 2");
  for (const auto& g : generators) {
    if (g.n != n) {
      throw Error(ErrorCode::MismatchedModulus, fmt::format("generator {} is mod {}, group is mod {}", to_string(g), g.n, n));
    }
    if (!g.is_invertible()) {
      throw Error(ErrorCode::SingularMatrix, fmt::format("generator {} is not invertible mod {}", to_string(g), n));
    }
  }
}

std::vector<Mat2> sorted_unique(std::vector<Mat2> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

}  // namespace

MatrixGroup::MatrixGroup(std::uint32_t n, std::vector<Mat2> generators, std::vector<Mat2> sorted_elements)
    : n_(n), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {
  std::vector<bool> seen(n, false);
  std::uint64_t h = n;
  for (const auto& m : elements_) {
    seen[m.det()] = true;
    h = mix(h, m.code());
  }
  fingerprint_ = h;
  for (Residue r = 0; r < n; ++r) {
    if (seen[r]) det_image_.values.push_back(r);
  }
  det_image_.surjective = det_image_.values.size() == euler_phi(n);

  if (n >= 3 && is_prime(n)) {
    for (const auto e : kCartanExponents) {
      const auto gens = split_cartan_power_generators(n, e);
      if (std::all_of(gens.begin(), gens.end(), [this](const Mat2& g) { return contains(g); })) {
        minimal_e_ = e;
        break;
      }
    }
  }
}

MatrixGroup MatrixGroup::generate(std::uint32_t n, std::span<const Mat2> generators) {
  validate_generators(n, generators);
  detail::IncrementalClosure builder(n);
  for (const auto& g : generators) builder.add_generator(g);
  std::vector<Mat2> gens(generators.begin(), generators.end());
  return MatrixGroup(n, std::move(gens), builder.take_sorted_elements());
}

MatrixGroup MatrixGroup::from_subgroup_elements(std::uint32_t n, std::vector<Mat2> elements) {
  elements = sorted_unique(std::move(elements));
  detail::IncrementalClosure builder(n);
  for (const auto& x : elements) {
    if (!builder.contains(x)) builder.add_generator(x);
  }
  if (builder.elements().size() != elements.size()) {
    throw Error(ErrorCode::NotASubgroup, "element set is not closed under multiplication");
  }
  std::vector<Mat2> gens = builder.generators();
  return MatrixGroup(n, std::move(gens), std::move(elements));
}

bool MatrixGroup::contains(const Mat2& m) const noexcept {
  return m.n == n_ && std::binary_search(elements_.begin(), elements_.end(), m);
}

bool MatrixGroup::contains_group(const MatrixGroup& h) const noexcept {
  if (h.n_ != n_) return false;
  return std::all_of(h.generators_.begin(), h.generators_.end(), [this](const Mat2& g) { return contains(g); });
}

MatrixGroup closure(std::uint32_t n, std::span<const Mat2> generators) {
  return MatrixGroup::generate(n, generators);
}

std::uint64_t index(const MatrixGroup& g, const MatrixGroup& h) {
  if (g.modulus() != h.modulus()) {
    throw Error(ErrorCode::MismatchedModulus, fmt::format("index of a mod-{} group in a mod-{} group", h.modulus(), g.modulus()));
  }
  if (!g.contains_group(h)) throw Error(ErrorCode::NotASubgroup, "H is not contained in G");
  return g.order() / h.order();
}

DetImage det_image(const MatrixGroup& g) { return g.det_image(); }

MatrixGroup semisimplify_borel(const MatrixGroup& g) {
  const auto n = g.modulus();
  std::vector<Mat2> diagonal;
  diagonal.reserve(g.order());
  for (const auto& m : g.elements()) {
    if (m.c != 0) throw Error(ErrorCode::NotInBorel, to_string(m) + " is not upper triangular");
    diagonal.push_back(Mat2{n, m.a, 0, 0, m.d});
  }
  std::vector<Mat2> gens;
  for (const auto& m : g.generators()) gens.push_back(Mat2{n, m.a, 0, 0, m.d});
  return MatrixGroup(n, sorted_unique(std::move(gens)), sorted_unique(std::move(diagonal)));
}

std::optional<std::uint32_t> minimal_cartan_power(const MatrixGroup& g) { return g.minimal_cartan_power(); }

MatrixGroup join(const MatrixGroup& g, const MatrixGroup& h) {
  if (g.modulus() != h.modulus()) throw Error(ErrorCode::MismatchedModulus, "join of groups with different moduli");
  std::vector<Mat2> gens = g.generators();
  gens.insert(gens.end(), h.generators().begin(), h.generators().end());
  return MatrixGroup::generate(g.modulus(), gens);
}

MatrixGroup conjugate(const MatrixGroup& g, const Mat2& m) {
  if (m.n != g.modulus()) throw Error(ErrorCode::MismatchedModulus, "conjugator has a different modulus");
  const Mat2 m_inv = mat_inv(m);
  const auto conj = [&](const Mat2& x) { return mul_same_modulus(mul_same_modulus(m_inv, x), m); };
  std::vector<Mat2> elements;
  elements.reserve(g.order());
  for (const auto& x : g.elements()) elements.push_back(conj(x));
  std::vector<Mat2> gens;
  for (const auto& x : g.generators()) gens.push_back(conj(x));
  std::sort(elements.begin(), elements.end());
  return MatrixGroup(g.modulus(), std::move(gens), std::move(elements));
}

MatrixGroup power_subgroup(const MatrixGroup& g, std::uint64_t k) {
  std::vector<Mat2> powers;
  powers.reserve(g.order());
  for (const auto& x : g.elements()) powers.push_back(mat_pow(x, k));
  powers = sorted_unique(std::move(powers));
  detail::IncrementalClosure builder(g.modulus());
  for (const auto& x : powers) {
    if (!builder.contains(x)) builder.add_generator(x);
  }
  std::vector<Mat2> gens = builder.generators();
  return MatrixGroup::generate(g.modulus(), gens);
}

MatrixGroup intersect(const MatrixGroup& g, const MatrixGroup& h) {
  if (g.modulus() != h.modulus()) throw Error(ErrorCode::MismatchedModulus, "intersection of groups with different moduli");
  std::vector<Mat2> common;
  std::set_intersection(g.elements().begin(), g.elements().end(), h.elements().begin(), h.elements().end(),
                        std::back_inserter(common));
  return MatrixGroup::from_subgroup_elements(g.modulus(), std::move(common));
}

std::vector<Mat2> split_cartan_power_generators(std::uint32_t l, std::uint32_t e) {
  const Residue g = least_generator(l);
  const Residue ge = pow_mod(g, e, l);
  return {Mat2::diag(l, ge, 1), Mat2::diag(l, 1, ge)};
}

}  // namespace gl2lab
