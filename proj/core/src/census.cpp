#include "gl2lab/census.hpp"

#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

#include "gl2lab/error.hpp"
#include "gl2lab/parallel.hpp"

namespace gl2lab {

namespace {

void require_prime_at_least(std::uint32_t l, std::uint32_t least, const char* what) {
  if (l < least || !is_prime(l)) {
    throw Error(ErrorCode::InvalidModulus, fmt::format("{} needs a prime l >= {}, got {}", what, least, l));
  }
}

bool by_order_then_elements(const MatrixGroup& x, const MatrixGroup& y) {
  if (x.order() != y.order()) return x.order() < y.order();
  return x.elements() < y.elements();
}

// Diagonal units g^i, g^j as residues, indexed by exponent.
std::vector<Residue> generator_powers(std::uint32_t l) {
  const Residue g = least_generator(l);
  std::vector<Residue> powers(l - 1);
  Residue p = 1;
  for (auto& slot : powers) {
    slot = p;
    p = mul_mod(p, g, l);
  }
  return powers;
}

}  // namespace

CensusConstraints CensusConstraints::parse(std::string_view text) {
  CensusConstraints c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const auto token = text.substr(pos, comma - pos);
    if (token == "scalars") {
      c.require_scalars = true;
    } else if (token == "full-det") {
      c.require_full_det = true;
    } else if (token == "not-in-cartan") {
      c.require_not_in_cartan = true;
    } else if (token == "cartan-power") {
      c.require_cartan_power = true;
    } else if (token == "all") {
      c = all();
    } else if (token != "none" && !token.empty()) {
      throw Error(ErrorCode::ParseError, fmt::format("unknown census constraint '{}'", token));
    }
    pos = comma + 1;
  }
  return c;
}

std::string CensusConstraints::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(require_scalars, "scalars");
  add(require_full_det, "full-det");
  add(require_not_in_cartan, "not-in-cartan");
  add(require_cartan_power, "cartan-power");
  return out.empty() ? "none" : out;
}

bool satisfies(const MatrixGroup& g, const CensusConstraints& c) {
  const std::uint32_t l = g.modulus();
  if (c.require_scalars && !g.contains(Mat2::scalar(l, least_generator(l)))) return false;
  if (c.require_cartan_power && !g.minimal_cartan_power()) return false;
  if (c.require_not_in_cartan || c.require_full_det) {
    bool outside = false;
    std::vector<bool> dets(l, false);
    std::uint32_t det_count = 0;
    for (const auto& m : g.elements()) {
      if (!m.is_diagonal()) {
        outside = true;
        continue;
      }
      const auto det = m.det();
      if (!dets[det]) {
        dets[det] = true;
        ++det_count;
      }
    }
    if (c.require_not_in_cartan && !outside) return false;
    if (c.require_full_det && det_count != l - 1) return false;
  }
  return true;
}

bool LatticeForm::contains(std::uint64_t i, std::uint64_t j) const noexcept {
  i %= m;
  j %= m;
  if (i % a != 0) return false;
  const std::uint64_t t = i / a;
  return (j + std::uint64_t{m} * d - (t * b) % m) % d == 0;
}

std::vector<LatticeForm> subgroups_of_zm_squared(std::uint32_t m) {
  std::vector<LatticeForm> out;
  for (const auto a : divisors(m)) {
    for (const auto d : divisors(m)) {
      for (std::uint64_t b = 0; b < d; ++b) {
        if ((m / a) * b % d == 0) {
          out.push_back(LatticeForm{m, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                    static_cast<std::uint32_t>(d)});
        }
      }
    }
  }
  return out;
}

MatrixGroup split_cartan_subgroup(std::uint32_t l, const LatticeForm& form) {
  require_prime_at_least(l, 3, "split Cartan subgroups");
  if (form.m != l - 1) throw Error(ErrorCode::InvalidDivisor, "lattice form is not over Z_(l-1)");
  const auto powers = generator_powers(l);
  const auto m = form.m;
  return MatrixGroup::generate(l, {Mat2::diag(l, powers[form.a % m], powers[form.b % m]),
                                   Mat2::diag(l, 1, powers[form.d % m])});
}

std::vector<MatrixGroup> split_cartan_subgroups(std::uint32_t l) {
  require_prime_at_least(l, 3, "split Cartan subgroups");
  std::vector<MatrixGroup> out;
  for (const auto& form : subgroups_of_zm_squared(l - 1)) out.push_back(split_cartan_subgroup(l, form));
  return out;
}

std::vector<MatrixGroup> enumerate_ns_subgroups(std::uint32_t l, const CensusConstraints& constraints,
                                                unsigned jobs) {
  require_prime_at_least(l, 5, "the N_s census");
  const auto forms = subgroups_of_zm_squared(l - 1);
  const auto powers = generator_powers(l);

  // Per H: H itself and each admissible antidiagonal extension.
  auto extensions = parallel_map(forms.size(), jobs, [&](std::size_t k) {
    const auto& h = forms[k];
    std::vector<MatrixGroup> found;
    const MatrixGroup base = split_cartan_subgroup(l, h);
    if (satisfies(base, constraints)) found.push_back(base);
    // H must be swap-stable: check the swapped generators.
    if (!h.contains(h.b, h.a) || !h.contains(h.d, 0)) return found;
    std::vector<Mat2> gens = base.generators();
    gens.push_back(Mat2::identity(l));
    for (std::uint32_t i = 0; i < h.a; ++i) {
      for (std::uint32_t j = 0; j < h.d; ++j) {
        // (w t)^2 = diag(g^(i+j), g^(i+j)) must lie in H.
        if (!h.contains(i + j, i + j)) continue;
        gens.back() = Mat2::make(l, 0, powers[j], powers[i], 0);
        MatrixGroup g = MatrixGroup::generate(l, gens);
        if (satisfies(g, constraints)) found.push_back(std::move(g));
      }
    }
    return found;
  });

  std::vector<MatrixGroup> out;
  std::unordered_set<std::uint64_t> seen;
  for (auto& batch : extensions) {
    for (auto& g : batch) {
      if (!seen.insert(g.fingerprint()).second) {
        const bool duplicate = std::any_of(out.begin(), out.end(), [&](const MatrixGroup& x) { return x == g; });
        if (duplicate) continue;
      }
      out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), by_order_then_elements);
  return out;
}

std::vector<MatrixGroup> enumerate_borel_nondiag(std::uint32_t l, unsigned jobs) {
  require_prime_at_least(l, 3, "the Borel census");
  const auto forms = subgroups_of_zm_squared(l - 1);
  return parallel_map(forms.size(), jobs, [&](std::size_t k) {
    std::vector<Mat2> gens = split_cartan_subgroup(l, forms[k]).generators();
    gens.insert(gens.begin(), shear(l));
    return MatrixGroup::generate(l, gens);
  });
}

}  // namespace gl2lab
