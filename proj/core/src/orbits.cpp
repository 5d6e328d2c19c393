#include "gl2lab/orbits.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "gl2lab/error.hpp"

namespace gl2lab {

namespace {

void require_same_modulus(const MatrixGroup& g, std::uint32_t n) {
  if (g.modulus() != n) {
    throw Error(ErrorCode::MismatchedModulus, fmt::format("group mod {} acting on a space mod {}", g.modulus(), n));
  }
}

std::size_t slot(const TorsionVector& v) { return std::size_t{v.x} * v.n + v.y; }

// Bitmap over (Z/nZ)^2 of the multiples of v, including 0.
std::vector<bool> multiples(const TorsionVector& v) {
  std::vector<bool> in(std::size_t{v.n} * v.n, false);
  TorsionVector w{v.n, 0, 0};
  do {
    in[slot(w)] = true;
    w = TorsionVector{v.n, (w.x + v.x) % v.n, (w.y + v.y) % v.n};
  } while (!w.is_zero());
  return in;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t size) : parent_(size) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<TorsionVector> ActionSpace::points() const {
  if (order && (*order == 0 || n % *order != 0)) {
    throw Error(ErrorCode::InvalidDivisor, fmt::format("{} does not divide {}", *order, n));
  }
  std::vector<TorsionVector> out;
  if (kind == Kind::Cyclic) {
    for (const auto& c : enumerate_cyclic(n, order)) out.push_back(c.generator);
    return out;
  }
  for (Residue y = 0; y < n; ++y) {
    for (Residue x = 0; x < n; ++x) {
      const TorsionVector v{n, x, y};
      if (v.is_zero()) continue;
      if (order && vector_order(v) != *order) continue;
      out.push_back(v);
    }
  }
  return out;
}

std::string to_string(const ActionSpace& space) {
  const char* name = space.kind == ActionSpace::Kind::Cyclic ? "cyc" : "vec";
  if (space.order) return fmt::format("{}(n={},order={})", name, space.n, *space.order);
  return fmt::format("{}(n={})", name, space.n);
}

std::vector<std::uint64_t> OrbitDecomposition::sizes() const {
  std::vector<std::uint64_t> out;
  out.reserve(orbits.size());
  for (const auto& o : orbits) out.push_back(o.size);
  return out;
}

OrbitDecomposition orbit_decomposition(const MatrixGroup& g, const ActionSpace& space) {
  require_same_modulus(g, space.n);
  const std::uint32_t n = space.n;
  const auto points = space.points();

  // Every vector that names a point: the point itself, or for a cyclic
  // submodule every generator of it.
  std::vector<std::int32_t> index(std::size_t{n} * n, -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (space.kind == ActionSpace::Kind::Vectors) {
      index[slot(p)] = static_cast<std::int32_t>(i);
      continue;
    }
    const auto d = vector_order(p);
    for (std::uint64_t t = 1; t < d; ++t) {
      if (gcd(t, d) == 1) index[slot(p.scaled(t))] = static_cast<std::int32_t>(i);
    }
  }

  UnionFind uf(points.size());
  for (const auto& m : g.generators()) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto j = index[slot(apply(m, points[i]))];
      if (j < 0) throw Error(ErrorCode::Internal, "group action left the space");
      uf.unite(i, static_cast<std::size_t>(j));
    }
  }

  // Roots are the least index of each class, so grouping in index order keeps
  // members in space order with the representative first.
  std::vector<std::int64_t> orbit_of(points.size(), -1);
  OrbitDecomposition out{space, g.order(), {}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto root = uf.find(i);
    if (orbit_of[root] < 0) {
      orbit_of[root] = static_cast<std::int64_t>(out.orbits.size());
      out.orbits.push_back(Orbit{0, points[i], {}});
    }
    auto& orbit = out.orbits[static_cast<std::size_t>(orbit_of[root])];
    orbit.members.push_back(points[i]);
    ++orbit.size;
  }
  // Orbits were created in order of their representatives, so a stable sort
  // by size gives (size, representative) order.
  std::stable_sort(out.orbits.begin(), out.orbits.end(),
                   [](const Orbit& a, const Orbit& b) { return a.size < b.size; });
  return out;
}

std::uint64_t orbit_size(const MatrixGroup& g, const TorsionVector& v) {
  require_same_modulus(g, v.n);
  std::vector<bool> seen(std::size_t{v.n} * v.n, false);
  std::vector<TorsionVector> queue{v};
  seen[slot(v)] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& m : g.generators()) {
      const auto w = apply(m, queue[i]);
      if (!seen[slot(w)]) {
        seen[slot(w)] = true;
        queue.push_back(w);
      }
    }
  }
  return queue.size();
}

std::uint64_t orbit_size(const MatrixGroup& g, const CyclicSubmodule& c) {
  require_same_modulus(g, c.modulus());
  std::vector<CyclicSubmodule> queue{c};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& m : g.generators()) {
      const auto image = act_on_cyclic(m, queue[i]);
      if (std::find(queue.begin(), queue.end(), image) == queue.end()) queue.push_back(image);
    }
  }
  return queue.size();
}

MatrixGroup stabilizer(const MatrixGroup& g, const TorsionVector& v) {
  require_same_modulus(g, v.n);
  std::vector<Mat2> kept;
  for (const auto& m : g.elements()) {
    if (apply(m, v) == v) kept.push_back(m);
  }
  return MatrixGroup::from_subgroup_elements(g.modulus(), std::move(kept));
}

MatrixGroup stabilizer(const MatrixGroup& g, const CyclicSubmodule& c) {
  require_same_modulus(g, c.modulus());
  const auto in_c = multiples(c.generator);
  std::vector<Mat2> kept;
  for (const auto& m : g.elements()) {
    if (in_c[slot(apply(m, c.generator))]) kept.push_back(m);
  }
  return MatrixGroup::from_subgroup_elements(g.modulus(), std::move(kept));
}

std::uint64_t point_over_submodule_degree(const MatrixGroup& g, const TorsionVector& p) {
  require_same_modulus(g, p.n);
  if (p.is_zero()) throw Error(ErrorCode::ZeroVector, "the zero vector spans no cyclic submodule");
  const auto in_c = multiples(p);
  std::uint64_t stab_p = 0;
  std::uint64_t stab_c = 0;
  for (const auto& m : g.elements()) {
    const auto mp = apply(m, p);
    stab_p += mp == p;
    stab_c += in_c[slot(mp)];
  }
  return stab_c / stab_p;
}

TowerIndices tower_indices(const MatrixGroup& g, const TorsionVector& p) {
  require_same_modulus(g, p.n);
  const auto pp = as_prime_power(p.n);
  if (pp.prime == 0) throw Error(ErrorCode::InvalidModulus, fmt::format("{} is not a prime power", p.n));
  if (p.is_zero() || vector_order(p) != p.n) {
    throw Error(ErrorCode::WrongOrder, fmt::format("{} does not have order {}", to_string(p), p.n));
  }
  const auto l = static_cast<std::uint32_t>(pp.prime);
  const auto k = static_cast<std::uint32_t>(pp.exponent);
  const TorsionVector lp = p.scaled(l);
  const auto in_c = multiples(p);
  const auto in_lc = multiples(lp);

  std::uint64_t stab_p = 0;
  std::uint64_t stab_c = 0;
  std::uint64_t stab_lp = 0;
  std::uint64_t stab_lc = 0;
  for (const auto& m : g.elements()) {
    const auto mp = apply(m, p);
    const auto mlp = apply(m, lp);
    stab_p += mp == p;
    stab_c += in_c[slot(mp)];
    stab_lp += mlp == lp;
    stab_lc += in_lc[slot(mlp)];
  }

  TowerIndices t;
  t.prime = l;
  t.exponent = k;
  t.deg_P_over_C = stab_c / stab_p;
  t.deg_P_over_lP = stab_lp / stab_p;
  t.deg_C_over_lC = stab_lc / stab_c;
  t.deg_lP_over_lC = stab_lc / stab_lp;
  t.bound_P_over_C = euler_phi(p.n);
  t.pass_P_over_C = t.bound_P_over_C % t.deg_P_over_C == 0;
  const std::uint64_t lm1 = l - 1;
  t.bound_P_over_lP = std::uint64_t{l} * l * lm1;
  t.bound_C_over_lC = std::uint64_t{p.n} * lm1 * lm1;
  if (k >= 2) {
    t.pass_P_over_lP = t.bound_P_over_lP % t.deg_P_over_lP == 0;
    t.pass_C_over_lC = t.bound_C_over_lC % t.deg_C_over_lC == 0;
  }
  t.multiplicative = t.deg_C_over_lC * t.deg_P_over_C == t.deg_P_over_lP * t.deg_lP_over_lC;
  return t;
}

}  // namespace gl2lab
