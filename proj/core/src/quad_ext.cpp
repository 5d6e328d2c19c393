#include "gl2lab/quad_ext.hpp"

#include <fmt/format.h>

#include "gl2lab/error.hpp"

namespace gl2lab {

namespace {

void require_same_field(const QuadExtElem& x, const QuadExtElem& y) {
  if (x.prime() != y.prime() || x.epsilon() != y.epsilon()) {
    throw Error(ErrorCode::MismatchedField,
                fmt::format("F_{}[sqrt {}] vs F_{}[sqrt {}]", x.prime(), x.epsilon(), y.prime(), y.epsilon()));
  }
}

}  // namespace

QuadExtElem QuadExtElem::make(std::int64_t a, std::int64_t b, std::uint32_t l) {
  const Residue eps = least_generator(l);
  return QuadExtElem(reduce(a, l), reduce(b, l), eps, l);
}

QuadExtElem add(const QuadExtElem& x, const QuadExtElem& y) {
  require_same_field(x, y);
  const auto l = x.l_;
  return QuadExtElem((x.a_ + y.a_) % l, (x.b_ + y.b_) % l, x.eps_, l);
}

QuadExtElem sub(const QuadExtElem& x, const QuadExtElem& y) {
  require_same_field(x, y);
  const auto l = x.l_;
  return QuadExtElem((x.a_ + l - y.a_) % l, (x.b_ + l - y.b_) % l, x.eps_, l);
}

QuadExtElem mul(const QuadExtElem& x, const QuadExtElem& y) {
  require_same_field(x, y);
  const std::uint64_t l = x.l_;
  // (a + b s)(c + d s) = (ac + eps bd) + (ad + bc) s
  const std::uint64_t bd = (static_cast<std::uint64_t>(x.b_) * y.b_) % l;
  const std::uint64_t re = (static_cast<std::uint64_t>(x.a_) * y.a_ + bd * x.eps_) % l;
  const std::uint64_t im = (static_cast<std::uint64_t>(x.a_) * y.b_ + static_cast<std::uint64_t>(x.b_) * y.a_) % l;
  return QuadExtElem(static_cast<Residue>(re), static_cast<Residue>(im), x.eps_, x.l_);
}

QuadExtElem frobenius(const QuadExtElem& x) {
  return QuadExtElem(x.a_, (x.l_ - x.b_) % x.l_, x.eps_, x.l_);
}

Residue norm(const QuadExtElem& x) {
  const std::uint32_t l = x.prime();
  const Residue aa = mul_mod(x.a(), x.a(), l);
  const Residue ebb = mul_mod(x.epsilon(), mul_mod(x.b(), x.b(), l), l);
  return (aa + l - ebb) % l;
}

QuadExtElem inverse(const QuadExtElem& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of 0 in F_l[sqrt eps]");
  // x^-1 = frob(x) / N(x); N(x) != 0 because eps is a non-residue.
  const Residue n_inv = inv_mod(norm(x), x.l_);
  const QuadExtElem conj = frobenius(x);
  return QuadExtElem(mul_mod(conj.a_, n_inv, x.l_), mul_mod(conj.b_, n_inv, x.l_), x.eps_, x.l_);
}

std::string to_string(const QuadExtElem& x) {
  if (x.b() == 0) return fmt::format("{}", x.a());
  if (x.a() == 0) return fmt::format("{}*sqrt({})", x.b(), x.epsilon());
  return fmt::format("{}+{}*sqrt({})", x.a(), x.b(), x.epsilon());
}

}  // namespace gl2lab
