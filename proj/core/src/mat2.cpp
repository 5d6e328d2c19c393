#include "gl2lab/mat2.hpp"

#include <cctype>
#include <charconv>
#include <utility>

#include <fmt/format.h>

#include "gl2lab/error.hpp"

namespace gl2lab {

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  if (x.n != y.n) {
    throw Error(ErrorCode::MismatchedModulus, fmt::format("cannot multiply mod {} by mod {}", x.n, y.n));
  }
  return mul_same_modulus(x, y);
}

Mat2 mat_inv(const Mat2& m) {
  const Residue det = m.det();
  if (gcd(det, m.n) != 1) {
    throw Error(ErrorCode::SingularMatrix, to_string(m) + " has non-unit determinant mod " + std::to_string(m.n));
  }
  const Residue t = inv_mod(det, m.n);
  const std::uint32_t n = m.n;
  return Mat2{n, mul_mod(m.d, t, n), mul_mod((n - m.b) % n, t, n), mul_mod((n - m.c) % n, t, n),
              mul_mod(m.a, t, n)};
}

Mat2 mat_pow(const Mat2& m, std::uint64_t e) {
  Mat2 result = Mat2::identity(m.n);
  Mat2 base = m;
  while (e > 0) {
    if (e & 1U) result = mul_same_modulus(result, base);
    base = mul_same_modulus(base, base);
    e >>= 1U;
  }
  return result;
}

Mat2 conjugate_by(const Mat2& x, const Mat2& m) { return mat_inv(m) * x * m; }

std::uint64_t gl2_order(std::uint32_t n) {
  std::uint64_t order = 1;
  std::uint64_t rest = n;
  for (const auto p : prime_factors(n)) {
    std::uint64_t pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    // |GL_2(Z/p^k)| = p^(4(k-1)) * (p^2 - 1)(p^2 - p)
    const std::uint64_t lift = (pk / p) * (pk / p) * (pk / p) * (pk / p);
    order *= lift * (p * p - 1) * (p * p - p);
  }
  return order;
}

std::uint64_t element_order(const Mat2& m) {
  if (!m.is_invertible()) {
    throw Error(ErrorCode::SingularMatrix, to_string(m) + " is not invertible mod " + std::to_string(m.n));
  }
  const std::uint64_t cap = gl2_order(m.n);
  const Mat2 id = Mat2::identity(m.n);
  Mat2 power = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power == id) return k;
    power = mul_same_modulus(power, m);
  }
  throw Error(ErrorCode::Internal, "element order exceeded |GL_2| for " + to_string(m));
}

std::array<QuadExtElem, 2> eigenvalues(const Mat2& m) {
  const std::uint32_t l = m.n;
  if (l < 3 || !is_prime(l)) {
    throw Error(ErrorCode::InvalidModulus, "eigenvalues need an odd prime modulus, got " + std::to_string(l));
  }
  const Residue eps = least_generator(l);
  const Residue tr = m.trace();
  const Residue half = inv_mod(2, l);
  // discriminant tr^2 - 4 det
  const Residue disc = (mul_mod(tr, tr, l) + l - mul_mod(4 % l, m.det(), l)) % l;
  const Residue center = mul_mod(tr, half, l);

  const auto roots = sqrt_mod(disc, l);
  if (!roots.empty()) {
    const Residue s = roots.front();
    Residue r1 = (center + mul_mod(s, half, l)) % l;
    Residue r2 = (center + l - mul_mod(s, half, l)) % l;
    if (r2 < r1) std::swap(r1, r2);
    return {QuadExtElem::base(r1, l), QuadExtElem::base(r2, l)};
  }
  // disc = eps * s^2 for some s; roots are center +- (s/2) sqrt(eps)
  const auto s_roots = sqrt_mod(mul_mod(disc, inv_mod(eps, l), l), l);
  if (s_roots.empty()) throw Error(ErrorCode::Internal, "discriminant is neither a square nor eps times one");
  Residue b = mul_mod(s_roots.front(), half, l);
  if (b > (l - 1) / 2) b = l - b;
  const auto plus = QuadExtElem::make(center, b, l);
  return {plus, frobenius(plus)};
}

std::string to_string(const Mat2& m) { return fmt::format("[[{},{}],[{},{}]]", m.a, m.b, m.c, m.d); }

namespace {

class LiteralReader {
 public:
  explicit LiteralReader(std::string_view text) : text_(text) {}

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::int64_t integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    std::int64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected a decimal entry");
    pos_ += static_cast<std::size_t>(ptr - first);
    return negative ? -value : value;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, fmt::format("matrix literal '{}': {} at offset {}", text_, what, pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Mat2 parse_mat2(std::string_view text, std::uint32_t n) {
  LiteralReader in(text);
  in.expect('[');
  in.expect('[');
  const auto a = in.integer();
  in.expect(',');
  const auto b = in.integer();
  in.expect(']');
  in.expect(',');
  in.expect('[');
  const auto c = in.integer();
  in.expect(',');
  const auto d = in.integer();
  in.expect(']');
  in.expect(']');
  in.finish();
  return Mat2::make(n, a, b, c, d);
}

}  // namespace gl2lab
