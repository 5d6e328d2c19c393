#include "gl2lab/group_spec.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include <fmt/format.h>

#include "gl2lab/error.hpp"
#include "gl2lab/families.hpp"

namespace gl2lab {

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  MatrixGroup parse() {
    MatrixGroup g = spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  MatrixGroup spec() {
    const std::string name = identifier();
    expect('(');
    if (name == "join") {
      MatrixGroup left = spec();
      expect(',');
      MatrixGroup right = spec();
      expect(')');
      return join(left, right);
    }
    if (name == "gen") {
      const auto n = number();
      expect(';');
      std::vector<Mat2> gens;
      gens.push_back(matrix(n));
      while (peek(',')) {
        expect(',');
        gens.push_back(matrix(n));
      }
      expect(')');
      return MatrixGroup::generate(n, gens);
    }
    if (name == "CsPow") {
      const auto l = number();
      expect(',');
      const auto e = number();
      expect(')');
      return standard_group(FamilyTag::split_cartan_power(e), l);
    }
    const auto l = number();
    expect(')');
    return standard_group(family(name), l);
  }

  FamilyTag family(const std::string& name) const {
    using K = FamilyTag::Kind;
    if (name == "GL2") return K::GL2;
    if (name == "B") return K::Borel;
    if (name == "Cs") return K::SplitCartan;
    if (name == "Ns") return K::SplitNormalizer;
    if (name == "Cns") return K::NonsplitCartan;
    if (name == "Nns") return K::NonsplitNormalizer;
    if (name == "Gell") return K::Gell;
    if (name == "Z") return K::Scalars;
    fail("unknown family '" + name + "'");
  }

  Mat2 matrix(std::uint32_t n) {
    skip_space();
    // A literal is balanced brackets: find the matching close of the outer '['.
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char ch = text_[pos_++];
      if (ch == '[') ++depth;
      if (ch == ']' && --depth == 0) break;
    }
    if (depth != 0) fail("unterminated matrix literal");
    return parse_mat2(text_.substr(start, pos_ - start), n);
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a family or combinator name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t number() {
    skip_space();
    std::uint32_t value = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == first) fail("expected a positive integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  bool peek(char ch) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ch;
  }

  void expect(char ch) {
    if (!peek(ch)) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, fmt::format("group spec '{}': {} at offset {}", text_, what, pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MatrixGroup parse_group_spec(std::string_view spec) { return SpecParser(spec).parse(); }

std::string format_group_spec(const MatrixGroup& g) {
  std::string out = fmt::format("gen({};", g.modulus());
  if (g.generators().empty()) {
    out += to_string(Mat2::identity(g.modulus()));
  } else {
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      if (i > 0) out += ',';
      out += to_string(g.generators()[i]);
    }
  }
  out += ')';
  return out;
}

}  // namespace gl2lab
