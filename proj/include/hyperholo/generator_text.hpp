#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperholo/error.hpp"
#include "hyperholo/functions.hpp"
#include "hyperholo/stem.hpp"

namespace hyperholo {

/// One row of the generator catalogue printed by `hyperholo list-generators`.
struct GeneratorHelp {
  std::string_view syntax;
  std::string_view description;
};

inline const std::vector<GeneratorHelp>& generator_catalogue() {
  static const std::vector<GeneratorHelp> rows = {
      {"power:N", "intrinsic lift of (t + i r)^N, N >= 0"},
      {"exp", "intrinsic lift of e^(t + i r)"},
      {"reciprocal", "intrinsic lift of 1/(t + i r)"},
      {"constant:C", "real constant C"},
      {"iota", "u = 0, v = 1"},
      {"conj", "non-example u = t, v = -r"},
      {"radial", "non-example u = r, v = 0"},
      {"add(F,G)", "pointwise sum"},
      {"mul(F,G)", "pointwise product"},
      {"inv(F)", "algebraic inverse"},
      {"fd(F)", "F with finite-difference partials"},
      {"prodform(S,T)", "S(t + i r) * T(alpha + i ln tan(beta/2)); stems: one, id, power:N, poly:N, "
                        "poly:C0/C1/..., exp, reciprocal, constant:C"},
  };
  return rows;
}

namespace detail {

class GeneratorParser {
 public:
  explicit GeneratorParser(std::string_view text) : text_(text) {}

  ComplexLikePair parse_generator_text() {
    ComplexLikePair g = generator();
    skip_space();
    if (pos_ != text_.size()) {
      fail("trailing input");
    }
    return g;
  }

  Stem parse_stem_text() {
    Stem s = stem();
    skip_space();
    if (pos_ != text_.size()) {
      fail("trailing input");
    }
    return s;
  }

 private:
  ComplexLikePair generator() {
    const std::string name = identifier();
    if (name == "add" || name == "mul") {
      expect('(');
      ComplexLikePair a = generator();
      expect(',');
      ComplexLikePair b = generator();
      expect(')');
      return name == "add" ? cl_add(a, b) : cl_mul(a, b);
    }
    if (name == "inv" || name == "fd") {
      expect('(');
      ComplexLikePair a = generator();
      expect(')');
      return name == "inv" ? cl_inv(a) : as_finite_difference(a);
    }
    if (name == "prodform") {
      expect('(');
      Stem outer = stem();
      expect(',');
      Stem angular = stem();
      expect(')');
      return make_product_form(outer, angular);
    }
    if (name == "power") return make_power(integer_argument(name));
    if (name == "constant") return make_constant(real_argument(name));
    if (name == "exp") return make_exp();
    if (name == "reciprocal") return make_reciprocal();
    if (name == "iota") return make_iota();
    if (name == "conj") return make_conjugate_like();
    if (name == "radial") return make_radial();
    fail_token(name);
  }

  Stem stem() {
    const std::string name = identifier();
    if (name == "one") return Stem::constant({1.0, 0.0});
    if (name == "id") return Stem::power(1);
    if (name == "exp") return Stem::exp();
    if (name == "reciprocal") return Stem::reciprocal();
    if (name == "power") return Stem::power(integer_argument(name));
    if (name == "constant") return Stem::constant({real_argument(name), 0.0});
    if (name == "poly") {
      const std::string arg = raw_argument(name);
      if (arg.find('/') == std::string::npos) {
        return Stem::power(to_integer(arg, name));
      }
      std::vector<double> coefficients;
      std::size_t start = 0;
      while (start <= arg.size()) {
        const std::size_t slash = arg.find('/', start);
        const std::size_t end = slash == std::string::npos ? arg.size() : slash;
        coefficients.push_back(to_real(arg.substr(start, end - start), name));
        if (slash == std::string::npos) break;
        start = slash + 1;
      }
      return Stem::polynomial(std::move(coefficients));
    }
    fail_token(name);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a generator name");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string raw_argument(const std::string& name) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ':') {
      fail("'" + name + "' needs an argument, as in " + name + ":N");
    }
    ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer_argument(const std::string& name) { return to_integer(raw_argument(name), name); }
  double real_argument(const std::string& name) { return to_real(raw_argument(name), name); }

  int to_integer(const std::string& token, const std::string& name) const {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
      throw Error(ErrorKind::parse, "bad argument '" + token + "' for " + name + " in '" + std::string(text_) + "'");
    }
    return value;
  }

  double to_real(const std::string& token, const std::string& name) const {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::parse, "bad argument '" + token + "' for " + name + " in '" + std::string(text_) + "'");
    }
    return value;
  }

  [[noreturn]] void fail_token(const std::string& token) const {
    throw Error(ErrorKind::parse, "unknown generator '" + token + "' in '" + std::string(text_) + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text form of a generator, e.g. "power:3", "mul(power:2,exp)",
/// "prodform(exp,poly:1)". Throws Error(parse) naming the offending token.
inline ComplexLikePair parse_generator(std::string_view text) {
  return detail::GeneratorParser(text).parse_generator_text();
}

inline Stem parse_stem(std::string_view text) { return detail::GeneratorParser(text).parse_stem_text(); }

}  // namespace hyperholo
