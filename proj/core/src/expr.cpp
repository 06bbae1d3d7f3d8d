#include "sdlab/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <numbers>
#include <string>

#include "sdlab/errors.hpp"

namespace sdlab {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  double run() {
    const double v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return v;
  }

 private:
  double expression() {
    double v = term();
    for (;;) {
      skip_space();
      if (consume('+')) {
        v += term();
      } else if (consume('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      skip_space();
      if (consume('*')) {
        v *= factor();
      } else if (consume('/')) {
        const double d = factor();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  double factor() {
    skip_space();
    if (consume('-')) return -factor();
    if (consume('+')) return factor();
    if (consume('(')) {
      const double v = expression();
      skip_space();
      if (!consume(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < text_.size() && (std::isalpha((unsigned char)text_[pos_]))) {
      std::string name;
      while (pos_ < text_.size() && std::isalpha((unsigned char)text_[pos_])) {
        name += text_[pos_++];
      }
      if (name == "pi") return std::numbers::pi;
      fail("unknown constant '" + name + "'");
    }
    return number();
  }

  double number() {
    skip_space();
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("expected a number");
    pos_ += (std::size_t)(end - rest.c_str());
    return v;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ConfigError("bad numeric expression '" + std::string(text_) + "': " + why +
                      " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double parse_expression(std::string_view text) { return Parser(text).run(); }

}  // namespace sdlab
