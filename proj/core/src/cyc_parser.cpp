#include "wb/cyc_parser.hpp"

#include <cctype>

namespace wb {

namespace {

class Parser {
 public:
  Parser(const std::string& s, int n) : s_(s), n_(n) {}

  CycNum parse() {
    CycNum v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return v;
  }

 private:
  CycNum expr() {
    skip_ws();
    bool neg = false;
    while (peek() == '+' || peek() == '-') {
      if (get() == '-') neg = !neg;
      skip_ws();
    }
    CycNum v = term();
    if (neg) v = -v;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+') {
        get();
        v = v + term();
      } else if (c == '-') {
        get();
        v = v - term();
      } else {
        return v;
      }
    }
  }

  CycNum term() {
    CycNum v = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        get();
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  CycNum factor() {
    skip_ws();
    bool neg = false;
    while (peek() == '-') {
      get();
      neg = !neg;
      skip_ws();
    }
    CycNum v = atom();
    skip_ws();
    if (peek() == '^') {
      get();
      long e = integer("exponent of z not an integer");
      v = v.pow(e);
    }
    return neg ? -v : v;
  }

  CycNum atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      CycNum v = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      get();
      return v;
    }
    if (c == 'z') {
      get();
      return CycNum::root(n_, n_, 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer("expected integer");
      skip_ws();
      if (peek() == '/') {
        get();
        long den = integer("expected denominator");
        if (den == 0) throw ParseError("zero denominator", pos_);
        Rat q(num, den);
        q.canonicalize();
        return CycNum(n_, q);
      }
      return CycNum(n_, Rat(num));
    }
    throw ParseError("unexpected character", pos_);
  }

  long integer(const char* what) {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      get();
      neg = true;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError(what, pos_);
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
    }
    return neg ? -v : v;
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  const std::string& s_;
  int n_;
  size_t pos_ = 0;
};

}  // namespace

CycNum parse_cyc(const std::string& expr, int N) {
  return Parser(expr, N).parse();
}

}  // namespace wb
