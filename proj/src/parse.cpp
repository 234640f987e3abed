#include "motivic/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "motivic/error.hpp"

namespace motivic {

namespace {

constexpr std::string_view kOdot = "⊙";

class Parser {
 public:
  Parser(std::string_view text, const Registry& reg, const std::string& space)
      : text_(text), reg_(reg), space_(space) {}

  Motive run() {
    Motive m = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  Motive expr() {
    Motive m = term();
    for (;;) {
      if (accept("+")) {
        m += term();
      } else if (peek_minus()) {
        ++pos_;
        m -= term();
      } else {
        return m;
      }
    }
  }

  bool peek_minus() {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == '-';
  }

  Motive term() {
    Motive m = unary();
    while (accept(kOdot) || accept("*")) m = mot_odot(m, unary());
    return m;
  }

  Motive unary() {
    if (accept("-")) return -unary();
    Motive a = atom();
    if (accept("^")) {
      const long n = integer();
      if (n < 0) fail("negative power of a general expression");
      a = odot_pow(a, static_cast<unsigned>(n));
    }
    return a;
  }

  HalfLaurent::Exponent tate_exponent() {
    if (accept("(")) {
      const long k = integer();
      HalfLaurent::Exponent twice = 2 * k;
      if (accept("/")) {
        const long d = integer();
        if (d == 2) {
          twice = k;
        } else if (d == 1) {
          twice = 2 * k;
        } else {
          fail("only halves may appear in an exponent of L");
        }
      }
      expect(")");
      return twice;
    }
    return 2 * integer();
  }

  Motive atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Motive m = expr();
      expect(")");
      return m;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(std::string(text_.substr(start, pos_ - start)));
      return Motive::constant(space_, HalfLaurent::monomial(v, 0));
    }
    if (ch == 'L' && !is_ident_char(pos_ + 1)) {
      ++pos_;
      // L^k binds tighter than the generic power so L^(1/2) works.
      if (accept("^")) return Motive::tate(space_, tate_exponent());
      return Motive::tate(space_, 2);
    }
    if (ch == 'Y' && text_.substr(pos_ + 1, 1) == "(") {
      pos_ += 2;
      return upsilon();
    }
    if (ch == '[') {
      ++pos_;
      return symbol();
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  bool is_ident_char(std::size_t i) const {
    if (i >= text_.size()) return false;
    const auto c = static_cast<unsigned char>(text_[i]);
    return std::isalnum(c) || c == '_';
  }

  std::string identifier() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ']' || c == '@' || c == ':' || c == '+' || c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Motive upsilon() {
    skip_ws();
    if (accept("0")) {
      expect(")");
      return Motive::one(space_);
    }
    std::vector<std::string> gens{identifier()};
    while (accept("+")) gens.push_back(identifier());
    expect(")");
    return reg_.upsilon(reg_.bundle(space_, gens));
  }

  Motive symbol() {
    std::string name = identifier();
    std::optional<int> order;
    if (accept(":")) {
      // [mu_n:name]
      if (name.rfind("mu_", 0) != 0) fail("cover prefix must be mu_n");
      order = std::stoi(name.substr(3));
      name = identifier();
    }
    const SymbolDecl* decl = nullptr;
    if (accept("@")) {
      const auto sp = identifier();
      decl = &reg_.symbol(name, sp);
      const auto allowed = reg_.allowed_symbol_spaces(space_);
      if (std::find(allowed.begin(), allowed.end(), sp) == allowed.end()) {
        fail("symbol '" + name + "@" + sp + "' is not visible from '" + space_ + "'");
      }
    } else {
      decl = &reg_.resolve_symbol(name, space_);
    }
    expect("]");
    if (order && *order != decl->symbol.order) {
      fail("symbol '" + name + "' has order " + std::to_string(decl->symbol.order) + ", written as mu_" +
           std::to_string(*order));
    }
    return reg_.symbol_motive(*decl, space_);
  }

  std::string_view text_;
  const Registry& reg_;
  const std::string& space_;
  std::size_t pos_ = 0;
};

}  // namespace

Motive parse_motive(std::string_view text, const Registry& reg, const std::string& space) {
  if (!reg.has_space(space)) throw Error(ErrorKind::UnknownName, "space '" + space + "' is not registered");
  return Parser(text, reg, space).run();
}

}  // namespace motivic
