#include "lpc/parse.hpp"

#include <cctype>
#include <string>

namespace lpc {

namespace {

enum class Tok { lbracket, rbracket, lparen, rparen, semi, plus, slash, minus,
                 integer, name, end };

struct Token {
  Tok kind;
  std::string text;
  std::int64_t value = 0;  // for integer
  SourcePos pos;
};

const char* tok_label(Tok t) {
  switch (t) {
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::semi: return "';'";
    case Tok::plus: return "'+'";
    case Tok::slash: return "'/'";
    case Tok::minus: return "'-'";
    case Tok::integer: return "integer";
    case Tok::name: return "name";
    case Tok::end: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  std::vector<Segment> parse() {
    std::vector<Segment> segments;
    segments.push_back(parse_segment());
    while (true) {
      if (cur_.kind == Tok::plus) {
        advance();
        segments.push_back(parse_segment());
      } else if (cur_.kind == Tok::end) {
        break;
      } else {
        reject({Tok::plus, Tok::end});
      }
    }
    return segments;
  }

 private:
  [[noreturn]] void reject(std::vector<Tok> expected,
                           const std::string& note = {}) {
    std::vector<std::string> labels;
    for (Tok t : expected) labels.push_back(tok_label(t));
    std::string msg = "expected ";
    for (size_t i = 0; i < labels.size(); ++i) {
      if (i) msg += i + 1 == labels.size() ? " or " : ", ";
      msg += labels[i];
    }
    msg += ", found ";
    msg += cur_.kind == Tok::end ? "end of input" : "'" + cur_.text + "'";
    if (!note.empty()) msg += " (" + note + ")";
    throw Error(errc::syntax_error, msg, cur_.pos, std::move(labels));
  }

  [[noreturn]] void reject_value(const std::string& expected_label,
                                 const std::string& note) {
    throw Error(errc::syntax_error, "expected " + expected_label + " (" + note + ")",
                cur_.pos, {expected_label});
  }

  Token expect(Tok kind) {
    if (cur_.kind != kind) reject({kind});
    Token t = cur_;
    advance();
    return t;
  }

  std::int64_t expect_positive_int(const std::string& what) {
    if (cur_.kind != Tok::integer) reject({Tok::integer});
    if (cur_.value < 1) reject_value("positive integer", what);
    std::int64_t v = cur_.value;
    advance();
    return v;
  }

  Segment parse_segment() {
    expect(Tok::lbracket);
    std::int64_t sl2 = expect_positive_int("sl2 dimension");
    if (sl2 > 1'000'000)
      throw Error(errc::dimension_mismatch, "sl2 dimension is implausibly large",
                  cur_.pos);
    expect(Tok::semi);
    GaloisTypeLabel rho = parse_rho();
    expect(Tok::semi);
    Rational exponent = parse_rational();
    expect(Tok::rbracket);
    return Segment{static_cast<int>(sl2), std::move(rho), exponent};
  }

  GaloisTypeLabel parse_rho() {
    Token n = expect(Tok::name);
    GaloisTypeLabel rho{n.text, 1};
    if (cur_.kind == Tok::lparen) {
      advance();
      std::int64_t dim = expect_positive_int("rho dimension");
      if (dim > 1'000'000)
        throw Error(errc::dimension_mismatch, "rho dimension is implausibly large",
                    cur_.pos);
      rho.dim = static_cast<int>(dim);
      expect(Tok::rparen);
    }
    return rho;
  }

  Rational parse_rational() {
    bool neg = false;
    if (cur_.kind == Tok::minus) {
      neg = true;
      advance();
    }
    if (cur_.kind != Tok::integer) reject({Tok::integer});
    std::int64_t num = cur_.value;
    advance();
    std::int64_t den = 1;
    if (cur_.kind == Tok::slash) {
      advance();
      if (cur_.kind != Tok::integer) reject({Tok::integer});
      if (cur_.value == 0) reject_value("nonzero integer", "zero denominator");
      den = cur_.value;
      advance();
    }
    return Rational(neg ? -num : num, den);
  }

  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
        ++col_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else {
        break;
      }
    }
    SourcePos here{line_, col_};
    if (pos_ >= text_.size()) {
      cur_ = Token{Tok::end, "", 0, here};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok k) {
      cur_ = Token{k, std::string(1, c), 0, here};
      ++pos_;
      ++col_;
    };
    switch (c) {
      case '[': single(Tok::lbracket); return;
      case ']': single(Tok::rbracket); return;
      case '(': single(Tok::lparen); return;
      case ')': single(Tok::rparen); return;
      case ';': single(Tok::semi); return;
      case '+': single(Tok::plus); return;
      case '/': single(Tok::slash); return;
      case '-': single(Tok::minus); return;
      default: break;
    }
    if (c >= '0' && c <= '9') {
      size_t start = pos_;
      unsigned __int128 v = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (v > static_cast<unsigned __int128>(INT64_MAX))
          throw Error(errc::overflow_error,
                      "integer literal exceeds the 64-bit range", here);
        ++pos_;
        ++col_;
      }
      cur_ = Token{Tok::integer, std::string(text_.substr(start, pos_ - start)),
                   static_cast<std::int64_t>(v), here};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      cur_ = Token{Tok::name, std::string(text_.substr(start, pos_ - start)), 0, here};
      return;
    }
    throw Error(errc::syntax_error,
                "unexpected character '" + std::string(1, c) + "'", here,
                std::vector<std::string>{});
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_{Tok::end, "", 0, {1, 1}};
};

}  // namespace

std::vector<Segment> parse_segments(std::string_view text) {
  return Parser(text).parse();
}

GLnLParameter parse_lparam(std::string_view text, std::optional<int> n, int d) {
  std::vector<Segment> segments = parse_segments(text);
  long long total = 0;
  for (const Segment& s : segments) total += segment_dim(s);
  int target = n ? *n : static_cast<int>(total);
  return GLnLParameter::create(target, d, std::move(segments));
}

std::string to_expression(const GLnLParameter& phi) {
  std::string out;
  for (size_t i = 0; i < phi.segments().size(); ++i) {
    const Segment& s = phi.segments()[i];
    if (i) out += " + ";
    out += "[" + std::to_string(s.sl2_dim) + ";" + s.rho.name;
    if (s.rho.dim != 1) out += "(" + std::to_string(s.rho.dim) + ")";
    out += ";" + s.exponent.str() + "]";
  }
  return out;
}

}  // namespace lpc
