#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "lambday/syntax.hpp"

namespace lambday {

namespace {

enum class Tok {
  kIdent,
  kNumber,
  kBackslash,
  kColon,
  kDot,
  kComma,
  kArrow,
  kHash,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceLocation where;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kNumber: return "number";
    case Tok::kBackslash: return "'\\'";
    case Tok::kColon: return "':'";
    case Tok::kDot: return "'.'";
    case Tok::kComma: return "','";
    case Tok::kArrow: return "'->'";
    case Tok::kHash: return "'#'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourceLocation loc;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
    loc.offset = i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourceLocation start = loc;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      out.push_back({Tok::kIdent, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      out.push_back({Tok::kNumber, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::kArrow, "->", start});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '\\': kind = Tok::kBackslash; break;
      case ':': kind = Tok::kColon; break;
      case '.': kind = Tok::kDot; break;
      case ',': kind = Tok::kComma; break;
      case '#': kind = Tok::kHash; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '{': kind = Tok::kLBrace; break;
      case '}': kind = Tok::kRBrace; break;
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", loc});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Context context)
      : tokens_(lex(text)), context_(std::move(context)) {}

  Type whole_type() {
    Type t = type();
    expect(Tok::kEnd);
    return t;
  }

  Term whole_term() {
    if (peek().kind == Tok::kLBracket) declarations();
    Term t = term();
    expect(Tok::kEnd);
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) {
      std::string got = peek().kind == Tok::kEnd
                            ? "end of input"
                            : "'" + peek().text + "'";
      throw ParseError(std::string("expected ") + describe(kind) + ", got " + got,
                       peek().where);
    }
    return next();
  }

  Type type() {
    Type lhs = type_atom();
    if (peek().kind == Tok::kArrow) {
      next();
      return Type::arrow(lhs, type());
    }
    return lhs;
  }

  Type type_atom() {
    const Token& t = peek();
    if (t.kind == Tok::kIdent && t.text == "o") {
      next();
      return Type::ground();
    }
    if (t.kind == Tok::kLParen) {
      next();
      Type inner = type();
      expect(Tok::kRParen);
      return inner;
    }
    throw ParseError("expected a type", t.where);
  }

  void declarations() {
    expect(Tok::kLBracket);
    if (peek().kind != Tok::kRBracket) {
      while (true) {
        Token name = expect(Tok::kIdent);
        expect(Tok::kColon);
        context_[name.text] = type();
        if (peek().kind != Tok::kComma) break;
        next();
      }
    }
    expect(Tok::kRBracket);
  }

  Term term() {
    if (peek().kind == Tok::kBackslash) return lambda();
    return application();
  }

  Term lambda() {
    expect(Tok::kBackslash);
    Token name = expect(Tok::kIdent);
    expect(Tok::kColon);
    Type binder = type();
    expect(Tok::kDot);
    scope_.push_back({name.text, binder});
    Term body = term();
    scope_.pop_back();
    return Term::lam_raw(name.text, binder, body);
  }

  bool starts_primary() const {
    switch (peek().kind) {
      case Tok::kIdent:
      case Tok::kLParen:
      case Tok::kHash:
        return true;
      default:
        return false;
    }
  }

  Term application() {
    if (!starts_primary()) {
      throw ParseError("expected a term", peek().where);
    }
    Term head = primary();
    while (true) {
      if (starts_primary()) {
        SourceLocation where = peek().where;
        Term arg = primary();
        head = apply(head, arg, where);
      } else if (peek().kind == Tok::kBackslash) {
        SourceLocation where = peek().where;
        Term arg = lambda();
        head = apply(head, arg, where);
        break;
      } else {
        break;
      }
    }
    return head;
  }

  Term apply(const Term& fun, const Term& arg, SourceLocation where) {
    try {
      return Term::app(fun, arg);
    } catch (const TypeError& e) {
      throw TypeError(std::string(e.what()) + " at " +
                          std::to_string(where.line) + ":" +
                          std::to_string(where.column),
                      e.subterm());
    }
  }

  Type braced_type() {
    expect(Tok::kLBrace);
    Type t = type();
    expect(Tok::kRBrace);
    return t;
  }

  Term primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::kLParen: {
        next();
        Term inner = term();
        expect(Tok::kRParen);
        return inner;
      }
      case Tok::kHash: {
        next();
        Token digits = expect(Tok::kNumber);
        std::size_t m = 0;
        auto [ptr, ec] = std::from_chars(
            digits.text.data(), digits.text.data() + digits.text.size(), m);
        if (ec != std::errc()) {
          throw ParseError("numeral out of range", digits.where);
        }
        return church_numeral(m, braced_type());
      }
      case Tok::kIdent: {
        next();
        if (peek().kind == Tok::kLBrace && (t.text == "Y" || t.text == "Omega")) {
          Type sub = braced_type();
          return t.text == "Y" ? Term::fix(sub) : Term::omega(sub);
        }
        return variable(t);
      }
      default:
        throw ParseError("expected a term", t.where);
    }
  }

  Term variable(const Token& t) {
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i].first == t.text) {
        return Term::bound(static_cast<std::uint32_t>(scope_.size() - 1 - i),
                           scope_[i].second);
      }
    }
    auto it = context_.find(t.text);
    if (it != context_.end()) return Term::var(t.text, it->second);
    throw ParseError("unbound variable " + t.text, t.where);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Context context_;
  std::vector<std::pair<std::string, Type>> scope_;
};

}  // namespace

Type parse_type(std::string_view text) { return Parser(text, {}).whole_type(); }

Term parse_term(std::string_view text) { return Parser(text, {}).whole_term(); }

Term parse_term(std::string_view text, const Context& context) {
  return Parser(text, context).whole_term();
}

}  // namespace lambday
