#include "lexer.hpp"

#include <cctype>

#include "rolelogic/error.hpp"

namespace rolelogic::detail {

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Implies: return "'=>'";
    case Tok::Iff: return "'<=>'";
    case Tok::Star: return "'*'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Dot: return "'.'";
    case Tok::Slash: return "'/'";
    case Tok::Colon: return "':'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::Geq: return "'>='";
    case Tok::Leq: return "'<='";
    case Tok::Arrow: return "'->'";
    case Tok::ArrowStar: return "'->*'";
    case Tok::Back: return "'<-'";
    case Tok::BackStar: return "'<-*'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto starts = [&](std::string_view p) { return src.substr(i, p.size()) == p; };

  struct Punct {
    std::string_view text;
    Tok kind;
  };
  // Longest match first.
  static constexpr Punct kPuncts[] = {
      {"<=>", Tok::Iff}, {"->*", Tok::ArrowStar}, {"<-*", Tok::BackStar}, {"=>", Tok::Implies},
      {"!=", Tok::Neq},  {">=", Tok::Geq},        {"<=", Tok::Leq},       {"->", Tok::Arrow},
      {"<-", Tok::Back}, {"!", Tok::Bang},        {"&", Tok::Amp},        {"|", Tok::Bar},
      {"*", Tok::Star},  {"[", Tok::LBracket},    {"]", Tok::RBracket},   {"(", Tok::LParen},
      {")", Tok::RParen}, {"{", Tok::LBrace},     {"}", Tok::RBrace},     {",", Tok::Comma},
      {";", Tok::Semi},  {".", Tok::Dot},         {"/", Tok::Slash},      {":", Tok::Colon},
      {"=", Tok::Eq},
  };

  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#' || starts("//")) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int tl = line, tc = col;
    if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j - i > 6) throw ParseError("number too large", tl, tc);
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const auto& p : kPuncts) {
      if (starts(p.text)) {
        out.push_back({p.kind, std::string(p.text), tl, tc});
        advance(p.text.size());
        matched = true;
        break;
      }
    }
    if (!matched) {
      if (c == '-') throw ParseError("negative count or stray '-'", tl, tc);
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", tl,
                       tc);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

}  // namespace rolelogic::detail
