#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rolelogic::detail {

enum class Tok {
  Ident,
  Number,
  Bang,        // !
  Amp,         // &
  Bar,         // |
  Implies,     // =>
  Iff,         // <=>
  Star,        // *
  LBracket,
  RBracket,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Dot,
  Slash,
  Colon,
  Eq,          // =
  Neq,         // !=
  Geq,         // >=
  Leq,         // <=
  Arrow,       // ->
  ArrowStar,   // ->*
  Back,        // <-
  BackStar,    // <-*
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

// Splits `src` into tokens; `#` and `//` start line comments. Throws ParseError.
std::vector<Token> tokenize(std::string_view src);

const char* describe(Tok t);

}  // namespace rolelogic::detail
