#include <map>
#include <optional>

#include "lexer.hpp"
#include "rolelogic/error.hpp"
#include "rolelogic/records.hpp"
#include "rolelogic/syntax.hpp"

namespace rolelogic {

namespace {

using detail::Tok;
using detail::Token;

class Parser {
 public:
  Parser(std::string_view text, Signature* sig, bool infer)
      : toks_(detail::tokenize(text)), sig_(sig), infer_(infer) {}

  role::Formula role_formula() { return role_implies(); }
  fo::Formula fo_formula() { return fo_iff(); }

  void expect_end() { expect(Tok::End); }

  FormulaFile file(Dialect dialect) {
    FormulaFile out;
    if (is_ident("sig")) {
      parse_sig_block(*sig_);
      out.declared_sig = true;
      infer_ = false;
    }
    while (is_ident("let")) {
      next();
      Token name = expect(Tok::Ident);
      if (is_reserved_word(name.text) || sig_->has(name.text) || lets_.count(name.text))
        throw ParseError("binding name '" + name.text + "' already in use", name.line,
                         name.column);
      expect(Tok::Eq);
      AnyFormula f = any(dialect);
      expect(Tok::Semi);
      lets_[name.text] = f;
      out.bindings.emplace_back(name.text, f);
    }
    if (!is_ident("formula")) error("expected 'formula'");
    next();
    out.formula = any(dialect);
    expect(Tok::Semi);
    expect(Tok::End);
    out.sig = *sig_;
    return out;
  }

  RoleFile role_file() {
    RoleFile out;
    if (is_ident("sig")) {
      parse_sig_block(*sig_);
      infer_ = false;
    }
    while (!at(Tok::End)) out.roles.push_back(role_decl());
    out.sig = *sig_;
    return out;
  }

  RoleDecl role_decl() {
    RoleDecl d;
    if (is_ident("simultaneous")) {
      next();
      d.simultaneous = true;
    }
    if (!is_ident("role")) error("expected 'role'");
    next();
    d.name = expect(Tok::Ident).text;
    if (accept(Tok::LBracket)) {
      if (!d.simultaneous) error("header fields are only allowed for simultaneous roles");
      if (!at(Tok::RBracket)) {
        d.header.push_back(binary_name());
        while (accept(Tok::Comma)) d.header.push_back(binary_name());
      }
      expect(Tok::RBracket);
    }
    expect(Tok::LBrace);
    while (!accept(Tok::RBrace)) {
      Token kw = expect(Tok::Ident);
      do {
        if (kw.text == "fields") {
          std::string f = binary_name();
          expect(Tok::Colon);
          d.fields.emplace_back(f, role_formula());
        } else if (kw.text == "slots") {
          role::Formula s = role_formula();
          expect(Tok::Dot);
          d.slots.emplace_back(s, binary_name());
        } else if (kw.text == "identities") {
          std::string f = binary_name();
          expect(Tok::Dot);
          d.identities.emplace_back(f, binary_name());
        } else if (kw.text == "acyclic") {
          d.acyclic.push_back(binary_name());
        } else {
          error_at(kw, "expected 'fields', 'slots', 'identities' or 'acyclic'");
        }
      } while (accept(Tok::Comma));
      expect(Tok::Semi);
    }
    return d;
  }

  void parse_sig_block(Signature& sig) {
    if (!is_ident("sig")) error("expected 'sig'");
    next();
    expect(Tok::LBrace);
    while (!at(Tok::RBrace)) {
      Token kw = expect(Tok::Ident);
      std::vector<Token> names;
      names.push_back(expect(Tok::Ident));
      while (accept(Tok::Comma)) names.push_back(expect(Tok::Ident));
      expect(Tok::Semi);
      for (auto& n : names) {
        try {
          if (kw.text == "unary")
            sig.add_unary(n.text);
          else if (kw.text == "binary")
            sig.add_binary(n.text);
          else if (kw.text == "nonsplit")
            sig.set_nonsplittable(n.text);
          else
            throw ParseError("expected 'unary', 'binary' or 'nonsplit'", kw.line, kw.column);
        } catch (const SignatureError& e) {
          throw ParseError(e.what(), n.line, n.column);
        }
      }
    }
    expect(Tok::RBrace);
  }

 private:
  // ---- token helpers ----
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok t) const { return peek().kind == t; }
  bool is_ident(std::string_view s) const { return at(Tok::Ident) && peek().text == s; }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok t) {
    if (!at(t)) return false;
    next();
    return true;
  }
  Token expect(Tok t) {
    if (!at(t))
      error(std::string("expected ") + detail::describe(t) + ", found " +
            (at(Tok::End) ? "end of input" : "'" + peek().text + "'"));
    return next();
  }
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }
  [[noreturn]] void error_at(const Token& t, const std::string& msg) const {
    throw ParseError(msg, t.line, t.column);
  }

  int number() {
    Token t = expect(Tok::Number);
    return std::stoi(t.text);
  }

  AnyFormula any(Dialect d) {
    if (d == Dialect::Role) return role_formula();
    return fo_formula();
  }

  // ---- predicate resolution ----
  PredKind resolve(const Token& t, std::optional<PredKind> wanted) {
    if (is_reserved_word(t.text)) error_at(t, "reserved word '" + t.text + "' used as a name");
    if (auto k = sig_->kind(t.text)) return *k;
    if (!infer_) error_at(t, "undeclared predicate '" + t.text + "'");
    PredKind k = wanted ? *wanted : conventional_kind(t.text);
    if (k == PredKind::Unary)
      sig_->add_unary(t.text);
    else
      sig_->add_binary(t.text);
    return k;
  }

  std::string binary_name() {
    Token t = expect(Tok::Ident);
    if (resolve(t, PredKind::Binary) != PredKind::Binary)
      error_at(t, "'" + t.text + "' is not a binary predicate");
    return t.text;
  }

  std::optional<AnyFormula> binding(const std::string& name) const {
    auto it = lets_.find(name);
    if (it == lets_.end()) return std::nullopt;
    return it->second;
  }

  // ---- role dialect ----
  role::Formula role_implies() {
    role::Formula lhs = role_or();
    if (accept(Tok::Implies)) return role::implies(lhs, role_implies());
    return lhs;
  }

  role::Formula role_or() {
    role::Formula f = role_spatial();
    while (accept(Tok::Bar)) f = role::disj(f, role_spatial());
    return f;
  }

  role::Formula role_spatial() {
    role::Formula f = role_and();
    while (accept(Tok::Star)) f = role::spatial(f, role_and());
    return f;
  }

  role::Formula role_and() {
    role::Formula f = role_unary();
    while (accept(Tok::Amp)) f = role::conj(f, role_unary());
    return f;
  }

  role::Bound bound() {
    expect(Tok::LParen);
    role::Bound b;
    if (accept(Tok::Eq))
      b.op = role::BoundOp::Eq;
    else if (accept(Tok::Leq))
      b.op = role::BoundOp::Le;
    else if (accept(Tok::Geq))
      b.op = role::BoundOp::Ge;
    else
      error("expected '=', '<=' or '>=' in multiplicity");
    b.k = number();
    expect(Tok::RParen);
    return b;
  }

  bool bound_follows() const {
    return peek().kind == Tok::LParen &&
           (peek(1).kind == Tok::Eq || peek(1).kind == Tok::Leq || peek(1).kind == Tok::Geq);
  }

  role::Formula role_unary() {
    if (accept(Tok::Bang)) return role::neg(role_unary());
    if (is_ident("inv")) {
      next();
      return role::inv(role_unary());
    }
    if (is_ident("sh")) {
      next();
      return role::shift(role_unary());
    }
    if (is_ident("card")) {
      next();
      Tok op = peek().kind;
      if (op != Tok::Geq && op != Tok::Leq && op != Tok::Eq)
        error("expected '>=', '<=' or '=' after 'card'");
      next();
      int k = number();
      role::Formula body = role_unary();
      if (op == Tok::Geq) return role::card_geq(k, body);
      if (op == Tok::Leq) return role::card_leq(k, body);
      return role::card_eq(k, body);
    }
    return role_postfix(role_primary());
  }

  role::Formula role_postfix(role::Formula f) {
    for (;;) {
      if (at(Tok::Back)) {
        next();
        if (bound_follows()) {
          role::Bound b = bound();
          f = role::slot(f, b, binary_name());
        } else {
          f = role::slot(f, role::Bound{}, binary_name());
        }
      } else if (accept(Tok::BackStar)) {
        f = role::multislot(f, binary_name());
      } else {
        return f;
      }
    }
  }

  role::Formula role_primary() {
    if (accept(Tok::LParen)) {
      role::Formula f = role_formula();
      expect(Tok::RParen);
      return f;
    }
    if (accept(Tok::LBracket)) {
      role::Formula f = role_formula();
      expect(Tok::RBracket);
      return role::box(f);
    }
    Token t = expect(Tok::Ident);
    const std::string& s = t.text;
    if (s == "id") return role::id();
    if (s == "true") return role::top();
    if (s == "false") return role::bottom();
    if (s == "emp") return role::emp();
    if (s == "edges") return role::edges();
    if (s == "fc") {
      expect(Tok::LParen);
      std::string f = binary_name();
      expect(Tok::RParen);
      return role::field_complement(f);
    }
    if (s == "acyclic") {
      expect(Tok::LParen);
      std::vector<std::string> names{binary_name()};
      while (accept(Tok::Comma)) names.push_back(binary_name());
      expect(Tok::RParen);
      return role::acyclic(names);
    }
    if (auto b = binding(s)) {
      if (auto* rf = std::get_if<role::Formula>(&*b)) return *rf;
      error_at(t, "binding '" + s + "' is not a role formula");
    }
    bool record = at(Tok::Arrow) || at(Tok::ArrowStar);
    PredKind k = resolve(t, record ? std::optional(PredKind::Binary) : std::nullopt);
    if (record) {
      if (k != PredKind::Binary) error_at(t, "record field '" + s + "' is not binary");
      if (accept(Tok::ArrowStar)) return role::multifield(s, role_unary());
      next();
      role::Bound b;
      if (bound_follows()) b = bound();
      return role::field(s, b, role_unary());
    }
    return k == PredKind::Unary ? role::unary(s) : role::binary(s);
  }

  // ---- fo dialect ----
  fo::Formula fo_iff() {
    fo::Formula lhs = fo_implies();
    if (accept(Tok::Iff)) return fo::iff(lhs, fo_implies());
    return lhs;
  }

  fo::Formula fo_implies() {
    fo::Formula lhs = fo_or();
    if (accept(Tok::Implies)) return fo::implies(lhs, fo_implies());
    return lhs;
  }

  fo::Formula fo_or() {
    fo::Formula f = fo_spatial();
    while (accept(Tok::Bar)) f = fo::disj(f, fo_spatial());
    return f;
  }

  fo::Formula fo_spatial() {
    fo::Formula f = fo_and();
    while (accept(Tok::Star)) f = fo::spatial(f, fo_and());
    return f;
  }

  fo::Formula fo_and() {
    fo::Formula f = fo_unary();
    while (accept(Tok::Amp)) f = fo::conj(f, fo_unary());
    return f;
  }

  std::string variable() {
    Token t = expect(Tok::Ident);
    if (is_reserved_word(t.text)) error_at(t, "reserved word '" + t.text + "' used as variable");
    return t.text;
  }

  std::vector<std::string> variable_list() {
    expect(Tok::LParen);
    std::vector<std::string> vs;
    if (!at(Tok::RParen)) {
      vs.push_back(variable());
      while (accept(Tok::Comma)) vs.push_back(variable());
    }
    expect(Tok::RParen);
    return vs;
  }

  fo::Formula fo_unary() {
    if (accept(Tok::Bang)) return fo::neg(fo_unary());
    if (is_ident("exists")) {
      next();
      Tok op = Tok::Geq;
      int k = 1;
      if (at(Tok::Geq) || at(Tok::Eq) || at(Tok::Leq)) {
        op = next().kind;
        k = number();
      }
      std::string v = variable();
      expect(Tok::Dot);
      fo::Formula body = fo_iff();
      if (op == Tok::Geq) return fo::exists_geq(k, v, body);
      if (op == Tok::Eq) return fo::exists_eq(k, v, body);
      return fo::exists_leq(k, v, body);
    }
    if (is_ident("forall")) {
      next();
      std::string v = variable();
      expect(Tok::Dot);
      return fo::forall(v, fo_iff());
    }
    if (is_ident("exists2") || is_ident("forall2")) {
      bool ex = next().text == "exists2";
      Token r = expect(Tok::Ident);
      if (sig_->has(r.text) || is_reserved_word(r.text))
        error_at(r, "relation variable '" + r.text + "' clashes with a predicate");
      expect(Tok::Slash);
      int arity = number();
      expect(Tok::Dot);
      scope_.emplace_back(r.text, arity);
      fo::Formula body = fo_iff();
      scope_.pop_back();
      return ex ? fo::exists_rel(r.text, arity, body) : fo::forall_rel(r.text, arity, body);
    }
    return fo_primary();
  }

  fo::Formula fo_primary() {
    if (accept(Tok::LParen)) {
      if (is_ident("lfp")) {
        next();
        Token r = expect(Tok::Ident);
        if (sig_->has(r.text) || is_reserved_word(r.text))
          error_at(r, "fixpoint relation '" + r.text + "' clashes with a predicate");
        std::vector<std::string> formals = variable_list();
        expect(Tok::Dot);
        scope_.emplace_back(r.text, static_cast<int>(formals.size()));
        fo::Formula body = fo_formula();
        scope_.pop_back();
        expect(Tok::RParen);
        std::vector<std::string> actuals = variable_list();
        if (actuals.size() != formals.size()) error("lfp: wrong number of arguments");
        for (std::size_t i = 0; i < formals.size(); ++i)
          for (std::size_t j = i + 1; j < formals.size(); ++j)
            if (formals[i] == formals[j]) error_at(r, "lfp: repeated formal variable");
        fo::Formula f = fo::lfp(r.text, formals, body, actuals);
        if (!fo::lfp_positive(f))
          error_at(r, "relation '" + r.text + "' occurs negatively in its fixpoint body");
        return f;
      }
      fo::Formula f = fo_formula();
      expect(Tok::RParen);
      return f;
    }
    Token t = expect(Tok::Ident);
    const std::string& s = t.text;
    if (s == "true") return fo::top();
    if (s == "false") return fo::bottom();
    if (s == "acyclic") {
      expect(Tok::LParen);
      std::vector<std::string> names{binary_name()};
      while (accept(Tok::Comma)) names.push_back(binary_name());
      expect(Tok::RParen);
      return fo::acyclic(names);
    }
    if (at(Tok::LParen)) {
      std::vector<std::string> args = variable_list();
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
        if (it->first == s) {
          if (it->second != static_cast<int>(args.size()))
            error_at(t, "relation variable '" + s + "' used with wrong arity");
          return fo::pred(s, args);
        }
      }
      if (args.size() != 1 && args.size() != 2)
        error_at(t, "predicate '" + s + "' must be unary or binary");
      PredKind want = args.size() == 1 ? PredKind::Unary : PredKind::Binary;
      if (resolve(t, want) != want) error_at(t, "predicate '" + s + "' used with wrong arity");
      return fo::pred(s, args);
    }
    if (at(Tok::Eq) || at(Tok::Neq)) {
      if (is_reserved_word(s)) error_at(t, "reserved word '" + s + "' used as variable");
      bool negated = next().kind == Tok::Neq;
      std::string rhs = variable();
      fo::Formula e = fo::eq(s, rhs);
      return negated ? fo::neg(e) : e;
    }
    if (auto b = binding(s)) {
      if (auto* ff = std::get_if<fo::Formula>(&*b)) return *ff;
      error_at(t, "binding '" + s + "' is not a first-order formula");
    }
    error_at(t, "unexpected '" + s + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature* sig_;
  bool infer_;
  std::map<std::string, AnyFormula> lets_;
  std::vector<std::pair<std::string, int>> scope_;
};

}  // namespace

role::Formula parse_role(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  Parser p(text, &copy, false);
  role::Formula f = p.role_formula();
  p.expect_end();
  return f;
}

fo::Formula parse_fo(std::string_view text, const Signature& sig) {
  Signature copy = sig;
  Parser p(text, &copy, false);
  fo::Formula f = p.fo_formula();
  p.expect_end();
  return f;
}

role::Formula parse_role_infer(std::string_view text, Signature& sig) {
  Parser p(text, &sig, true);
  role::Formula f = p.role_formula();
  p.expect_end();
  return f;
}

fo::Formula parse_fo_infer(std::string_view text, Signature& sig) {
  Parser p(text, &sig, true);
  fo::Formula f = p.fo_formula();
  p.expect_end();
  return f;
}

FormulaFile parse_formula_file(std::string_view text, Dialect dialect, const Signature* base) {
  Signature sig = base ? *base : Signature{};
  Parser p(text, &sig, true);
  return p.file(dialect);
}

Signature parse_signature(std::string_view text) {
  Signature sig;
  Parser p(text, &sig, false);
  p.parse_sig_block(sig);
  p.expect_end();
  return sig;
}

RoleFile parse_role_file(std::string_view text) {
  Signature sig;
  Parser p(text, &sig, true);
  return p.role_file();
}

}  // namespace rolelogic
