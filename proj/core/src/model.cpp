#include "rolelogic/model.hpp"

#include <map>

#include "lexer.hpp"
#include "rolelogic/error.hpp"

namespace rolelogic {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

}  // namespace

Model::Model(Signature sig, int size) : Model(std::move(sig), default_names(size)) {}

Model::Model(Signature sig, std::vector<std::string> domain)
    : sig_(std::make_shared<const Signature>(std::move(sig))),
      n_(static_cast<int>(domain.size())) {
  if (n_ < 1) throw PreconditionError("model domain must be nonempty");
  if (n_ > kMaxDomain)
    throw GuardExceeded("model domain larger than " + std::to_string(kMaxDomain));
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = i + 1; j < domain.size(); ++j)
      if (domain[i] == domain[j]) throw PreconditionError("duplicate element '" + domain[i] + "'");
  domain_ = std::make_shared<const std::vector<std::string>>(std::move(domain));
  bits_.assign(sig_->unaries().size() + sig_->binaries().size(), 0);
}

int Model::element(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if ((*domain_)[i] == name) return i;
  return -1;
}

void Model::set_unary(int pred, int d, bool value) {
  std::uint64_t bit = std::uint64_t{1} << d;
  bits_[pred] = value ? bits_[pred] | bit : bits_[pred] & ~bit;
}

void Model::set_binary(int pred, int d1, int d2, bool value) {
  std::uint64_t bit = std::uint64_t{1} << (d1 * n_ + d2);
  auto& w = bits_[unary_count() + pred];
  w = value ? w | bit : w & ~bit;
}

bool Model::holds(std::string_view pred, int d) const {
  int i = sig_->unary_index(pred);
  if (i < 0) throw SignatureError("no unary predicate '" + std::string(pred) + "' in model");
  return unary(i, d);
}

bool Model::holds(std::string_view pred, int d1, int d2) const {
  int i = sig_->binary_index(pred);
  if (i < 0) throw SignatureError("no binary predicate '" + std::string(pred) + "' in model");
  return binary(i, d1, d2);
}

Model Model::empty_like() const {
  Model m = *this;
  std::fill(m.bits_.begin(), m.bits_.end(), 0);
  return m;
}

bool operator==(const Model& a, const Model& b) {
  return a.n_ == b.n_ && *a.domain_ == *b.domain_ && *a.sig_ == *b.sig_ && a.bits_ == b.bits_;
}

// ---- text format ----

Model parse_model(std::string_view text, const Signature& base) {
  using detail::Tok;
  auto toks = detail::tokenize(text);
  std::size_t pos = 0;
  auto peek = [&]() -> const detail::Token& { return toks[std::min(pos, toks.size() - 1)]; };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg, peek().line, peek().column);
  };
  auto expect = [&](Tok t) {
    if (peek().kind != t)
      fail(std::string("expected ") + detail::describe(t) + ", found '" + peek().text + "'");
    return toks[pos++];
  };
  auto keyword = [&](const char* kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) fail(std::string("expected '") + kw + "'");
    ++pos;
  };

  keyword("model");
  expect(Tok::LBrace);
  keyword("domain");
  std::vector<std::string> domain{expect(Tok::Ident).text};
  while (peek().kind == Tok::Comma) {
    ++pos;
    domain.push_back(expect(Tok::Ident).text);
  }
  expect(Tok::Semi);

  struct Entry {
    detail::Token name;
    std::vector<std::vector<std::string>> tuples;
  };
  std::vector<Entry> entries;
  while (peek().kind != Tok::RBrace) {
    Entry e{expect(Tok::Ident), {}};
    expect(Tok::Eq);
    expect(Tok::LBrace);
    while (peek().kind != Tok::RBrace) {
      if (peek().kind == Tok::LParen) {
        ++pos;
        std::vector<std::string> t{expect(Tok::Ident).text};
        expect(Tok::Comma);
        t.push_back(expect(Tok::Ident).text);
        expect(Tok::RParen);
        e.tuples.push_back(t);
      } else {
        e.tuples.push_back({expect(Tok::Ident).text});
      }
      if (peek().kind != Tok::Comma) break;
      ++pos;
    }
    expect(Tok::RBrace);
    expect(Tok::Semi);
    entries.push_back(std::move(e));
  }
  expect(Tok::RBrace);
  expect(Tok::End);

  Signature sig = base;
  for (auto& e : entries) {
    if (sig.has(e.name.text)) continue;
    PredKind k = e.tuples.empty() ? conventional_kind(e.name.text)
                 : e.tuples.front().size() == 1 ? PredKind::Unary
                                                 : PredKind::Binary;
    try {
      if (k == PredKind::Unary)
        sig.add_unary(e.name.text);
      else
        sig.add_binary(e.name.text);
    } catch (const SignatureError& err) {
      throw ParseError(err.what(), e.name.line, e.name.column);
    }
  }

  Model m(sig, domain);
  std::map<std::string, bool> seen;
  for (auto& e : entries) {
    auto where = [&](const std::string& msg) {
      throw ParseError(msg, e.name.line, e.name.column);
    };
    if (seen[e.name.text]) where("predicate '" + e.name.text + "' listed twice");
    seen[e.name.text] = true;
    bool unary = sig.has_unary(e.name.text);
    for (auto& t : e.tuples) {
      if ((t.size() == 1) != unary) where("wrong arity for '" + e.name.text + "'");
      std::vector<int> ds;
      for (auto& name : t) {
        int d = m.element(name);
        if (d < 0) where("unknown element '" + name + "'");
        ds.push_back(d);
      }
      if (unary)
        m.set_unary(sig.unary_index(e.name.text), ds[0]);
      else
        m.set_binary(sig.binary_index(e.name.text), ds[0], ds[1]);
    }
  }
  return m;
}

std::string print_model(const Model& m) {
  std::string out = "model {\n  domain ";
  for (int d = 0; d < m.size(); ++d) out += (d ? ", " : "") + m.element_name(d);
  out += ";\n";
  const Signature& sig = m.sig();
  for (std::size_t i = 0; i < sig.unaries().size(); ++i) {
    out += "  " + sig.unaries()[i] + " = {";
    bool first = true;
    for (int d = 0; d < m.size(); ++d) {
      if (!m.unary(static_cast<int>(i), d)) continue;
      out += (first ? " " : ", ") + m.element_name(d);
      first = false;
    }
    out += first ? "};\n" : " };\n";
  }
  for (std::size_t i = 0; i < sig.binaries().size(); ++i) {
    out += "  " + sig.binaries()[i] + " = {";
    bool first = true;
    for (int a = 0; a < m.size(); ++a)
      for (int b = 0; b < m.size(); ++b) {
        if (!m.binary(static_cast<int>(i), a, b)) continue;
        out += (first ? " (" : ", (") + m.element_name(a) + "," + m.element_name(b) + ")";
        first = false;
      }
    out += first ? "};\n" : " };\n";
  }
  out += "}\n";
  return out;
}

}  // namespace rolelogic
