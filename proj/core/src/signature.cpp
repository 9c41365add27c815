#include "rolelogic/signature.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "rolelogic/error.hpp"

namespace rolelogic {

namespace {

constexpr std::array<std::string_view, 20> kReserved = {
    "id",     "emp",   "true",    "false",   "inv",     "sh",     "card",
    "fc",     "edges", "acyclic", "exists",  "forall",  "lfp",    "exists2",
    "forall2", "sig",  "let",     "formula", "unary",   "binary"};

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_reserved_word(std::string_view s) {
  return std::find(kReserved.begin(), kReserved.end(), s) != kReserved.end();
}

PredKind conventional_kind(std::string_view name) {
  return std::isupper(static_cast<unsigned char>(name.front())) ? PredKind::Unary
                                                                 : PredKind::Binary;
}

Signature::Signature(std::vector<std::string> unaries, std::vector<std::string> binaries,
                     std::vector<std::string> nonsplittable) {
  for (auto& u : unaries) add_unary(u);
  for (auto& b : binaries) add_binary(b);
  for (auto& n : nonsplittable) set_nonsplittable(n);
}

void Signature::check_fresh(const std::string& name) const {
  if (!is_identifier(name)) throw SignatureError("invalid identifier '" + name + "'");
  if (is_reserved_word(name)) throw SignatureError("reserved name '" + name + "'");
  if (has(name)) throw SignatureError("predicate '" + name + "' declared twice");
}

void Signature::add_unary(const std::string& name) {
  check_fresh(name);
  unaries_.push_back(name);
}

void Signature::add_binary(const std::string& name) {
  check_fresh(name);
  binaries_.push_back(name);
}

void Signature::set_nonsplittable(const std::string& name, bool value) {
  if (!has(name)) throw SignatureError("nonsplit: undeclared predicate '" + name + "'");
  auto it = std::find(nonsplittable_.begin(), nonsplittable_.end(), name);
  if (value && it == nonsplittable_.end()) nonsplittable_.push_back(name);
  if (!value && it != nonsplittable_.end()) nonsplittable_.erase(it);
}

bool Signature::has_unary(std::string_view name) const { return unary_index(name) >= 0; }
bool Signature::has_binary(std::string_view name) const { return binary_index(name) >= 0; }

std::optional<PredKind> Signature::kind(std::string_view name) const {
  if (has_unary(name)) return PredKind::Unary;
  if (has_binary(name)) return PredKind::Binary;
  return std::nullopt;
}

bool Signature::splittable(std::string_view name) const {
  return std::find(nonsplittable_.begin(), nonsplittable_.end(), name) == nonsplittable_.end();
}

int Signature::unary_index(std::string_view name) const {
  auto it = std::find(unaries_.begin(), unaries_.end(), name);
  return it == unaries_.end() ? -1 : static_cast<int>(it - unaries_.begin());
}

int Signature::binary_index(std::string_view name) const {
  auto it = std::find(binaries_.begin(), binaries_.end(), name);
  return it == binaries_.end() ? -1 : static_cast<int>(it - binaries_.begin());
}

Signature Signature::splittable_copy() const {
  Signature s = *this;
  s.nonsplittable_.clear();
  return s;
}

}  // namespace rolelogic
