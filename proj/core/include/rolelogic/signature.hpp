#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rolelogic {

enum class PredKind { Unary, Binary };

// Declared unary and binary predicate names. Insertion order is preserved and
// is the canonical order used by model enumeration and atom universes.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<std::string> unaries, std::vector<std::string> binaries,
            std::vector<std::string> nonsplittable = {});

  void add_unary(const std::string& name);
  void add_binary(const std::string& name);
  void set_nonsplittable(const std::string& name, bool value = true);

  const std::vector<std::string>& unaries() const { return unaries_; }
  const std::vector<std::string>& binaries() const { return binaries_; }

  bool has_unary(std::string_view name) const;
  bool has_binary(std::string_view name) const;
  bool has(std::string_view name) const { return has_unary(name) || has_binary(name); }
  std::optional<PredKind> kind(std::string_view name) const;
  bool splittable(std::string_view name) const;
  bool all_splittable() const { return nonsplittable_.empty(); }
  const std::vector<std::string>& nonsplittable() const { return nonsplittable_; }

  // Position of the predicate in unaries() or binaries().
  int unary_index(std::string_view name) const;
  int binary_index(std::string_view name) const;

  // Copy with every predicate marked splittable.
  Signature splittable_copy() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  void check_fresh(const std::string& name) const;

  std::vector<std::string> unaries_;
  std::vector<std::string> binaries_;
  std::vector<std::string> nonsplittable_;
};

bool is_identifier(std::string_view s);
bool is_reserved_word(std::string_view s);

// Convention used when a formula file has no `sig` header: identifiers starting
// with an upper-case letter are unary, lower-case ones are binary.
PredKind conventional_kind(std::string_view name);

}  // namespace rolelogic
