#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rolelogic/signature.hpp"

namespace rolelogic {

// Largest supported domain; a binary relation must fit in one 64-bit word.
inline constexpr int kMaxDomain = 8;

// Finite relational structure. Elements are 0..size()-1 with display names.
// Each predicate is stored as one word: bit d for unaries, bit d1*n+d2 for
// binaries. Word order is the signature's unaries followed by its binaries.
class Model {
 public:
  Model(Signature sig, int size);
  Model(Signature sig, std::vector<std::string> domain);

  const Signature& sig() const { return *sig_; }
  std::shared_ptr<const Signature> sig_ptr() const { return sig_; }
  int size() const { return n_; }
  const std::vector<std::string>& domain() const { return *domain_; }
  const std::string& element_name(int d) const { return (*domain_)[d]; }
  int element(std::string_view name) const;

  bool unary(int pred, int d) const { return (bits_[pred] >> d) & 1u; }
  bool binary(int pred, int d1, int d2) const {
    return (bits_[unary_count() + pred] >> (d1 * n_ + d2)) & 1u;
  }
  void set_unary(int pred, int d, bool value = true);
  void set_binary(int pred, int d1, int d2, bool value = true);

  // Name-based access; throws SignatureError for unknown names.
  bool holds(std::string_view pred, int d) const;
  bool holds(std::string_view pred, int d1, int d2) const;

  int unary_count() const { return static_cast<int>(sig_->unaries().size()); }
  int binary_count() const { return static_cast<int>(sig_->binaries().size()); }
  int word_count() const { return static_cast<int>(bits_.size()); }
  // Number of tuples of the predicate stored in `word`.
  int word_width(int word) const { return word < unary_count() ? n_ : n_ * n_; }
  const std::vector<std::uint64_t>& words() const { return bits_; }
  std::vector<std::uint64_t>& words() { return bits_; }

  // Same domain and signature, every predicate empty.
  Model empty_like() const;

  friend bool operator==(const Model& a, const Model& b);

 private:
  std::shared_ptr<const Signature> sig_;
  std::shared_ptr<const std::vector<std::string>> domain_;
  int n_;
  std::vector<std::uint64_t> bits_;
};

// Parses the `model { domain ...; P = {...}; }` format. Predicates not in
// `sig` are added (arity from their tuples, naming convention if empty).
Model parse_model(std::string_view text, const Signature& sig);
std::string print_model(const Model& m);

}  // namespace rolelogic
