#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rolelogic/fo_formula.hpp"
#include "rolelogic/model.hpp"
#include "rolelogic/semantics.hpp"
#include "rolelogic/signature.hpp"

namespace rolelogic {

// ---- complete atomic types over a variable list ----

struct CatAtom {
  enum class Kind { Unary, Binary, Eq };
  Kind kind;
  int pred;  // index into the signature's unaries or binaries; unused for Eq
  int a;
  int b;     // unused for Unary
};

// Atom universe of a CAT cube: every A(x_i), then every f(x_i,x_j), then
// every x_i = x_j. Size |A|n + (|F|+1)n^2.
std::vector<CatAtom> cat_atoms(const Signature& sig, int n);

struct CatCube {
  std::vector<std::string> vars;
  std::vector<bool> positives;  // one entry per cat_atoms(sig, vars.size())
};

// Complete, consistent cubes whose disjunction is equivalent to `f`.
std::vector<CatCube> to_cat(const fo::Formula& f, const std::vector<std::string>& vars,
                            const Signature& sig);
fo::Formula cube_to_fo(const CatCube& c, const Signature& sig);

// ---- universes of variable atoms and x-extensions ----

inline constexpr int kNeighbor = -1;

// Atom over representative slots 0..p-1, or the neighbor variable x.
struct StarAtom {
  int pred;
  bool binary;
  int a;
  int b;  // unused for unary atoms
  friend bool operator==(const StarAtom&, const StarAtom&) = default;
};

// Which predicates take part in variable atoms and in each extension shape.
// The full relevance keeps everything; projected universes drop predicates a
// formula cannot observe.
struct Relevance {
  std::vector<bool> unary_var, unary_ext;  // A(x_i), A(x)
  std::vector<bool> binary_var;            // f(x_i,x_j)
  std::vector<bool> loop, out, in;         // f(x,x), f(x,x_i), f(x_i,x)

  static Relevance full(const Signature& sig);
  static Relevance none(const Signature& sig);
  // Atoms a depth-one formula can observe.
  static Relevance of(const fo::Formula& f, const Signature& sig);
  Relevance& operator|=(const Relevance& o);
  friend bool operator==(const Relevance&, const Relevance&) = default;
};

class StarUniverse {
 public:
  StarUniverse(const Signature& sig, int slots, Relevance rel);
  static std::shared_ptr<const StarUniverse> make(const Signature& sig, int slots,
                                                  const Relevance& rel);

  const Signature& sig() const { return sig_; }
  int slots() const { return slots_; }
  const Relevance& relevance() const { return rel_; }
  // A(x_i) for each A and i, then f(x_i,x_j) for each f, i, j.
  const std::vector<StarAtom>& var_atoms() const { return var_atoms_; }
  // A(x) for each A, then per f: f(x,x), and f(x,x_i), f(x_i,x) for each i.
  const std::vector<StarAtom>& ext_atoms() const { return ext_atoms_; }
  std::uint32_t extension_count() const { return std::uint32_t{1} << ext_atoms_.size(); }

  int var_atom_index(int pred, bool binary, int a, int b) const;
  int ext_atom_index(int pred, bool binary, int a, int b) const;

  friend bool operator==(const StarUniverse& x, const StarUniverse& y) {
    return x.sig_ == y.sig_ && x.slots_ == y.slots_ && x.rel_ == y.rel_;
  }

 private:
  Signature sig_;
  int slots_;
  Relevance rel_;
  std::vector<StarAtom> var_atoms_;
  std::vector<StarAtom> ext_atoms_;
};

// Bit mask over a universe's ext_atoms(); 0 is the empty extension.
using Extension = std::uint32_t;

// All extensions relative to `vars` over the full universe, empty first.
std::vector<Extension> extensions_of(const Signature& sig, const std::vector<std::string>& vars);

// Renders an extension as a cube in the neighbor variable `x`.
fo::Formula extension_to_fo(const StarUniverse& u, Extension t, const std::string& x,
                            const std::vector<std::string>& slot_names);

// ---- EQCAT ----

struct EqPrefix {
  std::vector<std::pair<std::string, std::string>> assignments;  // (y, x): y = x
  friend bool operator==(const EqPrefix&, const EqPrefix&) = default;
};

struct Gccat {
  std::shared_ptr<const StarUniverse> universe;
  std::vector<std::string> vars;  // one per universe slot
  std::uint64_t positives = 0;    // over universe->var_atoms()
};

struct Eqcat {
  EqPrefix prefix;
  Gccat gccat;
};

// None iff the cube is contradictory. Each class of equal variables is
// represented by its last member.
std::optional<Eqcat> cat_to_eqcat(const CatCube& c, const Signature& sig);
fo::Formula eqcat_to_fo(const Eqcat& e);

// ---- generalized counting stars ----

struct Count {
  enum class Kind { Exact, AtLeast };
  Kind kind = Kind::AtLeast;
  int n = 0;
  static Count exact(int n) { return {Kind::Exact, n}; }
  static Count at_least(int n) { return {Kind::AtLeast, n}; }
  bool admits(int c) const { return kind == Kind::Exact ? c == n : c >= n; }
  bool trivial() const { return kind == Kind::AtLeast && n == 0; }
  friend bool operator==(const Count&, const Count&) = default;
  friend auto operator<=>(const Count&, const Count&) = default;
};

struct GenStar {
  std::vector<std::string> vars;
  std::vector<int> rep;  // representative of each variable (the last of its class)
  std::shared_ptr<const StarUniverse> universe;  // slots are reps() in order
  std::uint64_t gccat = 0;
  std::map<Extension, Count> gamma;  // missing entries are AtLeast(0)

  std::vector<int> reps() const;
  std::vector<std::string> rep_names() const;
  EqPrefix prefix() const;
  Count count(Extension t) const;
  void set(Extension t, Count c);

  friend bool operator==(const GenStar& a, const GenStar& b);
  friend bool operator<(const GenStar& a, const GenStar& b);
};

struct NfOptions {
  int count_limit = 4;           // largest count the composition step will expand
  bool project = false;          // restrict universes to the formula's atoms
  std::optional<Relevance> relevance;  // explicit universe; overrides project
};

// Depth-one normal form: a disjunction of generalized stars over `vars`.
std::vector<GenStar> depth_one_nf(const fo::Formula& f, const Signature& sig,
                                  const std::vector<std::string>& vars,
                                  const NfOptions& opts = {});
// Variables default to the sorted free variables of f.
std::vector<GenStar> depth_one_nf(const fo::Formula& f, const Signature& sig,
                                  const NfOptions& opts = {});

bool star_eval(const GenStar& s, const Model& m, const Valuation& v);
bool star_eval(const GenStar& s, const Model& m, const std::vector<int>& values);
// Equality prefix, Gccat literals and one counting quantifier per pinned
// extension. Extensions pinned to zero are grouped into one quantifier.
fo::Formula star_to_fo(const GenStar& s);
fo::Formula stars_to_fo(const std::vector<GenStar>& stars);

}  // namespace rolelogic
