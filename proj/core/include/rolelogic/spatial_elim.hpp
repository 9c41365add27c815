#pragma once

#include <optional>
#include <vector>

#include "rolelogic/normal_forms.hpp"
#include "rolelogic/role_formula.hpp"

namespace rolelogic {

// Which side of a spatial conjunction an atom came from.
enum class Marker { Left = 1, Right = 2, Both = 3 };

struct SpatialAtom {
  enum class Kind { One, Any };
  Kind kind;
  Extension ext;
  Marker marker;
  friend bool operator==(const SpatialAtom&, const SpatialAtom&) = default;
  friend auto operator<=>(const SpatialAtom&, const SpatialAtom&) = default;
};

struct SpatialStar {
  std::vector<std::string> vars;
  std::vector<int> rep;
  std::shared_ptr<const StarUniverse> universe;
  std::uint64_t gccat = 0;
  std::vector<SpatialAtom> atoms;  // sorted; Any atoms appear once
};

// Exact(i) gives i One atoms; AtLeast(i) gives i One atoms and an Any atom.
SpatialStar star_to_spatial(const GenStar& s, Marker m);
// Reads a star back: Exact(#One) unless an Any atom of the same extension exists.
GenStar spatial_to_star(const SpatialStar& s);

std::optional<Extension> ispand(Extension a, Extension b);
std::optional<Gccat> kispand(const Gccat& a, const Gccat& b);

// Evaluates a spatial star on the model where every element outside the
// variable image carries the marks in `marks`. A neighbour is covered by one
// atom, or by two atoms with markers Left and Right and disjoint extensions.
bool spatial_star_eval(const SpatialStar& s, const Model& m, const std::vector<int>& values,
                       Marker marks);

// All stars C3 with C1 * C2 yielding C3.
std::vector<GenStar> combine_stars(const GenStar& c1, const GenStar& c2);

struct EliminationStep {
  fo::Formula left, right;
  std::vector<std::string> vars;
  std::vector<GenStar> left_stars, right_stars, result;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
};

struct EliminationOptions {
  int count_limit = 4;
  bool project = true;  // star universes restricted to the operands' atoms
};

// Removes every spatial conjunction, innermost first.
fo::Formula eliminate_spatial(const fo::Formula& f, const Signature& sig,
                              const EliminationOptions& opts = {},
                              EliminationTrace* trace = nullptr);
// Role formulas are desugared and translated with c1 = x, c2 = y.
fo::Formula eliminate_spatial(const role::Formula& f, const Signature& sig,
                              const EliminationOptions& opts = {},
                              EliminationTrace* trace = nullptr);

}  // namespace rolelogic
