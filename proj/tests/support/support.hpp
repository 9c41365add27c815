#pragma once

#include <random>
#include <string>
#include <vector>

#include "rolelogic/rolelogic.hpp"

namespace rolelogic::testing {

// Every model of sizes 1..max_size, or just `size`.
std::vector<Model> all_models(const Signature& sig, int size);

// Valuations of `vars` over a domain of size n.
std::vector<std::vector<int>> all_values(int vars, int n);

// Star universe over one variable with everything relevant (ℱ = {f}: one
// variable atom, three extension atoms).
GenStar random_star(const std::shared_ptr<const StarUniverse>& u, const std::vector<std::string>& vars,
                    std::mt19937_64& rng, int max_count);

// Formula of a spatial star in the signature extended with the marker
// predicates b1 and b2 (checked by the generic evaluator).
fo::Formula spatial_star_formula(const SpatialStar& s, const std::string& b1, const std::string& b2);

// Copy of m over `sig` (which extends m's signature) where every element
// outside `image` carries the marks.
Model marked_model(const Model& m, const Signature& sig, const std::vector<int>& image, Marker marks,
                   const std::string& b1, const std::string& b2);

// Thirty depth-one formulas in x1 over A and f.
std::vector<std::string> depth_one_catalog();

// First-order formula with exactly one spatial conjunction, free variables in {x}.
fo::Formula random_single_spatial(const Signature& sig, std::mt19937_64& rng);
// Spatial conjunctions and disjunctions over closed first-order leaves.
fo::Formula random_interesting(const Signature& sig, int depth, std::mt19937_64& rng);
// First-order formula over `vars` with quantifier depth at most `qdepth`.
fo::Formula random_fo(const Signature& sig, const std::vector<std::string>& vars, int qdepth, int size,
                      std::mt19937_64& rng);

// Role formula without spatial conjunction and emp.
role::Formula random_plain_role(const Signature& sig, int depth, std::mt19937_64& rng);

}  // namespace rolelogic::testing
