#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rolelogic/normal_forms.hpp"

namespace rolelogic::detail {

// Pairwise inequalities among the slots plus the decided variable atoms.
fo::Formula gccat_literals(const StarUniverse& u, std::uint64_t positives,
                           const std::vector<std::string>& slot_names);

// Set partitions of {0..n-1} as restricted growth strings.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn);

// Representative (last member) of each element's class, for a growth string.
std::vector<int> partition_reps(const std::vector<int>& rgs);

}  // namespace rolelogic::detail
