#pragma once

// Bijections from Motzkin paths of length n onto the three Motzkin-counted
// permutation classes:
//   phi1: paths -> 4321-avoiding involutions (sequential matching)
//   phi2: paths -> 3412-avoiding involutions (tunnel matching)
//   phi3: paths -> (321, 3-bar1-42)-avoiding permutations (strips / reduced words)

#include "motzkin/path.hpp"
#include "motzkin/permutation.hpp"

namespace motzkin {

/// When `check_class` is set the result is tested for membership in the
/// target class and std::logic_error is thrown on failure.
Permutation phi1(const MotzkinPath& path, bool check_class = false);
Permutation phi2(const MotzkinPath& path, bool check_class = false);
Permutation phi3(const MotzkinPath& path, bool check_class = false);

/// u where s(i) > i, h where s(i) = i, d where s(i) < i. Inverts both phi1
/// (on 4321-avoiders) and phi2 (on 3412-avoiders). Throws
/// std::invalid_argument for non-involutions.
MotzkinPath involution_shape_path(const Permutation& sigma);

/// Throws std::invalid_argument unless sigma avoids 321 and 3-bar1-42.
MotzkinPath phi3_inverse(const Permutation& sigma);

}  // namespace motzkin
