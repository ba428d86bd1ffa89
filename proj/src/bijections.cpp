#include "motzkin/bijections.hpp"

#include <numeric>
#include <stdexcept>

namespace motzkin {

namespace {

Permutation involution_from_matching(int n, const Matching& cycles) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  for (const auto& [i, j] : cycles) {
    word[static_cast<std::size_t>(i - 1)] = j;
    word[static_cast<std::size_t>(j - 1)] = i;
  }
  return Permutation(std::move(word));
}

void require(bool ok, const char* name, const Permutation& sigma) {
  if (!ok) throw std::logic_error(std::string(name) + " produced " + sigma.to_string() + " outside its class");
}

}  // namespace

Permutation phi1(const MotzkinPath& path, bool check_class) {
  auto sigma = involution_from_matching(path.size(), sequential_matching(path));
  if (check_class) require(in_class(sigma, ClassId::I4321), "phi1", sigma);
  return sigma;
}

Permutation phi2(const MotzkinPath& path, bool check_class) {
  auto sigma = involution_from_matching(path.size(), tunnel_matching(path));
  if (check_class) require(in_class(sigma, ClassId::I3412), "phi2", sigma);
  return sigma;
}

Permutation phi3(const MotzkinPath& path, bool check_class) {
  auto sigma = permutation_from_head_tail(strip_decomposition(path));
  if (check_class) require(in_class(sigma, ClassId::S321Barred3142), "phi3", sigma);
  return sigma;
}

MotzkinPath involution_shape_path(const Permutation& sigma) {
  if (!sigma.is_involution()) {
    throw std::invalid_argument(sigma.to_string() + " is not an involution");
  }
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i) {
    steps.push_back(sigma(i) > i ? Step::Up : sigma(i) == i ? Step::Hor : Step::Down);
  }
  return MotzkinPath(std::move(steps));
}

MotzkinPath phi3_inverse(const Permutation& sigma) {
  if (!in_class(sigma, ClassId::S321Barred3142)) {
    throw std::invalid_argument(sigma.to_string() + " does not avoid both 321 and 3-bar1-42");
  }
  return path_from_head_tail(head_tail_pairs(sigma));
}

}  // namespace motzkin
