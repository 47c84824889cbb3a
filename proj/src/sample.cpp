#include "evt/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "evt/errors.hpp"

namespace evt {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw EmptyInput("sample must contain at least one value");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("sample value " + std::to_string(i + 1) + " is not finite");
    }
  }
}

Sample::Sample(std::initializer_list<double> values) : Sample(std::vector<double>(values)) {}

std::vector<double> Sample::sorted() const {
  std::vector<double> out = values_;
  std::ranges::sort(out);
  return out;
}

double Sample::min() const { return *std::ranges::min_element(values_); }
double Sample::max() const { return *std::ranges::max_element(values_); }

}  // namespace evt
