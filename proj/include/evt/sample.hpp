#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace evt {

// A block-maxima series. Non-empty and finite by construction.
class Sample {
 public:
  explicit Sample(std::vector<double> values);
  Sample(std::initializer_list<double> values);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const double> values() const& noexcept { return values_; }
  // A span into a temporary would dangle.
  std::span<const double> values() const&& = delete;
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

  // Ascending copy of the values.
  [[nodiscard]] std::vector<double> sorted() const;

  [[nodiscard]] double min() const;
  [[nodiscard]] double max() const;

  friend bool operator==(const Sample&, const Sample&) = default;

 private:
  std::vector<double> values_;
};

}  // namespace evt
