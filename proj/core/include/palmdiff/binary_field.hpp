#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace palmdiff {

/// Inclusive integer box in Z^d: { k : lo_i <= k_i <= hi_i }.
struct IntBox {
  std::vector<int> lo, hi;

  IntBox(std::vector<int> lo_, std::vector<int> hi_);
  static IntBox cube(int dim, int lo, int hi);
  static IntBox line(int lo, int hi) { return IntBox({lo}, {hi}); }

  int dim() const { return static_cast<int>(lo.size()); }
  long side(int i) const { return static_cast<long>(hi[i]) - lo[i] + 1; }
  long size() const;
  bool contains(const std::vector<int>& k) const;
  long index_of(const std::vector<int>& k) const;  // row-major
  std::vector<int> at_index(long idx) const;
};

/// {0,1}-valued array over an integer box; realization of a lattice field.
class BinaryField {
 public:
  BinaryField(IntBox box, std::vector<std::uint8_t> values, std::string model);

  const IntBox& box() const { return box_; }
  const std::string& model() const { return model_; }
  const std::vector<std::uint8_t>& values() const { return values_; }
  std::uint8_t at(const std::vector<int>& k) const { return values_[box_.index_of(k)]; }
  std::uint8_t at_index(long idx) const { return values_[idx]; }
  long size() const { return static_cast<long>(values_.size()); }

  long ones_count() const;
  double mean() const;

 private:
  IntBox box_;
  std::vector<std::uint8_t> values_;
  std::string model_;
};

}  // namespace palmdiff
