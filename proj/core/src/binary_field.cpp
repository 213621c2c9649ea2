#include "palmdiff/binary_field.hpp"

#include <numeric>
#include <stdexcept>

namespace palmdiff {

IntBox::IntBox(std::vector<int> lo_, std::vector<int> hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.empty() || lo.size() != hi.size())
    throw std::invalid_argument("IntBox: empty or mismatched corners");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("IntBox: lo > hi");
}

IntBox IntBox::cube(int dim, int lo, int hi) {
  return IntBox(std::vector<int>(dim, lo), std::vector<int>(dim, hi));
}

long IntBox::size() const {
  long n = 1;
  for (int i = 0; i < dim(); ++i) n *= side(i);
  return n;
}

bool IntBox::contains(const std::vector<int>& k) const {
  if (k.size() != lo.size()) throw std::invalid_argument("IntBox::contains: dim mismatch");
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] < lo[i] || k[i] > hi[i]) return false;
  return true;
}

long IntBox::index_of(const std::vector<int>& k) const {
  long idx = 0;
  for (int i = 0; i < dim(); ++i) {
    if (k[i] < lo[i] || k[i] > hi[i])
      throw std::out_of_range("IntBox::index_of: site outside box");
    idx = idx * side(i) + (k[i] - lo[i]);
  }
  return idx;
}

std::vector<int> IntBox::at_index(long idx) const {
  std::vector<int> k(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    k[i] = lo[i] + static_cast<int>(idx % side(i));
    idx /= side(i);
  }
  return k;
}

BinaryField::BinaryField(IntBox box, std::vector<std::uint8_t> values, std::string model)
    : box_(std::move(box)), values_(std::move(values)), model_(std::move(model)) {
  if (static_cast<long>(values_.size()) != box_.size())
    throw std::invalid_argument("BinaryField: value count does not match box size");
  for (auto v : values_)
    if (v > 1) throw std::invalid_argument("BinaryField: values must be 0 or 1");
}

long BinaryField::ones_count() const {
  return std::accumulate(values_.begin(), values_.end(), 0L);
}

double BinaryField::mean() const {
  return values_.empty() ? 0.0 : static_cast<double>(ones_count()) / values_.size();
}

}  // namespace palmdiff
