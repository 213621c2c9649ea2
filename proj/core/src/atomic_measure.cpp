#include "palmdiff/atomic_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "palmdiff/parallel.hpp"

namespace palmdiff {

namespace {

bool lex_less(const Atom& a, const Atom& b) {
  for (std::size_t j = 0; j < a.loc.size(); ++j)
    if (a.loc[j] != b.loc[j]) return a.loc[j] < b.loc[j];
  return false;
}

double linf_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace

AtomicMeasure::AtomicMeasure(int dim, double merge_tol)
    : dim_(dim), merge_tol_(merge_tol) {
  if (dim <= 0) throw std::invalid_argument("AtomicMeasure: dim must be positive");
  if (merge_tol < 0) throw std::invalid_argument("AtomicMeasure: merge_tol must be >= 0");
}

AtomicMeasure AtomicMeasure::from_atoms(int dim, std::vector<Atom> raw, double merge_tol) {
  AtomicMeasure m(dim, merge_tol);
  for (const auto& a : raw) {
    if (static_cast<int>(a.loc.size()) != dim)
      throw std::invalid_argument("AtomicMeasure: atom dimension mismatch");
    if (a.weight < 0.0)
      throw std::invalid_argument("AtomicMeasure: negative weight");
    if (!std::isfinite(a.weight))
      throw std::invalid_argument("AtomicMeasure: non-finite weight");
  }
  std::sort(raw.begin(), raw.end(), lex_less);
  // Sweep-merge: an atom joins the current cluster when it lies within
  // merge_tol (L-inf) of the cluster representative (its first atom).
  m.atoms_.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    const std::vector<double> rep = raw[i].loc;
    double wsum = 0.0;
    std::vector<double> num(dim, 0.0);
    std::size_t j = i;
    for (; j < raw.size() && linf_dist(raw[j].loc, rep) <= merge_tol; ++j) {
      wsum += raw[j].weight;
      for (int c = 0; c < dim; ++c) num[c] += raw[j].weight * raw[j].loc[c];
    }
    if (wsum > 0.0) {
      for (int c = 0; c < dim; ++c) num[c] /= wsum;
      m.atoms_.push_back({std::move(num), wsum});
    }
    i = j;
  }
  return m;
}

AtomicMeasure AtomicMeasure::dirac(std::vector<double> loc, double weight, double merge_tol) {
  const int d = static_cast<int>(loc.size());
  return from_atoms(d, {{std::move(loc), weight}}, merge_tol);
}

double AtomicMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.weight;
  return s;
}

double AtomicMeasure::mass_in(const Window& region) const {
  if (region.dim() != dim_) throw std::invalid_argument("mass_in: dimension mismatch");
  double s = 0.0;
  for (const auto& a : atoms_)
    if (region.contains(a.loc)) s += a.weight;
  return s;
}

double AtomicMeasure::weight_at(const std::vector<double>& loc) const {
  if (static_cast<int>(loc.size()) != dim_)
    throw std::invalid_argument("weight_at: dimension mismatch");
  for (const auto& a : atoms_)
    if (linf_dist(a.loc, loc) <= merge_tol_) return a.weight;
  return 0.0;
}

AtomicMeasure AtomicMeasure::scaled(double factor) const {
  if (factor < 0.0) throw std::invalid_argument("scaled: negative factor");
  AtomicMeasure m(dim_, merge_tol_);
  m.atoms_ = atoms_;
  for (auto& a : m.atoms_) a.weight *= factor;
  return m;
}

AtomicMeasure AtomicMeasure::translated(const std::vector<double>& t) const {
  if (static_cast<int>(t.size()) != dim_)
    throw std::invalid_argument("translated: dimension mismatch");
  std::vector<Atom> raw = atoms_;
  for (auto& a : raw)
    for (int c = 0; c < dim_; ++c) a.loc[c] += t[c];
  return from_atoms(dim_, std::move(raw), merge_tol_);
}

std::vector<std::complex<double>> fourier_at(const AtomicMeasure& m,
                                             const std::vector<std::vector<double>>& freqs,
                                             int threads) {
  const int d = m.dim();
  for (const auto& t : freqs)
    if (static_cast<int>(t.size()) != d)
      throw std::invalid_argument("fourier_at: frequency dimension mismatch");
  std::vector<std::complex<double>> out(freqs.size());
  const auto& atoms = m.atoms();
  parallel_for(freqs.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t f = b; f < e; ++f) {
      const auto& t = freqs[f];
      double re = 0.0, im = 0.0;
      for (const auto& a : atoms) {
        double phase = 0.0;
        for (int c = 0; c < d; ++c) phase += t[c] * a.loc[c];
        phase *= -2.0 * std::numbers::pi;
        re += a.weight * std::cos(phase);
        im += a.weight * std::sin(phase);
      }
      out[f] = {re, im};
    }
  });
  return out;
}

AtomicMeasure convolve(const AtomicMeasure& m1, const AtomicMeasure& m2) {
  if (m1.dim() != m2.dim()) throw std::invalid_argument("convolve: dimension mismatch");
  const int d = m1.dim();
  std::vector<Atom> raw;
  raw.reserve(m1.size() * m2.size());
  for (const auto& a : m1.atoms())
    for (const auto& b : m2.atoms()) {
      std::vector<double> loc(d);
      for (int c = 0; c < d; ++c) loc[c] = a.loc[c] + b.loc[c];
      raw.push_back({std::move(loc), a.weight * b.weight});
    }
  return AtomicMeasure::from_atoms(d, std::move(raw),
                                   std::max(m1.merge_tol(), m2.merge_tol()));
}

AtomicMeasure reflect(const AtomicMeasure& m) {
  std::vector<Atom> raw = m.atoms();
  for (auto& a : raw)
    for (auto& c : a.loc) c = -c;
  return AtomicMeasure::from_atoms(m.dim(), std::move(raw), m.merge_tol());
}

}  // namespace palmdiff
