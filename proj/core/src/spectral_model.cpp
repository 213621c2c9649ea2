#include "palmdiff/spectral_model.hpp"

#include <stdexcept>
#include <utility>

namespace palmdiff {

SpectralModel periodize(const SpectralModel& m, const IntBox& reps) {
  if (reps.dim() != m.dim())
    throw std::invalid_argument("periodize: reps dimension mismatch");
  if (reps.size() <= 0) throw std::invalid_argument("periodize: empty reps");
  const int d = m.dim();

  std::vector<Atom> raw;
  raw.reserve(m.pure_point.size() * reps.size());
  for (long idx = 0; idx < reps.size(); ++idx) {
    const std::vector<int> k = reps.at_index(idx);
    for (const auto& a : m.pure_point.atoms()) {
      std::vector<double> loc(d);
      for (int c = 0; c < d; ++c) loc[c] = a.loc[c] + k[c];
      raw.push_back({std::move(loc), a.weight});
    }
  }

  SpectralModel out{AtomicMeasure::from_atoms(d, std::move(raw), m.pure_point.merge_tol()),
                    nullptr, m.label + "_periodized"};
  if (m.ac_density) {
    auto base = m.ac_density;
    out.ac_density = [base, reps, d](const std::vector<double>& t) {
      double s = 0.0;
      std::vector<double> shifted(d);
      for (long idx = 0; idx < reps.size(); ++idx) {
        const std::vector<int> k = reps.at_index(idx);
        for (int c = 0; c < d; ++c) shifted[c] = t[c] - k[c];
        s += base(shifted);
      }
      return s;
    };
  }
  return out;
}

SpectralModel bernoulli_spectral_model(double p, int dim) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("bernoulli_spectral_model: p outside [0, 1]");
  SpectralModel m{AtomicMeasure::dirac(std::vector<double>(dim, 0.0), p * p), nullptr,
                  "bernoulli"};
  const double diffuse = p * (1.0 - p);
  m.ac_density = [diffuse, dim](const std::vector<double>& t) {
    for (int c = 0; c < dim; ++c)
      if (t[c] < 0.0 || t[c] >= 1.0) return 0.0;
    return diffuse;
  };
  return m;
}

SpectralModel ones_spectral_model(int dim) {
  SpectralModel m{AtomicMeasure::dirac(std::vector<double>(dim, 0.0), 1.0), nullptr, "ones"};
  m.ac_density = [](const std::vector<double>&) { return 0.0; };
  return m;
}

}  // namespace palmdiff
