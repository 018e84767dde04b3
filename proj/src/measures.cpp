#include "polco/measures.hpp"

#include <algorithm>
#include <cmath>

#include "polco/errors.hpp"

namespace polco {

namespace {

void require_density(const ComplexMatrix& m, const char* what) {
  const auto report = validate_density(m, true);
  if (report.ok()) return;
  std::string msg = std::string(what) + ": input is not a valid density matrix";
  for (const auto& line : report.messages) msg += "; " + line;
  throw ValidationError(msg);
}

void require_multilevel(const ComplexMatrix& m, const char* what) {
  if (m.dim() < 2) throw UnsupportedDimension(std::string(what) + " needs dimension >= 2");
}

double clamp0(double x) { return std::max(x, 0.0); }

double raw_predictability_sq(const ComplexMatrix& phi) {
  const int n = phi.dim();
  double diag_sq = 0.0;
  double cross = 0.0;
  for (int i = 0; i < n; ++i) {
    const double pi = phi(i, i).real();
    diag_sq += pi * pi;
    for (int j = i + 1; j < n; ++j) cross += pi * phi(j, j).real();
  }
  return 2.0 * (n - 1) / n * (diag_sq - 2.0 / (n - 1) * cross);
}

double raw_coherence_hs_sq(const ComplexMatrix& phi) {
  double s = 0.0;
  for (int i = 0; i < phi.dim(); ++i) {
    for (int j = 0; j < phi.dim(); ++j) {
      if (i != j) s += std::norm(phi(i, j));
    }
  }
  return 2.0 * s;
}

double purity(const ComplexMatrix& rho) {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const auto& z : rho.data()) s += std::norm(z);
  return s;
}

double raw_linear_entropy_sq(const ComplexMatrix& rho) {
  const double d = rho.dim();
  return d / (d - 1.0) * (1.0 - purity(rho));
}

double raw_i_concurrence_sq(const StateVector& state, Subsystem side) {
  const Split split = state.require_split();
  const auto slices = subsystem_slices(state, split.a, split.b, side);
  double s = 0.0;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    for (std::size_t j = i + 1; j < slices.size(); ++j) s += wedge_norm_sq(slices[i], slices[j]);
  }
  return 4.0 * s;
}

std::string basis_label_for(int n) { return n == 2 ? "pauli" : n == 3 ? "gell-mann" : "computational"; }

MeasureReport measure_density(const ComplexMatrix& rho, double intensity) {
  MeasureReport r;
  r.dim_n = rho.dim();
  r.intensity = intensity;
  r.basis_label = basis_label_for(rho.dim());
  r.raw.predictability_sq = raw_predictability_sq(rho);
  r.raw.coherence_hs_sq = raw_coherence_hs_sq(rho);
  r.raw.linear_entropy_sq = raw_linear_entropy_sq(rho);
  r.predictability_sq = clamp0(r.raw.predictability_sq);
  r.coherence_hs_sq = clamp0(r.raw.coherence_hs_sq);
  r.linear_entropy_sq = clamp0(r.raw.linear_entropy_sq);
  r.stokes = stokes_extract(rho);
  r.stokes_norm_sq = r.stokes.norm_sq();
  if (rho.dim() == 2) r.degree_pol_sq = r.stokes_norm_sq;
  return r;
}

}  // namespace

double predictability_sq(const ComplexMatrix& phi) {
  require_multilevel(phi, "predictability");
  require_density(phi, "predictability");
  return clamp0(raw_predictability_sq(phi));
}

double coherence_hs_sq(const ComplexMatrix& phi) {
  require_multilevel(phi, "coherence");
  require_density(phi, "coherence");
  return clamp0(raw_coherence_hs_sq(phi));
}

double degree_pol_sq(const ComplexMatrix& phi) {
  if (phi.dim() != 2) throw UnsupportedDimension("degree of polarization is defined for 2x2 matrices only");
  require_density(phi, "degree of polarization");
  return stokes_extract(phi).norm_sq();
}

double linear_entropy_sq(const ComplexMatrix& rho) {
  require_multilevel(rho, "linear entropy");
  require_density(rho, "linear entropy");
  return clamp0(raw_linear_entropy_sq(rho));
}

double concurrence_2x2(const StateVector& state) {
  const Split split = state.require_split();
  if (split != Split{2, 2}) throw DimensionError("concurrence needs a 2x2 split");
  const Complex a = state[0], b = state[1], c = state[2], d = state[3];
  return 2.0 * std::abs(a * d - b * c);
}

double i_concurrence_sq(const StateVector& state, Subsystem side) { return clamp0(raw_i_concurrence_sq(state, side)); }

MeasureReport analyze(const ComplexMatrix& phi) {
  if (phi.dim() != 2 && phi.dim() != 3) {
    throw UnsupportedDimension("analysis supports 2x2 and 3x3 matrices, got " + std::to_string(phi.dim()));
  }
  const auto pre = validate_density(phi, false);
  if (!pre.hermitian || !pre.psd) {
    std::string msg = "input is not a valid polarization-coherence matrix";
    for (const auto& line : pre.messages) msg += "; " + line;
    throw ValidationError(msg);
  }
  const double intensity = pre.trace.real();
  if (!(intensity > tol::norm)) throw ValidationError("polarization-coherence matrix has zero intensity");
  ComplexMatrix rho = phi;
  rho *= 1.0 / intensity;
  return measure_density(rho, intensity);
}

MeasureReport analyze(const StateVector& state) {
  if (!state.split()) {
    if (state.dim() != 2 && state.dim() != 3) {
      throw UnsupportedDimension("single-system analysis supports dimension 2 or 3, got " + std::to_string(state.dim()));
    }
    return measure_density(state.density(), 1.0);
  }
  const Split split = *state.split();
  if (split.a != 2 && split.a != 3) {
    throw UnsupportedDimension("reduced analysis needs subsystem A of dimension 2 or 3, got " + std::to_string(split.a));
  }
  const ComplexMatrix rho_a = partial_trace(state.density(), split.a, split.b, Subsystem::A);
  MeasureReport r = measure_density(rho_a, 1.0);
  r.raw.entanglement_sq = raw_i_concurrence_sq(state, Subsystem::A);
  r.entanglement_sq = clamp0(*r.raw.entanglement_sq);
  return r;
}

}  // namespace polco
