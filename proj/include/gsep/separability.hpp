#pragma once

#include <span>
#include <vector>

#include "gsep/entropy.hpp"
#include "gsep/gaussian_state.hpp"

namespace gsep {

/// Verdicts of every criterion on one state and partition. Each "negative" /
/// "entangled" flag is a sufficient witness of entanglement; the PPT flag is
/// also necessary for two-mode states.
struct SeparabilityReport {
  SymplecticSpectrum global_spectrum;
  SymplecticSpectrum local_spectrum;  // marginal on side A
  double ppt_min_nu;
  bool ppt_entangled;
  double s1_value;
  bool s1_negative;
  double w_inf;
  bool w_inf_negative;
  std::vector<ConditionalEntropyResult> sq_values;
  double log_negativity;
};

/// Smallest symplectic eigenvalue of V with the momenta of side B flipped.
double ppt_min_symplectic(const CovarianceMatrix& v, const ModePartition& partition);

/// max(0, -ln(2 nu~_min)), in nats.
double log_negativity(const CovarianceMatrix& v, const ModePartition& partition);

/// Throws UnphysicalState for an unphysical V.
SeparabilityReport full_report(const CovarianceMatrix& v, const ModePartition& partition,
                               std::span<const QIndex> q_list);

}  // namespace gsep
