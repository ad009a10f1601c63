#include "gsep/separability.hpp"

#include <algorithm>
#include <cmath>

namespace gsep {

double ppt_min_symplectic(const CovarianceMatrix& v, const ModePartition& partition) {
  return symplectic_spectrum(partial_transpose(v, partition.b())).min();
}

double log_negativity(const CovarianceMatrix& v, const ModePartition& partition) {
  return std::max(0.0, -std::log(2.0 * ppt_min_symplectic(v, partition)));
}

SeparabilityReport full_report(const CovarianceMatrix& v, const ModePartition& partition,
                               std::span<const QIndex> q_list) {
  require_physical(v);
  auto global = symplectic_spectrum(v);
  auto local = symplectic_spectrum(reduce(v, partition.a()));

  const double nu_pt = ppt_min_symplectic(v, partition);
  const auto s1 = conditional_q_entropy(global, local, QIndex::von_neumann());
  const auto winf = conditional_q_entropy(global, local, QIndex::infinite());

  std::vector<ConditionalEntropyResult> sq;
  sq.reserve(q_list.size());
  for (const QIndex& q : q_list) sq.push_back(conditional_q_entropy(global, local, q));

  return SeparabilityReport{
      std::move(global),
      std::move(local),
      nu_pt,
      nu_pt < 0.5 - kEntangledTol,
      s1.value,
      s1.entangled,
      winf.witness,
      winf.entangled,
      std::move(sq),
      std::max(0.0, -std::log(2.0 * nu_pt)),
  };
}

}  // namespace gsep
