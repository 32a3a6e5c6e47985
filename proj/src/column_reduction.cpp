#include "phylotrop/column_reduction.hpp"

#include <vector>

namespace phylotrop {

std::optional<ReductionFailure> validate_reduction(const ColumnReductionSeq& seq) {
  using Condition = ReductionFailure::Condition;
  std::vector<char> targeted(seq.n > 0 ? seq.n + 1 : 1, 0);
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    auto [a, b] = seq.steps[k];
    const std::size_t step = k + 1;
    const std::string where = "step " + std::to_string(step) + " (" + std::to_string(a) + "," +
                              std::to_string(b) + "): ";
    if (a < 1 || a > seq.n || b < 1 || b > seq.n)
      return ReductionFailure{step, Condition::IndexOutOfRange,
                              where + "column index outside [1," + std::to_string(seq.n) + "]"};
    if (targeted[a])
      return ReductionFailure{step, Condition::RepeatedTarget,
                              where + "target column " + std::to_string(a) + " was already reduced"};
    targeted[a] = 1;
    if (targeted[b])
      return ReductionFailure{step, Condition::SourceAlreadyUsed,
                              where + "source column " + std::to_string(b) + " is among a_1..a_" +
                                  std::to_string(step)};
  }
  return std::nullopt;
}

PuiseuxMatrix apply_reduction(const PuiseuxMatrix& m, const ColumnReductionSeq& seq) {
  if (static_cast<std::size_t>(seq.n) != m.cols())
    throw InvalidReduction({0, ReductionFailure::Condition::IndexOutOfRange,
                            "reduction is for " + std::to_string(seq.n) + " columns, matrix has " +
                                std::to_string(m.cols())});
  if (auto failure = validate_reduction(seq)) throw InvalidReduction(*failure);
  PuiseuxMatrix out = m;
  for (auto [a, b] : seq.steps)
    for (std::size_t r = 0; r < out.rows(); ++r) out.at(r, a - 1) -= out.at(r, b - 1);
  return out;
}

}  // namespace phylotrop
