#pragma once

#include "phylotrop/puiseux.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace phylotrop {

/// c_{a,b} steps applied in list order: step (a, b) subtracts column b from
/// column a. Columns are 1-based.
struct ColumnReductionSeq {
  int n = 0;
  std::vector<std::pair<int, int>> steps;
  friend bool operator==(const ColumnReductionSeq&, const ColumnReductionSeq&) = default;
};

struct ReductionFailure {
  enum class Condition {
    IndexOutOfRange,    // some index outside [1, n]
    RepeatedTarget,     // a_k equals an earlier a_j
    SourceAlreadyUsed,  // b_k lies in {a_1, ..., a_k}
  };
  std::size_t step;  // 1-based
  Condition condition;
  std::string message;
};

/// nullopt when valid; otherwise the first failing step and condition.
std::optional<ReductionFailure> validate_reduction(const ColumnReductionSeq& seq);

class InvalidReduction : public std::invalid_argument {
public:
  explicit InvalidReduction(ReductionFailure failure)
      : std::invalid_argument(failure.message), failure_(std::move(failure)) {}
  const ReductionFailure& failure() const { return failure_; }

private:
  ReductionFailure failure_;
};

/// Returns the reduced copy of m. Throws InvalidReduction when seq is
/// invalid or sized for a different number of columns.
PuiseuxMatrix apply_reduction(const PuiseuxMatrix& m, const ColumnReductionSeq& seq);

}  // namespace phylotrop
