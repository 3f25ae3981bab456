#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nhol {

enum class ErrorCode {
  ZeroInverse,
  DimMismatch,
  ModulusMismatch,
  Singular,
  BudgetExceeded,
  NotPrime,
  UnknownLabel,
  SpecMismatch,
  NotRankOne,
  EmptyGenerators,
  LabelMismatch,
  NotInB,
  NotInCommutant,
  NotInvertible,
  UnknownAdmissibility,
  NotDeltaSigma,
  AssumptionFailed,
  TooLarge,
  Parse,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an exhaustive search would exceed its candidate budget.
/// `count` is the exact number of candidates the search would visit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t count, std::uint64_t budget, const std::string& what)
      : Error(ErrorCode::BudgetExceeded,
              what + " (" + std::to_string(count) + " candidates, budget " +
                  std::to_string(budget) + ")"),
        count_(count),
        budget_(budget) {}

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t count_;
  std::uint64_t budget_;
};

}  // namespace nhol
