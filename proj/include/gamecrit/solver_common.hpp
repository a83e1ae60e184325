#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gamecrit {

// Whether game-state memo keys are additionally canonicalized by taking
// the minimum over the graph's automorphism group. Auto enables it for
// graphs of order <= 16 whose group fits under max_group_size; the highly
// symmetric instances this suite targets are infeasible without it.
enum class AutReduction { Auto, On, Off };

struct SolveOptions {
  std::uint64_t state_budget = std::numeric_limits<std::uint64_t>::max();
  AutReduction automorphisms = AutReduction::Auto;
  std::size_t table_capacity = std::size_t{1} << 24;
  std::size_t max_group_size = 4096;
};

struct SolveStats {
  std::uint64_t states_expanded = 0;
  std::uint64_t memo_hits = 0;

  void absorb(const SolveStats& other) {
    states_expanded += other.states_expanded;
    memo_hits += other.memo_hits;
  }
};

// Thrown when a solve expands more states than the budget allows. Callers
// report the result as undecided; they never substitute a guess.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("state budget exceeded after " + std::to_string(budget) + " states"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace gamecrit
