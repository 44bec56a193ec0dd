#pragma once

// Bad-coloring search for the finite Ramsey factorization statements.
//
// A copy is a list of fibers. A coloring "defeats" a copy when at least one
// fiber receives two colors; a bad coloring defeats every copy. Plain
// (monochromatic-target) copies are copies with a single fiber.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramfac/core.hpp"
#include "ramfac/kernels.hpp"

namespace ramfac {

using Fiber = std::vector<std::uint32_t>;

struct Copy {
  std::vector<Fiber> fibers;
};

struct Budget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;
};

struct ColoringProblem {
  std::size_t ground_size = 0;
  std::vector<std::string> labels;  // canonical encodings, optional
  std::vector<Copy> copies;
  std::uint32_t r = 2;

  /// Throws DomainError on out-of-range indices or fibers that overlap
  /// inside a copy.
  void validate() const;
};

enum class SearchStatus { BadColoringFound, NoBadColoring, BudgetExhausted };

std::string to_string(SearchStatus s);

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::NoBadColoring;
  std::optional<std::vector<std::uint32_t>> witness;
  SearchStats stats;
};

struct SearchOptions {
  Budget budget;
  unsigned jobs = 1;
};

/// Backtracking in element order with color-symmetry breaking and forward
/// checking; a found witness is the lexicographically least bad coloring.
SearchOutcome exists_bad_coloring(const ColoringProblem& problem, const SearchOptions& opts = {});

/// True iff the coloring defeats every copy.
bool is_bad_coloring(const ColoringProblem& problem, const std::vector<std::uint32_t>& coloring);

struct NaiveResult {
  bool found = false;
  std::vector<std::uint32_t> witness;  // lexicographically least
  std::uint64_t colorings_checked = 0;
};

/// Enumerates all r^N colorings in lexicographic order (element 0 most
/// significant). The two-color case with N <= 63 runs through the SIMD scan.
/// Throws BudgetError when r^N exceeds max_colorings.
NaiveResult naive_bad_coloring(const ColoringProblem& problem,
                               kernels::Isa isa = kernels::Isa::Auto,
                               std::uint64_t max_colorings = 1ull << 34);

// Instance builders. Ground elements are deduplicated and listed in the
// canonical order of the underlying enumeration.

ColoringProblem drt_instance(std::size_t kR, std::size_t kS, std::size_t n, std::uint32_t r);
ColoringProblem glr_instance(std::uint32_t p, std::size_t k, std::size_t m, std::size_t n,
                             std::uint32_t r);
ColoringProblem ff_factor_instance(std::uint32_t p, std::size_t k, std::size_t m, std::size_t n,
                                   std::uint32_t r);
ColoringProblem bool_factor_instance(std::size_t k, std::size_t m, std::size_t n, std::uint32_t r);
ColoringProblem gowers_instance(std::size_t k, std::size_t m, std::size_t n, std::uint32_t r);
/// Two-sided square-matrix instance, k = 1 and n <= 4 only: ground M^1_{n,n},
/// one copy per pair (R, S) of RCEF n×m matrices, {R·A·S^t : A in M^1_{m,m}}
/// fibered by tau^2(A).
ColoringProblem sq_factor_instance(std::uint32_t p, std::size_t k, std::size_t m, std::size_t n,
                                   std::uint32_t r);

enum class Family { Drt, Glr, FfFactor, BoolFactor, Gowers, SqFactor };

Family parse_family(const std::string& tag);
std::string to_string(Family f);

struct FamilyParams {
  std::uint32_t p = 2;
  std::size_t k = 1;  // kR for drt
  std::size_t m = 2;  // kS for drt
  std::uint32_t r = 2;
};

ColoringProblem build_instance(Family f, const FamilyParams& params, std::size_t n);

struct MinNStep {
  std::size_t n;
  std::size_t ground;
  std::size_t copies;
  SearchOutcome outcome;
};

struct MinNResult {
  std::optional<std::size_t> n;
  std::vector<MinNStep> steps;
  bool budget_hit = false;
};

/// Least n in [n_min, n_max] whose instance has no bad coloring; each n is
/// checked independently. Stops at the first budget exhaustion.
MinNResult min_n(Family f, const FamilyParams& params, std::size_t n_min, std::size_t n_max,
                 const SearchOptions& opts = {});

/// Smallest n for which the instance is well formed.
std::size_t family_min_n(Family f, const FamilyParams& params);

}  // namespace ramfac
