#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shc/suite.hpp"
#include "shc/welch.hpp"

namespace shc {

enum class GroupBy { Algo, AlgoRegime, AlgoNBucket, AlgoRhoBucket, AlgoK };

std::optional<GroupBy> group_by_from_string(std::string_view s) noexcept;
std::string_view to_string(GroupBy g) noexcept;

inline constexpr std::size_t kHistogramBins = 100;
inline constexpr std::size_t kRhoBuckets = 20;
inline constexpr std::size_t kNBucketWidth = 100;

/// alpha in [0, 1] mapped to bins of width 0.01; alpha = 1 lands in the last bin.
std::size_t histogram_bin(double alpha) noexcept;

struct SummaryRow {
  std::string algo;
  std::string key;  // second group key, empty for GroupBy::Algo
  std::size_t count = 0;
  double mean_alpha = 0.0;
  double mean_acd = 0.0;
  /// Mean ACD over records with alpha == 1; absent when none qualifies.
  std::optional<double> mean_acd_complete;
  std::array<std::size_t, kHistogramBins> histogram{};
  /// Placeholder for a (algo, regime) combination with no records.
  bool empty_group = false;
};

struct SummaryTable {
  GroupBy group_by = GroupBy::Algo;
  std::vector<SummaryRow> rows;
};

/// Equal-weight means per group. Rows are ordered by algorithm name, then by
/// the numeric order of the second key. Grouping by regime emits a marker row
/// for every missing (algo, regime) pair. Throws Error{EmptyGroup} on no records.
SummaryTable aggregate(std::span<const ExperimentRecord> records, GroupBy group_by);

/// CSV columns: algo, <key column if any>, count, mean_alpha, mean_acd,
/// mean_acd_complete [, hist_0 .. hist_99]. Missing means print as NA.
void write_csv(std::ostream& out, const SummaryTable& table, bool with_histogram);

struct WelchMatrix {
  std::vector<std::string> algos;
  std::vector<std::vector<WelchResult>> cells;  // cells[i][j]: algos[i] vs algos[j]
};

/// Pairwise Welch tests on per-record alpha values of each algorithm.
WelchMatrix welch_matrix(std::span<const ExperimentRecord> records);

/// CSV of two-sided p-values: header `algo,<algos...>`, one row per algorithm.
void write_welch_csv(std::ostream& out, const WelchMatrix& m);

}  // namespace shc
