#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orecode/matrix.hpp"

namespace orecode {

enum class DistanceMethod { Exhaustive, ColumnSearch };

struct DistanceReport {
    /// Minimum distance; -1 when the column search exhausted w_max without a
    /// dependent set (then d > lower_bound_certified is all that is known).
    int d = -1;
    DistanceMethod method = DistanceMethod::ColumnSearch;
    /// Largest w such that every w-subset of parity columns was verified
    /// independent. Equals d-1 for conclusive column searches.
    int lower_bound_certified = 0;
    std::vector<int> witness_columns;            ///< dependent column set (column search)
    std::vector<FieldElement> witness_codeword;  ///< weight-d codeword witness
    bool conclusive() const { return d >= 0; }
};

/// Exact minimum weight by full message-space enumeration; requires
/// q^k <= budget.
DistanceReport min_distance_exhaustive(const MatrixOverFq& generator,
                                       uint64_t budget = uint64_t(1) << 22);

/// Dual characterization: d = size of the smallest linearly dependent column
/// set of the parity-check matrix. Subsets are enumerated by weight with
/// incremental elimination reusing the prefix echelon form; shards are split
/// by first column index and merged lexicographically, so the witness is
/// deterministic for any worker count. w_max <= 8.
DistanceReport min_distance_columns(const MatrixOverFq& parity, int w_max = 6);

enum class BoundKind { MDS, AlmostMDS, Neither };

struct BoundClassification {
    BoundKind kind;
    int singleton_slack;  ///< n - k + 1 - d
};

/// Singleton bound classification; throws InvalidParameters on inconsistent
/// (n, k, d) including d exceeding the bound.
BoundClassification classify_bound(int n, int k, int d);

const char* bound_kind_name(BoundKind kind);

}  // namespace orecode
