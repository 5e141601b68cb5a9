#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference with identical output (sorted ascending by mask), so the two can
// be compared in tests and benchmarks.

#include <cstdint>
#include <span>
#include <vector>

#include "eulermin/edge_set.hpp"

namespace eulermin::kernels {

enum class Parity { Any, Even, Odd };

// All GF(2) combinations of `basis` whose cardinality matches `parity`.
std::vector<EdgeSet> span_serial(std::span<const EdgeSet> basis, Parity parity);
std::vector<EdgeSet> span_parallel(std::span<const EdgeSet> basis, Parity parity);

struct MinScan {
  int min_size = -1;  // -1 when the input was empty
  std::vector<EdgeSet> sets;
};

// Minimum-cardinality members of the coset {offset ^ c : c in cosets}.
MinScan min_coset_serial(EdgeSet offset, std::span<const EdgeSet> cosets);
MinScan min_coset_parallel(EdgeSet offset, std::span<const EdgeSet> cosets);

// Every subset of the first `endpoints.size()` edges whose odd-degree vertex
// set equals `target`. Exhaustive over 2^s subsets, Gray-code order inside
// each block.
std::vector<EdgeSet> subset_scan_serial(std::span<const VertexSet> endpoints, VertexSet target);
std::vector<EdgeSet> subset_scan_parallel(std::span<const VertexSet> endpoints, VertexSet target);

int max_threads();

}  // namespace eulermin::kernels
