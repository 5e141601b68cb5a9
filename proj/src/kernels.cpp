#include "eulermin/kernels.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eulermin::kernels {
namespace {

bool accept(EdgeSet s, Parity parity) {
  switch (parity) {
    case Parity::Any: return true;
    case Parity::Even: return s.size() % 2 == 0;
    case Parity::Odd: return s.size() % 2 == 1;
  }
  return false;
}

// Combination for Gray index g computed from scratch.
EdgeSet combine(std::span<const EdgeSet> basis, std::uint64_t gray) {
  EdgeSet out;
  for (std::uint64_t b = gray; b != 0; b &= b - 1) out ^= basis[static_cast<std::size_t>(std::countr_zero(b))];
  return out;
}

// Walks Gray indices [begin, end) updating the running combination one basis
// vector per step.
template <typename Visit>
void walk_span(std::span<const EdgeSet> basis, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  EdgeSet current = combine(basis, begin ^ (begin >> 1));
  visit(current);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    visit(current);
  }
}

template <typename Visit>
void walk_subsets(std::span<const VertexSet> endpoints, std::uint64_t begin, std::uint64_t end,
                  Visit&& visit) {
  if (begin >= end) return;
  std::uint64_t gray = begin ^ (begin >> 1);
  VertexSet odd;
  for (std::uint64_t b = gray; b != 0; b &= b - 1) odd ^= endpoints[static_cast<std::size_t>(std::countr_zero(b))];
  visit(EdgeSet(gray), odd);
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    int flip = std::countr_zero(i);
    gray ^= std::uint64_t{1} << flip;
    odd ^= endpoints[static_cast<std::size_t>(flip)];
    visit(EdgeSet(gray), odd);
  }
}

void merge_min(MinScan& into, MinScan&& part) {
  if (part.min_size < 0) return;
  if (into.min_size < 0 || part.min_size < into.min_size) {
    into = std::move(part);
  } else if (part.min_size == into.min_size) {
    into.sets.insert(into.sets.end(), part.sets.begin(), part.sets.end());
  }
}

void offer(MinScan& scan, EdgeSet s) {
  int size = s.size();
  if (scan.min_size < 0 || size < scan.min_size) {
    scan.min_size = size;
    scan.sets.clear();
    scan.sets.push_back(s);
  } else if (size == scan.min_size) {
    scan.sets.push_back(s);
  }
}

constexpr std::uint64_t kBlock = std::uint64_t{1} << 12;

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<EdgeSet> span_serial(std::span<const EdgeSet> basis, Parity parity) {
  std::vector<EdgeSet> out;
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  walk_span(basis, 0, total, [&](EdgeSet s) {
    if (accept(s, parity)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> span_parallel(std::span<const EdgeSet> basis, Parity parity) {
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
  std::vector<std::vector<EdgeSet>> parts(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < blocks; ++b) {
    auto& part = parts[static_cast<std::size_t>(b)];
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    walk_span(basis, begin, std::min(total, begin + kBlock), [&](EdgeSet s) {
      if (accept(s, parity)) part.push_back(s);
    });
  }
  std::vector<EdgeSet> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

MinScan min_coset_serial(EdgeSet offset, std::span<const EdgeSet> cosets) {
  MinScan scan;
  for (EdgeSet c : cosets) offer(scan, offset ^ c);
  std::sort(scan.sets.begin(), scan.sets.end());
  return scan;
}

MinScan min_coset_parallel(EdgeSet offset, std::span<const EdgeSet> cosets) {
  const auto count = static_cast<std::int64_t>(cosets.size());
  const std::int64_t blocks = (count + static_cast<std::int64_t>(kBlock) - 1) / static_cast<std::int64_t>(kBlock);
  std::vector<MinScan> parts(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    auto& part = parts[static_cast<std::size_t>(b)];
    const std::int64_t begin = b * static_cast<std::int64_t>(kBlock);
    const std::int64_t end = std::min(count, begin + static_cast<std::int64_t>(kBlock));
    for (std::int64_t i = begin; i < end; ++i) offer(part, offset ^ cosets[static_cast<std::size_t>(i)]);
  }
  MinScan scan;
  for (auto& part : parts) merge_min(scan, std::move(part));
  std::sort(scan.sets.begin(), scan.sets.end());
  return scan;
}

std::vector<EdgeSet> subset_scan_serial(std::span<const VertexSet> endpoints, VertexSet target) {
  std::vector<EdgeSet> out;
  const std::uint64_t total = std::uint64_t{1} << endpoints.size();
  walk_subsets(endpoints, 0, total, [&](EdgeSet s, VertexSet odd) {
    if (odd == target) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> subset_scan_parallel(std::span<const VertexSet> endpoints, VertexSet target) {
  const std::uint64_t total = std::uint64_t{1} << endpoints.size();
  const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
  std::vector<std::vector<EdgeSet>> parts(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < blocks; ++b) {
    auto& part = parts[static_cast<std::size_t>(b)];
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    walk_subsets(endpoints, begin, std::min(total, begin + kBlock), [&](EdgeSet s, VertexSet odd) {
      if (odd == target) part.push_back(s);
    });
  }
  std::vector<EdgeSet> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eulermin::kernels
