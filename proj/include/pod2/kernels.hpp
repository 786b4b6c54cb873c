#pragma once

// Truncated convolution kernels.
//
// Each kernel writes out[n] = sum_{i+j=n} a[i] * b[j] for n < out.size().
// The *_parallel kernels split the output index range across OpenMP
// threads (gather form, one accumulator per output slot).  The *_serial
// kernels use a scatter loop and are kept as the reference the parallel
// kernels are tested and benchmarked against.

#include <cstddef>
#include <span>
#include <vector>

#include "pod2/series.hpp"

namespace pod2::kernels {

/// Nonzero entries of a series, by index.
struct SparseEntry {
  std::size_t index;
  const Integer* value;
};

std::vector<SparseEntry> nonzeros(std::span<const Integer> a);

void convolve_serial(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out);
void convolve_parallel(std::span<const Integer> a, std::span<const Integer> b,
                       std::span<Integer> out);

/// `a` given by its nonzero entries (sorted by index).
void convolve_sparse_serial(std::span<const SparseEntry> a, std::span<const Integer> b,
                            std::span<Integer> out);
void convolve_sparse_parallel(std::span<const SparseEntry> a, std::span<const Integer> b,
                              std::span<Integer> out);

/// Solves a * x = c for x in place of `x` (x.size() <= min(a, c) sizes).
/// a[0] must be +1 or -1.  Inherently sequential recurrence.
void divide_sparse(std::span<const SparseEntry> a, std::span<const Integer> c, std::span<Integer> x);

/// Below this output length the parallel kernels stay on one thread.
inline constexpr std::size_t kParallelThreshold = 256;

}  // namespace pod2::kernels
