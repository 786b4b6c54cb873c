#include "pod2/kernels.hpp"

#include <algorithm>
#include <cassert>

namespace pod2::kernels {

std::vector<SparseEntry> nonzeros(std::span<const Integer> a) {
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) out.push_back({i, &a[i]});
  }
  return out;
}

void convolve_serial(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
  const std::size_t n_out = out.size();
  for (auto& c : out) c = 0;
  for (std::size_t i = 0; i < std::min(a.size(), n_out); ++i) {
    if (sgn(a[i]) == 0) continue;
    const std::size_t j_end = std::min(b.size(), n_out - i);
    for (std::size_t j = 0; j < j_end; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

void convolve_parallel(std::span<const Integer> a, std::span<const Integer> b,
                       std::span<Integer> out) {
  const auto n_out = static_cast<std::ptrdiff_t>(out.size());
  const auto a_size = static_cast<std::ptrdiff_t>(a.size());
  const auto b_size = static_cast<std::ptrdiff_t>(b.size());
  // Work per slot grows with n, so hand out small chunks dynamically.
#pragma omp parallel if (out.size() >= kParallelThreshold)
  {
    mpz_class acc;
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t n = 0; n < n_out; ++n) {
      acc = 0;
      const std::ptrdiff_t i_lo = std::max<std::ptrdiff_t>(0, n - (b_size - 1));
      const std::ptrdiff_t i_hi = std::min(n, a_size - 1);
      for (std::ptrdiff_t i = i_lo; i <= i_hi; ++i) {
        mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
      }
      out[n] = acc;
    }
  }
}

void convolve_sparse_serial(std::span<const SparseEntry> a, std::span<const Integer> b,
                            std::span<Integer> out) {
  const std::size_t n_out = out.size();
  for (auto& c : out) c = 0;
  for (const auto& e : a) {
    if (e.index >= n_out) break;
    const std::size_t j_end = std::min(b.size(), n_out - e.index);
    for (std::size_t j = 0; j < j_end; ++j) {
      mpz_addmul(out[e.index + j].get_mpz_t(), e.value->get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

void convolve_sparse_parallel(std::span<const SparseEntry> a, std::span<const Integer> b,
                              std::span<Integer> out) {
  const auto n_out = static_cast<std::ptrdiff_t>(out.size());
  const std::size_t b_size = b.size();
#pragma omp parallel if (out.size() >= kParallelThreshold)
  {
    mpz_class acc;
#pragma omp for schedule(dynamic, 32)
    for (std::ptrdiff_t n = 0; n < n_out; ++n) {
      acc = 0;
      const auto un = static_cast<std::size_t>(n);
      for (const auto& e : a) {
        if (e.index > un) break;
        const std::size_t j = un - e.index;
        if (j < b_size) mpz_addmul(acc.get_mpz_t(), e.value->get_mpz_t(), b[j].get_mpz_t());
      }
      out[n] = acc;
    }
  }
}

void divide_sparse(std::span<const SparseEntry> a, std::span<const Integer> c, std::span<Integer> x) {
  assert(!a.empty() && a.front().index == 0);
  const bool negative_unit = sgn(*a.front().value) < 0;
  mpz_class acc;
  for (std::size_t n = 0; n < x.size(); ++n) {
    acc = c[n];
    for (std::size_t k = 1; k < a.size(); ++k) {
      const std::size_t idx = a[k].index;
      if (idx > n) break;
      mpz_submul(acc.get_mpz_t(), a[k].value->get_mpz_t(), x[n - idx].get_mpz_t());
    }
    if (negative_unit) mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
    x[n] = acc;
  }
}

}  // namespace pod2::kernels
