#include <cstdlib>
#include <map>
#include <string>

#include "pod2/errors.hpp"
#include "pod2/kernels.hpp"
#include "pod2/series.hpp"

namespace pod2 {

TruncatedSeries eta_product(std::int64_t dilation, std::size_t order) {
  if (dilation < 1) throw DomainError("eta dilation must be >= 1, got " + std::to_string(dilation));
  std::vector<Integer> v(order);
  const auto bound = static_cast<std::int64_t>(order);
  v[0] = 1;
  // sum over k != 0 of (-1)^k q^{j k(3k-1)/2}, pairing k and -k.
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t lo = dilation * (k * (3 * k - 1) / 2);
    if (lo >= bound) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    v[lo] += sign;
    const std::int64_t hi = dilation * (k * (3 * k + 1) / 2);
    if (hi < bound) v[hi] += sign;
  }
  return TruncatedSeries(std::move(v));
}

namespace {

std::map<std::int64_t, std::int64_t> combined_exponents(const EtaQuotientSpec& spec) {
  std::map<std::int64_t, std::int64_t> by_dilation;
  for (const auto& f : spec.factors) {
    if (f.dilation < 1) {
      throw DomainError("eta dilation must be >= 1, got " + std::to_string(f.dilation));
    }
    by_dilation[f.dilation] += f.exponent;
  }
  return by_dilation;
}

TruncatedSeries expand_sparse(const std::map<std::int64_t, std::int64_t>& exps, std::size_t order) {
  std::vector<Integer> acc(order);
  acc[0] = 1;
  std::vector<Integer> tmp(order);
  for (const auto& [j, e] : exps) {
    if (e == 0) continue;
    const TruncatedSeries fj = eta_product(j, order);
    const auto sparse = kernels::nonzeros(fj.coefficients());
    for (std::int64_t r = 0; r < std::abs(e); ++r) {
      if (e > 0) {
        kernels::convolve_sparse_parallel(sparse, acc, tmp);
      } else {
        kernels::divide_sparse(sparse, acc, tmp);
      }
      acc.swap(tmp);
    }
  }
  return TruncatedSeries(std::move(acc));
}

TruncatedSeries expand_invert_power(const std::map<std::int64_t, std::int64_t>& exps,
                                    std::size_t order) {
  TruncatedSeries acc = TruncatedSeries::one(order);
  for (const auto& [j, e] : exps) {
    if (e == 0) continue;
    const TruncatedSeries fj = eta_product(j, order);
    const TruncatedSeries base = e > 0 ? fj : invert(fj);
    acc = mul(acc, power(base, static_cast<unsigned>(std::abs(e))));
  }
  return acc;
}

}  // namespace

TruncatedSeries expand_eta_quotient(const EtaQuotientSpec& spec, std::size_t order,
                                    EtaExpansion method) {
  if (order == 0) throw StructuralError("expansion order must be >= 1");
  const auto exps = combined_exponents(spec);
  if (spec.q_shift >= order) return TruncatedSeries::zero(order);
  const std::size_t inner = order - spec.q_shift;
  TruncatedSeries body = method == EtaExpansion::kSparseDivision ? expand_sparse(exps, inner)
                                                                 : expand_invert_power(exps, inner);
  return shift(body, spec.q_shift);
}

TruncatedSeries psi_series(std::size_t order) {
  return expand_eta_quotient({{{2, 2}, {1, -1}}, 0}, order);
}

TruncatedSeries phi_series(std::size_t order) {
  return expand_eta_quotient({{{2, 5}, {1, -2}, {4, -2}}, 0}, order);
}

TruncatedSeries psi_neg(std::size_t order) {
  return expand_eta_quotient({{{1, 1}, {4, 1}, {2, -1}}, 0}, order);
}

TruncatedSeries phi_neg(std::size_t order) {
  return expand_eta_quotient({{{1, 2}, {2, -1}}, 0}, order);
}

TruncatedSeries theta_f_general(int sign_a, std::int64_t exp_a, int sign_b, std::int64_t exp_b,
                                std::size_t order) {
  if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1)) {
    throw DomainError("theta signs must be +1 or -1");
  }
  if (exp_a < 0 || exp_b < 0 || exp_a + exp_b < 1) {
    throw DomainError("theta f(a,b) needs nonnegative exponents with exp_a + exp_b >= 1 (|ab| < 1)");
  }
  if (order == 0) throw StructuralError("expansion order must be >= 1");
  std::vector<Integer> v(order);
  const auto bound = static_cast<std::int64_t>(order);

  auto accumulate = [&](std::int64_t n) -> bool {
    const std::int64_t ta = n * (n + 1) / 2;  // power of a
    const std::int64_t tb = n * (n - 1) / 2;  // power of b
    const std::int64_t e = exp_a * ta + exp_b * tb;
    if (e >= bound) return false;
    int sign = 1;
    if (sign_a < 0 && (ta & 1)) sign = -sign;
    if (sign_b < 0 && (tb & 1)) sign = -sign;
    v[e] += sign;
    return true;
  };
  // e(n) is strictly increasing for n >= 1 and for n <= -1.
  accumulate(0);
  for (std::int64_t n = 1; accumulate(n); ++n) {
  }
  for (std::int64_t n = -1; accumulate(n); --n) {
  }
  return TruncatedSeries(std::move(v));
}

}  // namespace pod2
