#include "pod2/series.hpp"

#include <algorithm>
#include <string>

#include "pod2/errors.hpp"
#include "pod2/kernels.hpp"

namespace pod2 {

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw StructuralError("truncated series must have order >= 1");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Integer>(order));
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  return monomial(1, 0, order);
}

TruncatedSeries TruncatedSeries::monomial(const Integer& c, std::size_t exponent, std::size_t order) {
  std::vector<Integer> v(order);
  if (exponent < order) v[exponent] = c;
  return TruncatedSeries(std::move(v));
}

const Integer& TruncatedSeries::at(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw StructuralError("coefficient index " + std::to_string(n) + " is past truncation order " +
                          std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

std::size_t TruncatedSeries::nonzero_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

bool TruncatedSeries::is_zero() const noexcept { return nonzero_count() == 0; }

TruncatedSeries make_series(std::vector<Integer> coeffs, std::size_t order) {
  if (coeffs.size() != order) {
    throw StructuralError("coefficient count " + std::to_string(coeffs.size()) +
                          " does not match order " + std::to_string(order));
  }
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries make_series(std::initializer_list<long> coeffs, std::size_t order) {
  std::vector<Integer> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return make_series(std::move(v), order);
}

namespace {

std::size_t min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

// Sparse kernel pays off when one side has few nonzeros (eta products,
// theta series, monomials).
bool prefer_sparse(std::size_t nnz, std::size_t order) { return nnz * 4 < order; }

}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = min_order(a, b);
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = min_order(a, b);
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries negate(const TruncatedSeries& a) {
  std::vector<Integer> out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out[i] = -a[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries scale(const TruncatedSeries& a, const Integer& c) {
  std::vector<Integer> out(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) out[i] = a[i] * c;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = min_order(a, b);
  std::vector<Integer> out(n);
  const auto ca = a.coefficients().first(n);
  const auto cb = b.coefficients().first(n);
  const std::size_t nnz_a = a.nonzero_count();
  const std::size_t nnz_b = b.nonzero_count();
  if (prefer_sparse(std::min(nnz_a, nnz_b), n)) {
    const auto sparse = nnz_a <= nnz_b ? kernels::nonzeros(ca) : kernels::nonzeros(cb);
    kernels::convolve_sparse_parallel(sparse, nnz_a <= nnz_b ? cb : ca, out);
  } else {
    kernels::convolve_parallel(ca, cb, out);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries power(const TruncatedSeries& a, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::one(a.order());
  TruncatedSeries base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

TruncatedSeries divide(const TruncatedSeries& c, const TruncatedSeries& a) {
  if (a[0] != 1 && a[0] != -1) {
    throw DomainError("series with constant term " + a[0].get_str() +
                      " is not a unit; factor the pole into q_shift");
  }
  const std::size_t n = min_order(a, c);
  const auto sparse = kernels::nonzeros(a.coefficients().first(n));
  std::vector<Integer> out(n);
  kernels::divide_sparse(sparse, c.coefficients().first(n), out);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries invert(const TruncatedSeries& a) {
  return divide(TruncatedSeries::one(a.order()), a);
}

TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order) {
  if (order == 0 || order > a.order()) {
    throw StructuralError("cannot truncate order-" + std::to_string(a.order()) + " series to order " +
                          std::to_string(order));
  }
  auto c = a.coefficients().first(order);
  return TruncatedSeries(std::vector<Integer>(c.begin(), c.end()));
}

TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
  std::vector<Integer> out(a.order() + k);
  std::copy(a.coefficients().begin(), a.coefficients().end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return TruncatedSeries(std::move(out));
}

TruncatedSeries extract_progression(const TruncatedSeries& s, std::size_t a, std::size_t b) {
  if (a == 0 || b >= a) {
    throw DomainError("progression (" + std::to_string(a) + "n+" + std::to_string(b) +
                      ") needs a >= 1 and 0 <= b < a");
  }
  if (b >= s.order()) {
    throw StructuralError("offset " + std::to_string(b) + " is past truncation order " +
                          std::to_string(s.order()));
  }
  const std::size_t n = (s.order() - b + a - 1) / a;
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = s[a * i + b];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries magnify(const TruncatedSeries& s, std::size_t m, std::size_t q_shift) {
  if (m == 0) throw DomainError("magnification factor must be positive");
  std::vector<Integer> out(m * (s.order() - 1) + 1 + q_shift);
  for (std::size_t i = 0; i < s.order(); ++i) out[m * i + q_shift] = s[i];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mod_reduce(const TruncatedSeries& s, const Integer& modulus) {
  if (modulus < 2) throw DomainError("modulus must be >= 2, got " + modulus.get_str());
  std::vector<Integer> out(s.order());
  for (std::size_t i = 0; i < s.order(); ++i) {
    mpz_fdiv_r(out[i].get_mpz_t(), s[i].get_mpz_t(), modulus.get_mpz_t());
  }
  return TruncatedSeries(std::move(out));
}

bool series_eq_mod(const TruncatedSeries& a, const TruncatedSeries& b, const Integer& modulus,
                   std::size_t upto) {
  if (modulus < 2) throw DomainError("modulus must be >= 2, got " + modulus.get_str());
  if (upto > min_order(a, b)) {
    throw StructuralError("comparison bound " + std::to_string(upto) + " exceeds known order " +
                          std::to_string(min_order(a, b)));
  }
  Integer diff;
  for (std::size_t i = 0; i < upto; ++i) {
    diff = a[i] - b[i];
    if (mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()) == 0) return false;
  }
  return true;
}

}  // namespace pod2
