#include "pmap/kernels.hpp"

#include <omp.h>

#include <algorithm>

namespace pmap::kernels {

template <class T>
std::vector<T> convolve_serial(const std::vector<T>& a, const std::vector<T>& b, size_t n) {
  std::vector<T> c(n, T(0));
  for (size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == T(0)) continue;
    for (size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

template <class T>
std::vector<T> convolve(const std::vector<T>& a, const std::vector<T>& b, size_t n) {
  std::vector<T> c(n, T(0));
  const long na = static_cast<long>(a.size()), nb = static_cast<long>(b.size());
  // each output coefficient is owned by one thread
#pragma omp parallel for schedule(dynamic, 64)
  for (long k = 0; k < static_cast<long>(n); ++k) {
    long lo = k - nb + 1 > 0 ? k - nb + 1 : 0;
    long hi = k < na - 1 ? k : na - 1;
    T s(0);
    for (long i = lo; i <= hi; ++i) s += a[i] * b[k - i];
    c[k] = s;
  }
  return c;
}

namespace {

template <class T, class Conv>
std::vector<T> power_with(const std::vector<T>& a, long k, size_t n, Conv conv) {
  std::vector<T> result(n, T(0)), base(a);
  if (n == 0) return result;
  result[0] = T(1);
  base.resize(std::min(base.size(), n));
  while (k > 0) {
    if (k & 1) result = conv(result, base, n);
    k >>= 1;
    if (k) base = conv(base, base, n);
  }
  return result;
}

}  // namespace

template <class T>
std::vector<T> power_serial(const std::vector<T>& a, long k, size_t n) {
  return power_with(a, k, n, convolve_serial<T>);
}

template <class T>
std::vector<T> power(const std::vector<T>& a, long k, size_t n) {
  return power_with(a, k, n, convolve<T>);
}

int max_threads() { return omp_get_max_threads(); }

template std::vector<double> convolve_serial(const std::vector<double>&, const std::vector<double>&, size_t);
template std::vector<double> convolve(const std::vector<double>&, const std::vector<double>&, size_t);
template std::vector<double> power_serial(const std::vector<double>&, long, size_t);
template std::vector<double> power(const std::vector<double>&, long, size_t);
template std::vector<long double> convolve_serial(const std::vector<long double>&,
                                                  const std::vector<long double>&, size_t);
template std::vector<long double> convolve(const std::vector<long double>&,
                                           const std::vector<long double>&, size_t);
template std::vector<long double> power_serial(const std::vector<long double>&, long, size_t);
template std::vector<long double> power(const std::vector<long double>&, long, size_t);

}  // namespace pmap::kernels
