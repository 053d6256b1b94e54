#pragma once

// Numeric convolution kernels. The *_serial versions are the reference
// implementation; the others split the output range across OpenMP threads.

#include <cstddef>
#include <vector>

namespace pmap::kernels {

template <class T>
std::vector<T> convolve_serial(const std::vector<T>& a, const std::vector<T>& b, size_t n);
template <class T>
std::vector<T> convolve(const std::vector<T>& a, const std::vector<T>& b, size_t n);

// a^k truncated to n terms by binary powering
template <class T>
std::vector<T> power_serial(const std::vector<T>& a, long k, size_t n);
template <class T>
std::vector<T> power(const std::vector<T>& a, long k, size_t n);

int max_threads();

}  // namespace pmap::kernels
