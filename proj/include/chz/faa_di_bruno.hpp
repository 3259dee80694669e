#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chz/matrix_core.hpp"

namespace chz {

/// All k-tuples (i_1, ..., i_k) of nonnegative integers with 1*i_1 + 2*i_2 + ... + k*i_k = k,
/// i.e. the partitions of k written by part multiplicity. Ordered with i_1 descending,
/// then i_2 descending, and so on.
std::vector<std::vector<std::size_t>> faa_di_bruno_tuples(std::size_t k);

/// k-th derivative of t -> f(X(t)) from the outer derivatives f_derivs[m-1] = f^{(m)}(X(t))
/// and the inner derivatives x_derivs[j-1] = X^{(j)}(t), m, j = 1..k.
Complex faa_di_bruno_derivative(std::span<const Complex> f_derivs,
                                std::span<const Complex> x_derivs, std::size_t k);

}  // namespace chz
