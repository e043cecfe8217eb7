#include "swt/sign_matrix.hpp"

#include <stdexcept>
#include <string>

namespace swt {

SignMatrix::SignMatrix(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("sign matrix dimension must be >= 1, got " +
                                    std::to_string(n));
    }
    entries_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        const int block = n - i + 1;  // semi-wave length in sub-intervals
        for (int j = 1; j <= n; ++j) {
            const bool negative = ((j - 1) / block) % 2 != 0;
            entries_[idx(j, i)] = negative ? -1 : +1;
        }
    }
}

SignMatrix build_sign_matrix(int n) { return SignMatrix(n); }

}  // namespace swt
