#ifndef SWT_SIGN_MATRIX_HPP
#define SWT_SIGN_MATRIX_HPP

#include <cstdint>
#include <vector>

namespace swt {

/// The n x n coefficient matrix of the midpoint system. Row j holds the
/// signs of the n trains within sub-interval j: entry (j, i) is
/// (-1)^floor((j-1)/(n-i+1)), so column i flips sign every (n-i+1) rows,
/// column 1 stays +1 throughout and column n alternates every row.
class SignMatrix {
public:
    explicit SignMatrix(int n);

    int n() const { return n_; }

    /// Sign of train i in sub-interval j; j and i are 1-based.
    int sign(int j, int i) const { return entries_[idx(j, i)]; }

    /// Row j (1-based) as a contiguous span of n signs.
    const std::int8_t* row(int j) const { return entries_.data() + (j - 1) * static_cast<std::size_t>(n_); }

private:
    std::size_t idx(int j, int i) const {
        return (j - 1) * static_cast<std::size_t>(n_) + (i - 1);
    }

    int n_;
    std::vector<std::int8_t> entries_;  // row-major, values +1 / -1
};

/// Builds the sign matrix for n trains. Rejects n < 1.
SignMatrix build_sign_matrix(int n);

}  // namespace swt

#endif
