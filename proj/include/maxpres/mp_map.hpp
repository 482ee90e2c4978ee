#pragma once

// Max-preserving maps on the positive orthant, stored as the matrix of entry
// functions a_ij(t) = (A(t e_j))_i, so that (Ax)_i = max_j a_ij(x_j).

#include "maxpres/nonneg_vector.hpp"
#include "maxpres/scalar_fn.hpp"

#include <span>
#include <vector>

namespace maxpres {

class MpMap {
public:
    /// Row-major n x n entries; throws DimensionMismatch if the grid is not square.
    MpMap(std::size_t n, std::vector<ScalarFn> entries);
    explicit MpMap(const std::vector<std::vector<ScalarFn>>& rows);

    static MpMap identity(std::size_t n);
    static MpMap zero(std::size_t n);
    /// Entries t -> g_ij t (zero gains give Zero entries).
    static MpMap from_gains(const std::vector<std::vector<Rational>>& gains);

    std::size_t dim() const { return n_; }
    const ScalarFn& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const ScalarFn> entries() const { return entries_; }

    /// Entry-wise normalization.
    MpMap normalized() const;

    friend bool operator==(const MpMap&, const MpMap&) = default;

private:
    std::size_t n_;
    std::vector<ScalarFn> entries_;
};

NonnegVector apply(const MpMap& a, const NonnegVector& x);

/// (A o B)_ij = max_k a_ik o b_kj.
MpMap compose_maps(const MpMap& a, const MpMap& b);

/// Entry-wise maximum.
MpMap oplus_maps(const MpMap& a, const MpMap& b);

/// k-fold composition; power_map(A, 0) is the identity map.
MpMap power_map(const MpMap& a, unsigned k);

/// Both maps normalized entry by entry and compared as trees.
bool structurally_equal(const MpMap& a, const MpMap& b);

/// Deterministic grid of vectors used for pointwise map comparison.
std::vector<NonnegVector> verification_grid(std::size_t n, std::size_t count);

/// Exact agreement of apply() on every grid vector.
bool pointwise_equal(const MpMap& a, const MpMap& b, std::span<const NonnegVector> grid);

}  // namespace maxpres
