#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "delseq/core.hpp"

namespace delseq {

/// Embedding of x into y: strictly increasing 1-based positions with y_pi = x.
struct Mask {
    std::vector<std::size_t> indices;

    auto operator<=>(const Mask&) const = default;
    bool operator==(const Mask&) const = default;
};

/// Strictly increasing block map f: [l'] -> [l] with f(i) = i (mod 2).
/// `f[i-1]` holds f(i); blocks are numbered from 1.
struct BlockMap {
    std::vector<std::size_t> f;

    auto operator<=>(const BlockMap&) const = default;
    bool operator==(const BlockMap&) const = default;
};

/// All masks of x in y, lexicographic order. One empty mask when x is empty.
std::vector<Mask> enumerate_masks(const BitString& x, const BitString& y);

/// omega_x(y) by the distinct-occurrence DP.
BigCount count_embeddings_dp(const BitString& x, const BitString& y);

/// Same DP in 64-bit arithmetic; exact while C(|y|, |x|) < 2^64 (|y| <= 67).
std::uint64_t count_embeddings_u64(const BitString& x, const BitString& y);

/// Number of valid block maps for block counts l' -> l: C(l'+u, u), u = floor((l-l')/2).
BigCount block_map_count(std::size_t x_blocks, std::size_t y_blocks);

/// All block maps [x_blocks] -> [y_blocks], lexicographic order.
std::vector<BlockMap> block_maps(std::size_t x_blocks, std::size_t y_blocks);

/// Block maps for two encodings starting with the same symbol.
std::vector<BlockMap> block_maps(const Rle& x_rle, const Rle& y_rle);

/// |omega_f|: the number of masks whose i-th run ends inside block f(i).
/// Requires equal first symbols.
BigCount block_map_weight(const Rle& x_rle, const Rle& y_rle, const BlockMap& f);

struct RunDecomposition {
    /// y's encoding after stripping a mismatched first run (if any).
    Rle y_aligned;
    /// 1 when y's first run was removed, else 0.
    std::size_t stripped_runs = 0;
    std::vector<BlockMap> maps;
    std::vector<BigCount> weights;  // parallel to maps
    BigCount total;
};

/// Run-based count, keeping every block map and its weight.
RunDecomposition decompose_embeddings(const BitString& x, const BitString& y);

/// omega_x(y) as the sum of block-map weights.
BigCount count_embeddings_runs(const BitString& x, const BitString& y);

/// Block map a mask belongs to, relative to `decompose_embeddings(x, y).y_aligned`.
/// f(i) is the block containing the position matched to the last symbol of x's i-th run.
BlockMap block_map_of(const BitString& x, const BitString& y, const Mask& mask);

}  // namespace delseq
