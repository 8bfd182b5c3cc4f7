#include "delseq/embeddings.hpp"

#include <algorithm>

namespace delseq {

namespace {

void extend_masks(const BitString& x, const BitString& y, std::size_t i, std::size_t start,
                  std::vector<std::size_t>& current, std::vector<Mask>& out) {
    const std::size_t m = x.size();
    if (i == m) {
        out.push_back(Mask{current});
        return;
    }
    // leave room for the remaining m - i - 1 symbols
    const std::size_t last = y.size() - (m - i);
    for (std::size_t j = start; j <= last; ++j) {
        if (y[j] != x[i]) continue;
        current.push_back(j + 1);
        extend_masks(x, y, i + 1, j + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Mask> enumerate_masks(const BitString& x, const BitString& y) {
    std::vector<Mask> out;
    if (x.size() > y.size()) return out;
    std::vector<std::size_t> current;
    current.reserve(x.size());
    extend_masks(x, y, 0, 0, current, out);
    return out;
}

BigCount count_embeddings_dp(const BitString& x, const BitString& y) {
    const std::size_t m = x.size();
    if (m > y.size()) return 0;
    std::vector<BigCount> w(m + 1, 0);
    w[0] = 1;
    for (std::size_t j = 0; j < y.size(); ++j) {
        for (std::size_t i = std::min(m, j + 1); i >= 1; --i)
            if (x[i - 1] == y[j]) w[i] += w[i - 1];
    }
    return w[m];
}

std::uint64_t count_embeddings_u64(const BitString& x, const BitString& y) {
    const std::size_t m = x.size();
    if (m > y.size()) return 0;
    std::vector<std::uint64_t> w(m + 1, 0);
    w[0] = 1;
    for (std::size_t j = 0; j < y.size(); ++j) {
        for (std::size_t i = std::min(m, j + 1); i >= 1; --i)
            if (x[i - 1] == y[j]) w[i] += w[i - 1];
    }
    return w[m];
}

BigCount block_map_count(std::size_t x_blocks, std::size_t y_blocks) {
    if (x_blocks > y_blocks) return 0;
    const std::size_t u = (y_blocks - x_blocks) / 2;
    return binomial(static_cast<std::int64_t>(x_blocks + u), static_cast<std::int64_t>(u));
}

std::vector<BlockMap> block_maps(std::size_t x_blocks, std::size_t y_blocks) {
    std::vector<BlockMap> out;
    if (x_blocks > y_blocks) return out;
    const std::size_t u = (y_blocks - x_blocks) / 2;
    // f(i) = i + 2 d_i with 0 <= d_1 <= ... <= d_l' <= u
    std::vector<std::size_t> d(x_blocks, 0);
    while (true) {
        BlockMap map;
        map.f.resize(x_blocks);
        for (std::size_t i = 0; i < x_blocks; ++i) map.f[i] = i + 1 + 2 * d[i];
        out.push_back(std::move(map));
        // next nondecreasing sequence in lexicographic order
        std::size_t pos = x_blocks;
        while (pos > 0 && d[pos - 1] == u) --pos;
        if (pos == 0) break;
        const std::size_t v = d[pos - 1] + 1;
        for (std::size_t i = pos - 1; i < x_blocks; ++i) d[i] = v;
    }
    return out;
}

std::vector<BlockMap> block_maps(const Rle& x_rle, const Rle& y_rle) {
    if (!x_rle.runs.empty() && !y_rle.runs.empty() && x_rle.first_symbol != y_rle.first_symbol)
        throw DomainError("block_maps: encodings must start with the same symbol");
    return block_maps(x_rle.blocks(), y_rle.blocks());
}

BigCount block_map_weight(const Rle& x_rle, const Rle& y_rle, const BlockMap& f) {
    if (f.f.size() != x_rle.blocks()) throw DomainError("block_map_weight: map size differs from x's run count");
    BigCount product = 1;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < f.f.size(); ++i) {
        const std::size_t fi = f.f[i];
        if (fi > y_rle.blocks() || fi <= prev || (fi - prev) % 2 == 0)
            throw DomainError("block_map_weight: invalid block map");
        std::int64_t total = 0;
        for (std::size_t j = prev + 1; j <= fi; j += 2) total += static_cast<std::int64_t>(y_rle.runs[j - 1]);
        const auto k = static_cast<std::int64_t>(x_rle.runs[i]);
        const auto without_last = total - static_cast<std::int64_t>(y_rle.runs[fi - 1]);
        product *= binomial(total, k) - binomial(without_last, k);
        if (product == 0) return 0;
        prev = fi;
    }
    return product;
}

RunDecomposition decompose_embeddings(const BitString& x, const BitString& y) {
    RunDecomposition out;
    const Rle xr = rle_encode(x);
    out.y_aligned = rle_encode(y);
    if (x.empty()) {
        out.maps.push_back(BlockMap{});
        out.weights.push_back(1);
        out.total = 1;
        return out;
    }
    if (y.empty()) return out;
    if (out.y_aligned.first_symbol != xr.first_symbol) {
        out.y_aligned.runs.erase(out.y_aligned.runs.begin());
        out.y_aligned.first_symbol = xr.first_symbol;
        out.stripped_runs = 1;
        if (out.y_aligned.runs.empty()) {
            out.y_aligned.first_symbol.reset();
            return out;
        }
    }
    out.maps = block_maps(xr.blocks(), out.y_aligned.blocks());
    out.weights.reserve(out.maps.size());
    for (const BlockMap& f : out.maps) {
        out.weights.push_back(block_map_weight(xr, out.y_aligned, f));
        out.total += out.weights.back();
    }
    return out;
}

BigCount count_embeddings_runs(const BitString& x, const BitString& y) {
    return decompose_embeddings(x, y).total;
}

BlockMap block_map_of(const BitString& x, const BitString& y, const Mask& mask) {
    if (mask.indices.size() != x.size()) throw DomainError("block_map_of: mask length differs from |x|");
    BlockMap out;
    if (x.empty()) return out;
    // block index of each position of y (1-based blocks)
    std::vector<std::size_t> block(y.size(), 0);
    for (std::size_t j = 0; j < y.size(); ++j) block[j] = (j == 0) ? 1 : block[j - 1] + (y[j] != y[j - 1] ? 1 : 0);
    const std::size_t shift = (y[0] != x[0]) ? 1 : 0;
    const Rle xr = rle_encode(x);
    std::size_t end = 0;
    for (std::size_t run : xr.runs) {
        end += run;
        out.f.push_back(block[mask.indices[end - 1] - 1] - shift);
    }
    return out;
}

}  // namespace delseq
