#include "delseq/clustering.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace delseq {

namespace {

using i64 = std::int64_t;

i64 s(std::size_t v) { return static_cast<i64>(v); }

void check_cluster_args(std::size_t n, std::size_t m, std::size_t hx, std::size_t c) {
    if (m > n) throw DomainError("m exceeds n");
    if (hx > m) throw DomainError("Hamming weight exceeds m");
    if (c > n - m) throw DomainError("cluster index " + std::to_string(c) + " outside [0, n-m]");
}

class ClusterRecurrence {
public:
    explicit ClusterRecurrence(const BitString& x) : x_(x) {}

    // suffix x[start..), length-n supersequences with c extra ones
    BigCount eval(std::size_t n, std::size_t start, std::size_t c) {
        const std::size_t len = x_.size() - start;
        if (c + len > n) return 0;
        if (len == 0) return binomial(s(n), s(c));
        const auto key = std::make_tuple(n, start, c);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigCount value;
        if (x_[start] == 0) {
            value = eval(n - 1, start + 1, c);
            if (c > 0) value += eval(n - 1, start, c - 1);
        } else {
            value = eval(n - 1, start + 1, c) + eval(n - 1, start, c);
        }
        memo_.emplace(key, value);
        return value;
    }

private:
    const BitString& x_;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, BigCount> memo_;
};

}  // namespace

std::optional<Mask> canonical_embedding(const BitString& x, const BitString& y) {
    Mask mask;
    mask.indices.reserve(x.size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        while (j < y.size() && y[j] != x[i]) ++j;
        if (j == y.size()) return std::nullopt;
        mask.indices.push_back(++j);
    }
    return mask;
}

bool is_maximal_initial(const BitString& x, const BitString& y) {
    const auto mask = canonical_embedding(x, y);
    if (!mask) return false;
    if (mask->indices.empty()) return y.empty();
    return mask->indices.back() == y.size();
}

BigCount maximal_initials_total(std::size_t n, std::size_t m) {
    if (m == 0 || m > n) throw DomainError("maximal initials need 1 <= m <= n");
    return binomial(s(n) - 1, s(m) - 1);
}

BigCount maximal_initials_cluster(std::size_t n, std::size_t m, std::size_t hx, std::size_t c) {
    check_cluster_args(n, m, hx, c);
    return multichoose(s(hx), s(n - m - c)) * multichoose(s(m - hx), s(c));
}

BigCount cluster_size_closed(std::size_t n, std::size_t m, std::size_t hx, std::size_t c) {
    check_cluster_args(n, m, hx, c);
    if (hx == 0) return binomial(s(n), s(c));
    const std::size_t z = n - m - c;
    BigCount total = 0;
    for (std::size_t p = hx; p <= hx + z; ++p) total += binomial(s(p) - 1, s(hx) - 1) * binomial(s(n - p), s(c));
    return total;
}

BigCount cluster_size_stars_bars(std::size_t n, std::size_t m, std::size_t hx, std::size_t c) {
    check_cluster_args(n, m, hx, c);
    if (m == 0) return binomial(s(n), s(c));
    BigCount total = 0;
    for (std::size_t l = m; l <= n; ++l) {
        const std::size_t lb = (c > n - l) ? c - (n - l) : 0;
        const std::size_t ub = std::min(c, l - m);
        for (std::size_t g = lb; g <= ub; ++g)
            total += multichoose(s(hx), s(l - m - g)) * multichoose(s(m - hx), s(g)) * binomial(s(n - l), s(c - g));
    }
    return total;
}

BigCount cluster_size_recurrence(std::size_t n, const BitString& x, std::size_t c) {
    check_cluster_args(n, x.size(), hamming_weight(x), c);
    return ClusterRecurrence(x).eval(n, 0, c);
}

ClusterCensus census_clusters(const Posterior& p) {
    const std::size_t m = p.x.size();
    const std::size_t hx = hamming_weight(p.x);
    ClusterCensus out;
    out.sizes.assign(p.n - m + 1, 0);
    out.maximal.assign(p.n - m + 1, 0);
    out.singletons = 0;
    for (std::size_t i = 0; i < p.entries.size(); ++i) {
        const BitString y = p.y(i);
        const std::size_t c = hamming_weight(y) - hx;
        out.sizes[c] += 1;
        if (m > 0 && is_maximal_initial(p.x, y)) out.maximal[c] += 1;
        if (p.entries[i].weight == 1) out.singletons += 1;
    }
    return out;
}

RhoProfile rho(const BitString& x) {
    if (x.empty()) throw DomainError("rho: x must be nonempty");
    const Rle r = rle_encode(x);
    RhoProfile out;
    const std::size_t l = r.blocks();
    for (std::size_t i = 0; i < l; ++i) {
        const bool first = (i == 0);
        const bool last = (i + 1 == l);
        std::size_t slots = r.runs[i];
        if (first && last)
            slots += 1;
        else if (!first && !last)
            slots -= 1;
        (r.symbol_of(i) == 0 ? out.rho0 : out.rho1) += slots;
    }
    return out;
}

BigCount count_singletons(std::size_t n, const BitString& x) {
    if (x.size() > n) throw DomainError("|x| exceeds n");
    if (x.empty()) return pow2(n);
    const RhoProfile r = rho(x);
    const std::size_t d = n - x.size();
    return binomial(s(d + r.rho0 + r.rho1) - 1, s(d));
}

}  // namespace delseq
