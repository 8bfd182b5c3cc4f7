#include "delseq/superspace.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace delseq {

namespace {

void check_lengths(std::size_t n, std::size_t m) {
    if (m > n) throw DomainError("subsequence length " + std::to_string(m) + " exceeds n = " + std::to_string(n));
}

// Depth-first walk over y in ascending binary order. `w[i]` counts embeddings
// of x[0..i) in the current prefix; prefixes that can no longer contain x are pruned.
class PosteriorWalker {
public:
    PosteriorWalker(const BitString& x, std::size_t n, std::vector<PosteriorEntry>& out)
        : x_(x), n_(n), m_(x.size()), out_(out), stack_((n + 1) * (x.size() + 1), 0) {}

    void run() {
        stack_[0] = 1;
        walk(0, 0, 0);
    }

private:
    void walk(std::size_t depth, std::uint64_t code, std::size_t matched) {
        const std::uint64_t* w = &stack_[depth * (m_ + 1)];
        if (depth == n_) {
            out_.push_back({code, w[m_]});
            return;
        }
        for (Bit b = 0; b <= 1; ++b) {
            std::uint64_t* next = &stack_[(depth + 1) * (m_ + 1)];
            std::copy(w, w + m_ + 1, next);
            std::size_t reach = matched;
            for (std::size_t i = std::min(m_, depth + 1); i >= 1; --i)
                if (x_[i - 1] == b) next[i] += next[i - 1];
            if (reach < m_ && x_[reach] == b) ++reach;
            // greedy prefix match length decides feasibility
            if (m_ - reach <= n_ - depth - 1) walk(depth + 1, (code << 1U) | b, reach);
        }
    }

    const BitString& x_;
    std::size_t n_;
    std::size_t m_;
    std::vector<PosteriorEntry>& out_;
    std::vector<std::uint64_t> stack_;
};

}  // namespace

BigCount uncertainty_cardinality(std::size_t n, std::size_t m) {
    check_lengths(n, m);
    BigCount total = 0;
    for (std::size_t r = m; r <= n; ++r) total += binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r));
    return total;
}

BigCount total_masks(std::size_t n, std::size_t m) {
    check_lengths(n, m);
    return binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)) * pow2(n - m);
}

Posterior build_posterior(const BitString& x, std::size_t n, std::size_t max_bits) {
    check_lengths(n, x.size());
    if (n > max_bits)
        throw SizeError("n = " + std::to_string(n) + " exceeds the enumeration cap of " + std::to_string(max_bits) +
                        " bits");
    if (n > 62) throw SizeError("n = " + std::to_string(n) + " exceeds the 62-bit enumeration limit");
    Posterior p;
    p.x = x;
    p.n = n;
    p.mu = total_masks(n, x.size());
    p.entries.reserve(static_cast<std::size_t>(uncertainty_cardinality(n, x.size())));
    PosteriorWalker(x, n, p.entries).run();
    return p;
}

BigCount WeightClasses::string_count() const {
    BigCount total = 0;
    for (const auto& [w, c] : classes) total += c;
    return total;
}

BigCount WeightClasses::weight_sum() const {
    BigCount total = 0;
    for (const auto& [w, c] : classes) total += w * c;
    return total;
}

WeightClasses weight_classes_of(std::vector<std::uint64_t> weights) {
    std::sort(weights.begin(), weights.end(), std::greater<>());
    WeightClasses out;
    for (std::size_t i = 0; i < weights.size();) {
        std::size_t j = i;
        while (j < weights.size() && weights[j] == weights[i]) ++j;
        out.classes.emplace_back(BigCount(weights[i]), BigCount(j - i));
        i = j;
    }
    return out;
}

WeightClasses weight_classes(const Posterior& p) {
    std::vector<std::uint64_t> weights;
    weights.reserve(p.entries.size());
    for (const auto& e : p.entries) weights.push_back(e.weight);
    return weight_classes_of(std::move(weights));
}

BigCount masks_per_cluster(std::size_t n, std::size_t m, std::size_t a) {
    check_lengths(n, m);
    if (a > n - m) throw DomainError("cluster index " + std::to_string(a) + " outside [0, n-m]");
    return binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)) *
           binomial(static_cast<std::int64_t>(n - m), static_cast<std::int64_t>(a));
}

std::vector<BigCount> distinct_subsequence_profile(const BitString& y) {
    const std::size_t n = y.size();
    // d[j][k]: distinct subsequences of length k in y[0..j)
    std::vector<std::vector<BigCount>> d(n + 1, std::vector<BigCount>(n + 1, 0));
    for (std::size_t j = 0; j <= n; ++j) d[j][0] = 1;
    std::size_t last[2] = {0, 0};  // 1-based position of the previous occurrence, 0 if none
    for (std::size_t j = 1; j <= n; ++j) {
        const Bit b = y[j - 1];
        const std::size_t prev = last[b];
        for (std::size_t k = 1; k <= j; ++k) {
            d[j][k] = d[j - 1][k] + d[j - 1][k - 1];
            if (prev > 0) d[j][k] -= d[prev - 1][k - 1];
        }
        last[b] = j;
    }
    return d[n];
}

BigCount count_distinct_subsequences(const BitString& y, std::size_t m) {
    if (m > y.size()) throw DomainError("subsequence length exceeds |y|");
    return distinct_subsequence_profile(y)[m];
}

double expected_distinct_subsequences(std::size_t n, std::size_t t) {
    check_lengths(n, t);
    // exact numerator over 2^t
    BigCount numerator = 0;
    for (std::size_t i = 0; i <= t; ++i)
        numerator += multichoose(static_cast<std::int64_t>(n - t), static_cast<std::int64_t>(i)) * pow2(t - i);
    using boost::multiprecision::cpp_rational;
    return cpp_rational(numerator, pow2(t)).convert_to<double>();
}

}  // namespace delseq
