#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "delseq/core.hpp"
#include "delseq/superspace.hpp"

namespace delseq {

class EntropyMeasure {
public:
    enum class Kind { shannon, renyi, min, hartley };

    static EntropyMeasure shannon() { return EntropyMeasure(Kind::shannon, 1.0); }
    /// Throws DomainError unless alpha > 0 and alpha != 1.
    static EntropyMeasure renyi(double alpha);
    static EntropyMeasure min() { return EntropyMeasure(Kind::min, 0.0); }
    static EntropyMeasure hartley() { return EntropyMeasure(Kind::hartley, 0.0); }

    /// "shannon", "min", "hartley", "renyi2", "renyi:0.5".
    static EntropyMeasure parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    double alpha() const noexcept { return alpha_; }
    /// Column-friendly name, inverse of parse.
    std::string name() const;

private:
    EntropyMeasure(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}
    Kind kind_;
    double alpha_;
};

/// Entropy in bits of the distribution {weight / mu}.
double entropy(const WeightClasses& classes, const EntropyMeasure& measure);
double entropy(const Posterior& p, const EntropyMeasure& measure);

/// Shannon entropy of the posterior of 0^m.
double min_shannon_closed(std::size_t n, std::size_t m);
/// Renyi-2 entropy of the posterior of 0^m.
double min_renyi2_closed(std::size_t n, std::size_t m);
/// Min-entropy of the posterior of 0^m, i.e. n - m.
double min_minentropy_closed(std::size_t n, std::size_t m);

/// Weight classes of all length-(m+d) supersequences of x, with the string
/// count and mask sum checked against C(m+d, m) + ... + 1 and C(m+d, m) 2^d.
struct DeletionClasses {
    std::size_t deletions = 0;
    WeightClasses classes;
    BigCount string_count;
    BigCount expected_string_count;
    BigCount weight_sum;
    BigCount expected_weight_sum;

    bool identities_hold() const {
        return string_count == expected_string_count && weight_sum == expected_weight_sum;
    }
};

/// One class of weight k_i+1 per run plus m-l+2 singletons.
DeletionClasses single_deletion_classes(const Rle& x_rle);

/// Two rounds of run-level insertion (lengthen a run, split a run, add a run
/// at either end), deduplicated and weighed by the run-based count.
DeletionClasses double_deletion_classes(const Rle& x_rle);

/// e(k1+1) + e(k2+1) - e(k1+k2+1) with e(t) = -t log2 t.
double delta1(std::size_t k1, std::size_t k2);

struct GChainStep {
    BitString x;
    double entropy = 0.0;
};

/// Entropies along x, g(x), g(g(x)), ... down to the single-run string.
std::vector<GChainStep> g_chain_entropies(const BitString& x, std::size_t n, const EntropyMeasure& measure,
                                          std::size_t max_bits = kDefaultMaxBits);

/// Shannon entropy estimated from the first three central moments of the
/// embedding count of a uniformly drawn supersequence.
struct EntropyEstimate {
    double exact = 0.0;
    double estimate = 0.0;
    double bound = 0.0;  // fourth-moment remainder term, bits
    double mean = 0.0;
    double variance = 0.0;
    double third = 0.0;
    double fourth = 0.0;
};

EntropyEstimate entropy_estimate_from_moments(const BitString& x, std::size_t n,
                                              std::size_t max_bits = kDefaultMaxBits);

}  // namespace delseq
