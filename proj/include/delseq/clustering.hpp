#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "delseq/core.hpp"
#include "delseq/embeddings.hpp"
#include "delseq/superspace.hpp"

namespace delseq {

/// Lexicographically first mask of x in y (greedy leftmost match).
std::optional<Mask> canonical_embedding(const BitString& x, const BitString& y);

/// True iff the canonical embedding exists and ends at the last position of y.
bool is_maximal_initial(const BitString& x, const BitString& y);

/// C(n-1, m-1). Requires 1 <= m <= n.
BigCount maximal_initials_total(std::size_t n, std::size_t m);

/// Maximal initials in cluster c: multichoose(hx, n-m-c) * multichoose(m-hx, c).
BigCount maximal_initials_cluster(std::size_t n, std::size_t m, std::size_t hx, std::size_t c);

/// |Upsilon^c_{n,x}| for h(x) = hx: sum_{p=hx}^{hx+z} C(p-1, hx-1) C(n-p, c), z = n-m-c.
BigCount cluster_size_closed(std::size_t n, std::size_t m, std::size_t hx, std::size_t c);

/// Same count via the double sum over the last position of the maximal initial.
BigCount cluster_size_stars_bars(std::size_t n, std::size_t m, std::size_t hx, std::size_t c);

/// Same count via the first-symbol recurrence, memoized on (n, suffix, c).
BigCount cluster_size_recurrence(std::size_t n, const BitString& x, std::size_t c);

/// Per-cluster brute-force census of a posterior.
struct ClusterCensus {
    std::vector<BigCount> sizes;     // index c
    std::vector<BigCount> maximal;   // maximal initials per cluster
    BigCount singletons;             // strings with exactly one embedding
};

ClusterCensus census_clusters(const Posterior& p);

struct RhoProfile {
    std::size_t rho0 = 0;
    std::size_t rho1 = 0;
    bool operator==(const RhoProfile&) const = default;
};

/// Insertion slots per symbol. Throws DomainError for empty x.
RhoProfile rho(const BitString& x);

/// Supersequences of length n with exactly one embedding: C(n-m+rho0+rho1-1, n-m).
BigCount count_singletons(std::size_t n, const BitString& x);

}  // namespace delseq
