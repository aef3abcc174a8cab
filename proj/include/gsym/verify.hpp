#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsym/wreath.hpp"

namespace gsym {

/// Outcome of an exhaustive or sampled property check.
struct CheckReport {
    std::string suite;
    int k = 1;
    int n = 0;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
    void expect(bool ok, const std::string& witness);
};

/// Symmetric Gelfand property plus the K-class structure: every x is
/// K-conjugate to x^-1, marked types are invariant under conjugation by all of
/// K, each K-orbit is exactly one marked class, and orbit sizes equal
/// k_class_size().
CheckReport check_gelfand(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

/// Row orthogonality of the irreducible table, and (when K is enumerable) the
/// Gram matrix of the generalized characters: chi^mu(1)/chi^lambda(1) on the
/// diagonal, 0 elsewhere. Also checks #indices = #K-classes.
CheckReport check_orthogonality(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

/// Generalized MN rule against the definition on every (index, class) pair. k must be 2.
CheckReport check_mn_vs_def(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

/// The closed form on the column (-|n-1) -> (-|n) against the MN rule on every index. k must be 2.
CheckReport check_corollary(int n, int k);

/// Permutation character of (G x K)/diag(K) against sum chi^rho x conj(chi^sigma).
/// Exhaustive when |G| |K| <= exhaustive_limit, otherwise `samples` random pairs.
CheckReport check_induced(int n, int k, int samples = 1000, std::uint64_t seed = 20240901,
                          std::uint64_t exhaustive_limit = 5000, std::uint64_t cap = kDefaultEnumerationCap);

/// omega(g1) omega(g2) = 1/|K| sum_h omega(g1 (h,h) g2) on (G x K, diag K)
/// for every index and `samples` random pairs g1, g2 in G x K.
CheckReport check_zonal_equation(int n, int k, int samples = 100, std::uint64_t seed = 20240902,
                                 std::uint64_t cap = kDefaultEnumerationCap);

/// Uniformly random element of Z_k wr S_n.
template <typename Rng>
WreathElement random_element(int n, int k, Rng& rng);

}  // namespace gsym

#include <algorithm>
#include <numeric>
#include <random>

namespace gsym {

template <typename Rng>
WreathElement random_element(int n, int k, Rng& rng)
{
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    std::uniform_int_distribution<int> color(0, k - 1);
    std::vector<int> colors(n);
    for (auto& c : colors) c = color(rng);
    return WreathElement(k, std::move(colors), Permutation(std::move(images)));
}

}  // namespace gsym
