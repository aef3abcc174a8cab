#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsym/exactnum.hpp"
#include "gsym/shapes.hpp"

namespace gsym {

/// Default guard on brute-force enumeration sizes.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Thrown when a brute-force enumeration would exceed its cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Permutation of {1..n} in one-line notation.
///
/// Products compose left to right: (p * q)(i) = q(p(i)), p is applied first.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless images is a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// Parses "(1,4)(2,5)(3)" on n points; omitted points are fixed.
    static Permutation from_cycles(std::string_view text, int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Permutation then(const Permutation& q) const;

    /// Cycles, each starting at its smallest point, ordered by that point.
    std::vector<std::vector<int>> cycles() const;
    /// The cycle through point i, starting at i.
    std::vector<int> cycle_of(int i) const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

    std::string cycle_str() const;

private:
    std::vector<int> images_;
};

/// Element ((c_1,...,c_n); p) of Z_k wr S_n with colors in 0..k-1.
class WreathElement {
public:
    WreathElement() = default;
    /// Colors are reduced mod k. Throws std::invalid_argument on size mismatch or k < 1.
    WreathElement(int k, std::vector<int> colors, Permutation perm);
    static WreathElement identity(int n, int k);
    /// Parses "c_1,...,c_n ; i_1,...,i_n" or "c_1,...,c_n ; (1,4)(2,5)".
    static WreathElement parse(std::string_view text, int k);

    int k() const { return k_; }
    int degree() const { return perm_.degree(); }
    /// Color at 1-based position i.
    int color(int i) const { return colors_[i - 1]; }
    const std::vector<int>& colors() const { return colors_; }
    const Permutation& perm() const { return perm_; }

    /// The same element viewed in Z_k wr S_{n+1}, fixing n+1 with color 0.
    WreathElement embedded() const;
    /// True if the element fixes its last point with color 0 (lies in K).
    bool in_point_stabilizer() const;

    friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
    friend bool operator==(const WreathElement&, const WreathElement&) = default;

    /// "c_1,...,c_n ; i_1,...,i_n"
    std::string str() const;

private:
    int k_ = 1;
    std::vector<int> colors_;
    Permutation perm_;
};

/// x then y: permutation q(p(i)), color x_{q^-1(i)} + y_i. Throws on mismatched k or n.
WreathElement multiply(const WreathElement& x, const WreathElement& y);
WreathElement inverse(const WreathElement& x);
/// z^-1 x z
WreathElement conjugate_by(const WreathElement& x, const WreathElement& z);

/// Sum of colors over a cycle of x's permutation, mod k.
/// Throws std::invalid_argument if cycle is not a cycle of x.perm().
int cycle_sum(const WreathElement& x, const std::vector<int>& cycle);

/// Component i holds the lengths of cycles with cycle sum i.
KPartition type_of(const WreathElement& x);
/// type_of(x) with the cycle through n marked. Requires n >= 1.
MarkedKPartition marked_type_of(const WreathElement& x);

/// k^n n!
BigInt group_order(int n, int k);
/// prod_i z_{lambda_i} k^{l(lambda_i)}
BigInt centralizer_order(const KPartition& type, int k);
/// k^n n! / centralizer_order
BigInt class_size(const KPartition& type, int k);
/// Size of the K-class: class_size * j * m_j(lambda_i) / n for the mark (i, j).
BigInt k_class_size(const MarkedKPartition& m, int k);

/// A representative of the G-class of the given type: cycles on consecutive
/// points, longest first, with each cycle's sum placed on its first point.
WreathElement class_representative(const KPartition& type);
/// A representative of the K-class: the marked cycle is placed last so that it
/// ends at n, the other cycles as in class_representative().
WreathElement k_class_representative(const MarkedKPartition& m);

/// Some z in Z_k wr S_{n-1} (z fixes n with color 0) with y = z^-1 x z,
/// absent iff the marked types differ.
std::optional<WreathElement> find_K_conjugator(const WreathElement& x, const WreathElement& y);

/// Calls fn on every element of Z_k wr S_n exactly once, in a fixed order
/// (permutations lexicographic, then colors lexicographic).
/// Throws CapExceeded if k^n n! > cap.
void for_each_element(int n, int k, const std::function<void(const WreathElement&)>& fn,
                      std::uint64_t cap = kDefaultEnumerationCap);
std::vector<WreathElement> enumerate_group(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

struct GelfandReport {
    bool passed = true;
    std::uint64_t elements_checked = 0;
    std::vector<std::string> failures;
};

/// Checks x and x^-1 share a marked type and are conjugate under Z_k wr S_{n-1}
/// via a verified find_K_conjugator witness, for every x.
GelfandReport verify_symmetric_gelfand(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);
bool verify_symmetric_gelfand_ok(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace gsym
