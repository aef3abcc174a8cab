#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gsym/exactnum.hpp"
#include "gsym/shapes.hpp"
#include "gsym/table.hpp"
#include "gsym/wreath.hpp"

namespace gsym {

/// Index sigma -> rho of a zonal spherical function / generalized character,
/// with sigma a k-partite partition of n-1 and rho one of n.
class GenCharIndex {
public:
    /// Throws std::invalid_argument unless covers(sigma, rho).
    GenCharIndex(KPartition sigma, KPartition rho);
    /// From the marked label of rho (the mark names the row losing a cell).
    explicit GenCharIndex(const MarkedKPartition& label);

    const KPartition& sigma() const { return sigma_; }
    const KPartition& rho() const { return rho_; }
    int k() const { return rho_.k(); }
    int n() const { return rho_.size(); }
    MarkedKPartition label() const { return mark_of_cover(sigma_, rho_); }

private:
    KPartition sigma_;
    KPartition rho_;
};

/// All indices of Z_k wr S_n in marked_k_partitions_of() order.
std::vector<GenCharIndex> gen_char_indices(int n, int k);

/// A function on Z_k wr S_n constant on the classes of Z_k wr S_{n-1}.
struct ClassFunction {
    int k = 1;
    int n = 1;
    std::map<MarkedKPartition, Cyclotomic> values;
};

/// omega^{sigma -> rho}(x, y) = 1/|K| sum_{h in K} chi^rho(x h) conj(chi^sigma(y h)),
/// with K = Z_k wr S_{n-1}, x in Z_k wr S_n and y in K given in degree n-1.
/// Throws CapExceeded if |K| > cap.
Cyclotomic zonal(const GenCharIndex& idx, const WreathElement& x, const WreathElement& y,
                 std::uint64_t cap = kDefaultEnumerationCap);

/// chi^{sigma -> rho}(x) = chi^sigma(1) * omega^{sigma -> rho}(x, 1).
Cyclotomic gen_char_def(const GenCharIndex& idx, const WreathElement& x, std::uint64_t cap = kDefaultEnumerationCap);

/// Which contents enter the ratio of sharp-corner and dull-box factors.
enum class StripContents {
    /// col - row, independent of the component holding the strip.
    shape,
    /// (-1)^component (col - row). Differs from `shape` by (-1)^(pieces - 1) on
    /// strips in component 1 that split into several pieces, and then
    /// disagrees with the definition (first at n = 3). Kept for comparison.
    component_signed,
};

/// Generalized Murnaghan-Nakayama rule for the hyperoctahedral group:
///
///   chi^{mu->lambda}(delta->rho) = sum_nu c(nu) chi^nu(rho - (j))
///
/// over nu inside mu with |nu| = n - j, where j is the marked part of rho.
/// c(nu) vanishes unless lambda/nu is a broken border strip; otherwise it is
/// (-1)^(height + P(strip) P(j)) times the product over sharp corners s of
/// (c(lambda/mu) - c(s)) divided by the product over dull boxes d other than
/// lambda/mu of (c(lambda/mu) - c(d)). The height of a broken strip is the sum
/// of (rows - 1) over its connected pieces.
///
/// target is mu -> lambda, cls is the K-class delta -> rho; both bipartite of the same n.
/// Throws std::invalid_argument if k != 2 or the sizes differ.
Rational gen_char_mn(const MarkedKPartition& target, const MarkedKPartition& cls,
                     StripContents contents = StripContents::shape);

/// Closed form of gen_char_mn on the class (-|n-1) -> (-|n), n >= 2.
Rational gen_char_corollary(const MarkedKPartition& target, int n);

enum class GenCharMethod { definition, mn };

/// Generalized characters (rows) by K-classes (columns), both labelled and
/// ordered as marked_k_partitions_of(). Method mn requires k = 2.
CharacterTable gen_char_table(int n, int k, GenCharMethod method, std::uint64_t cap = kDefaultEnumerationCap);

/// One row of a generalized character table as a class function.
ClassFunction row_function(const CharacterTable& table, int row);

/// #{a in G : x a = a y} for x in Z_k wr S_n and y in Z_k wr S_{n-1} (degree n-1).
BigInt induced_character_value(const WreathElement& x, const WreathElement& y,
                               std::uint64_t cap = kDefaultEnumerationCap);
/// sum over sigma -> rho of chi^rho(x) conj(chi^sigma(y)).
Cyclotomic induced_character_formula(const WreathElement& x, const WreathElement& y);

/// 1/|G| sum over K-classes of |class| f conj(g). Throws on group mismatch.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

/// Elements of Z_k wr S_{n-1}, degree n-1, in for_each_element() order.
const std::vector<WreathElement>& subgroup_elements(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace gsym
