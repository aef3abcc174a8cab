#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsym/exactnum.hpp"

namespace gsym {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Length of 1-based row r, 0 beyond the last row.
    int row(int r) const { return r >= 1 && r <= length() ? parts_[r - 1] : 0; }
    /// Number of parts equal to j.
    int multiplicity(int j) const;
    bool has_part(int j) const { return multiplicity(j) > 0; }

    /// Partition with one copy of part j removed; j must be a part.
    Partition without_part(int j) const;
    Partition with_part(int j) const;
    /// Length of column c (1-based).
    int column(int c) const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

    /// "-" for the empty partition, otherwise comma separated parts.
    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

/// z_rho = prod_i i^{m_i} m_i!
BigInt z_value(const Partition& rho);

/// Row-wise inclusion of Young diagrams.
bool contains(const Partition& inner, const Partition& outer);

/// Cell of a (k-partite) Young diagram; row and col are 1-based.
struct Box {
    int row = 1;
    int col = 1;
    int component = 0;

    friend auto operator<=>(const Box&, const Box&) = default;
};

/// (-1)^component * (col - row)
int content(const Box& b);

/// Cells of outer that are not in inner.
class SkewShape {
public:
    /// Throws std::invalid_argument unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner, int component = 0);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int component() const { return component_; }
    int size() const { return outer_.size() - inner_.size(); }
    bool has_cell(int row, int col) const;
    /// Cells in row-major order.
    std::vector<Box> cells() const;

private:
    Partition outer_;
    Partition inner_;
    int component_ = 0;
};

struct StripAnalysis {
    int components = 0;
    int rows_occupied = 0;
    /// Sum over connected components of (rows occupied - 1).
    int height = 0;
    std::vector<Box> sharp_corners;
    std::vector<Box> dull_boxes;
};

/// Absent if the shape is empty or contains a 2x2 block.
std::optional<StripAnalysis> broken_strip_analysis(const SkewShape& s);

/// Height of a connected border strip, absent if s is not one.
std::optional<int> border_strip_height(const SkewShape& s);

/// Positions where one cell can be added, in row order.
std::vector<Box> exterior_corners(const Partition& lambda);

/// Cells whose removal leaves a partition, in row order.
std::vector<Box> removable_corners(const Partition& lambda);

/// k-tuple of partitions.
class KPartition {
public:
    KPartition() = default;
    explicit KPartition(std::vector<Partition> components);
    /// k empty components.
    static KPartition empty(int k) { return KPartition(std::vector<Partition>(k)); }

    int k() const { return static_cast<int>(components_.size()); }
    int size() const { return size_; }
    const Partition& operator[](int i) const { return components_.at(i); }
    const std::vector<Partition>& components() const { return components_; }

    KPartition with_component(int i, Partition p) const;

    friend auto operator<=>(const KPartition&, const KPartition&) = default;
    friend bool operator==(const KPartition&, const KPartition&) = default;

    /// Components joined by "|", e.g. "-|4,2,1|2,1".
    std::string str() const;
    /// Inverse of str(); k is the number of "|"-separated fields.
    static KPartition parse(std::string_view text);

private:
    std::vector<Partition> components_;
    int size_ = 0;
};

/// k-partite partition with one distinguished part (marked_part in marked_component).
///
/// Marks are identified by (component, part size): marking any copy of an
/// equal part gives the same value. The same label names both a K-class
/// (the marked part is the cycle through n) and a cover sigma -> rho (the
/// removed cell is at the end of the last row of that length).
class MarkedKPartition {
public:
    MarkedKPartition() = default;
    /// Throws std::invalid_argument unless the marked part exists.
    MarkedKPartition(KPartition base, int marked_component, int marked_part);

    const KPartition& base() const { return base_; }
    int k() const { return base_.k(); }
    int size() const { return base_.size(); }
    int marked_component() const { return component_; }
    int marked_part() const { return part_; }

    /// The cell at the end of the last row of length marked_part.
    Box marked_box() const;
    /// base with marked_box() removed; the sigma of sigma -> rho.
    KPartition without_marked_box() const;
    /// base with one marked part removed (rho - (j)).
    KPartition without_marked_part() const;

    friend auto operator<=>(const MarkedKPartition&, const MarkedKPartition&) = default;
    friend bool operator==(const MarkedKPartition&, const MarkedKPartition&) = default;

    /// Shape grammar with the marked part suffixed by "*", e.g. "-|4*,2,1|2,1".
    std::string str() const;
    static MarkedKPartition parse(std::string_view text);

private:
    KPartition base_;
    int component_ = 0;
    int part_ = 1;
};

/// The marked label of the cover sigma -> rho. Throws unless covers(sigma, rho).
MarkedKPartition mark_of_cover(const KPartition& sigma, const KPartition& rho);

/// Component i moved to component -i mod k: the type of x^-1 given the type of x.
KPartition negated(const KPartition& rho);
MarkedKPartition negated(const MarkedKPartition& m);

/// True iff lambda is mu plus one cell in exactly one component.
bool covers(const KPartition& mu, const KPartition& lambda);

struct GatheredPart {
    int part = 0;
    int component = 0;
    friend auto operator<=>(const GatheredPart&, const GatheredPart&) = default;
};

/// All parts of all components, part descending then component ascending.
std::vector<GatheredPart> gather(const KPartition& rho);

/// k-partite partitions of n: component sizes in reverse lexicographic order,
/// then each component in partitions_of() order.
std::vector<KPartition> k_partitions_of(int n, int k);

/// Marked k-partite partitions of n: k_partitions_of() order, then marks by
/// component ascending and part size ascending.
std::vector<MarkedKPartition> marked_k_partitions_of(int n, int k);

}  // namespace gsym
