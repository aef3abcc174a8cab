#include "gsym/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gsym {

// --------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int j) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

Partition Partition::without_part(int j) const
{
    auto p = parts_;
    auto it = std::find(p.begin(), p.end(), j);
    if (it == p.end()) throw std::invalid_argument("part " + std::to_string(j) + " not in " + str());
    p.erase(it);
    return Partition(std::move(p));
}

Partition Partition::with_part(int j) const
{
    auto p = parts_;
    p.insert(std::upper_bound(p.begin(), p.end(), j, std::greater<>()), j);
    return Partition(std::move(p));
}

int Partition::column(int c) const
{
    int len = 0;
    while (len < length() && parts_[len] >= c) ++len;
    return len;
}

std::string Partition::str() const
{
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0) throw std::invalid_argument("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

BigInt z_value(const Partition& rho)
{
    BigInt z = 1;
    const auto& p = rho.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const int m = static_cast<int>(j - i);
        for (int t = 1; t <= m; ++t) z *= BigInt(p[i]) * t;
        i = j;
    }
    return z;
}

bool contains(const Partition& inner, const Partition& outer)
{
    if (inner.length() > outer.length()) return false;
    for (int r = 1; r <= inner.length(); ++r)
        if (inner.row(r) > outer.row(r)) return false;
    return true;
}

int content(const Box& b) { return (b.component % 2 == 0 ? 1 : -1) * (b.col - b.row); }

// --------------------------------------------------------------- SkewShape

SkewShape::SkewShape(Partition outer, Partition inner, int component)
    : outer_(std::move(outer)), inner_(std::move(inner)), component_(component)
{
    if (!contains(inner_, outer_))
        throw std::invalid_argument("skew shape " + outer_.str() + "/" + inner_.str() + ": inner not contained in outer");
}

bool SkewShape::has_cell(int row, int col) const
{
    return row >= 1 && col > inner_.row(row) && col <= outer_.row(row);
}

std::vector<Box> SkewShape::cells() const
{
    std::vector<Box> out;
    for (int r = 1; r <= outer_.length(); ++r)
        for (int c = inner_.row(r) + 1; c <= outer_.row(r); ++c) out.push_back({r, c, component_});
    return out;
}

std::optional<StripAnalysis> broken_strip_analysis(const SkewShape& s)
{
    const auto cells = s.cells();
    if (cells.empty()) return std::nullopt;
    for (const auto& b : cells) {
        if (s.has_cell(b.row, b.col + 1) && s.has_cell(b.row + 1, b.col) && s.has_cell(b.row + 1, b.col + 1))
            return std::nullopt;
    }

    StripAnalysis a;
    std::vector<int> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    auto index_of = [&](int r, int c) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].row == r && cells[i].col == c) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& b = cells[i];
        for (int j : {index_of(b.row, b.col + 1), index_of(b.row + 1, b.col)})
            if (j >= 0) parent[find(static_cast<int>(i))] = find(j);
    }

    std::set<std::pair<int, int>> component_rows;  // (root, row)
    std::set<int> rows;
    std::set<int> roots;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const int root = find(static_cast<int>(i));
        roots.insert(root);
        rows.insert(cells[i].row);
        component_rows.emplace(root, cells[i].row);
    }
    a.components = static_cast<int>(roots.size());
    a.rows_occupied = static_cast<int>(rows.size());
    a.height = static_cast<int>(component_rows.size()) - a.components;

    for (const auto& b : cells) {
        const bool right = s.has_cell(b.row, b.col + 1);
        const bool below = s.has_cell(b.row + 1, b.col);
        if (right && below) a.sharp_corners.push_back(b);
        if (!right && !below) a.dull_boxes.push_back(b);
    }
    return a;
}

std::optional<int> border_strip_height(const SkewShape& s)
{
    auto a = broken_strip_analysis(s);
    if (!a || a->components != 1) return std::nullopt;
    return a->height;
}

std::vector<Box> exterior_corners(const Partition& lambda)
{
    std::vector<Box> out;
    for (int r = 1; r <= lambda.length() + 1; ++r) {
        if (r == 1 || lambda.row(r - 1) > lambda.row(r)) out.push_back({r, lambda.row(r) + 1, 0});
    }
    return out;
}

std::vector<Box> removable_corners(const Partition& lambda)
{
    std::vector<Box> out;
    for (int r = 1; r <= lambda.length(); ++r) {
        if (lambda.row(r) > lambda.row(r + 1)) out.push_back({r, lambda.row(r), 0});
    }
    return out;
}

// -------------------------------------------------------------- KPartition

KPartition::KPartition(std::vector<Partition> components) : components_(std::move(components))
{
    for (const auto& p : components_) size_ += p.size();
}

KPartition KPartition::with_component(int i, Partition p) const
{
    auto c = components_;
    c.at(i) = std::move(p);
    return KPartition(std::move(c));
}

std::string KPartition::str() const
{
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += "|";
        out += components_[i].str();
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

int parse_part(std::string_view s)
{
    if (s.empty()) throw std::invalid_argument("empty part in shape");
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad part '" + std::string(s) + "' in shape");
        v = v * 10 + (c - '0');
    }
    return v;
}

// Parses one component; reports the marked part (0 if none).
Partition parse_component(std::string_view s, int& marked, int& marks_seen)
{
    marked = 0;
    if (s == "-") return {};
    std::vector<int> parts;
    for (auto tok : split(s, ',')) {
        if (!tok.empty() && tok.back() == '*') {
            tok.remove_suffix(1);
            marked = parse_part(tok);
            ++marks_seen;
        }
        parts.push_back(parse_part(tok));
    }
    return Partition(std::move(parts));
}

}  // namespace

KPartition KPartition::parse(std::string_view text)
{
    std::vector<Partition> comps;
    int marks = 0;
    for (auto field : split(text, '|')) {
        int marked = 0;
        comps.push_back(parse_component(field, marked, marks));
    }
    if (marks) throw std::invalid_argument("unexpected mark in unmarked shape '" + std::string(text) + "'");
    return KPartition(std::move(comps));
}

// -------------------------------------------------------- MarkedKPartition

MarkedKPartition::MarkedKPartition(KPartition base, int marked_component, int marked_part)
    : base_(std::move(base)), component_(marked_component), part_(marked_part)
{
    if (component_ < 0 || component_ >= base_.k() || !base_[component_].has_part(part_))
        throw std::invalid_argument("marked part " + std::to_string(part_) + " not present in component " +
                                    std::to_string(component_) + " of " + base_.str());
}

Box MarkedKPartition::marked_box() const
{
    const auto& p = base_[component_].parts();
    int row = 0;
    for (int r = 1; r <= static_cast<int>(p.size()); ++r)
        if (p[r - 1] == part_) row = r;
    return {row, part_, component_};
}

KPartition MarkedKPartition::without_marked_box() const
{
    auto p = base_[component_].parts();
    p[marked_box().row - 1] -= 1;
    if (p.back() == 0) p.pop_back();
    return base_.with_component(component_, Partition(std::move(p)));
}

KPartition MarkedKPartition::without_marked_part() const
{
    return base_.with_component(component_, base_[component_].without_part(part_));
}

std::string MarkedKPartition::str() const
{
    std::string out;
    for (int i = 0; i < base_.k(); ++i) {
        if (i) out += "|";
        const auto& parts = base_[i].parts();
        if (parts.empty()) {
            out += "-";
            continue;
        }
        // the star goes on the last copy of the marked part, as in "1,1*"
        for (std::size_t r = 0; r < parts.size(); ++r) {
            if (r) out += ",";
            out += std::to_string(parts[r]);
            const bool last_copy = r + 1 == parts.size() || parts[r + 1] != parts[r];
            if (i == component_ && parts[r] == part_ && last_copy) out += "*";
        }
    }
    return out;
}

MarkedKPartition MarkedKPartition::parse(std::string_view text)
{
    std::vector<Partition> comps;
    int marks = 0;
    int comp = -1;
    int part = 0;
    for (auto field : split(text, '|')) {
        int marked = 0;
        comps.push_back(parse_component(field, marked, marks));
        if (marked) {
            comp = static_cast<int>(comps.size()) - 1;
            part = marked;
        }
    }
    if (marks != 1) throw std::invalid_argument("marked shape '" + std::string(text) + "' needs exactly one '*'");
    return MarkedKPartition(KPartition(std::move(comps)), comp, part);
}

KPartition negated(const KPartition& rho)
{
    const int k = rho.k();
    std::vector<Partition> out(k);
    for (int i = 0; i < k; ++i) out[(k - i) % k] = rho[i];
    return KPartition(std::move(out));
}

MarkedKPartition negated(const MarkedKPartition& m)
{
    return MarkedKPartition(negated(m.base()), (m.k() - m.marked_component()) % m.k(), m.marked_part());
}

MarkedKPartition mark_of_cover(const KPartition& sigma, const KPartition& rho)
{
    if (!covers(sigma, rho))
        throw std::invalid_argument(sigma.str() + " is not covered by " + rho.str());
    for (int i = 0; i < rho.k(); ++i) {
        if (sigma[i] == rho[i]) continue;
        for (int r = 1; r <= rho[i].length(); ++r)
            if (rho[i].row(r) != sigma[i].row(r)) return MarkedKPartition(rho, i, rho[i].row(r));
    }
    throw std::logic_error("unreachable: cover without differing row");
}

bool covers(const KPartition& mu, const KPartition& lambda)
{
    if (mu.k() != lambda.k() || lambda.size() != mu.size() + 1) return false;
    int differing = 0;
    for (int i = 0; i < mu.k(); ++i) {
        if (mu[i] == lambda[i]) continue;
        if (++differing > 1 || !contains(mu[i], lambda[i])) return false;
    }
    return differing == 1;
}

std::vector<GatheredPart> gather(const KPartition& rho)
{
    std::vector<GatheredPart> out;
    for (int i = 0; i < rho.k(); ++i)
        for (int p : rho[i].parts()) out.push_back({p, i});
    std::sort(out.begin(), out.end(), [](const GatheredPart& a, const GatheredPart& b) {
        return a.part != b.part ? a.part > b.part : a.component < b.component;
    });
    return out;
}

namespace {

void compositions_rec(int remaining, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur.push_back(v);
        compositions_rec(remaining - v, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<KPartition> k_partitions_of(int n, int k)
{
    if (n < 0 || k < 1) throw std::invalid_argument("k_partitions_of needs n >= 0 and k >= 1");
    std::vector<std::vector<int>> sizes;
    std::vector<int> cur;
    compositions_rec(n, k, cur, sizes);

    std::vector<KPartition> out;
    for (const auto& comp : sizes) {
        std::vector<std::vector<Partition>> choices;
        for (int s : comp) choices.push_back(partitions_of(s));
        std::vector<std::size_t> idx(k, 0);
        while (true) {
            std::vector<Partition> parts;
            for (int i = 0; i < k; ++i) parts.push_back(choices[i][idx[i]]);
            out.emplace_back(std::move(parts));
            int i = k - 1;
            while (i >= 0 && ++idx[i] == choices[i].size()) idx[i--] = 0;
            if (i < 0) break;
        }
    }
    return out;
}

std::vector<MarkedKPartition> marked_k_partitions_of(int n, int k)
{
    std::vector<MarkedKPartition> out;
    for (const auto& base : k_partitions_of(n, k)) {
        for (int i = 0; i < k; ++i) {
            std::set<int> distinct(base[i].parts().begin(), base[i].parts().end());
            for (int j : distinct) out.emplace_back(base, i, j);
        }
    }
    return out;
}

}  // namespace gsym
