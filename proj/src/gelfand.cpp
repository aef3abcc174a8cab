#include "gsym/gelfand.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "gsym/irrchar.hpp"
#include "gsym/parallel.hpp"

namespace gsym {

// ------------------------------------------------------------ GenCharIndex

GenCharIndex::GenCharIndex(KPartition sigma, KPartition rho) : sigma_(std::move(sigma)), rho_(std::move(rho))
{
    if (!covers(sigma_, rho_)) throw std::invalid_argument(sigma_.str() + " is not covered by " + rho_.str());
}

GenCharIndex::GenCharIndex(const MarkedKPartition& label)
    : GenCharIndex(label.without_marked_box(), label.base())
{
}

std::vector<GenCharIndex> gen_char_indices(int n, int k)
{
    std::vector<GenCharIndex> out;
    for (const auto& m : marked_k_partitions_of(n, k)) out.emplace_back(m);
    return out;
}

// ------------------------------------------------------ subgroup elements

const std::vector<WreathElement>& subgroup_elements(int n, int k, std::uint64_t cap)
{
    if (n < 1) throw std::invalid_argument("the subgroup needs n >= 1");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<WreathElement>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, k}];
    if (!slot) slot = std::make_unique<std::vector<WreathElement>>(enumerate_group(n - 1, k, cap));
    return *slot;
}

namespace {

void check_cap(int n, int k, std::uint64_t cap)
{
    if (group_order(n - 1, k) > cap)
        throw CapExceeded("subgroup of order " + group_order(n - 1, k).str() + " exceeds the cap of " + std::to_string(cap));
}

Cyclotomic average(Cyclotomic sum, int n, int k) { return sum / Cyclotomic(Rational(group_order(n - 1, k))); }

}  // namespace

// ------------------------------------------------------------ definitions

Cyclotomic zonal(const GenCharIndex& idx, const WreathElement& x, const WreathElement& y, std::uint64_t cap)
{
    const int n = idx.n();
    const int k = idx.k();
    if (x.degree() != n || x.k() != k) throw std::invalid_argument("zonal: x is not in Z_k wr S_n");
    if (y.degree() != n - 1 || y.k() != k) throw std::invalid_argument("zonal: y is not in Z_k wr S_{n-1}");
    check_cap(n, k, cap);
    Cyclotomic sum = Cyclotomic::zero(k);
    for (const auto& h : subgroup_elements(n, k, cap)) {
        Cyclotomic a = char_value(idx.rho(), multiply(x, h.embedded()));
        if (a.is_zero()) continue;
        sum += a * char_value(idx.sigma(), multiply(y, h)).conjugate();
    }
    return average(sum, n, k);
}

Cyclotomic gen_char_def(const GenCharIndex& idx, const WreathElement& x, std::uint64_t cap)
{
    const Cyclotomic deg(Rational(char_degree(idx.sigma())));
    return deg * zonal(idx, x, WreathElement::identity(idx.n() - 1, idx.k()), cap);
}

// --------------------------------------------------- generalized MN rule

namespace {

void sub_partitions(const Partition& outer, int size, int row, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (size == 0) {
        out.emplace_back(cur);
        return;
    }
    if (row > outer.length()) return;
    const int cap = std::min(outer.row(row), cur.empty() ? size : std::min(size, cur.back()));
    for (int v = cap; v >= 1; --v) {
        cur.push_back(v);
        sub_partitions(outer, size - v, row + 1, cur, out);
        cur.pop_back();
    }
}

/// Partitions of the given size contained in outer.
std::vector<Partition> contained_partitions(const Partition& outer, int size)
{
    std::vector<Partition> out;
    if (size < 0 || size > outer.size()) return out;
    std::vector<int> cur;
    sub_partitions(outer, size, 1, cur, out);
    return out;
}

}  // namespace

Rational gen_char_mn(const MarkedKPartition& target, const MarkedKPartition& cls, StripContents contents)
{
    if (target.k() != 2 || cls.k() != 2) throw std::invalid_argument("the generalized MN rule is for k = 2");
    if (target.size() != cls.size()) throw std::invalid_argument("gen_char_mn: size mismatch");

    const KPartition& lambda = target.base();
    const KPartition mu = target.without_marked_box();
    const int strip_comp = target.marked_component();
    const Box added = target.marked_box();
    auto box_content = [&](const Box& b) {
        return contents == StripContents::shape ? b.col - b.row : content(b);
    };
    const int added_content = box_content(added);

    const int j = cls.marked_part();
    const int class_comp = cls.marked_component();
    const KPartition reduced_class = cls.without_marked_part();

    // nu agrees with lambda off the strip component; lambda/nu contains lambda/mu.
    Rational total;
    for (const auto& inner : contained_partitions(mu[strip_comp], mu[strip_comp].size() - (j - 1))) {
        const SkewShape strip(lambda[strip_comp], inner, strip_comp);
        auto analysis = broken_strip_analysis(strip);
        if (!analysis) continue;

        Rational coeff((analysis->height + strip_comp * class_comp) % 2 ? -1 : 1);
        for (const auto& s : analysis->sharp_corners) coeff *= Rational(added_content - box_content(s));
        for (const auto& d : analysis->dull_boxes) {
            if (d.row == added.row && d.col == added.col) continue;
            const int diff = added_content - box_content(d);
            if (diff == 0) throw std::logic_error("zero denominator in generalized MN coefficient");
            coeff /= Rational(diff);
        }
        const KPartition nu = lambda.with_component(strip_comp, inner);
        total += coeff * char_bipartite(nu, reduced_class);
    }
    return total;
}

Rational gen_char_corollary(const MarkedKPartition& target, int n)
{
    if (target.k() != 2) throw std::invalid_argument("the closed form is for k = 2");
    if (n < 2 || target.size() != n) throw std::invalid_argument("the closed form needs n >= 2 and |lambda| = n");
    const int comp = target.marked_component();
    const Partition& shape = target.base()[comp];
    if (target.base()[1 - comp].size() != 0) return Rational(0);

    // shape must be the hook (a+1, 1^b)
    const int a = shape.row(1) - 1;
    const int b = shape.length() - 1;
    for (int r = 2; r <= shape.length(); ++r)
        if (shape.row(r) != 1) return Rational(0);

    const Box box = target.marked_box();
    const int sign_exp = b + comp;
    const Rational sign(sign_exp % 2 ? -1 : 1);
    if (box.row == 1 && a >= 1) return sign * Rational(a, a + b);
    if (box.col == 1 && box.row == b + 1 && b >= 1) return sign * Rational(b, a + b);
    return Rational(0);
}

// ------------------------------------------------------------------ tables

CharacterTable gen_char_table(int n, int k, GenCharMethod method, std::uint64_t cap)
{
    if (n < 1) throw std::invalid_argument("generalized characters need n >= 1");
    if (method == GenCharMethod::mn && k != 2) throw std::invalid_argument("method mn requires k = 2");
    const auto classes = marked_k_partitions_of(n, k);
    const auto indices = gen_char_indices(n, k);

    CharacterTable t;
    t.k = k;
    t.n = n;
    for (const auto& idx : indices) t.row_labels.push_back(idx.label().str());
    for (const auto& c : classes) {
        t.col_labels.push_back(c.str());
        t.class_orders.push_back(k_class_size(c, k));
    }
    t.values.assign(indices.size(), std::vector<Cyclotomic>(classes.size()));

    if (method == GenCharMethod::mn) {
        parallel_for(static_cast<int>(indices.size()), [&](int r) {
            const auto label = indices[r].label();
            for (std::size_t c = 0; c < classes.size(); ++c) t.values[r][c] = gen_char_mn(label, classes[c]);
        });
        return t;
    }

    check_cap(n, k, cap);
    const auto& sub = subgroup_elements(n, k, cap);
    std::vector<KPartition> sub_types;
    for (const auto& h : sub) sub_types.push_back(type_of(h));
    std::vector<Cyclotomic> degrees;
    for (const auto& idx : indices) degrees.emplace_back(Rational(char_degree(idx.sigma())));
    const Cyclotomic order(Rational(group_order(n - 1, k)));

    parallel_for(static_cast<int>(classes.size()), [&](int c) {
        const auto x = k_class_representative(classes[c]);
        std::vector<KPartition> xh_types;
        xh_types.reserve(sub.size());
        for (const auto& h : sub) xh_types.push_back(type_of(multiply(x, h.embedded())));
        for (std::size_t r = 0; r < indices.size(); ++r) {
            Cyclotomic sum = Cyclotomic::zero(k);
            for (std::size_t h = 0; h < sub.size(); ++h) {
                Cyclotomic a = char_wreath(indices[r].rho(), xh_types[h], k);
                if (a.is_zero()) continue;
                sum += a * char_wreath(indices[r].sigma(), sub_types[h], k).conjugate();
            }
            t.values[r][c] = degrees[r] * sum / order;
        }
    });
    return t;
}

ClassFunction row_function(const CharacterTable& table, int row)
{
    ClassFunction f;
    f.k = table.k;
    f.n = table.n;
    for (int c = 0; c < table.cols(); ++c)
        f.values.emplace(MarkedKPartition::parse(table.col_labels[c]), table.values.at(row).at(c));
    return f;
}

// ------------------------------------------------------- induced character

BigInt induced_character_value(const WreathElement& x, const WreathElement& y, std::uint64_t cap)
{
    const int n = x.degree();
    if (y.degree() != n - 1 || y.k() != x.k()) throw std::invalid_argument("y must lie in Z_k wr S_{n-1}");
    const auto ye = y.embedded();
    BigInt count = 0;
    for_each_element(
        n, x.k(),
        [&](const WreathElement& a) {
            if (multiply(x, a) == multiply(a, ye)) ++count;
        },
        cap);
    return count;
}

Cyclotomic induced_character_formula(const WreathElement& x, const WreathElement& y)
{
    const int n = x.degree();
    const int k = x.k();
    const KPartition tx = type_of(x);
    const KPartition ty = type_of(y);
    Cyclotomic total = Cyclotomic::zero(k);
    for (const auto& rho : k_partitions_of(n, k)) {
        Cyclotomic a = char_wreath(rho, tx, k);
        if (a.is_zero()) continue;
        for (const auto& sigma : restriction_decomposition(rho)) total += a * char_wreath(sigma, ty, k).conjugate();
    }
    return total;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g)
{
    if (f.k != g.k || f.n != g.n) throw std::invalid_argument("inner product of functions on different groups");
    Cyclotomic sum = Cyclotomic::zero(f.k);
    for (const auto& m : marked_k_partitions_of(f.n, f.k)) {
        auto fi = f.values.find(m);
        auto gi = g.values.find(m);
        if (fi == f.values.end() || gi == g.values.end())
            throw std::invalid_argument("class function undefined on " + m.str());
        sum += Cyclotomic(Rational(k_class_size(m, f.k))) * fi->second * gi->second.conjugate();
    }
    return sum / Cyclotomic(Rational(group_order(f.n, f.k)));
}

}  // namespace gsym
