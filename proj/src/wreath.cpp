#include "gsym/wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gsym {

namespace {

int mod(int a, int m)
{
    int r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<int> parse_int_list(std::string_view s)
{
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t used = 0;
        int v = std::stoi(cur, &used);
        if (used != cur.size()) throw std::invalid_argument("bad integer '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

}  // namespace

// ------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > degree() || seen[v]) throw std::invalid_argument("images do not form a permutation");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(std::string_view text, int n)
{
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<bool> used(n + 1, false);
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw std::invalid_argument("cycle notation expects '('");
        auto close = text.find(')', pos);
        if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
        auto pts = parse_int_list(text.substr(pos + 1, close - pos - 1));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            int a = pts[i];
            if (a < 1 || a > n || used[a]) throw std::invalid_argument("invalid or repeated point in cycles");
            used[a] = true;
            im[a - 1] = pts[(i + 1) % pts.size()];
        }
        pos = close + 1;
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& q) const
{
    if (q.degree() != degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> r(images_.size());
    for (int i = 1; i <= degree(); ++i) r[i - 1] = q((*this)(i));
    return Permutation(std::move(r));
}

std::vector<int> Permutation::cycle_of(int i) const
{
    std::vector<int> c{i};
    for (int j = (*this)(i); j != i; j = (*this)(j)) c.push_back(j);
    return c;
}

std::vector<std::vector<int>> Permutation::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (int i = 1; i <= degree(); ++i) {
        if (seen[i]) continue;
        auto c = cycle_of(i);
        for (int j : c) seen[j] = true;
        out.push_back(std::move(c));
    }
    return out;
}

std::string Permutation::cycle_str() const
{
    std::string out;
    for (const auto& c : cycles()) {
        out += "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(c[i]);
        }
        out += ")";
    }
    return out;
}

// ----------------------------------------------------------- WreathElement

WreathElement::WreathElement(int k, std::vector<int> colors, Permutation perm)
    : k_(k), colors_(std::move(colors)), perm_(std::move(perm))
{
    if (k_ < 1) throw std::invalid_argument("k must be >= 1");
    if (static_cast<int>(colors_.size()) != perm_.degree())
        throw std::invalid_argument("colors and permutation have different lengths");
    for (int& c : colors_) c = mod(c, k_);
}

WreathElement WreathElement::identity(int n, int k)
{
    return WreathElement(k, std::vector<int>(n, 0), Permutation::identity(n));
}

WreathElement WreathElement::parse(std::string_view text, int k)
{
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("element text needs 'colors ; permutation'");
    auto colors = parse_int_list(text.substr(0, semi));
    auto rest = text.substr(semi + 1);
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    Permutation p = (!rest.empty() && rest.front() == '(')
                        ? Permutation::from_cycles(rest, static_cast<int>(colors.size()))
                        : Permutation(parse_int_list(rest));
    return WreathElement(k, std::move(colors), std::move(p));
}

WreathElement WreathElement::embedded() const
{
    auto c = colors_;
    c.push_back(0);
    auto im = perm_.images();
    im.push_back(degree() + 1);
    return WreathElement(k_, std::move(c), Permutation(std::move(im)));
}

bool WreathElement::in_point_stabilizer() const
{
    const int n = degree();
    return n >= 1 && perm_(n) == n && colors_[n - 1] == 0;
}

std::string WreathElement::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < colors_.size(); ++i) os << (i ? "," : "") << colors_[i];
    os << " ; ";
    for (int i = 1; i <= degree(); ++i) os << (i > 1 ? "," : "") << perm_(i);
    return os.str();
}

// --------------------------------------------------------------- arithmetic

WreathElement multiply(const WreathElement& x, const WreathElement& y)
{
    if (x.k() != y.k() || x.degree() != y.degree())
        throw std::invalid_argument("multiply: elements from different groups");
    const int n = x.degree();
    const Permutation& q = y.perm();
    const Permutation qinv = q.inverse();
    std::vector<int> c(n);
    for (int i = 1; i <= n; ++i) c[i - 1] = x.color(qinv(i)) + y.color(i);
    return WreathElement(x.k(), std::move(c), x.perm().then(q));
}

WreathElement inverse(const WreathElement& x)
{
    const int n = x.degree();
    std::vector<int> c(n);
    for (int i = 1; i <= n; ++i) c[i - 1] = -x.color(x.perm()(i));
    return WreathElement(x.k(), std::move(c), x.perm().inverse());
}

WreathElement conjugate_by(const WreathElement& x, const WreathElement& z)
{
    return multiply(multiply(inverse(z), x), z);
}

int cycle_sum(const WreathElement& x, const std::vector<int>& cycle)
{
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    const int n = x.degree();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int a = cycle[i];
        if (a < 1 || a > n || x.perm()(a) != cycle[(i + 1) % cycle.size()])
            throw std::invalid_argument("not a cycle of the element's permutation");
    }
    int s = 0;
    for (int a : cycle) s += x.color(a);
    return mod(s, x.k());
}

KPartition type_of(const WreathElement& x)
{
    std::vector<std::vector<int>> parts(x.k());
    for (const auto& c : x.perm().cycles()) parts[cycle_sum(x, c)].push_back(static_cast<int>(c.size()));
    std::vector<Partition> comps;
    for (auto& p : parts) {
        std::sort(p.begin(), p.end(), std::greater<>());
        comps.emplace_back(std::move(p));
    }
    return KPartition(std::move(comps));
}

MarkedKPartition marked_type_of(const WreathElement& x)
{
    const int n = x.degree();
    if (n < 1) throw std::invalid_argument("marked type needs n >= 1");
    auto c = x.perm().cycle_of(n);
    return MarkedKPartition(type_of(x), cycle_sum(x, c), static_cast<int>(c.size()));
}

// ------------------------------------------------------------ class sizes

BigInt group_order(int n, int k)
{
    BigInt g = 1;
    for (int i = 1; i <= n; ++i) g *= BigInt(k) * i;
    return g;
}

BigInt centralizer_order(const KPartition& type, int k)
{
    BigInt z = 1;
    for (const auto& p : type.components()) {
        z *= z_value(p);
        for (int i = 0; i < p.length(); ++i) z *= k;
    }
    return z;
}

BigInt class_size(const KPartition& type, int k) { return group_order(type.size(), k) / centralizer_order(type, k); }

BigInt k_class_size(const MarkedKPartition& m, int k)
{
    const int j = m.marked_part();
    const int mult = m.base()[m.marked_component()].multiplicity(j);
    return class_size(m.base(), k) * j * mult / m.size();
}

namespace {

// Lays out cycles of the given (length, sum) on consecutive points.
WreathElement layout(int k, const std::vector<std::pair<int, int>>& cycles)
{
    int n = 0;
    for (auto [len, sum] : cycles) n += len;
    std::vector<int> colors(n, 0);
    std::vector<int> im(n);
    int start = 1;
    for (auto [len, sum] : cycles) {
        for (int i = 0; i < len; ++i) im[start + i - 1] = start + (i + 1) % len;
        colors[start - 1] = sum;
        start += len;
    }
    return WreathElement(k, std::move(colors), Permutation(std::move(im)));
}

std::vector<std::pair<int, int>> cycle_list(const KPartition& type)
{
    std::vector<std::pair<int, int>> cycles;
    for (int i = 0; i < type.k(); ++i)
        for (int p : type[i].parts()) cycles.emplace_back(p, i);
    std::sort(cycles.begin(), cycles.end(), [](auto a, auto b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    return cycles;
}

}  // namespace

WreathElement class_representative(const KPartition& type) { return layout(type.k(), cycle_list(type)); }

WreathElement k_class_representative(const MarkedKPartition& m)
{
    auto cycles = cycle_list(m.without_marked_part());
    cycles.emplace_back(m.marked_part(), m.marked_component());
    return layout(m.k(), cycles);
}

// -------------------------------------------------------------- conjugator

std::optional<WreathElement> find_K_conjugator(const WreathElement& x, const WreathElement& y)
{
    if (x.k() != y.k() || x.degree() != y.degree())
        throw std::invalid_argument("find_K_conjugator: elements from different groups");
    const int n = x.degree();
    const int k = x.k();
    if (n == 0) return WreathElement::identity(0, k);
    if (!(marked_type_of(x) == marked_type_of(y))) return std::nullopt;

    // Match cycles of x to cycles of y: the cycles through n first (both
    // written starting at n), the rest by (length, cycle sum).
    std::vector<int> t(n + 1, 0);  // t maps points of x's cycles to y's
    auto align = [&](const std::vector<int>& cx, const std::vector<int>& cy) {
        for (std::size_t i = 0; i < cx.size(); ++i) t[cx[i]] = cy[i];
    };
    const auto xn = x.perm().cycle_of(n);
    const auto yn = y.perm().cycle_of(n);
    align(xn, yn);

    std::map<std::pair<int, int>, std::vector<std::vector<int>>> pool;
    for (const auto& c : y.perm().cycles()) {
        if (std::find(c.begin(), c.end(), n) != c.end()) continue;
        pool[{static_cast<int>(c.size()), cycle_sum(y, c)}].push_back(c);
    }
    for (const auto& c : x.perm().cycles()) {
        if (std::find(c.begin(), c.end(), n) != c.end()) continue;
        auto& bucket = pool[{static_cast<int>(c.size()), cycle_sum(x, c)}];
        if (bucket.empty()) return std::nullopt;
        align(c, bucket.back());
        bucket.pop_back();
    }

    // z = (f; t) with z y = x z. Colors: f_i - f_{q^-1(i)} = h_i - g_{t^-1(i)},
    // solved by prefix sums around each cycle of q with f = 0 at the cycle's
    // first point (n for the marked cycle).
    std::vector<int> tinv(n + 1, 0);
    for (int a = 1; a <= n; ++a) tinv[t[a]] = a;
    std::vector<int> f(n + 1, 0);
    std::vector<bool> done(n + 1, false);
    auto solve_cycle = [&](const std::vector<int>& cy) {
        f[cy[0]] = 0;
        done[cy[0]] = true;
        for (std::size_t m = 1; m < cy.size(); ++m) {
            const int i = cy[m];
            f[i] = mod(f[cy[m - 1]] + y.color(i) - x.color(tinv[i]), k);
            done[i] = true;
        }
    };
    solve_cycle(yn);
    for (const auto& c : y.perm().cycles())
        if (!done[c[0]]) solve_cycle(c);

    std::vector<int> colors(f.begin() + 1, f.end());
    std::vector<int> images(t.begin() + 1, t.end());
    WreathElement z(k, std::move(colors), Permutation(std::move(images)));
    if (!(conjugate_by(x, z) == y) || !z.in_point_stabilizer())
        throw std::logic_error("conjugator construction failed for " + x.str() + " and " + y.str());
    return z;
}

// ------------------------------------------------------------ enumeration

void for_each_element(int n, int k, const std::function<void(const WreathElement&)>& fn, std::uint64_t cap)
{
    if (n < 0 || k < 1) throw std::invalid_argument("for_each_element needs n >= 0 and k >= 1");
    if (group_order(n, k) > cap)
        throw CapExceeded("group Z_" + std::to_string(k) + " wr S_" + std::to_string(n) + " has " +
                          group_order(n, k).str() + " elements, above the cap of " + std::to_string(cap));
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    do {
        Permutation p(im);
        std::vector<int> colors(n, 0);
        while (true) {
            fn(WreathElement(k, colors, p));
            int i = n - 1;
            while (i >= 0 && ++colors[i] == k) colors[i--] = 0;
            if (i < 0) break;
        }
    } while (std::next_permutation(im.begin(), im.end()));
}

std::vector<WreathElement> enumerate_group(int n, int k, std::uint64_t cap)
{
    std::vector<WreathElement> out;
    for_each_element(n, k, [&](const WreathElement& x) { out.push_back(x); }, cap);
    return out;
}

GelfandReport verify_symmetric_gelfand(int n, int k, std::uint64_t cap)
{
    GelfandReport report;
    if (n == 0) return report;
    for_each_element(
        n, k,
        [&](const WreathElement& x) {
            ++report.elements_checked;
            const auto xi = inverse(x);
            const auto mx = marked_type_of(x);
            const auto mxi = marked_type_of(xi);
            if (!(mx == mxi)) {
                report.failures.push_back("x = " + x.str() + " has marked type " + mx.str() + " but x^-1 has " +
                                          mxi.str());
                return;
            }
            auto z = find_K_conjugator(x, xi);
            if (!z || !z->in_point_stabilizer() || !(conjugate_by(x, *z) == xi))
                report.failures.push_back("no verified K-conjugator to inverse: " + x.str());
        },
        cap);
    report.passed = report.failures.empty();
    return report;
}

bool verify_symmetric_gelfand_ok(int n, int k, std::uint64_t cap) { return verify_symmetric_gelfand(n, k, cap).passed; }

}  // namespace gsym
