#include "gsym/irrchar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "gsym/parallel.hpp"

namespace gsym {

const Cyclotomic& CharacterTable::at(const std::string& row, const std::string& col) const
{
    auto r = std::find(row_labels.begin(), row_labels.end(), row);
    auto c = std::find(col_labels.begin(), col_labels.end(), col);
    if (r == row_labels.end()) throw std::out_of_range("no row labelled " + row);
    if (c == col_labels.end()) throw std::out_of_range("no column labelled " + col);
    return values[r - row_labels.begin()][c - col_labels.begin()];
}

std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r)
{
    // beta-numbers: b_i = lambda_i + (l - i); a hook of size r is b -> b - r
    const int l = lambda.length();
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda.parts()[i] + (l - 1 - i);
    std::set<int> members(beta.begin(), beta.end());

    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < l; ++i) {
        const int b = beta[i];
        const int target = b - r;
        if (target < 0 || members.count(target)) continue;
        int height = 0;
        for (int c : beta)
            if (c > target && c < b) ++height;
        auto nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts;
        for (int t = 0; t < l; ++t) {
            const int part = nb[t] - (l - 1 - t);
            if (part > 0) parts.push_back(part);
        }
        out.emplace_back(Partition(std::move(parts)), height);
    }
    return out;
}

// --------------------------------------------------------- CharacterEngine

CharacterEngine::CharacterEngine(int k) : k_(k)
{
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    for (int p = 0; p < k; ++p) roots_.push_back(Cyclotomic::root_of_unity(k, p));
}

std::size_t CharacterEngine::KeyHash::operator()(const Key& key) const noexcept
{
    std::size_t h = key.size();
    for (int v : key) h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::size_t CharacterEngine::cache_size() const
{
    std::shared_lock lock(mutex_);
    return cache_.size();
}

Cyclotomic CharacterEngine::value(const KPartition& lambda, const KPartition& rho)
{
    return value_in_order(lambda, gather(rho));
}

Cyclotomic CharacterEngine::value_in_order(const KPartition& lambda, const std::vector<GatheredPart>& parts)
{
    if (lambda.k() != k_) throw std::invalid_argument("shape " + lambda.str() + " is not " + std::to_string(k_) + "-partite");
    int total = 0;
    for (const auto& gp : parts) {
        if (gp.component < 0 || gp.component >= k_) throw std::invalid_argument("class component out of range");
        total += gp.part;
    }
    if (total != lambda.size())
        throw std::invalid_argument("size mismatch: character " + lambda.str() + " on class of size " + std::to_string(total));
    return recurse(lambda, parts, 0);
}

Cyclotomic CharacterEngine::recurse(const KPartition& lambda, const std::vector<GatheredPart>& parts, std::size_t from)
{
    if (from == parts.size()) return Cyclotomic::zero(k_) + Cyclotomic(lambda.size() == 0 ? 1 : 0);

    Key key;
    for (const auto& p : lambda.components()) {
        key.push_back(p.length());
        key.insert(key.end(), p.parts().begin(), p.parts().end());
    }
    key.push_back(-1);
    for (std::size_t t = from; t < parts.size(); ++t) {
        key.push_back(parts[t].part);
        key.push_back(parts[t].component);
    }
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }

    const auto [part, source] = parts[from];
    Cyclotomic total = Cyclotomic::zero(k_);
    for (int f = 0; f < k_; ++f) {
        const Cyclotomic& color = roots_[(f * source) % k_];
        for (const auto& [rest, height] : remove_rim_hooks(lambda[f], part)) {
            Cyclotomic sub = recurse(lambda.with_component(f, rest), parts, from + 1);
            if (sub.is_zero()) continue;
            if (height % 2) sub = -sub;
            total += sub * color;
        }
    }

    std::unique_lock lock(mutex_);
    cache_.emplace(std::move(key), total);
    return total;
}

CharacterEngine& engine_for(int k)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CharacterEngine>> engines;
    std::lock_guard lock(mutex);
    auto& e = engines[k];
    if (!e) e = std::make_unique<CharacterEngine>(k);
    return *e;
}

Cyclotomic char_wreath(const KPartition& lambda, const KPartition& rho, int k)
{
    if (rho.k() != k) throw std::invalid_argument("class " + rho.str() + " is not " + std::to_string(k) + "-partite");
    return engine_for(k).value(lambda, rho);
}

Rational char_bipartite(const KPartition& lambda, const KPartition& rho)
{
    return char_wreath(lambda, rho, 2).to_rational();
}

Cyclotomic char_value(const KPartition& lambda, const WreathElement& x)
{
    return char_wreath(lambda, type_of(x), x.k());
}

BigInt char_degree(const KPartition& lambda)
{
    const int k = lambda.k();
    std::vector<Partition> ones(k);
    ones[0] = Partition(std::vector<int>(lambda.size(), 1));
    return char_wreath(lambda, KPartition(ones), k).to_rational().numerator();
}

CharacterTable character_table(int n, int k)
{
    const auto shapes = k_partitions_of(n, k);
    CharacterTable t;
    t.k = k;
    t.n = n;
    for (const auto& s : shapes) {
        t.row_labels.push_back(s.str());
        t.col_labels.push_back(s.str());
        t.class_orders.push_back(class_size(s, k));
    }
    t.values.assign(shapes.size(), std::vector<Cyclotomic>(shapes.size()));
    parallel_for(static_cast<int>(shapes.size()), [&](int r) {
        for (std::size_t c = 0; c < shapes.size(); ++c) t.values[r][c] = char_wreath(shapes[r], shapes[c], k);
    });
    return t;
}

std::vector<KPartition> restriction_decomposition(const KPartition& lambda)
{
    if (lambda.size() < 1) throw std::invalid_argument("restriction needs n >= 1");
    std::vector<KPartition> out;
    for (int i = 0; i < lambda.k(); ++i) {
        for (const auto& b : removable_corners(lambda[i])) {
            auto parts = lambda[i].parts();
            parts[b.row - 1] -= 1;
            if (parts.back() == 0) parts.pop_back();
            out.push_back(lambda.with_component(i, Partition(std::move(parts))));
        }
    }
    return out;
}

}  // namespace gsym
