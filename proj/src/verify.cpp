#include "gsym/verify.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gsym/gelfand.hpp"
#include "gsym/irrchar.hpp"

namespace gsym {

void CheckReport::expect(bool ok, const std::string& witness)
{
    ++checks;
    if (!ok) failures.push_back(witness);
}

namespace {

CheckReport make_report(const char* suite, int n, int k)
{
    CheckReport r;
    r.suite = suite;
    r.n = n;
    r.k = k;
    return r;
}

}  // namespace

CheckReport check_gelfand(int n, int k, std::uint64_t cap)
{
    auto report = make_report("gelfand", n, k);
    if (n < 1) throw std::invalid_argument("verify gelfand needs n >= 1");

    const auto sym = verify_symmetric_gelfand(n, k, cap);
    report.checks += sym.elements_checked;
    for (const auto& f : sym.failures) report.failures.push_back(f);

    const auto group = enumerate_group(n, k, cap);
    std::vector<WreathElement> K;
    for (const auto& z : enumerate_group(n - 1, k, cap)) K.push_back(z.embedded());

    std::map<MarkedKPartition, std::uint64_t> census;
    for (const auto& x : group) {
        const auto m = marked_type_of(x);
        ++census[m];
        for (const auto& z : K)
            report.expect(marked_type_of(conjugate_by(x, z)) == m,
                          "marked type changed under K-conjugation: x = " + x.str() + ", z = " + z.str());
    }

    for (const auto& m : marked_k_partitions_of(n, k)) {
        const auto rep = k_class_representative(m);
        report.expect(marked_type_of(rep) == m, "representative of " + m.str() + " has marked type " +
                                                    marked_type_of(rep).str());
        std::set<WreathElement> orbit;
        for (const auto& z : K) orbit.insert(conjugate_by(rep, z));
        const BigInt formula = k_class_size(m, k);
        report.expect(BigInt(orbit.size()) == formula, "orbit of " + m.str() + " has " + std::to_string(orbit.size()) +
                                                           " elements, formula gives " + formula.str());
        report.expect(census[m] == orbit.size(), "marked class " + m.str() + " has " + std::to_string(census[m]) +
                                                     " elements but the K-orbit has " + std::to_string(orbit.size()));
        census.erase(m);
    }
    report.expect(census.empty(), "elements with marked types outside the enumerated labels");
    return report;
}

CheckReport check_orthogonality(int n, int k, std::uint64_t cap)
{
    auto report = make_report("orthogonality", n, k);

    const auto table = character_table(n, k);
    const Cyclotomic order(Rational(group_order(n, k)));
    for (int a = 0; a < table.rows(); ++a) {
        for (int b = 0; b < table.rows(); ++b) {
            Cyclotomic sum = Cyclotomic::zero(k);
            for (int c = 0; c < table.cols(); ++c)
                sum += Cyclotomic(Rational(table.class_orders[c])) * table.values[a][c] * table.values[b][c].conjugate();
            const Cyclotomic expected = a == b ? order : Cyclotomic(0);
            report.expect(sum == expected, "irreducible <" + table.row_labels[a] + ", " + table.row_labels[b] +
                                               "> * |G| = " + sum.str());
        }
    }

    if (n < 1) return report;
    report.expect(gen_char_indices(n, k).size() == marked_k_partitions_of(n, k).size(),
                  "number of generalized characters differs from number of K-classes");
    if (group_order(n - 1, k) > cap) return report;

    const auto gen = gen_char_table(n, k, GenCharMethod::definition, cap);
    const auto indices = gen_char_indices(n, k);
    std::vector<ClassFunction> rows;
    for (int r = 0; r < gen.rows(); ++r) rows.push_back(row_function(gen, r));
    for (int a = 0; a < gen.rows(); ++a) {
        for (int b = 0; b < gen.rows(); ++b) {
            const Cyclotomic ip = inner_product(rows[a], rows[b]);
            Cyclotomic expected(0);
            if (a == b)
                expected = Cyclotomic(Rational(char_degree(indices[a].sigma()), char_degree(indices[a].rho())));
            report.expect(ip == expected, "generalized <" + gen.row_labels[a] + ", " + gen.row_labels[b] +
                                              "> = " + ip.str() + ", expected " + expected.str());
        }
    }
    return report;
}

CheckReport check_mn_vs_def(int n, int k, std::uint64_t cap)
{
    if (k != 2) throw std::invalid_argument("mn-vs-def needs k = 2");
    auto report = make_report("mn-vs-def", n, k);
    const auto def = gen_char_table(n, k, GenCharMethod::definition, cap);
    const auto mn = gen_char_table(n, k, GenCharMethod::mn, cap);
    for (int r = 0; r < def.rows(); ++r)
        for (int c = 0; c < def.cols(); ++c)
            report.expect(def.values[r][c] == mn.values[r][c],
                          def.row_labels[r] + " at " + def.col_labels[c] + ": definition " + def.values[r][c].str() +
                              ", mn " + mn.values[r][c].str());
    return report;
}

CheckReport check_corollary(int n, int k)
{
    if (k != 2) throw std::invalid_argument("the closed form needs k = 2");
    auto report = make_report("corollary", n, k);
    const MarkedKPartition column(KPartition({Partition{}, Partition{n}}), 1, n);
    for (const auto& target : marked_k_partitions_of(n, 2)) {
        const Rational closed = gen_char_corollary(target, n);
        const Rational rule = gen_char_mn(target, column);
        report.expect(closed == rule, target.str() + ": closed form " + closed.str() + ", mn " + rule.str());
    }
    return report;
}

CheckReport check_induced(int n, int k, int samples, std::uint64_t seed, std::uint64_t exhaustive_limit,
                          std::uint64_t cap)
{
    auto report = make_report("induced", n, k);
    if (n < 1) throw std::invalid_argument("verify induced needs n >= 1");
    auto check = [&](const WreathElement& x, const WreathElement& y) {
        const Cyclotomic count(Rational(induced_character_value(x, y, cap)));
        const Cyclotomic formula = induced_character_formula(x, y);
        report.expect(count == formula, "x = " + x.str() + ", y = " + y.str() + ": fixed cosets " + count.str() +
                                            ", character sum " + formula.str());
    };
    if (group_order(n, k) * group_order(n - 1, k) <= exhaustive_limit) {
        const auto sub = enumerate_group(n - 1, k, cap);
        for_each_element(
            n, k, [&](const WreathElement& x) {
                for (const auto& y : sub) check(x, y);
            },
            cap);
        return report;
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        auto x = random_element(n, k, rng);
        auto y = random_element(n - 1, k, rng);
        check(x, y);
    }
    return report;
}

CheckReport check_zonal_equation(int n, int k, int samples, std::uint64_t seed, std::uint64_t cap)
{
    auto report = make_report("zonal-eq", n, k);
    if (n < 1) throw std::invalid_argument("verify zonal-eq needs n >= 1");
    const auto& sub = subgroup_elements(n, k, cap);
    const Cyclotomic order(Rational(group_order(n - 1, k)));
    const auto indices = gen_char_indices(n, k);
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const auto x1 = random_element(n, k, rng);
        const auto y1 = random_element(n - 1, k, rng);
        const auto x2 = random_element(n, k, rng);
        const auto y2 = random_element(n - 1, k, rng);
        for (const auto& idx : indices) {
            const Cyclotomic lhs = zonal(idx, x1, y1, cap) * zonal(idx, x2, y2, cap);
            Cyclotomic rhs = Cyclotomic::zero(k);
            for (const auto& h : sub)
                rhs += zonal(idx, multiply(multiply(x1, h.embedded()), x2), multiply(multiply(y1, h), y2), cap);
            rhs /= order;
            report.expect(lhs == rhs, idx.label().str() + " at g1 = (" + x1.str() + " | " + y1.str() + "), g2 = (" +
                                          x2.str() + " | " + y2.str() + "): " + lhs.str() + " vs " + rhs.str());
        }
    }
    return report;
}

}  // namespace gsym
