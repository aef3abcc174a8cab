#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gsym/verify.hpp"
#include "gsym/wreath.hpp"

using namespace gsym;

namespace {

WreathElement elem(const char* text, int k) { return WreathElement::parse(text, k); }

WreathElement example_x() { return elem("1,1,2,0,1,1,1,2,1,0 ; 4,5,3,1,2,6,8,9,7,10", 3); }
WreathElement example_y() { return elem("0,1,1,0,1,2,1,0,0,1 ; (1,3,7)(2)(10,9,4,8,5,6)", 3); }

}  // namespace

TEST_SUITE("wreath") {

TEST_CASE("permutations compose left to right")
{
    const auto p = Permutation::from_cycles("(1,2)", 3);
    const auto q = Permutation::from_cycles("(2,3)", 3);
    // p first: 1 -> 2 -> 3
    CHECK(p.then(q)(1) == 3);
    CHECK(p.then(q) == Permutation::from_cycles("(1,3,2)", 3));
    CHECK(p.inverse() == p);
    CHECK(Permutation::from_cycles("(10,9,4,8,5,6)", 10).cycle_of(10) == std::vector<int>{10, 9, 4, 8, 5, 6});
    CHECK(Permutation::from_cycles("(1,4)(2,5)", 5).cycle_str() == "(1,4)(2,5)(3)");
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("(1,2)(2,3)", 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles("(1,4)", 3), std::invalid_argument);
}

TEST_CASE("element parsing")
{
    const auto x = example_x();
    CHECK(x.degree() == 10);
    CHECK(x.perm() == Permutation::from_cycles("(1,4)(2,5)(3)(6)(7,8,9)(10)", 10));
    CHECK(x.str() == "1,1,2,0,1,1,1,2,1,0 ; 4,5,3,1,2,6,8,9,7,10");
    CHECK(elem("4,-1 ; 2,1", 3).colors() == std::vector<int>{1, 2});
    CHECK_THROWS_AS(elem("0,0 ; 1,2,3", 2), std::invalid_argument);
    CHECK_THROWS_AS(elem("0,0", 2), std::invalid_argument);
    CHECK_THROWS_AS(elem("0,0 ; 1,1", 2), std::invalid_argument);
    CHECK_THROWS_AS(WreathElement(0, {}, Permutation::identity(0)), std::invalid_argument);
}

TEST_CASE("product and inverse of the worked example")
{
    const auto x = example_x();
    const auto y = example_y();
    CHECK(multiply(x, y) == elem("1,2,2,1,0,0,0,0,0,2 ; (1,8,4,3,7,5,2,6,10,9)", 3));
    CHECK(inverse(y) == elem("2,2,2,0,1,2,0,2,0,0 ; (1,7,3)(2)(10,6,5,8,4,9)", 3));
    CHECK(multiply(x, WreathElement::identity(10, 3)) == x);
    CHECK(multiply(x, inverse(x)) == WreathElement::identity(10, 3));
    CHECK(inverse(WreathElement::identity(4, 3)) == WreathElement::identity(4, 3));
    CHECK(inverse(inverse(x)) == x);
    CHECK_THROWS_AS(multiply(x, WreathElement::identity(10, 2)), std::invalid_argument);
    CHECK_THROWS_AS(multiply(x, WreathElement::identity(9, 3)), std::invalid_argument);
}

TEST_CASE("conjugate of the worked example and its marked type")
{
    const auto x = example_x();
    const auto y = example_y();
    const auto c = multiply(multiply(x, y), inverse(x));
    CHECK(c == elem("1,2,0,0,1,2,1,2,2,2 ; (1,7,2,6,10,8)(4,3,9)(5)", 3));
    CHECK(marked_type_of(c).str() == "-|6*,1|3");
    CHECK(marked_type_of(y) == marked_type_of(c));
}

TEST_CASE("cycle sums, type and marked type")
{
    const auto x = elem("1,1,2,0,1,1,1,2,1,0 ; (1,4)(2,5)(3)(6)(7,8,9,10)", 3);
    CHECK(cycle_sum(x, {7, 8, 9, 10}) == 1);
    CHECK(cycle_sum(x, {2, 5}) == 2);
    CHECK(cycle_sum(elem("0,1 ; 1,2", 2), {1}) == 0);
    CHECK_THROWS_AS(cycle_sum(x, {7, 8}), std::invalid_argument);
    CHECK(type_of(x).str() == "-|4,2,1|2,1");
    CHECK(marked_type_of(x).str() == "-|4*,2,1|2,1");
    CHECK(type_of(WreathElement::identity(3, 2)).str() == "1,1,1|-");
    const auto id = marked_type_of(WreathElement::identity(3, 2));
    CHECK(id.marked_component() == 0);
    CHECK(id.marked_part() == 1);
}

TEST_CASE("inversion negates cycle sums")
{
    // the type of x^-1 is the type of x with component i moved to -i;
    // for k <= 2 that is the same type, for k >= 3 it usually is not
    for_each_element(4, 3, [](const WreathElement& x) {
        CHECK(marked_type_of(inverse(x)) == negated(marked_type_of(x)));
    });
    for_each_element(3, 2, [](const WreathElement& x) { CHECK(marked_type_of(inverse(x)) == marked_type_of(x)); });
    const auto x = elem("1 ; 1", 3);
    CHECK(type_of(x).str() == "-|1|-");
    CHECK(type_of(inverse(x)).str() == "-|-|1");
}

TEST_CASE("class sizes")
{
    CHECK(centralizer_order(KPartition::parse("1,1,1|-"), 2) == 48);
    for (int n = 1; n <= 5; ++n) CHECK(centralizer_order(KPartition({Partition{}, Partition{n}}), 2) == 2 * n);
    for (int k = 1; k <= 4; ++k)
        for (int n = 0; n <= 5; ++n) {
            BigInt total = 0;
            for (const auto& t : k_partitions_of(n, k)) total += class_size(t, k);
            CHECK(total == group_order(n, k));
            if (n == 0) continue;
            BigInt marked = 0;
            for (const auto& m : marked_k_partitions_of(n, k)) marked += k_class_size(m, k);
            CHECK(marked == group_order(n, k));
        }
    CHECK(k_class_size(MarkedKPartition::parse("3*"), 1) == 2);
    CHECK(k_class_size(MarkedKPartition::parse("2*|-"), 2) == 2);
    CHECK(k_class_size(MarkedKPartition::parse("-|3*"), 2) == 8);
}

TEST_CASE("class sizes match brute-force counts")
{
    for (auto [n, k] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 1}, std::pair{2, 4}}) {
        std::map<KPartition, BigInt> count;
        for_each_element(n, k, [&](const WreathElement& x) { ++count[type_of(x)]; });
        for (const auto& t : k_partitions_of(n, k)) CHECK(count[t] == class_size(t, k));
    }
}

TEST_CASE("representatives have the requested type")
{
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 5; ++n) {
            for (const auto& t : k_partitions_of(n, k)) CHECK(type_of(class_representative(t)) == t);
            for (const auto& m : marked_k_partitions_of(n, k)) CHECK(marked_type_of(k_class_representative(m)) == m);
        }
}

TEST_CASE("K-conjugator of the worked example")
{
    const auto x = elem("1,0,2,1,1,0,2 ; (1,2,3)(4,5)(6,7)", 3);
    const auto y = elem("0,2,1,0,0,0,1 ; (1,4,5)(2,6)(3,7)", 3);
    CHECK(marked_type_of(x).str() == "3|-|2,2*");
    CHECK(marked_type_of(y) == marked_type_of(x));
    const auto z = find_K_conjugator(x, y);
    REQUIRE(z.has_value());
    CHECK(z->in_point_stabilizer());
    CHECK(conjugate_by(x, *z) == y);
    // both conjugators exhibited for the example solve the same system
    CHECK(conjugate_by(x, elem("1,1,1,1,2,0,0 ; (1)(2,4)(3,5,6)(7)", 3)) == y);
    CHECK(conjugate_by(x, elem("0,0,1,0,1,2,0 ; (1)(2,4)(3,5,6)(7)", 3)) == y);
}

TEST_CASE("K-conjugators on random pairs")
{
    std::mt19937_64 rng(5);
    for (auto [n, k] : {std::pair{5, 3}, std::pair{6, 2}, std::pair{7, 4}, std::pair{3, 1}}) {
        for (int t = 0; t < 200; ++t) {
            const auto x = random_element(n, k, rng);
            auto zk = random_element(n - 1, k, rng).embedded();
            const auto y = conjugate_by(x, zk);
            const auto z = find_K_conjugator(x, y);
            REQUIRE(z.has_value());
            CHECK(z->perm()(n) == n);
            CHECK(z->color(n) == 0);
            CHECK(conjugate_by(x, *z) == y);
            CHECK(find_K_conjugator(x, x).has_value());
            // a G-conjugate that moves the marked cycle is not K-conjugate
            const auto other = random_element(n, k, rng);
            CHECK(find_K_conjugator(x, other).has_value() == (marked_type_of(x) == marked_type_of(other)));
        }
    }
}

TEST_CASE("group axioms on random triples")
{
    std::mt19937_64 rng(9);
    for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 3}}) {
        for (int t = 0; t < 300; ++t) {
            const auto a = random_element(n, k, rng);
            const auto b = random_element(n, k, rng);
            const auto c = random_element(n, k, rng);
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            CHECK(multiply(a, inverse(a)) == WreathElement::identity(n, k));
            CHECK(multiply(inverse(a), a) == WreathElement::identity(n, k));
            CHECK(type_of(conjugate_by(a, b)) == type_of(a));
        }
    }
}

TEST_CASE("embedding into the next group")
{
    const auto z = elem("1,2 ; 2,1", 3).embedded();
    CHECK(z.degree() == 3);
    CHECK(z.perm()(3) == 3);
    CHECK(z.color(3) == 0);
    CHECK(z.in_point_stabilizer());
    CHECK_FALSE(elem("0,1 ; 1,2", 3).in_point_stabilizer());
}

TEST_CASE("enumeration")
{
    CHECK(enumerate_group(2, 2).size() == 8);
    CHECK(enumerate_group(3, 3).size() == 162);
    CHECK(enumerate_group(1, 1).size() == 1);
    CHECK(enumerate_group(0, 3).size() == 1);
    const auto all = enumerate_group(3, 2);
    CHECK(std::set<WreathElement>(all.begin(), all.end()).size() == 48);
    CHECK(enumerate_group(3, 2) == all);
    CHECK_THROWS_AS(enumerate_group(5, 3, 1000), CapExceeded);
}

TEST_CASE("x is K-conjugate to its inverse for k <= 2")
{
    CHECK(verify_symmetric_gelfand_ok(1, 1));
    CHECK(verify_symmetric_gelfand_ok(4, 1));
    CHECK(verify_symmetric_gelfand_ok(2, 2));
    CHECK(verify_symmetric_gelfand_ok(3, 2));
    CHECK(verify_symmetric_gelfand(3, 2).elements_checked == 48);
}

TEST_CASE("for k >= 3 inverses leave the marked class")
{
    // counterexample in Z_3 wr S_1: (1) has inverse (2), different cycle sums
    const auto report = verify_symmetric_gelfand(1, 3);
    CHECK_FALSE(report.passed);
    CHECK(report.failures.size() == 2);
    // exactly the elements whose marked type is not self-negating fail
    for (auto [n, k] : {std::pair{3, 3}, std::pair{2, 4}}) {
        std::size_t expected = 0;
        for_each_element(n, k, [&](const WreathElement& x) {
            const auto m = marked_type_of(x);
            if (!(negated(m) == m)) ++expected;
        });
        CHECK(verify_symmetric_gelfand(n, k).failures.size() == expected);
        CHECK(expected > 0);
    }
}

}  // TEST_SUITE
