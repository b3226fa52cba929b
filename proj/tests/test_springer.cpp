#include "doctest.h"
#include "springergreen/springer.hpp"
#include "springergreen/verify.hpp"

using namespace sg;

TEST_CASE("springer correspondence labels") {
    CHECK(*springer_label(LieType::C, Partition{2}) == IrrLabel{Partition{1}, {}, 0});
    CHECK(*springer_label(LieType::C, Partition{1, 1}) == IrrLabel{{}, Partition{1}, 0});
    CHECK(!springer_label(LieType::B, Partition{2, 1}).has_value()); // core (2,1)
    CHECK(*springer_label(LieType::B, Partition{9}) == IrrLabel{Partition{4}, {}, 0});
    CHECK(*springer_label(LieType::D, Partition{2, 2}, +1) ==
          make_d_irr(Partition{1}, Partition{1}, +1));

    // preimages invert the label map
    for (LieType type : {LieType::B, LieType::C}) {
        const int size = type == LieType::B ? 9 : 8;
        for (const Partition& mu : enumerate_partitions(size)) {
            if (!has_minimal_two_core(mu)) continue;
            const auto label = springer_label(type, mu);
            const auto pre = springer_label_preimages(type, size, *label);
            CHECK(pre.size() == 1);
            CHECK(pre[0] == mu);
        }
    }
}

TEST_CASE("invalid jordan types are rejected with the violated rule") {
    NilpotentLabel bad{LieType::C, 2, Partition{3, 1}, 0};
    CHECK_THROWS_AS(bad.validate(), InvalidJordanType);
    NilpotentLabel badsize{LieType::B, 4, Partition{5, 3}, 0};
    CHECK_THROWS_AS(badsize.validate(), InvalidJordanType);
    NilpotentLabel needsplit{LieType::D, 2, Partition{2, 2}, 0};
    CHECK_THROWS_AS(needsplit.validate(), InvalidLabel);
    NilpotentLabel nosplit{LieType::C, 2, Partition{2, 2}, +1};
    CHECK_THROWS_AS(nosplit.validate(), InvalidLabel);
}

TEST_CASE("total Springer characters in rank one") {
    // C_1, lambda = (2): the trivial character of W(BC_1)
    const ClassFunction t2 = gue(LieType::C, Partition{2});
    for (const Rat& v : t2.values) CHECK(v == 1);
    // C_1, lambda = (1,1): trivial + sign, dimension 2
    const ClassFunction t11 = gue(LieType::C, Partition{1, 1});
    CHECK(t11.dimension() == 2);
    CHECK(t11.at(ClassLabel{{}, Partition{1}, 0}) == 0);
}

TEST_CASE("the SO_9 example") {
    const ClassFunction total = gue(LieType::B, Partition{5, 3, 1});
    const auto decomp = decompose(total);
    const std::vector<Partition> expected{
        Partition{5, 3, 1}, Partition{5, 4}, Partition{6, 2, 1}, Partition{7, 1, 1}, Partition{9}};
    CHECK(decomp.size() == expected.size());
    for (const Partition& mu : expected) {
        const auto label = springer_label(LieType::B, mu);
        REQUIRE(label.has_value());
        REQUIRE(decomp.count(*label) == 1);
        CHECK(decomp.at(*label) == 1);
    }
}

TEST_CASE("type D totals in rank two") {
    const ClassFunction t1111 = d_total(NilpotentLabel{LieType::D, 2, Partition{1, 1, 1, 1}, 0});
    CHECK(t1111.dimension() == 4);
    const ClassFunction t22p = d_total(NilpotentLabel{LieType::D, 2, Partition{2, 2}, +1});
    const ClassFunction t22m = d_total(NilpotentLabel{LieType::D, 2, Partition{2, 2}, -1});
    CHECK(t22p.dimension() == 2);
    CHECK(t22m.dimension() == 2);
    const ClassFunction t31 = d_total(NilpotentLabel{LieType::D, 2, Partition{3, 1}, 0});
    CHECK(t31.dimension() == 1);

    // Mackey vanishing and the matched values at the split classes
    const ClassLabel cplus{Partition{2}, {}, +1};
    const ClassLabel cminus{Partition{2}, {}, -1};
    CHECK(t22p.at(cplus) == 2);
    CHECK(t22p.at(cminus) == 0);
    CHECK(t22m.at(cplus) == 0);
    CHECK(t22m.at(cminus) == 2);
    CHECK(t1111.at(cplus) == 0);
}

TEST_CASE("nonnegative integral multiplicities up to size 8") {
    for (LieType type : {LieType::B, LieType::C, LieType::D}) {
        const int max_n = type == LieType::B ? 3 : 4;
        for (int n = (type == LieType::D ? 2 : 1); n <= max_n; ++n) {
            for (const auto& [lam, split] : enumerate_jordan_types(type, n)) {
                const ClassFunction total = total_char(NilpotentLabel{type, n, lam, split});
                for (const auto& [irr, mult] : decompose(total)) {
                    Rat m = mult;
                    m.canonicalize();
                    CHECK(m.get_den() == 1);
                    CHECK(m >= 0);
                }
            }
        }
    }
}

TEST_CASE("green values") {
    // regular nilpotent of Sp_{2n} at the n-cycle class
    for (int n = 1; n <= 4; ++n) {
        CHECK(green_value(NilpotentLabel{LieType::C, n, Partition{2 * n}, 0}, Partition{n}) == 1);
        // zero nilpotent of SO_{2n+1}: dimension 2^n n!
        CHECK(green_value(NilpotentLabel{LieType::B, n, Partition(std::vector<int>(2 * n + 1, 1)), 0},
                          Partition(std::vector<int>(n, 1))) == pow2(n) * factorial(n));
    }
    // mismatched very even signs vanish
    CHECK(green_value(NilpotentLabel{LieType::D, 2, Partition{2, 2}, +1}, Partition{2}, -1) == 0);
    CHECK(green_value(NilpotentLabel{LieType::D, 2, Partition{2, 2}, +1}, Partition{2}, +1) == 2);
    CHECK_THROWS_AS(
        green_value(NilpotentLabel{LieType::D, 2, Partition{2, 2}, +1}, Partition{2}, 0),
        InvalidLabel);
}

TEST_CASE("euler characteristics") {
    CHECK(euler_characteristic(NilpotentLabel{LieType::A, 3, Partition{1, 1, 1}, 0}) == 6);
    CHECK(euler_characteristic(NilpotentLabel{LieType::C, 1, Partition{2}, 0}) == 1);
    CHECK(euler_characteristic(NilpotentLabel{LieType::C, 1, Partition{1, 1}, 0}) == 2);
    // regular nilpotents: a point fiber in every type
    CHECK(euler_characteristic(NilpotentLabel{LieType::A, 5, Partition{5}, 0}) == 1);
    CHECK(euler_characteristic(NilpotentLabel{LieType::B, 3, Partition{7}, 0}) == 1);
    CHECK(euler_characteristic(NilpotentLabel{LieType::C, 3, Partition{6}, 0}) == 1);
    CHECK(euler_characteristic(NilpotentLabel{LieType::D, 3, Partition{5, 1}, 0}) == 1);
    // zero nilpotents: |W|
    CHECK(euler_characteristic(NilpotentLabel{LieType::D, 3, Partition(std::vector<int>(6, 1)), 0}) ==
          group_order(LieType::D, 3));
}

TEST_CASE("graded type A characters") {
    CHECK(graded_char_A(Partition{1, 1}, Partition{1, 1}) == IntPoly(1) + IntPoly::t());
    CHECK(graded_char_A(Partition{4}, Partition{2, 2}) == IntPoly(1));
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : enumerate_partitions(n)) {
            const Partition ones(std::vector<int>(n, 1));
            CHECK(graded_char_A(lam, ones).evaluate(1) ==
                  euler_characteristic(NilpotentLabel{LieType::A, n, lam, 0}));
        }
}

TEST_CASE("verification suites at small rank") {
    CHECK(verify_restriction(LieType::C, 3).all_pass());
    CHECK(verify_restriction(LieType::B, 2).all_pass());
    CHECK(verify_restriction(LieType::D, 3).all_pass());
    CHECK(verify_induction(LieType::C, 3).all_pass());
    CHECK(verify_induction(LieType::B, 2).all_pass());
    CHECK(verify_induction(LieType::D, 3).all_pass());
    CHECK(verify_main_consistency(LieType::C, 3).all_pass());
    CHECK(verify_main_consistency(LieType::B, 2).all_pass());
    CHECK(verify_main_consistency(LieType::D, 3).all_pass());
    CHECK(verify_main_consistency(LieType::D, 2).all_pass());
    CHECK(verify_difference_pairing(2).all_pass());
    CHECK(verify_difference_pairing(4).all_pass());
    CHECK(verify_triangularity(LieType::C, 3).all_pass());
    CHECK(verify_structure(LieType::D, 3).all_pass());
    CHECK(verify_green_recursion(6).all_pass());
    CHECK(verify_kostka_recursion(6).all_pass());
    CHECK(verify_symfunc_identities(6).all_pass());
    CHECK(verify_orthogonality(LieType::D, 4).all_pass());
    CHECK_THROWS_AS(verify_difference_pairing(3), Error);
}

TEST_CASE("parallel verification matches serial") {
    const Report serial = verify_main_consistency(LieType::C, 4, 1);
    const Report parallel = verify_main_consistency(LieType::C, 4, 4);
    REQUIRE(serial.cases.size() == parallel.cases.size());
    for (size_t i = 0; i < serial.cases.size(); ++i) {
        CHECK(serial.cases[i].lambda == parallel.cases[i].lambda);
        CHECK(serial.cases[i].pass == parallel.cases[i].pass);
    }
}
