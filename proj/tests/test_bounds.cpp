#include "latcone/bounds.hpp"

#include <doctest.h>

using namespace latcone;

TEST_CASE("base point free multiple") {
    CHECK(bpf_multiple(1) == 12);
    CHECK(bpf_multiple(2) == 96);
    CHECK(bpf_multiple(3) == 720);
}

TEST_CASE("cyclic subgroup bound") {
    CHECK(cyclic_subgroup_bound(1, 1) == 144);
    CHECK(cyclic_subgroup_bound(2, 2) == int_pow(Int(96) * 96 * 2, 3));
    CHECK(cyclic_subgroup_bound(2, 3) >= cyclic_subgroup_bound(2, 2));
    CHECK(cyclic_subgroup_bound(3, 1) >= cyclic_subgroup_bound(2, 1));
}

TEST_CASE("automorphism group bound") {
    CHECK(aut_group_bound(1, 1) == int_pow(12, 48));
    CHECK(aut_group_bound(2, 1) == int_pow(9216, 288));
    for (unsigned n = 1; n <= 3; ++n)
        for (Int ln = 2; ln <= 4; ++ln)
            CHECK(aut_group_bound(n, ln) > cyclic_subgroup_bound(n, ln));
}

TEST_CASE("K3 torsion bound") {
    Int b = k3_aut_torsion_bound();
    CHECK(b == int_pow(2, 968));
    CHECK(b.str().size() == 292);
}

TEST_CASE("GL_rho(F_3) order") {
    CHECK(gl_f3_order(1) == 2);
    CHECK(gl_f3_order(2) == 48);
    CHECK(gl_f3_order(3) == 11232);
}

TEST_CASE("dual-path big integer recomputation is bit identical") {
    for (long long base : {2, 3, 12, 96, 9216}) {
        for (long long exp : {0, 1, 7, 48, 113}) {
            CHECK(int_pow(base, exp) == int_pow_naive(base, exp));
        }
    }
    CHECK(int_pow(4, 484) == int_pow_naive(4, 484));
}

TEST_CASE("bound report carries provenance labels") {
    BoundReport r = bound_report(2, 2, 2);
    REQUIRE(r.entries.size() == 5);
    CHECK(r.entries[0].name == "bpf_multiple");
    CHECK(r.entries[0].value == 96);
    for (const BoundEntry& e : r.entries) {
        CHECK(e.value > 0);
        bool labeled = e.provenance.rfind("quoted:", 0) == 0 ||
                       e.provenance.rfind("assembled:", 0) == 0;
        CHECK(labeled);
    }
}
