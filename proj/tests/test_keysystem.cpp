#include <doctest.h>

#include "spq/gen.hpp"
#include "spq/keysystem.hpp"
#include "spq/oracle.hpp"
#include "spq/spkey.hpp"
#include "spq/validate.hpp"
#include "support/testutil.hpp"

using namespace spq;

namespace {
const KeySystem kTrioSystem{{{0, 1}, {1, 2}}};
}

TEST_CASE("joint satisfaction needs one common world") {
    Table trio = fixture("trio");
    // Each member alone is repairable, but their worlds disagree.
    CHECK_FALSE(check_spkey_system(trio, kTrioSystem).holds);

    // Dropping the duplicated rows leaves a jointly satisfiable remainder;
    // the probe keeps the measured table's domains, as removal probes do.
    Table reduced = trio.without_rows({2, 3});
    ActiveDomains frozen = ActiveDomains::compute(trio);
    SearchOptions opts;
    opts.domains = &frozen;
    CheckResult r = check_spkey_system(reduced, kTrioSystem, opts);
    CHECK(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(validate_witness(reduced, Constraint::make_system(kTrioSystem), *r.witness, frozen).ok);

    // On its own shrunken domains the remainder is not satisfiable: the
    // first row's only completion collides.
    CHECK_FALSE(check_spkey_system(reduced, kTrioSystem).holds);

    CHECK(check_spkey_system(Table::parse("a,b\n"), KeySystem{{{0}, {1}}}).holds);
}

TEST_CASE("a singleton family behaves like its only member") {
    for (size_t i = 0; i < 40; ++i) {
        auto inst = spq::test::sweep_instance(i);
        for (const auto& key : spq::test::sweep_keys(inst.table)) {
            KeySystem single{{key}};
            CHECK(check_spkey_system(inst.table, single).holds ==
                  check_spkey(inst.table, key).holds);
            CHECK(*g3_spkey_system(inst.table, single).value ==
                  *g3_spkey(inst.table, key).value);
        }
    }
}

TEST_CASE("family removal measure") {
    Table trio = fixture("trio");
    MeasureResult r = g3_spkey_system(trio, kTrioSystem);
    REQUIRE(r.status == Status::Exact);
    CHECK(*r.value == Rational(1, 2));
    CHECK(*r.value == oracle_g3(trio, Constraint::make_system(kTrioSystem)));
    CHECK(validate_removal_certificate(trio, Constraint::make_system(kTrioSystem), r).ok);

    Table fine = Table::parse("a,b\n1,1\n2,2\n");
    CHECK(*g3_spkey_system(fine, KeySystem{{{0}, {1}}}).value == Rational(0, 1));
}

TEST_CASE("family measure against the best member") {
    Table trio = fixture("trio");
    MaxG3Result r = max_g3_decision(trio, kTrioSystem);
    REQUIRE(r.status == Status::Exact);
    REQUIRE(r.per_key.size() == 2);
    CHECK(r.per_key[0] == Rational(1, 4));
    CHECK(r.per_key[1] == Rational(1, 4));
    CHECK(r.system_value == Rational(1, 2));
    CHECK_FALSE(r.equal);

    // Singleton families are trivially equal.
    MaxG3Result single = max_g3_decision(trio, KeySystem{{{0, 1}}});
    CHECK(single.equal);

    // A family that already holds: both sides are zero.
    Table fine = Table::parse("a,b\n1,1\n2,2\n");
    MaxG3Result zero = max_g3_decision(fine, KeySystem{{{0}, {1}}});
    CHECK(zero.equal);
    CHECK(zero.system_value == Rational(0, 1));
}

TEST_CASE("family measure dominates every member") {
    for (size_t i = 0; i < 40; ++i) {
        auto inst = spq::test::sweep_instance(i);
        for (const auto& sys : spq::test::sweep_systems(inst.table)) {
            MaxG3Result r = max_g3_decision(inst.table, sys);
            REQUIRE(r.status == Status::Exact);
            for (const auto& v : r.per_key) CHECK(r.system_value >= v);
            CHECK(r.equal == (r.system_value == r.per_key[r.argmax]));
        }
    }
}

TEST_CASE("agreement with the reference answers on small instances") {
    for (size_t i = 0; i < 40; ++i) {
        auto inst = spq::test::sweep_instance(i);
        for (const auto& sys : spq::test::sweep_systems(inst.table)) {
            Constraint c = Constraint::make_system(sys);
            CHECK(check_spkey_system(inst.table, sys).holds == oracle_check(inst.table, c));
            CHECK(*g3_spkey_system(inst.table, sys).value == oracle_g3(inst.table, c));
        }
    }
}

TEST_CASE("node cap reports exhaustion") {
    SearchOptions opts;
    opts.node_cap = 1;
    CHECK(check_spkey_system(fixture("trio"), kTrioSystem, opts).status == Status::Exhausted);
    CHECK(g3_spkey_system(fixture("trio"), kTrioSystem, opts).status == Status::Exhausted);
}
