#include <doctest.h>

#include "spq/gen.hpp"
#include "spq/oracle.hpp"
#include "spq/spfd.hpp"
#include "spq/validate.hpp"
#include "support/testutil.hpp"

using namespace spq;
using spq::test::N;

namespace {
const FdConstraint kCarsFd{{0, 1}, {2}}; // Car_Model, DoorNo -> Engine_Type
}

TEST_CASE("dependency check on the cars fixture") {
    Table cars = fixture("cars");
    CheckResult r = check_spfd(cars, kCarsFd);
    CHECK(r.status == Status::Exact);
    // Both Ford rows are forced onto the same left side with concrete,
    // different engine values.
    CHECK_FALSE(r.holds);
}

TEST_CASE("trivial dependency cases") {
    // A right side inside the left imposes nothing: satisfiable exactly
    // when every row has at least one completion on the scope.
    for (size_t i = 0; i < 20; ++i) {
        auto inst = spq::test::sweep_instance(i);
        if (inst.table.attribute_count() < 2) continue;
        FdConstraint fd{{0, 1}, {0}};
        ActiveDomains dom = ActiveDomains::compute(inst.table);
        bool completable = true;
        for (size_t r = 0; r < inst.table.row_count(); ++r)
            if (extension_count(inst.table, r, {0, 1}, dom) == 0) completable = false;
        CheckResult r = check_spfd(inst.table, fd);
        CHECK(r.status == Status::Exact);
        CHECK(r.holds == completable);
    }

    Table single = Table::from_rows({"a", "b"}, {{"v", "x"}});
    CHECK(check_spfd(single, {{0}, {1}}).holds);
    // A lone row missing a scope cell has no replacement world at all.
    Table hole = Table::from_rows({"a", "b"}, {{N, "x"}});
    CHECK_FALSE(check_spfd(hole, {{0}, {1}}).holds);
    CHECK_FALSE(oracle_check(hole, Constraint::make_fd({{0}, {1}})));

    Table empty = Table::parse("a,b\n");
    CHECK(check_spfd(empty, {{0}, {1}}).holds);
    CHECK_THROWS_AS(check_spfd(single, {{}, {1}}), Error);
}

TEST_CASE("dependency witnesses are valid") {
    Table t = Table::parse("a,b,c\n1,,x\n1,2,\n2,1,y\n");
    FdConstraint fd{{0, 1}, {2}};
    CheckResult r = check_spfd(t, fd);
    REQUIRE(r.status == Status::Exact);
    if (r.holds) {
        ActiveDomains dom = ActiveDomains::compute(t);
        CHECK(validate_witness(t, Constraint::make_fd(fd), *r.witness, dom).ok);
    }
}

TEST_CASE("removal measure for dependencies") {
    Table cars = fixture("cars");
    MeasureResult g3 = g3_spfd(cars, kCarsFd);
    REQUIRE(g3.status == Status::Exact);
    // Dropping either Ford row resolves the only forced conflict; the
    // exhaustive reference agrees.
    CHECK(*g3.value == Rational(1, 4));
    CHECK(*g3.value == oracle_g3(cars, Constraint::make_fd(kCarsFd)));
    CHECK(validate_removal_certificate(cars, Constraint::make_fd(kCarsFd), g3).ok);

    Table conflict = Table::parse("a,b\n1,x\n1,y\n");
    CHECK(*g3_spfd(conflict, {{0}, {1}}).value == Rational(1, 2));

    Table fine = Table::parse("a,b\n1,x\n2,y\n");
    CHECK(*g3_spfd(fine, {{0}, {1}}).value == Rational(0, 1));
    CHECK(*g3_spfd(Table::parse("a,b\n"), {{0}, {1}}).value == Rational(0, 1));
}

TEST_CASE("addition measure for dependencies") {
    Table cars = fixture("cars");
    MeasureResult g5 = g5_spfd(cars, kCarsFd);
    REQUIRE(g5.status == Status::Exact);
    CHECK(*g5.value == Rational(1, 4));
    CHECK(g5.certificate.added_rows.size() == 1);
    CHECK(validate_addition_certificate(cars, Constraint::make_fd(kCarsFd), g5).ok);

    Table fine = Table::parse("a,b\n1,x\n2,y\n");
    CHECK(*g5_spfd(fine, {{0}, {1}}).value == Rational(0, 1));

    // Complete rows with equal left and different concrete right sides
    // conflict in every extension.
    Table conflict = Table::parse("a,b\n1,x\n1,y\n");
    CHECK(g5_spfd(conflict, {{0}, {1}}).status == Status::Undefined);

    // A row missing a one-attribute left side must copy some provider's
    // value and then clash with that provider's concrete right side.
    Table forced = Table::from_rows({"a", "b"}, {{N, "c"}});
    MeasureResult r = g5_spfd(forced, {{0}, {1}});
    CHECK(r.status == Status::Undefined);

    // Same shape but with a blank right side: one fresh row fixes it.
    Table blank = Table::from_rows({"a", "b"}, {{N, N}});
    MeasureResult fixable = g5_spfd(blank, {{0}, {1}});
    REQUIRE(fixable.status == Status::Exact);
    CHECK(*fixable.value == Rational(1, 1));
}

TEST_CASE("overlapping sides work") {
    Table t = Table::parse("a,b\n1,2\n,2\n");
    FdConstraint fd{{0, 1}, {1}};
    CheckResult r = check_spfd(t, fd);
    CHECK(r.status == Status::Exact);
    CHECK(r.holds);
}

TEST_CASE("node cap reports exhaustion instead of guessing") {
    Table cars = fixture("cars");
    SearchOptions opts;
    opts.node_cap = 1;
    CHECK(check_spfd(cars, kCarsFd, opts).status == Status::Exhausted);
    CHECK(g3_spfd(cars, kCarsFd, opts).status == Status::Exhausted);
    MeasureResult g5 = g5_spfd(cars, kCarsFd, opts);
    CHECK(g5.status == Status::Exhausted);
}

TEST_CASE("agreement with the reference answers on small instances") {
    for (size_t i = 0; i < 60; ++i) {
        auto inst = spq::test::sweep_instance(i);
        for (const auto& fd : spq::test::sweep_fds(inst.table)) {
            Constraint c = Constraint::make_fd(fd);
            CheckResult check = check_spfd(inst.table, fd);
            REQUIRE(check.status == Status::Exact);
            CHECK(check.holds == oracle_check(inst.table, c));
            MeasureResult g3 = g3_spfd(inst.table, fd);
            REQUIRE(g3.status == Status::Exact);
            CHECK(*g3.value == oracle_g3(inst.table, c));
            MeasureResult g5 = g5_spfd(inst.table, fd);
            auto og5 = oracle_g5(inst.table, c);
            if (g5.status == Status::Exact) {
                REQUIRE(og5.has_value());
                CHECK(*g5.value == *og5);
            } else {
                CHECK_FALSE(og5.has_value());
            }
        }
    }
}
