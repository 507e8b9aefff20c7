#include <doctest.h>

#include "spq/constraint.hpp"
#include "spq/gen.hpp"

using namespace spq;

TEST_CASE("constraint parsing") {
    Table pair = fixture("pair");
    Constraint key = parse_constraint(pair, "key=X1,X2");
    CHECK(key.kind == ConstraintKind::Key);
    CHECK(key.key == AttrSet{0, 1});
    CHECK(key.text(pair) == "key=X1,X2");

    Table cars = fixture("cars");
    Constraint fd = parse_constraint(cars, "fd=Car_Model,DoorNo->Engine_Type");
    CHECK(fd.kind == ConstraintKind::Fd);
    CHECK(fd.fd.lhs == AttrSet{0, 1});
    CHECK(fd.fd.rhs == AttrSet{2});

    Table trio = fixture("trio");
    Constraint sys = parse_constraint(trio, "keys=A1,A2;A2,A3");
    CHECK(sys.kind == ConstraintKind::System);
    REQUIRE(sys.system.keys.size() == 2);
    CHECK(sys.system.keys[0] == AttrSet{0, 1});
    CHECK(sys.system.keys[1] == AttrSet{1, 2});
    CHECK(sys.scope() == AttrSet{0, 1, 2});
}

TEST_CASE("positions work for headerless data") {
    ParseOptions opts;
    opts.has_header = false;
    Table t = Table::parse("1,2\n3,4\n", opts);
    Constraint c = parse_constraint(t, "key=1,2");
    CHECK(c.key == AttrSet{0, 1});
    // A name wins over a position when both could apply.
    Constraint byname = parse_constraint(t, "key=c1");
    CHECK(byname.key == AttrSet{0});
}

TEST_CASE("attribute sets are canonicalized") {
    Table trio = fixture("trio");
    Constraint c = parse_constraint(trio, "key=A3,A1,A3");
    CHECK(c.key == AttrSet{0, 2});
    Constraint dup = parse_constraint(trio, "keys=A1,A2;A2,A1");
    CHECK(dup.system.keys.size() == 1); // duplicate members collapse
}

TEST_CASE("bad specs are rejected") {
    Table pair = fixture("pair");
    CHECK_THROWS_AS(parse_constraint(pair, "key=NOPE"), Error);
    CHECK_THROWS_AS(parse_constraint(pair, "fd=X1"), Error);
    CHECK_THROWS_AS(parse_constraint(pair, "nonsense"), Error);
    CHECK_THROWS_AS(parse_constraint(pair, "what=X1"), Error);
    CHECK_THROWS_AS(parse_constraint(pair, "key="), Error);
    CHECK_THROWS_AS(parse_constraint(pair, "fd=->X1"), Error);
}
