#include <doctest.h>

#include "spq/gen.hpp"
#include "spq/table.hpp"
#include "support/testutil.hpp"

using namespace spq;
using spq::test::N;

namespace {

std::vector<std::string> domain_names(const Table& t, const ActiveDomains& d, int attr) {
    std::vector<std::string> out;
    for (Sym s : d.order[static_cast<size_t>(attr)]) out.push_back(t.symbol_name(s));
    return out;
}

} // namespace

TEST_CASE("parsing delimited text") {
    Table t = Table::parse("Car_Model,DoorNo,Engine_Type\n"
                           "BMW I3,4 doors,\n"
                           "BMW I3,,electric\n"
                           "Ford explorer,,V8\n"
                           "Ford explorer,,V6\n");
    CHECK(t.row_count() == 4);
    CHECK(t.attribute_count() == 3);
    int doors = t.attribute_index("DoorNo");
    size_t nulls = 0;
    for (size_t r = 0; r < 4; ++r)
        if (t.at(r, static_cast<size_t>(doors)).is_null()) ++nulls;
    CHECK(nulls == 3);
    size_t engine_nulls = 0;
    for (size_t r = 0; r < 4; ++r)
        if (t.at(r, 2).is_null()) ++engine_nulls;
    CHECK(engine_nulls == 1);
}

TEST_CASE("header-only input yields an empty bag") {
    Table t = Table::parse("a,b,c\n");
    CHECK(t.row_count() == 0);
    CHECK(t.attribute_count() == 3);
}

TEST_CASE("duplicate rows are preserved") {
    Table t = Table::parse("a,b\n1,2\n1,2\n");
    CHECK(t.row_count() == 2);
    CHECK(t.at(0, 0) == t.at(1, 0));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Table::parse(""), Error);
    CHECK_THROWS_AS(Table::parse("a,b\n1\n"), Error);
    CHECK_THROWS_AS(Table::parse("a,a\n1,2\n"), Error);
    try {
        Table::parse("a,b\n1,2,3\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::RaggedRow);
    }
}

TEST_CASE("custom null token and delimiter, headerless naming") {
    ParseOptions opts;
    opts.delimiter = ';';
    opts.null_token = "NA";
    opts.has_header = false;
    Table t = Table::parse("1;NA\nNA;2\n", opts);
    CHECK(t.attributes() == std::vector<std::string>{"c1", "c2"});
    CHECK(t.at(0, 1).is_null());
    CHECK(t.at(1, 0).is_null());
    CHECK_FALSE(t.at(0, 0).is_null());
}

TEST_CASE("null token never becomes a symbol") {
    ParseOptions opts;
    opts.null_token = "NA";
    Table t = Table::parse("a,b\nNA,x\n", opts);
    CHECK(t.at(0, 0).is_null());
    CHECK_FALSE(t.has_symbol("NA"));
}

TEST_CASE("active domains per attribute") {
    Table cars = fixture("cars");
    ActiveDomains d = ActiveDomains::compute(cars);
    CHECK(domain_names(cars, d, cars.attribute_index("DoorNo")) ==
          std::vector<std::string>{"4 doors"});
    CHECK(domain_names(cars, d, cars.attribute_index("Engine_Type")) ==
          std::vector<std::string>{"electric", "V8", "V6"});

    Table pair = fixture("pair");
    ActiveDomains dp = ActiveDomains::compute(pair);
    CHECK(domain_names(pair, dp, 0) == std::vector<std::string>{"2"});
    CHECK(domain_names(pair, dp, 1) == std::vector<std::string>{"1", "2"});

    Table allnull = Table::from_rows({"a"}, {{N}, {N}});
    ActiveDomains dn = ActiveDomains::compute(allnull);
    CHECK(dn.size(0) == 0);
}

TEST_CASE("appending a row extends domains pointwise") {
    for (size_t i = 0; i < 20; ++i) {
        auto inst = spq::test::sweep_instance(i);
        Table ext = inst.table.with_appended({std::vector<std::optional<std::string>>(
            inst.table.attribute_count(), std::optional<std::string>("zz"))});
        ActiveDomains before = ActiveDomains::compute(inst.table);
        ActiveDomains after = ActiveDomains::compute(ext);
        for (size_t a = 0; a < inst.table.attribute_count(); ++a) {
            CHECK(after.size(static_cast<int>(a)) == before.size(static_cast<int>(a)) + 1u);
            for (Sym s : before.order[a]) CHECK(after.contains(static_cast<int>(a), s));
        }
    }
}

TEST_CASE("weak and strong similarity") {
    Table t = Table::from_rows({"X1", "X2"}, {{N, "1"}, {"2", "1"}, {"2", "2"}, {"2", N}});
    AttrSet both{0, 1};
    CHECK(t.weakly_similar(0, 1, both));      // missing matches anything
    CHECK_FALSE(t.weakly_similar(2, 1, both)); // concrete mismatch
    CHECK(t.weakly_similar(3, 3, both));       // reflexive

    CHECK(t.strongly_similar(1, 1, both));
    Table u = Table::from_rows({"X1", "X2"}, {{N, "1"}, {N, "1"}});
    CHECK_FALSE(u.strongly_similar(0, 1, both)); // missing never strongly equal
    CHECK_FALSE(t.strongly_similar(3, 2, both));
    CHECK(t.strongly_similar(3, 2, AttrSet{0}));

    CHECK_THROWS_AS(t.weakly_similar(0, 1, AttrSet{7}), Error);
    CHECK_THROWS_AS(t.weakly_similar(0, 9, both), Error);
}

TEST_CASE("strong similarity implies weak similarity") {
    for (size_t i = 0; i < 25; ++i) {
        auto inst = spq::test::sweep_instance(i);
        const Table& t = inst.table;
        AttrSet attrs;
        for (size_t a = 0; a < t.attribute_count(); ++a) attrs.push_back(static_cast<int>(a));
        for (size_t r = 0; r < t.row_count(); ++r)
            for (size_t s = r; s < t.row_count(); ++s)
                if (t.strongly_similar(r, s, attrs)) CHECK(t.weakly_similar(r, s, attrs));
    }
}

TEST_CASE("extension counts") {
    Table pair = fixture("pair");
    ActiveDomains d = ActiveDomains::compute(pair);
    AttrSet k{0, 1};
    CHECK(extension_count(pair, 1, k, d) == 2); // one missing cell, |domain| = 2
    CHECK(extension_count(pair, 3, k, d) == 1); // complete row: empty product
    Table holes = Table::from_rows({"a", "b"}, {{N, "x"}});
    ActiveDomains dh = ActiveDomains::compute(holes);
    CHECK(extension_count(holes, 0, {0, 1}, dh) == 0); // empty domain factor
    CHECK_THROWS_AS(extension_count(pair, 9, k, d), Error);
}

TEST_CASE("extension enumeration is deterministic and complete") {
    Table pair = fixture("pair");
    ActiveDomains d = ActiveDomains::compute(pair);
    AttrSet k{0, 1};

    auto names = [&](size_t row) {
        ExtensionEnumerator en(pair, row, k, d);
        std::vector<std::vector<std::string>> out;
        std::vector<Sym> proj;
        while (en.next(proj)) {
            std::vector<std::string> row_names;
            for (Sym s : proj) row_names.push_back(pair.symbol_name(s));
            out.push_back(row_names);
        }
        return out;
    };

    CHECK(names(0) == std::vector<std::vector<std::string>>{{"2", "1"}});
    CHECK(names(1) == std::vector<std::vector<std::string>>{{"2", "1"}, {"2", "2"}});
    CHECK(names(3) == std::vector<std::vector<std::string>>{{"2", "2"}});

    // Stream length always equals the computed count.
    for (size_t i = 0; i < 25; ++i) {
        auto inst = spq::test::sweep_instance(i);
        ActiveDomains dom = ActiveDomains::compute(inst.table);
        AttrSet attrs;
        for (size_t a = 0; a < inst.table.attribute_count(); ++a)
            attrs.push_back(static_cast<int>(a));
        for (size_t r = 0; r < inst.table.row_count(); ++r) {
            ExtensionEnumerator en(inst.table, r, attrs, dom);
            uint64_t n = 0;
            std::vector<Sym> proj;
            while (en.next(proj)) ++n;
            CHECK(n == extension_count(inst.table, r, attrs, dom));
        }
    }
}

TEST_CASE("serialize then parse is the identity") {
    ParseOptions opts;
    opts.null_token = "?";
    for (size_t i = 0; i < 25; ++i) {
        auto inst = spq::test::sweep_instance(i);
        Table again = Table::parse(inst.table.serialize(opts), opts);
        CHECK(again.digest() == inst.table.digest());
        CHECK(again.serialize(opts) == inst.table.serialize(opts));
    }
    Table cars = fixture("cars");
    CHECK(Table::parse(cars.serialize(opts), opts).digest() == cars.digest());
}

TEST_CASE("row removal keeps the remaining bag in order") {
    Table t = Table::parse("a\n1\n2\n3\n4\n");
    Table r = t.without_rows({1, 3});
    CHECK(r.row_count() == 2);
    CHECK(t.symbol_name(r.at(0, 0).sym()) == "1");
    CHECK(t.symbol_name(r.at(1, 0).sym()) == "3");
}
