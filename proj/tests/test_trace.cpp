#include "doctest.h"

#include "trefl/catalog.hpp"
#include "trefl/verifier.hpp"

#include <cstdio>
#include <fstream>

using namespace trefl;

#ifndef TREFL_DATA_DIR
#error "TREFL_DATA_DIR must point at the bundled trace files"
#endif

namespace {

const std::string kDataDir = TREFL_DATA_DIR;

MapBindings bindings_a() { return {{"R", Catalog::instance().map("3dr")}}; }

MapBindings bindings_b() {
    const auto& cat = Catalog::instance();
    return {{"M", cat.map("3dm")}, {"N", cat.map("3dn")}, {"R", cat.map("3dr-crystal")}};
}

}  // namespace

TEST_CASE("trace files load and frame the twenty-factor identity") {
    TraceFile a = load_trace(kDataDir + "/trace_a.dsl");
    CHECK(a.lines.size() == 27);
    CHECK(a.signature_labels.size() == 15);
    for (const auto& line : a.lines) CHECK(line.factors.size() == 20);

    // first and last lines are exactly the registered identity's two sides
    const EquationSpec& r20 = Catalog::instance().equation("r20");
    CHECK(composite_to_string(a.lines.front()) == composite_to_string(r20.lhs));
    CHECK(composite_to_string(a.lines.back()) == composite_to_string(r20.rhs));

    TraceFile b = load_trace(kDataDir + "/trace_b.dsl");
    CHECK(b.lines.size() == 27);
    const EquationSpec& r20s = Catalog::instance().equation("r20-super");
    CHECK(composite_to_string(b.lines.front()) == composite_to_string(r20s.lhs));
    CHECK(composite_to_string(b.lines.back()) == composite_to_string(r20s.rhs));
}

TEST_CASE("every trace line is the same map") {
    TraceFile a = load_trace(kDataDir + "/trace_a.dsl");
    CHECK(check_trace(a, bindings_a(), Backend::sample(5, 21), "trace-A").pass);

    TraceFile b = load_trace(kDataDir + "/trace_b.dsl");
    Backend sampled = Backend::sample(10, 22);
    sampled.bound = 2;
    CHECK(check_trace(b, bindings_b(), sampled, "trace-B").pass);
}

TEST_CASE("a transposed index is caught and located") {
    TraceFile a = load_trace(kDataDir + "/trace_a.dsl");
    // corrupt line 13: swap the first factor's first two labels
    std::string tmp = std::string("/tmp/trefl_corrupt_trace.dsl");
    {
        std::ofstream out(tmp);
        out << "signature";
        for (const auto& s : a.signature_labels.slots()) out << " " << s.label;
        out << "\n";
        for (size_t i = 0; i < a.lines.size(); ++i) {
            CompositeExpr line = a.lines[i];
            if (i == 12) std::swap(line.factors[0].labels[0], line.factors[0].labels[1]);
            out << composite_to_string(line) << "\n";
        }
    }
    TraceFile corrupt = load_trace(tmp);
    auto rep = check_trace(corrupt, bindings_a(), Backend::sample(5, 23), "trace-corrupt");
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.counterexample.has_value());
    CHECK(rep.counterexample->where.find("line 13") != std::string::npos);
    std::remove(tmp.c_str());
}

TEST_CASE("trace file errors") {
    CHECK_THROWS_AS(load_trace(kDataDir + "/no-such-file.dsl"), Error);

    std::string tmp = "/tmp/trefl_bad_trace.dsl";
    {
        std::ofstream out(tmp);
        out << "R[1,2,3]\n";  // missing signature header
    }
    CHECK_THROWS_AS(load_trace(tmp), Error);
    {
        std::ofstream out(tmp);
        out << "signature 1 2 3\nR[1,2\n";
    }
    CHECK_THROWS_WITH_AS(load_trace(tmp), doctest::Contains(":2:"), Error);
    std::remove(tmp.c_str());
}
