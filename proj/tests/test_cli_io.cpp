#include <doctest.h>

#include "dmcyl/decide.hpp"
#include "dmcyl/expr.hpp"
#include "dmcyl/report.hpp"

using namespace dmcyl;

namespace {

std::string diagram_path(const std::string& name) {
    return std::string(DMCYL_DIAGRAM_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("expression parser accepts the grammar") {
    const auto alg = make_algebra({{"a", 2}, {"b", 2}, {"t", 2}});
    CHECK(parse_polynomial(alg, "-3*t^2").str() == "-3*t^2");
    CHECK(parse_polynomial(alg, "(a+b)^2") ==
          parse_polynomial(alg, "a^2 + 2*a*b + b^2"));
    CHECK(parse_polynomial(alg, "1/2*t + 1/2*t") == parse_polynomial(alg, "t"));
    CHECK(parse_polynomial(alg, "2/4*t") == parse_polynomial(alg, "1/2*t"));
    CHECK(parse_polynomial(alg, "0/5*t").is_zero());
    CHECK(parse_polynomial(alg, "08*t") == parse_polynomial(alg, "8*t"));
    CHECK(parse_polynomial(alg, "0").is_zero());
    CHECK(parse_polynomial(alg, "  a * ( b - b )  ").is_zero());
    CHECK(parse_polynomial(alg, "2*a - a - a").is_zero());
    CHECK(parse_polynomial(alg, "-(a+b)*-1") == parse_polynomial(alg, "a+b"));
}

TEST_CASE("expression parser reports errors with position") {
    const auto alg = make_algebra({{"t", 2}});
    CHECK_THROWS_WITH_AS(parse_polynomial(alg, "nope"),
                         "parse error at offset 4: unknown generator 'nope'", error);
    CHECK_THROWS_AS(parse_polynomial(alg, "t^"), error);
    CHECK_THROWS_AS(parse_polynomial(alg, "1/0"), error);
    CHECK_THROWS_AS(parse_polynomial(alg, "t t"), error);
    CHECK_THROWS_AS(parse_polynomial(alg, "(t"), error);
}

TEST_CASE("the parser rejects garbage without crashing") {
    const auto alg = make_algebra({{"a", 2}, {"t", 4}});
    const std::string chars = "at+-*/^() 0123456789_bxyz";
    std::uint64_t state = 2024;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (state >> 33);
    };
    int parsed = 0, rejected = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::string text;
        const std::size_t len = 1 + next() % 24;
        for (std::size_t i = 0; i < len; ++i)
            text += chars[next() % chars.size()];
        try {
            parse_polynomial(alg, text);
            ++parsed;
        } catch (const error&) {
            ++rejected;
        }
    }
    CHECK(parsed + rejected == 400);
    CHECK(rejected > 0);  // garbage is mostly rejected
}

TEST_CASE("rendered polynomials reparse to themselves") {
    const auto alg = make_algebra({{"a", 2}, {"v", 3}, {"w", 4}});
    std::uint64_t state = 7;
    auto next = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long>((state >> 33) % 9) - 4;
    };
    for (int d = 2; d <= 9; ++d) {
        Polynomial p(alg);
        for (const auto& m : monomial_basis(*alg, d)) {
            Rational c(next(), 1 + (d % 3));
            c.canonicalize();
            p += Polynomial::monomial(alg, m.exp, c);
        }
        CHECK(parse_polynomial(alg, p.str()) == p);
    }
}

TEST_CASE("diagram parse errors name the field and generator") {
    const std::string text = R"json({
      "G": {"name":"SU(3)","rank":2,"weyl_order":6,
            "generators":[{"name":"x","degree":4},{"name":"y","degree":6}]},
      "H": {"name":"S1","rank":1,"weyl_order":1,
            "generators":[{"name":"t","degree":2}]},
      "Kminus": {"name":"SU(3)","rank":2,"weyl_order":6,
            "generators":[{"name":"x","degree":4},{"name":"y","degree":6}]},
      "Kplus": {"name":"SU(3)","rank":2,"weyl_order":6,
            "generators":[{"name":"x","degree":4},{"name":"y","degree":6}]},
      "iota_minus": {"zz": "-3*t^2"},
      "iota_plus": {"x": "-3*t^2", "y": "-2*t^3"}
    })json";
    CHECK_THROWS_WITH_AS(parse_diagram(text, "bad"),
                         "iota_minus: unknown generator 'zz' of SU(3)", error);

    const std::string bad_expr = R"json({
      "G": {"name":"S1","rank":1,"weyl_order":1,"generators":[{"name":"t","degree":2}]},
      "H": {"name":"S1","rank":1,"weyl_order":1,"generators":[{"name":"s","degree":2}]},
      "Kminus": {"name":"S1","rank":1,"weyl_order":1,"generators":[{"name":"t","degree":2}]},
      "Kplus": {"name":"S1","rank":1,"weyl_order":1,"generators":[{"name":"t","degree":2}]},
      "iota_minus": {"t": "s + nope"},
      "iota_plus": {"t": "s"}
    })json";
    try {
        parse_diagram(bad_expr, "bad2");
        FAIL("expected a parse error");
    } catch (const error& e) {
        const std::string what = e.what();
        CHECK(what.find("iota_minus.t") != std::string::npos);
        CHECK(what.find("nope") != std::string::npos);
    }
}

TEST_CASE("diagram files round-trip with identical verdicts") {
    for (const char* name : {"susp_w711.json", "sp1cubed.json", "corank2.json",
                             "rp2_join_w7.json"}) {
        const GroupDiagram d = read_diagram(diagram_path(name));
        const std::string text = diagram_to_json(d).dump(2);
        const GroupDiagram d2 = parse_diagram(text, "roundtrip");
        CHECK(diagram_to_json(d2).dump(2) == text);
        const int D = d.max_degree ? *d.max_degree : default_max_degree(d);
        const CMVerdict v1 = cm_decide(d, D, 1);
        const CMVerdict v2 = cm_decide(d2, D, 1);
        CHECK(decision_name(v1.decision) == decision_name(v2.decision));
        CHECK(basis_name(v1.basis) == basis_name(v2.basis));
        CHECK(v1.fail_degree == v2.fail_degree);
    }
}

TEST_CASE("reports are byte-identical for identical inputs and seeds") {
    const GroupDiagram d = read_diagram(diagram_path("corank2.json"));
    const CMVerdict v1 = cm_decide(d, 16, 42);
    const CMVerdict v2 = cm_decide(d, 16, 42);
    ordered_json r1 = report_header({"cm", "corank2.json", 16, 42});
    r1["verdict"] = verdict_to_json(v1);
    ordered_json r2 = report_header({"cm", "corank2.json", 16, 42});
    r2["verdict"] = verdict_to_json(v2);
    CHECK(r1.dump() == r2.dump());
}

TEST_CASE("report header carries the conventions") {
    const ordered_json h = report_header({"cm", "x.json", 20, 7});
    CHECK(h.at("tool") == "dmcyl");
    CHECK(h.at("version") == kToolVersion);
    CHECK(h.at("monomial_order") == kMonomialOrderTag);
    CHECK(h.at("max_degree") == 20);
    CHECK(h.at("seed") == 7);
}

TEST_CASE("exit codes follow the verdict contract") {
    CMVerdict definite;
    definite.decision = CMVerdict::Decision::CohenMacaulay;
    CHECK(verdict_exit_code(definite) == 0);
    definite.decision = CMVerdict::Decision::NotCohenMacaulay;
    CHECK(verdict_exit_code(definite) == 0);
    CMVerdict unknown;
    unknown.decision = CMVerdict::Decision::Unknown;
    CHECK(verdict_exit_code(unknown) == 2);
    CHECK(decision_name(unknown.decision) == "UnknownUpTo");
}

TEST_CASE("truncated ring serialization") {
    const GroupDiagram d = read_diagram(diagram_path("susp_w711.json"));
    auto cyl = std::make_shared<CylinderAlgebra>(borel_model(d, 8));
    TruncatedRing ring = ring_truncation(cyl, 8);
    ring.tabulate();
    const ordered_json j = ring_to_json(ring);
    CHECK(j.at("bound") == 8);
    CHECK(j.at("monomial_order") == kMonomialOrderTag);
    CHECK(j.at("betti") == ordered_json::array({1, 0, 0, 1, 1, 0, 1, 0, 1}));
    CHECK(j.at("representatives").contains("3"));
    CHECK(j.at("representatives").at("3").at(0).at("label") == "h3_0");
    // the serialized table contains h3_0 * h3_0 = 0
    bool found = false;
    for (const auto& e : j.at("products"))
        if (e.at("left") == "h3_0" && e.at("right") == "h3_0") {
            found = true;
            for (const auto& c : e.at("value"))
                CHECK(c == "0");
        }
    CHECK(found);
}

TEST_CASE("verdict JSON embeds witnesses as coefficient vectors") {
    const GroupDiagram d = read_diagram(diagram_path("susp_w711.json"));
    auto cyl = std::make_shared<CylinderAlgebra>(borel_model(d, 20));
    const TruncatedRing ring = ring_truncation(cyl, 20);
    const CMVerdict v = cm_from_invariants(ring, *cyl, d, 1);
    const ordered_json j = verdict_to_json(v);
    CHECK(j.at("decision") == "NotCohenMacaulay");
    REQUIRE(j.contains("depth"));
    CHECK(j.at("depth").at("socle").at("degree") == 3);
    REQUIRE(j.contains("zero_divisor"));
    CHECK(j.at("zero_divisor").at("trick_value") == "t");
}
