#include "doctest.h"
#include "support/generators.hpp"

#include "tagbar/cli.hpp"
#include "tagbar/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tagbar;

namespace
{

ExtReal const inf = ExtReal::infinity();

std::string data(std::string const& name) { return std::string(TAGBAR_DATA_DIR) + "/" + name; }

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> const& args)
{
    std::ostringstream out, err;
    int const code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(std::string const& name, std::string const& text)
{
    auto dir = std::filesystem::temp_directory_path() / "tagbar_tests";
    std::filesystem::create_directories(dir);
    auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("sample complex files round trip")
{
    for (auto name : {"s2.cplx", "ties_pr.cplx", "ties_ps.cplx", "scalar.cplx"})
    {
        auto f = parse_complex_file(read_file(data(name)));
        auto text = serialize_complex_file(f);
        CHECK(parse_complex_file(text) == f);
        CHECK(serialize_complex_file(parse_complex_file(text)) == text);
    }
    for (auto name : {"triangle.simp", "hexagon.simp", "points.simp"})
    {
        auto f = parse_simplicial_file(read_file(data(name)));
        CHECK(parse_simplicial_file(serialize_simplicial_file(f)) == f);
        CHECK(looks_simplicial(read_file(data(name))));
    }
    CHECK_FALSE(looks_simplicial(read_file(data("s2.cplx"))));
}

TEST_CASE("parsed complex contents")
{
    auto f = parse_complex_file(read_file(data("ties_pr.cplx")));
    CHECK(f.complex.basis(1) == std::vector<Label>{"r", "s"});
    REQUIRE(f.weights.has_value());
    CHECK((*f.weights)[0][0][0] == 2.8284);
    REQUIRE(f.order.size() == 1);
    CHECK(f.order[0].first == PairRef{2, "p", "r"});
    auto w = f.weighted();
    CHECK(w.precedes(2, 0, 0, 2, 0, 1));

    auto g = parse_complex_file(read_file(data("scalar.cplx")));
    REQUIRE(g.filter.has_value());
    CHECK(g.filtered().value(1, 0) == 2.0);
    CHECK(g.weighted().weight(1, 0, 0) == 2.0);
}

TEST_CASE("random weighted complexes round trip")
{
    testgen::Rng rng(109);
    for (int trial = 0; trial < 50; ++trial)
    {
        auto w = testgen::random_generic(rng, testgen::random_complex(rng, 4, 10));
        auto f = complex_file_of(w);
        auto back = parse_complex_file(serialize_complex_file(f));
        CHECK(back == f);
        CHECK(back.weighted().complex() == w.complex());
    }
}

TEST_CASE("complex file errors name the line")
{
    auto fails = [](std::string const& text, std::string const& needle) {
        try
        {
            parse_complex_file(text);
        }
        catch (ParseError const& e)
        {
            std::string const msg = e.what();
            CHECK_MESSAGE(msg.find(needle) != std::string::npos, msg);
            return;
        }
        FAIL("no ParseError for: " << text);
    };
    fails("dim 0 x\nbnd y : x\n", "line 2");
    fails("dim 0 x\ndim 1 a\nbnd a : x\nw a x\n", "line 4");
    fails("dim 0 x\ndim 1 a\nbnd a : x\nw a x 1\nf x 0\n", "line 5");
    fails("dim 0 x\ndim 1 a\nbnd a : x\nw a x -1\n", "line 4");
    fails("dim 0 x x\n", "line 1");
    fails("bnd a : x\ndim 0 x\ndim 1 a\n", "line 1");
    fails("dim 0 x\ndim 1 a\nbogus\n", "line 3");
}

TEST_CASE("incomplete weight tables are rejected")
{
    CHECK_THROWS_AS(parse_complex_file("dim 0 x y\ndim 1 a\nbnd a : x y\nw a x 1\n"), ParseError);
}

TEST_CASE("simplicial file errors")
{
    CHECK_THROWS_AS(parse_simplicial_file("v a 0 0\ns a b\n"), ParseError);
    CHECK_THROWS_AS(parse_simplicial_file("v a 0 0\nv b 1 0\npair a -> a c\n"), ParseError);
}

TEST_CASE("barcode files")
{
    auto b = parse_barcode_file("#tagged\n2 1 1\n0 0 inf\n2 0 inf\n");
    REQUIRE(b.tagged);
    TaggedBarcode expected;
    expected.add(2, {1.0, 1.0});
    expected.add(2, {0.0, inf});
    expected.add(0, {0.0, inf});
    CHECK(b.tagged_barcode == expected);
    CHECK(serialize_barcode(expected) == "#tagged\n0 0 inf\n2 0 inf\n2 1 1\n");

    auto p = parse_barcode_file("#persistence\n0 0 inf\n0 1 2\n");
    REQUIRE_FALSE(p.tagged);
    CHECK(p.persistence.degree(0).size() == 2);
    CHECK(serialize_barcode(p.persistence) == "#persistence\n0 0 inf\n0 1 2\n");

    CHECK_THROWS_AS(parse_barcode_file("0 0 inf\n"), ParseError);
    CHECK_THROWS_AS(parse_barcode_file(""), ParseError);
    CHECK_THROWS_AS(parse_barcode_file("#tagged\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_barcode_file("#persistence\n0 2 1\n"), ParseError);

    testgen::Rng rng(113);
    for (int trial = 0; trial < 50; ++trial)
    {
        auto r = testgen::random_barcode(rng, 8, 3);
        CHECK(parse_barcode_file(serialize_barcode(r)).tagged_barcode == r);
    }
}

TEST_CASE("cli: worked examples")
{
    auto y = run({"tagbar", "--construction", "y", data("s2.cplx")});
    CHECK(y.code == 0);
    CHECK(y.out == "#tagged\n0 0 inf\n2 0 inf\n2 1 1\n");
    auto x = run({"tagbar", "--construction", "x", data("s2.cplx")});
    CHECK(x.out == y.out);

    auto pr = run({"tagbar", "--construction", "y", data("ties_pr.cplx")});
    CHECK(pr.out == "#tagged\n0 0 inf\n1 2 2\n2 0 inf\n2 1 1\n");
    auto ps = run({"tagbar", "--construction", "y", data("ties_ps.cplx")});
    CHECK(ps.out == "#tagged\n0 0 inf\n1 2.8284 2.8284\n2 0 inf\n2 1 1\n");
    auto xpr = run({"tagbar", "--construction", "x", data("ties_pr.cplx")});
    CHECK(xpr.out == "#tagged\n0 0 inf\n1 3 3\n2 0 inf\n2 1 1\n");
}

TEST_CASE("cli: default tie order warning")
{
    auto path = temp_file("ties_noorder.cplx", "dim 0 x\ndim 1 a b\nbnd a : x\nbnd b : x\nw a x 1\nw b x 1\n");
    auto r = run({"tagbar", path});
    CHECK(r.code == 0);
    CHECK(r.err.find("default tie order") != std::string::npos);
}

TEST_CASE("cli: validate")
{
    CHECK(run({"validate", data("s2.cplx")}).code == 0);
    CHECK(run({"validate", data("triangle.simp")}).code == 0);
    auto bad = temp_file("bad.cplx", "dim 0 x\ndim 1 e\ndim 2 f\nbnd e : x\nbnd f : e\n");
    auto r = run({"validate", bad});
    CHECK(r.code == 1);
    CHECK_FALSE((r.out.empty() && r.err.empty()));
    auto broken = temp_file("broken.cplx", "dim 0 x\nbnd q : x\n");
    CHECK(run({"validate", broken}).code == 2);
    CHECK(run({"validate", "/nonexistent/file.cplx"}).code == 2);
}

TEST_CASE("cli: distances")
{
    auto a = temp_file("a.bar", "#tagged\n2 1 1\n2 0 inf\n0 0 inf\n");
    auto b = temp_file("b.bar", "#tagged\n2 1.2 1.2\n2 0 inf\n0 0 inf\n");
    auto c = temp_file("c.bar", "#tagged\n0 0 inf\n");
    auto d = run({"dint", a, b});
    CHECK(d.code == 0);
    CHECK(std::stod(d.out) == doctest::Approx(0.2));
    CHECK(run({"bottleneck", a, c}).out == "inf\n");
    CHECK(run({"bottleneck", a, c, "--degree", "0"}).out == "0\n");
    auto m = run({"bottleneck", a, b, "--degree", "2", "--matching"});
    CHECK(m.code == 0);
    CHECK(m.out.find("[0,1,1)") != std::string::npos);
}

TEST_CASE("cli: persistence and correspondence")
{
    auto p = run({"persist", data("scalar.cplx")});
    CHECK(p.code == 0);
    CHECK(p.out == "#persistence\n0 0 inf\n0 1 2\n");
    auto c = run({"correspond", data("scalar.cplx"), "--seed", "5"});
    CHECK(c.code == 0);
    CHECK(c.out.find("PASS") != std::string::npos);
    CHECK(run({"persist", data("s2.cplx")}).code != 0);
}

TEST_CASE("cli: simplicial commands")
{
    auto m = run({"morse", data("triangle.simp")});
    CHECK(m.code == 0);
    auto parsed = parse_complex_file(m.out);
    CHECK(parsed.complex.basis(0) == std::vector<Label>{"a"});
    CHECK(parsed.complex.total_dim() == 1);

    auto g = run({"morse", data("hexagon.simp"), "--greedy-seed", "3"});
    CHECK(g.code == 0);
    CHECK(betti_numbers(parse_complex_file(g.out).complex) == std::vector<std::size_t>{1, 1});

    auto s = run({"subdivide", data("hexagon.simp"), "--iters", "2"});
    CHECK(s.code == 0);
    auto sub = parse_simplicial_file(s.out);
    CHECK(sub.complex.count(1) == 24);
    CHECK(simplicial_betti(sub.complex) == std::vector<std::size_t>{1, 1});

    auto xi = run({"xi", data("points.simp")});
    CHECK(xi.code == 0);
    CHECK(std::stod(xi.out) == doctest::Approx(1.0));
}

TEST_CASE("cli: perturbation")
{
    auto r = run({"perturb", data("s2.cplx"), "--delta", "0.25", "--trials", "20", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("bound PASS") != std::string::npos);
}

TEST_CASE("cli: usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"tagbar", "--construction", "z", data("s2.cplx")}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
