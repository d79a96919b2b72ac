#include <doctest.h>

#include <sstream>

#include "packtree/io.hpp"

using namespace packtree;

TEST_CASE("edge list round trip") {
    Tree t = Tree::from_edges({{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    std::ostringstream out;
    write_edge_list(t, out);
    CHECK(out.str() == "0 1\n1 2\n1 3\n3 4\n");
    std::istringstream in(out.str());
    Tree back = read_edge_list(in);
    CHECK(back == t);
}

TEST_CASE("edge list parsing accepts comments and blank lines") {
    std::istringstream in("# a tree\n0 1\n\n  1 2 # tail comment\n# end\n");
    Tree t = read_edge_list(in);
    CHECK(t.order() == 3);
    CHECK(t.distance(0, 2) == 2);
}

TEST_CASE("edge list parse errors") {
    {
        std::istringstream in("");
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    }
    {
        std::istringstream in("# only comments\n");
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    }
    {
        std::istringstream in("0 1\n2\n");
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    }
    {
        std::istringstream in("0 1 2\n");
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    }
    {
        std::istringstream in("0 x\n");
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    }
    {
        std::istringstream in("0 1\n1 2\n0 2\n");
        CHECK_THROWS_AS(read_edge_list(in), NotATree);
    }
}

TEST_CASE("colouring JSON round trip") {
    Colouring c(3, {1, 2, 1, 3});
    std::string s = colouring_to_json(c);
    std::istringstream in(s);
    Colouring back = read_colouring_json(in);
    CHECK(back == c);

    std::istringstream bad1("{\"k\": 3}");
    CHECK_THROWS_AS(read_colouring_json(bad1), ParseError);
    std::istringstream bad2("{\"k\": 2, \"colours\": [1, 3]}");
    CHECK_THROWS_AS(read_colouring_json(bad2), BadParameter);
    std::istringstream bad3("not json");
    CHECK_THROWS_AS(read_colouring_json(bad3), ParseError);
}

TEST_CASE("certificate JSON shape") {
    Certificate cert{SeedId::F1, {{OpKind::O1, 3}, {OpKind::O7, -1, 0, 1}}, {}};
    std::string s = certificate_to_json(cert);
    CHECK(s.find("\"F1\"") != std::string::npos);
    CHECK(s.find("\"O1\"") != std::string::npos);
    CHECK(s.find("\"anchor\":3") != std::string::npos);
    CHECK(s.find("\"u\":0") != std::string::npos);
    std::istringstream in(s);
    CHECK(read_certificate_json(in) == cert);

    // structural problems are ParseError, bad values are BadParameter
    std::istringstream bad1("{\"ops\": []}");
    CHECK_THROWS_AS(read_certificate_json(bad1), ParseError);
    std::istringstream bad2("{\"seed\": \"F9\", \"ops\": []}");
    CHECK_THROWS_AS(read_certificate_json(bad2), BadParameter);
}

TEST_CASE("dot export") {
    Tree t = Tree::from_edges({{0, 1}});
    std::ostringstream out;
    write_dot(t, Colouring(2, {1, 2}), out);
    std::string s = out.str();
    CHECK(s.find("graph") != std::string::npos);
    CHECK(s.find("0:1") != std::string::npos);
    CHECK(s.find("1:2") != std::string::npos);
    CHECK(s.find("--") != std::string::npos);
}
