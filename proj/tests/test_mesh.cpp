#include "qtem/mesh.hpp"

#include <cstdio>
#include <sstream>

#include <gtest/gtest.h>

using namespace qtem;

namespace {

TEST(Mesh, StructuredGeneratorCounts) {
    const Mesh m1 = gen_rect_mesh(1.0, 1.0, 1, 1);
    EXPECT_EQ(m1.nodes.size(), 9u);
    EXPECT_EQ(m1.elements.size(), 2u);
    EXPECT_EQ(m1.boundary.size(), 8u);

    const Mesh m2 = gen_rect_mesh(2.0, 1.0, 4, 2);
    EXPECT_EQ(m2.nodes.size(), 45u);
    EXPECT_EQ(m2.elements.size(), 16u);
    EXPECT_EQ(m2.boundary.size(), 24u);
}

TEST(Mesh, StructuredGeneratorGeometry) {
    const Mesh m = gen_rect_mesh(2.0, 1.0, 4, 2);
    double total = 0.0;
    for (std::size_t e = 0; e < m.elements.size(); ++e) {
        const TriangleGeometry g = element_geometry(m, e);
        EXPECT_GT(g.area, 0.0);
        total += g.area;
    }
    EXPECT_NEAR(total, 2.0, 1e-12);
}

TEST(Mesh, GeneratorRejectsBadArguments) {
    EXPECT_THROW(gen_rect_mesh(0.0, 1.0, 1, 1), InvalidDimensions);
    EXPECT_THROW(gen_rect_mesh(1.0, 1.0, 0, 1), InvalidDimensions);
}

TEST(Mesh, ValidationCatchesBrokenMeshes) {
    Mesh m = gen_rect_mesh(1.0, 1.0, 1, 1);
    std::swap(m.elements[0][0], m.elements[0][1]); // clockwise now
    EXPECT_THROW(validate_mesh(m), InvariantViolation);

    Mesh m2 = gen_rect_mesh(1.0, 1.0, 1, 1);
    m2.nodes[m2.elements[0][3]].x += 0.05; // midside node off the midpoint
    EXPECT_THROW(validate_mesh(m2), InvariantViolation);

    Mesh m3 = gen_rect_mesh(1.0, 1.0, 1, 1);
    m3.elements[0][2] = 1000;
    EXPECT_THROW(validate_mesh(m3), InvariantViolation);

    Mesh m4 = gen_rect_mesh(1.0, 1.0, 1, 1);
    m4.boundary.push_back(99);
    EXPECT_THROW(validate_mesh(m4), InvariantViolation);
}

TEST(Mesh, WriteReadRoundTripIsByteIdentical) {
    const Mesh m = gen_rect_mesh(1.5, 0.75, 3, 2);
    std::ostringstream first;
    write_mesh(first, m);
    std::istringstream in(first.str());
    const Mesh back = read_mesh(in);
    std::ostringstream second;
    write_mesh(second, back);
    EXPECT_EQ(first.str(), second.str());
    EXPECT_EQ(back.nodes.size(), m.nodes.size());
    EXPECT_EQ(back.elements, m.elements);
    EXPECT_EQ(back.boundary, m.boundary);
}

TEST(Mesh, ReaderSkipsCommentsAndBlankLines) {
    const Mesh m = gen_rect_mesh(1.0, 1.0, 1, 1);
    std::ostringstream plain;
    write_mesh(plain, m);
    std::string commented = "# header comment\n\n" + plain.str();
    const std::size_t pos = commented.find("elements");
    commented.insert(pos, "# between sections\n\n");
    std::istringstream in(commented);
    const Mesh back = read_mesh(in);
    EXPECT_EQ(back.elements, m.elements);
}

TEST(Mesh, ParseErrorsCarryLineNumbers) {
    const auto expect_parse_error = [](const std::string& text,
                                       const std::string& fragment) {
        std::istringstream in(text);
        try {
            read_mesh(in);
            FAIL() << "expected ParseError for: " << fragment;
        } catch (const ParseError& e) {
            EXPECT_NE(std::string(e.what()).find("line"), std::string::npos);
            EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos)
                << e.what();
        }
    };
    expect_parse_error("qtmesh 2\n", "version");
    expect_parse_error("notamesh 1\n", "qtmesh");
    expect_parse_error("qtmesh 1\nnodes x\n", "nodes");
    expect_parse_error("qtmesh 1\nnodes 1\n5 0 0\n", "sequential");
    expect_parse_error("qtmesh 1\nnodes 1\n0 0 0 7\n", "trailing");
    expect_parse_error("qtmesh 1\nnodes 1\n0 0 0\nelements 1\n0 0 0 0\n",
                       "six node ids");
    expect_parse_error("qtmesh 1\nnodes 0\nelements 0\nboundary 0\nstray\n",
                       "unexpected content");
}

TEST(Mesh, FileRoundTrip) {
    const Mesh m = gen_rect_mesh(1.0, 2.0, 2, 2);
    const std::string path = ::testing::TempDir() + "qtem_mesh_roundtrip.txt";
    write_mesh_file(path, m);
    const Mesh back = read_mesh_file(path);
    EXPECT_EQ(back.elements, m.elements);
    EXPECT_THROW(read_mesh_file(path + ".missing"), ParseError);
    std::remove(path.c_str());
}

} // namespace
