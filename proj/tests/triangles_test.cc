// Copyright 2026 The Gapmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gapmatch/triangles.h"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "gapmatch/families.h"
#include "gapmatch/oracle.h"

namespace gapmatch {
namespace {

using EdgeList = std::vector<std::pair<std::int32_t, std::int32_t>>;

QueryGraph k(std::int32_t n) {
  EdgeList e;
  for (std::int32_t a = 0; a < n; ++a) {
    for (std::int32_t b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return QueryGraph(n, e);
}

QueryGraph star(std::int32_t leaves) {
  EdgeList e;
  for (std::int32_t v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return QueryGraph(leaves + 1, e);
}

QueryGraph cycle(std::int32_t n) {
  EdgeList e;
  for (std::int32_t v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return QueryGraph(n, e);
}

TEST(VertexTriangles, Triangle) {
  auto g = k(3);
  for (std::int32_t u = 0; u < 3; ++u) {
    EXPECT_EQ(vertex_triangles(g, u), (std::vector<Triangle>{{0, 1, 2}}));
    EXPECT_EQ(vertex_triangles_bounded(g, u, 1), (std::vector<Triangle>{{0, 1, 2}}));
  }
}

TEST(VertexTriangles, StarCenter) {
  auto g = star(5);
  EXPECT_TRUE(vertex_triangles(g, 0).empty());
  EXPECT_TRUE(vertex_triangles_bounded(g, 0, 3).empty());
}

TEST(VertexTriangles, K4) {
  auto g = k(4);
  for (std::int32_t u = 0; u < 4; ++u) EXPECT_EQ(vertex_triangles(g, u).size(), 3u);
  EXPECT_EQ(enumerate_triangles_oracle(g).size(), 4u);
  EXPECT_EQ(all_triangles(g).size(), 4u);
}

TEST(VertexTriangles, C5) {
  EXPECT_TRUE(enumerate_triangles_oracle(cycle(5)).empty());
  EXPECT_TRUE(all_triangles(cycle(5)).empty());
}

TEST(VertexTriangles, UnknownVertex) {
  auto g = k(3);
  EXPECT_THROW(vertex_triangles(g, 3), std::out_of_range);
  EXPECT_THROW(vertex_triangles_bounded(g, -1, 0), std::out_of_range);
}

TEST(QueryGraph, RejectsBadInput) {
  EXPECT_THROW(QueryGraph(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(QueryGraph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(QueryGraph(2, {{0, 2}}), std::out_of_range);
}

TEST(QueryGraph, Parse) {
  std::istringstream in("# triangle\n0 1\n\n1 2\n2 0\n");
  auto g = QueryGraph::parse(in);
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.edges().size(), 3u);
  std::istringstream bad("0 x\n");
  EXPECT_THROW(QueryGraph::parse(bad), std::invalid_argument);
}

TEST(VertexTriangles, RandomGraphsMatchOracle) {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    std::int32_t n = 3 + static_cast<std::int32_t>(rng() % 15);
    QueryGraph g(n, random_simple_graph(rng, n, 1 + static_cast<std::int32_t>(rng() % 50)));
    auto expect = enumerate_triangles_oracle(g);
    std::map<Triangle, int> seen;
    TriangleIndex index(g);
    for (std::int32_t u = 0; u < n; ++u) {
      auto fresh = vertex_triangles(g, u);
      // Repeated queries on one index see no leftovers.
      ASSERT_EQ(index.vertex_triangles(u), fresh);
      ASSERT_EQ(index.vertex_triangles(u), fresh);
      for (const auto& t : fresh) {
        ASSERT_TRUE(t[0] == u || t[1] == u || t[2] == u);
        ++seen[t];
      }
      for (std::int64_t alpha : {0, 1, 5}) {
        ASSERT_EQ(vertex_triangles_bounded(g, u, alpha), fresh) << "alpha " << alpha;
      }
    }
    std::vector<Triangle> collapsed;
    for (const auto& [t, count] : seen) {
      ASSERT_EQ(count, 3);
      collapsed.push_back(t);
    }
    ASSERT_EQ(collapsed, expect);
    ASSERT_EQ(all_triangles(g), expect);
  }
}

TEST(MakeTriangle, Sorts) {
  EXPECT_EQ(make_triangle(5, 1, 3), (Triangle{1, 3, 5}));
}

}  // namespace
}  // namespace gapmatch
