#include <doctest.h>

#include <stdexcept>
#include <unordered_set>

#include "isolation/vertex_set.hpp"

using isolation::VertexSet;

TEST_CASE("insert, erase and iteration stay sorted") {
  VertexSet s(10, {7, 2, 5});
  CHECK(s.size() == 3);
  CHECK(s.to_vector() == std::vector<std::size_t>{2, 5, 7});
  s.erase(5);
  s.insert(0);
  CHECK(s.to_string() == "{0,2,7}");
  CHECK(s.first() == 0);
  CHECK(s.next(3) == 7);
  CHECK(s.next(8) == VertexSet::npos);
  CHECK_THROWS_AS(s.insert(10), std::out_of_range);
}

TEST_CASE("large universes use the heap representation") {
  VertexSet a(130, {0, 64, 129});
  VertexSet b(130, {64, 100});
  CHECK((a & b).to_vector() == std::vector<std::size_t>{64});
  CHECK((a | b).size() == 4);
  CHECK((a - b).to_string() == "{0,129}");
  CHECK(VertexSet::full(130).size() == 130);
  CHECK(a.intersects(b));
  CHECK((a & b).is_subset_of(b));
}

TEST_CASE("mismatched universes are rejected") {
  VertexSet a(5), b(6);
  CHECK_THROWS_AS(a |= b, std::invalid_argument);
}

TEST_CASE("ordering is lexicographic on members") {
  CHECK(VertexSet(5, {0, 4}) < VertexSet(5, {1}));
  CHECK(VertexSet(5, {0}) < VertexSet(5, {0, 1}));
  CHECK(VertexSet(5) < VertexSet(5, {0}));
}

TEST_CASE("equal sets hash equally") {
  std::unordered_set<VertexSet, isolation::VertexSetHash> seen;
  seen.insert(VertexSet(8, {1, 3}));
  CHECK(seen.count(VertexSet(8, {3, 1})) == 1);
  CHECK(seen.count(VertexSet(8, {1})) == 0);
}
