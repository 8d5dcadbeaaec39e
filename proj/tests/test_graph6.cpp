#include <random>
#include <sstream>

#include "doctest.h"

#include "chromadisc/constructions.hpp"
#include "chromadisc/errors.hpp"
#include "chromadisc/graph6.hpp"

using namespace chromadisc;

namespace {

// Encodings produced by an independent graph6 writer.
constexpr const char* kPath63 =
    "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G";
constexpr const char* kStar64 =
    "~?@?saCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C???O???_???_???O???C????_???A????C????C????A?????_????C?????O?????_?????_?????O?????C??????_?????A??????C??????C??????A???????_??????C???????O???????_???????_???????O???????C????????_???????A????????C????????C????????A?????????_????????C?????????O?????????_?????????_?????????O?????????C??????????";

ParseErrorKind kind_of(const std::string& text) {
  try {
    parse_graph6(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("no ParseError for '" << text << "'");
  return ParseErrorKind::kBadEdgeList;
}

}  // namespace

TEST_CASE("reference encodings") {
  CHECK(write_graph6(complete_graph(3)) == "Bw");
  CHECK(write_graph6(cycle_graph(5)) == "Dhc");
  CHECK(write_graph6(complete_graph(4)) == "C~");
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(Graph(0)) == "?");
  CHECK(write_graph6(petersen_graph()) == "IheA@GUAo");
  CHECK(write_graph6(Graph(7, {{0, 6}, {2, 5}, {1, 3}})) == "FA?c?");
  CHECK(write_graph6(path_graph(63)) == kPath63);
  CHECK(write_graph6(star_graph(63)) == kStar64);
  CHECK(parse_graph6(kPath63) == path_graph(63));
  CHECK(parse_graph6(kStar64) == star_graph(63));
  CHECK(parse_graph6(">>graph6<<Dhc") == cycle_graph(5));
}

TEST_CASE("random graphs round-trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 65);
    const Graph g = random_graph(n, 0.3, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("malformed records are rejected by kind") {
  CHECK(kind_of("") == ParseErrorKind::kEmptyRecord);
  CHECK(kind_of("Dh") == ParseErrorKind::kLengthMismatch);
  CHECK(kind_of("Dhcc") == ParseErrorKind::kLengthMismatch);
  CHECK(kind_of("D h") == ParseErrorKind::kCharacterOutOfRange);
  // K3 is "Bw"; "B~" sets the three padding bits.
  CHECK(kind_of("B~") == ParseErrorKind::kTrailingBitsNonzero);
  CHECK(kind_of("~?") == ParseErrorKind::kMalformedHeader);
  CHECK(kind_of("~??B") == ParseErrorKind::kMalformedHeader);  // order 3 in the long form
  CHECK(kind_of(" ") == ParseErrorKind::kMalformedHeader);
  CHECK(kind_of("~??A") == ParseErrorKind::kMalformedHeader);
  CHECK(kind_of("~?A?") == ParseErrorKind::kTooManyVertices);  // 128 vertices
  CHECK(kind_of("~~??????") == ParseErrorKind::kTooManyVertices);
}

TEST_CASE("streams skip blank lines and report the failing line") {
  std::istringstream in("Bw\n\nDhc\r\n");
  const auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == cycle_graph(5));

  std::istringstream bad("Bw\nDh\n");
  try {
    read_graph6_stream(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(e.kind() == ParseErrorKind::kLengthMismatch);
  }
}

TEST_CASE("edge lists") {
  const Graph c5 = cycle_graph(5);
  std::istringstream in(write_edge_list(c5));
  CHECK(parse_edge_list(in) == c5);
  std::istringstream bad("3 1\n0 3\n");
  CHECK_THROWS_AS(parse_edge_list(bad), ParseError);
  std::istringstream truncated("3 2\n0 1\n");
  CHECK_THROWS_AS(parse_edge_list(truncated), ParseError);
}
