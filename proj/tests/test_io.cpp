#include "doctest.h"
#include "helpers.hpp"

#include <cstdio>
#include <string>

#include "signedspan/io.hpp"

using namespace signedspan;
using nlohmann::json;

namespace {

std::string error_of(const json& doc) {
  try {
    io::parse_instance(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("instance round trip") {
  const auto host = testing::host_from(5, {{1, 2}, {2, 5}, {3, 4}});
  const json doc = io::instance_to_json(host);
  CHECK(doc["n"] == 5);
  CHECK(doc["plus_edges"].size() == 3);
  CHECK(io::parse_instance(doc) == host);

  const auto pattern = testing::pattern_from(5, {{1, 2}, {4, 5}});
  CHECK(io::parse_pattern(io::pattern_to_json(pattern)) == pattern);
}

TEST_CASE("malformed instances name the offending field") {
  CHECK(error_of(json::array()).find("object") != std::string::npos);
  CHECK(error_of(json{{"plus_edges", json::array()}}).find("'n'") != std::string::npos);
  CHECK(error_of(json{{"n", "four"}, {"plus_edges", json::array()}}).find("'n'") !=
        std::string::npos);
  CHECK(error_of(json{{"n", 4}}).find("plus_edges") != std::string::npos);
  CHECK(error_of(json::parse(R"({"n":4,"plus_edges":[[1,2],[3]]})")).find("plus_edges[1]") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"n":4,"plus_edges":[[2,1]]})")).find("u < v") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"n":4,"plus_edges":[[1,9]]})")).find("outside") !=
        std::string::npos);
  CHECK(error_of(json::parse(R"({"n":4,"plus_edges":[[1,2],[1,2]]})")).find("duplicate") !=
        std::string::npos);
  CHECK_THROWS_AS(io::parse_pattern(json::parse(R"({"n":3,"edges":[[1,1]]})")), InputError);
}

TEST_CASE("digest ignores field and edge order") {
  const auto a = io::parse_instance(json::parse(R"({"n":5,"plus_edges":[[1,2],[3,4]]})"));
  const auto b = io::parse_instance(json::parse(R"({"plus_edges":[[3,4],[1,2]],"n":5})"));
  const auto c = io::parse_instance(json::parse(R"({"n":5,"plus_edges":[[1,2],[3,5]]})"));
  CHECK(io::digest(a) == io::digest(b));
  CHECK(io::digest(a) != io::digest(c));
  CHECK(io::digest(a).size() == 16);
}

TEST_CASE("file helpers") {
  const std::string path = "io_roundtrip_test.json";
  const auto host = testing::host_from(4, {{1, 3}});
  io::write_json_file(path, io::instance_to_json(host));
  CHECK(io::parse_instance(io::read_json_file(path)) == host);
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_json_file("does/not/exist.json"), InputError);
}
