#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tvlab/serialization.hpp"

using namespace tvlab;
namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "tvlab-unit-cli";

int run(const std::string& args, const std::string& out = "/dev/null") {
  const std::string cmd = std::string(TVLAB_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string path(const std::string& name) { return (kDir / name).string(); }

}  // namespace

TEST_CASE("command-line front end") {
  fs::remove_all(kDir);
  fs::create_directories(kDir);

  SUBCASE("usage errors") {
    CHECK(run("") == 1);
    CHECK(run("frobnicate") == 1);
    CHECK(run("bounds --b 2") == 1);
    CHECK(run("verify-paper --rmax 7") == 1);
    CHECK(run("--help") == 0);
  }

  SUBCASE("build and homology") {
    CHECK(run("build mr --r 2 -o " + path("m2.json")) == 0);
    CHECK(run("homology " + path("m2.json") + " --deleted-join 2", path("h.json")) == 0);
    const Json h = read_json_file(path("h.json"));
    CHECK(h["betti"] == Json::array({0, 0, 1, 0}));
    CHECK(run("homology " + path("missing.json")) == 1);
    std::ofstream(path("bad.json")) << "{\"vertices\": [";
    CHECK(run("homology " + path("bad.json")) == 1);
  }

  SUBCASE("shelling certificates") {
    CHECK(run("shell mr --r 3 -o " + path("cert.json") + " --complex-out " + path("dj.json")) == 0);
    CHECK(run("shell verify " + path("dj.json") + " " + path("cert.json")) == 0);
    Json cert = read_json_file(path("cert.json"));
    auto& order = cert["order"];
    std::swap(order[0], order[order.size() - 1]);
    cert["witnesses"] = Json::array();
    std::ofstream(path("tampered.json")) << dump(cert);
    CHECK(run("shell verify " + path("dj.json") + " " + path("tampered.json")) == 2);
    CHECK(run("build chessboard --k 2 --r 2 -o " + path("c22.json")) == 0);
    CHECK(run("shell search " + path("c22.json")) == 2);
  }

  SUBCASE("deleted products and bounds") {
    CHECK(run("build uniform --m 2 --n 6 -o " + path("u26.json")) == 0);
    CHECK(run("delprod " + path("u26.json") + " --k 2", path("dp.json")) == 0);
    CHECK(read_json_file(path("dp.json"))["bound_respected"] == true);
    CHECK(run("delprod " + path("u26.json") + " --k 3 --max-dim-cap 10") == 1);
    CHECK(run("bounds --b 10 --r 5 --d 8", path("b.json")) == 0);
    CHECK(read_json_file(path("b.json"))["upper_npp"].is_number());
    CHECK(run("--format md bounds --b 10 --r 5 --d 2") == 0);
  }

  fs::remove_all(kDir);
}
