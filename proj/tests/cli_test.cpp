#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcat/json_io.hpp"

namespace fs = std::filesystem;
using qcat::io::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QCAT_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& name) { return std::string(QCAT_CORPUS_DIR) + "/" + name; }

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / ("qcat_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("pathcat reports hom-sets") {
  const auto r = run("pathcat " + corpus("delta2.sset.json") + " --homsets");
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["command"] == "pathcat");
  CHECK(j["version"] == "qcat 0.1.0");
  CHECK_FALSE(j.contains("timing"));
  CHECK(j["verdicts"]["loop_free"] == true);
  bool found = false;
  for (const auto& h : j["result"]["homsets"])
    if (h["x"] == 0 && h["y"] == 2) {
      CHECK(h["class_count"] == 1);
      found = true;
    }
  CHECK(found);
  CHECK(Json::parse(run("--timing pathcat " + corpus("delta2.sset.json")).out).contains("timing"));
}

TEST_CASE("exit codes") {
  CHECK(run("certify " + corpus("nerve_z2.sset.json")).code == 0);
  CHECK(run("certify " + corpus("horn21.sset.json")).code == 1);
  CHECK(run("cert-build --theorem45 2 1 1 --verify").code == 0);
  CHECK(run("cert-build --theorem45 2 0 1").code == 2);
  CHECK(run("equiv40 " + corpus("identity_z2.fun.json")).code == 0);
  CHECK(run("equiv40 " + corpus("poset2_to_point.fun.json")).code == 1);
  CHECK(run("pathcat --no-such-flag " + corpus("delta2.sset.json")).code == 2);
  CHECK(run("pathcat /nonexistent.sset.json").code == 2);
  CHECK(run("shuffles -1 2").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> commands = {
      "shuffles 2 2", "cert-build --lemma8 4 0 4 --verify", "ho " + corpus("nerve_z3.sset.json"),
      "saturate " + corpus("horn21.sset.json"),
      "tau0 " + corpus("delta1.sset.json") + " " + corpus("nerve_free_iso.sset.json")};
  for (const auto& args : commands) {
    CAPTURE(args);
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  const auto s = Json::parse(run("shuffles 2 2").out);
  CHECK(s["result"].size() == 6);
}

TEST_CASE("certificates survive a round trip through files") {
  const auto dir = scratch();
  const auto cert = dir / "t.cert.json";
  const auto report = dir / "report.json";
  REQUIRE(run("--out " + report.string() + " cert-build --theorem45 3 1 1 --emit " + cert.string()).code == 0);
  REQUIRE(fs::exists(cert));
  CHECK_FALSE(Json::parse(slurp(report))["result"].contains("steps"));
  const auto v = run("cert-verify " + cert.string());
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["verdicts"]["verified"] == true);
  const auto full = run("cert-build --lemma8 3 0 3");
  {
    std::ofstream f(dir / "report.cert.json");
    f << full.out;
  }
  CHECK(run("cert-verify " + (dir / "report.cert.json").string()).code == 0);
  auto broken = Json::parse(slurp(cert));
  broken["steps"].erase(broken["steps"].begin());
  qcat::io::write_file((dir / "broken.cert.json").string(), broken);
  const auto b = run("cert-verify " + (dir / "broken.cert.json").string());
  CHECK(b.code == 1);
  CHECK(Json::parse(b.out)["result"]["failing_step"] == 0);
  fs::remove_all(dir);
}

TEST_CASE("emitted artifacts parse back") {
  const auto dir = scratch();
  const auto p = dir / "p.pcat.json";
  REQUIRE(run("pathcat " + corpus("boundary2.sset.json") + " --homsets --emit " + p.string()).code == 0);
  CHECK_NOTHROW(qcat::io::pcat_from_json(qcat::io::read_file(p.string())));
  const auto h = dir / "ho.cat.json";
  REQUIRE(run("ho " + corpus("nerve_free_iso.sset.json") + " --emit " + h.string()).code == 0);
  CHECK(qcat::io::cat_from_json(qcat::io::read_file(h.string())).arrow_count() == 4);
  const auto s = dir / "sat.sset.json";
  REQUIRE(run("saturate " + corpus("boundary2.sset.json") + " --emit " + s.string()).code == 0);
  CHECK_NOTHROW(qcat::io::sset_from_json(qcat::io::read_file(s.string())));
  fs::remove_all(dir);
}

TEST_CASE("the bundled corpus is reproducible") {
  const auto dir = scratch() / "corpus";
  REQUIRE(std::system((std::string(MAKE_CORPUS_BINARY) + " " + dir.string()).c_str()) == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(QCAT_CORPUS_DIR)) {
    ++files;
    CAPTURE(e.path().filename().string());
    CHECK(slurp(e.path()) == slurp(dir / e.path().filename()));
  }
  CHECK(files >= 40);
  const auto r = run("corpus-run " + dir.string());
  CHECK(r.code == 0);
  fs::remove_all(dir.parent_path());
}
