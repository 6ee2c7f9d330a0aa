#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(QST_VERIFY) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string data = QST_DATA_DIR;

}  // namespace

TEST_CASE("exit 0 when every check passes") {
  CHECK(run("--suite canonical").code == 0);
  CHECK(run("--suite rays --count 5 --mode float").code == 0);
  CHECK(run("--field C1").code == 0);
  CHECK(run("--field '[x0, x1, x2, x3]' --format json").code == 0);
  CHECK(run("--state " + data + "/two_rays.json").code == 0);
  CHECK(run("--help").code == 0);
}

TEST_CASE("exit 1 on a failed check") {
  auto r = run("--suite algebra --inject-fault D,C3 --format json");
  CHECK(r.code == 1);
  CHECK(r.out.find("\"D\"") != std::string::npos);
  CHECK(r.out.find("\"C3\"") != std::string::npos);
  CHECK(run("--field '[x1, 0, 0, 0]'").code == 1);
}

TEST_CASE("exit 2 on usage or input errors") {
  CHECK(run("").code == 2);
  CHECK(run("--suite nope").code == 2);
  CHECK(run("--suite algebra --mode fast").code == 2);
  CHECK(run("--suite algebra --format xml").code == 2);
  CHECK(run("--suite rays --count 0").code == 2);
  CHECK(run("--suite rays --eps 1/100").code == 2);
  CHECK(run("--suite algebra --inject-fault P0").code == 2);
  CHECK(run("--suite algebra --inject-fault P0,Q9").code == 2);
  CHECK(run("--suite shifts --alpha -1").code == 2);
  CHECK(run("--suite shifts --alpha x").code == 2);
  CHECK(run("--suite algebra --field D").code == 2);
  CHECK(run("--field '[x0, x1'").code == 2);
  CHECK(run("--state " + data + "/not_null.json").code == 2);
  CHECK(run("--state /nonexistent.json").code == 2);
  CHECK(run("--bogus-flag").code == 2);
}

TEST_CASE("identical invocations print identical reports") {
  auto a = run("--suite event --count 10 --seed 9 --format json");
  auto b = run("--suite event --count 10 --seed 9 --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
