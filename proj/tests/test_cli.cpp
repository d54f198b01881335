#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RANKCENTRALITY_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / ("rankcentrality_cli_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path write_csv(const std::string& name, const std::string& body) {
  const auto p = scratch(name);
  std::ofstream(p) << "item_i,item_j,wins_i,wins_j\n" << body;
  return p;
}

}  // namespace

TEST_CASE("rank two items") {
  const auto in = write_csv("two.csv", "a,b,1,2\n");
  const auto out = scratch("two.json");
  const Run r = run("rank --input " + in.string() + " --algo rc --out " + out.string());
  CHECK(r.code == 0);
  const std::string json = slurp(out);
  CHECK(json.find("\"scores\"") != std::string::npos);
  CHECK(json.find("0.333333333") != std::string::npos);
  CHECK(json.find("0.666666666") != std::string::npos);

  const auto again = scratch("two_again.json");
  CHECK(run("rank --input " + in.string() + " --algo rc --out " + again.string()).code == 0);
  CHECK(slurp(again) == json);
  CHECK(run("rank --input " + in.string()).out == r.out);
}

TEST_CASE("usage errors exit with 2") {
  const auto in = write_csv("usage.csv", "a,b,1,2\n");
  CHECK(run("rank --input " + in.string() + " --algo nope").code == 2);
  CHECK(run("rank").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("sweep --n 10 --vary d --grid 5,20 --fixed 4 --trials 1").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("computation and data errors exit with 1") {
  const auto split = write_csv("split.csv", "a,b,1,2\nc,d,2,1\n");
  CHECK(run("rank --input " + split.string()).code == 1);
  const auto bad = write_csv("bad.csv", "a,a,1,0\n");
  CHECK(run("rank --input " + bad.string()).code == 1);
  CHECK(run("rank --input " + scratch("missing.csv").string()).code == 1);
}

TEST_CASE("sweep output is deterministic") {
  const auto a = scratch("sweep_a.csv"), b = scratch("sweep_b.csv");
  const std::string args =
      "sweep --n 40 --b 5 --vary k --grid 8,16 --fixed 10 --trials 3 --algos rc,borda --seed 9 ";
  CHECK(run(args + "--out " + a.string()).code == 0);
  CHECK(run(args + "--out " + b.string()).code == 0);
  const std::string text = slurp(a);
  CHECK(text == slurp(b));
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("crb and check subcommands") {
  const auto out = scratch("crb.csv");
  CHECK(run("crb --n 30 --d 10 --k 8 --b 3 --trials 3 --seed 2 --out " + out.string()).code == 0);
  CHECK(slurp(out).find("crb") != std::string::npos);
  const Run bal = run("check --suite balance --seed 1");
  CHECK(bal.code == 0);
  CHECK(bal.out.find("100/100") != std::string::npos);
  CHECK(run("check --suite nothing").code == 2);
}

TEST_CASE("normalize round-trips") {
  const auto in = write_csv("norm.csv", "a,b,1,2\nb,a,1,0\nc,a,0,3\n");
  const auto once = scratch("norm1.csv"), twice = scratch("norm2.csv");
  CHECK(run("normalize --input " + in.string() + " --out " + once.string()).code == 0);
  CHECK(run("normalize --input " + once.string() + " --out " + twice.string()).code == 0);
  CHECK(slurp(once) == slurp(twice));
}
