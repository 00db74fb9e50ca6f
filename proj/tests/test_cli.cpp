#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " '" FID_CLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run run_stdin(const std::string& input, const std::string& args) {
  return run(args, "printf '%s' '" + input + "' |");
}

}  // namespace

TEST_CASE("dim") {
  auto r = run("dim --gen 'M(0)' --d 2 --range 0..4");
  CHECK(r.code == 0);
  CHECK(r.out == "n\tdim\n0\t1\n1\t2\n2\t4\n3\t8\n4\t16\n");
  CHECK(run("dim --gen '[1]' --d 1 --range 1..3").out == "n\tdim\n1\t1\n2\t2\n3\t3\n");
  CHECK(run("dim --gen '[2,1]' --d 3 --range 0..0").out == "n\tdim\n0\t0\n");
}

TEST_CASE("decompose") {
  auto r = run("decompose --gen 'M(0)' --d 2 --n 2");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["partition"] == nlohmann::json::array({2}));
  CHECK(j["terms"][0]["multiplicity"] == "3");
  CHECK(j["terms"][1]["multiplicity"] == "1");
  CHECK(run("decompose --gen '[2]' --d 1 --n 3 --format tsv").out == "partition\tmultiplicity\n[3]\t1\n[2,1]\t1\n");
  CHECK(run("decompose --gen 'M(0)' --d 3 --n 0 --format tsv").out == "partition\tmultiplicity\n[]\t1\n");
}

TEST_CASE("stabilize, verify and weight") {
  auto r = run("stabilize --gen '[1]' --d 2 --lambda '[]' --pads 2,2");
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("value\t2\nonset\t0\n"));
  CHECK(run("stabilize --gen 'M(0)' --d 1 --lambda '[]' --pads 0").out.starts_with("value\t1\n"));

  auto v = run("verify --gen 'M(0)' --d 2 --probe '[]:1,1' --range 0..5");
  CHECK(v.code == 0);
  auto j = nlohmann::json::parse(v.out);
  CHECK(j["all_hold"] == true);
  CHECK(j["padded_multiplicities"][0]["value"] == "1");

  CHECK(run("weight --gen '[2,1,1]' --d 2").out == "weight\t4\n");
}

TEST_CASE("fit") {
  auto r = run("fit --mode dims --gen 'M(0)' --d 2 --format tsv");
  CHECK(r.code == 0);
  CHECK(r.out == "p1\t0/1\np2\t1/1\n");
  CHECK(run("fit --mode mult --gen 'M(0)' --d 2 --lambda '[]' --format tsv").out == "p\t1/1\t1/1\n");
  CHECK(run("fit --mode mult --gen 'M(0)' --d 2 --lambda '[1]' --format tsv").out == "p\t-1/1\t1/1\n");
  CHECK(run("fit --mode mult --gen 'M(0)' --d 1 --lambda '[]' --format tsv").out == "p\t1/1\n");
  // The default window starts once lambda[n] exists.
  CHECK(run("fit --mode mult --gen 'M(2)' --d 1 --lambda '[2]' --format tsv").out == "p\t1/1\n");

  auto s = run_stdin(R"({"series":{"1":"1","2":"4","3":"12","4":"32","5":"80","6":"192","7":"448","8":"1024"}})",
                     "fit --mode dims --d 2 --degree 1 --stdin --format tsv");
  CHECK(s.code == 0);
  CHECK(s.out == "p1\t0/1\np2\t0/1\t1/2\n");
}

TEST_CASE("exit codes") {
  CHECK(run("dim --gen '[1,2]' --d 2 --range 0..3").code == 2);
  CHECK(run("dim --gen 'M(x)' --d 2 --range 0..3").code == 2);
  CHECK(run("dim --gen 'M(0)' --d 2 --range 3..1").code == 2);
  CHECK(run("dim --gen 'M(0)' --d 0 --range 0..1").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("stabilize --gen 'M(0)' --d 2 --lambda '[]' --pads 1,2").code == 2);
  CHECK(run("fit --mode dims --d 2 --stdin", "printf 'nonsense' |").code == 2);

  auto corrupted = run_stdin(R"({"series":{"0":"1","1":"2","2":"4","3":"8","4":"16","5":"33","6":"64"}})",
                             "fit --mode dims --d 2 --degree 0 --stdin");
  CHECK(corrupted.code == 3);
  CHECK(corrupted.out.empty());
  CHECK(run("stabilize --gen '[2]' --d 2 --lambda '[]' --pads 0,0 --horizon 1").code == 3);

  CHECK(run("oracle-check --max 4").code == 0);
  auto mutated = run("oracle-check --max 4 --mutate");
  CHECK(mutated.code == 4);
  CHECK(mutated.out.starts_with("FAIL\t"));
}

TEST_CASE("horizon from the environment") {
  CHECK(run("stabilize --gen '[2]' --d 2 --lambda '[]' --pads 0,0", "FID_MAX_HORIZON=1").code == 3);
  CHECK(run("stabilize --gen '[2]' --d 2 --lambda '[]' --pads 0,0", "FID_MAX_HORIZON=40").code == 0);
  CHECK(run("stabilize --gen '[2]' --d 2 --lambda '[]' --pads 0,0", "FID_MAX_HORIZON=-3").code == 2);
}

TEST_CASE("json everywhere and deterministic output") {
  const char* commands[] = {
      "dim --gen 'M(1)' --d 2 --range 0..5 --format json",
      "decompose --gen '[2,1]' --d 2 --n 5",
      "stabilize --gen '[1]' --d 2 --lambda '[1]' --pads 3,3 --format json",
      "verify --gen '[1]' --d 2 --probe '[]:2,2' --probe '[1]:3,2' --range 0..5",
      "weight --gen 'M(2)' --d 3 --format json",
      "fit --mode dims --gen 'M(1)' --d 2",
      "fit --mode mult --gen '[1]' --d 2 --lambda '[1]'",
      "oracle-check --max 5 --format json",
  };
  for (const char* args : commands) {
    CAPTURE(args);
    auto first = run(args);
    CHECK(first.code == 0);
    CHECK(nlohmann::json::accept(first.out));
    CHECK(run(args).out == first.out);
  }
}
