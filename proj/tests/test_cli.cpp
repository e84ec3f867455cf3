#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "homlattice/cli.hpp"
#include "homlattice/errors.hpp"
#include "homlattice/io.hpp"
#include "homlattice/limits.hpp"
#include "homlattice/oracle.hpp"
#include "support.hpp"

using namespace homlattice;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "homlattice");
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

class Workspace {
public:
  Workspace() : dir_(fs::temp_directory_path() / ("homlattice-cli-" + std::to_string(std::rand()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return (dir_ / name).string();
  }
  std::string graph(const std::string& name, const Graph& g) const { return write(name, io::format_graph(g)); }
  const fs::path& dir() const { return dir_; }

private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("count examples") {
  Workspace ws;
  const auto p3 = ws.graph("p3.gr", generators::path(3));
  const auto k2 = ws.graph("k2.gr", generators::complete(2));
  const auto k3 = ws.graph("k3.gr", generators::complete(3));
  const auto k1 = ws.graph("k1.gr", generators::complete(1));
  const auto c7 = ws.graph("c7.gr", generators::cycle(7));
  CHECK(run({"count", "--tau", "li", "--pattern", p3, "--host", k3}).out == "6\n");
  CHECK(run({"count", "--tau", "emb", "--pattern", k2, "--host", k3}).out == "6\n");
  CHECK(run({"count", "--tau", "hom", "--pattern", k1, "--host", c7}).out == "7\n");
  const auto oracle = run({"count", "--tau", "li", "--pattern", p3, "--host", k3, "--method", "oracle"});
  CHECK(oracle.status == 0);
  CHECK(oracle.out == "6\n");
}

TEST_CASE("expand examples") {
  Workspace ws;
  const auto p3 = ws.graph("p3.gr", generators::path(3));
  const auto k2 = ws.graph("k2.gr", generators::complete(2));
  const auto li = run({"expand", "--tau", "li", "--pattern", p3});
  CHECK(li.status == 0);
  CHECK(li.out.starts_with("+1\t3\t"));
  CHECK(li.out.ends_with("\n-1\t2\t1-2\n"));
  const auto hom = run({"expand", "--tau", "hom", "--pattern", p3}).out;
  CHECK(std::count(hom.begin(), hom.end(), '\n') == 1);
  CHECK(hom.starts_with("+1\t3\t"));
  CHECK(run({"expand", "--tau", "emb", "--pattern", k2}).out == "+1\t2\t1-2\n");
}

TEST_CASE("minors examples") {
  Workspace ws;
  const auto tree = ws.graph("t.gr", generators::tkk(2));
  const auto li = run({"minors", "--tau", "li", "--pattern", tree});
  CHECK(li.status == 0);
  CHECK(li.out.ends_with("max-treewidth: 1\n"));
  const auto w3 = ws.graph("w3.gr", generators::windmill(3));
  const auto windmill = run({"minors", "--tau", "li", "--pattern", w3}).out;
  CHECK(windmill.find("max-treewidth: 1\n") == std::string::npos);
  const auto p3 = ws.graph("p3.gr", generators::path(3));
  CHECK(run({"minors", "--tau", "hom", "--pattern", p3}).out == "3\t1-3;2-3\t1\nmax-treewidth: 1\n");
}

TEST_CASE("lincomb examples") {
  Workspace ws;
  ws.graph("p3.gr", generators::path(3));
  ws.graph("k3.gr", generators::complete(3));
  ws.graph("c3.gr", generators::cycle(3));
  ws.graph("k2.gr", generators::complete(2));
  const auto k4 = ws.graph("k4.gr", generators::complete(4));
  const auto e = ws.write("e.txt", "# the #E instance\n1 hom p3.gr\n1 li k3.gr\n\n1 emb c3.gr\n");
  const auto r = run({"lincomb", "--manifest", e, "--host", k4});
  CHECK(r.status == 0);
  CHECK(r.out == "84\n");
  CHECK(r.err == "congruent: yes\n");

  const auto empty = ws.write("empty.txt", "");
  CHECK(run({"lincomb", "--manifest", empty, "--host", k4}).out == "0\n");

  const auto mixed = ws.write("mixed.txt", "1/2 hom k2.gr\n2/3 emb k3.gr\n");
  const auto m = run({"lincomb", "--manifest", mixed, "--host", k4});
  CHECK(m.out == "22\n");
  CHECK(m.err == "congruent: no\n");

  const auto third = ws.write("third.txt", "1/3 hom k2.gr\n");
  CHECK(run({"lincomb", "--manifest", third, "--host", k4}).out == "4\n");
  const auto seventh = ws.write("seventh.txt", "1/7 hom k2.gr\n");
  CHECK(run({"lincomb", "--manifest", seventh, "--host", k4}).out == "12/7\n");

  for (const auto* bad : {"0 hom k2.gr\n", "1 iso k2.gr\n", "1/0 hom k2.gr\n", "1 hom\n", "-1 hom k2.gr\n",
                          "1 hom missing.gr\n"}) {
    const auto path = ws.write("bad.txt", bad);
    CHECK(run({"lincomb", "--manifest", path, "--host", k4}).status == cli::parse_failure);
  }
}

TEST_CASE("perm-gadget examples") {
  Workspace ws;
  const auto id = ws.write("id.txt", "5\n1 0 0 0 0\n0 1 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n0 0 0 0 1\n");
  const auto example = ws.write("a.txt", "5\n1 0 1 0 0\n0 1 0 1 1\n1 0 1 0 0\n0 1 0 1 0\n0 1 0 0 1\n");
  const auto small = ws.write("s.txt", "4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  CHECK(run({"perm-gadget", "--matrix", id}).out == "perm=1 subtrees=1 match=yes\n");
  const auto r = run({"perm-gadget", "--matrix", example, "--check"});
  CHECK(r.status == 0);
  CHECK(r.out == "perm=6 subtrees=6 match=yes\n");
  CHECK(run({"perm-gadget", "--matrix", small}).status == cli::usage);
  CHECK(run({"perm-gadget", "--matrix", ws.write("b.txt", "2\n1 0\n0 2\n")}).status == cli::parse_failure);
  CHECK(run({"perm-gadget", "--matrix", ws.write("c.txt", "2\n1 0\n")}).status == cli::parse_failure);
}

TEST_CASE("exit statuses") {
  Workspace ws;
  const auto p3 = ws.graph("p3.gr", generators::path(3));
  const auto big = ws.graph("p13.gr", generators::path(13));
  CHECK(run({}).status == cli::usage);
  CHECK(run({"frobnicate"}).status == cli::usage);
  CHECK(run({"count", "--tau", "li", "--pattern", p3}).status == cli::usage);
  CHECK(run({"count", "--tau", "bogus", "--pattern", p3, "--host", p3}).status == cli::usage);
  CHECK(run({"count", "--tau", "li", "--pattern", p3, "--host", p3, "--method", "magic"}).status == cli::usage);
  CHECK(run({"count", "--tau", "li", "--pattern", "/nonexistent.gr", "--host", p3}).status == cli::parse_failure);
  CHECK(run({"count", "--tau", "li", "--pattern", big, "--host", p3}).status == cli::limit_failure);
  CHECK(run({"--limit", "17", "count", "--tau", "li", "--pattern", p3, "--host", p3}).status == cli::usage);
  const auto raised = run({"--limit", "13", "count", "--tau", "li", "--pattern", big, "--host", p3});
  CHECK(raised.status == 0);
  CHECK(raised.out == "0\n");
  CHECK(raised.err.find("note:") != std::string::npos);
  CHECK(pattern_limit() == default_pattern_limit);
  const auto help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("count") != std::string::npos);
}

TEST_CASE("limit from the environment") {
  Workspace ws;
  const auto p3 = ws.graph("p3.gr", generators::path(3));
  const auto big = ws.graph("p13.gr", generators::path(13));
  setenv("HOMLATTICE_LIMIT", "13", 1);
  const auto r = run({"count", "--tau", "hom", "--pattern", big, "--host", p3});
  unsetenv("HOMLATTICE_LIMIT");
  CHECK(r.status == 0);
  CHECK(r.out == "192\n");
  CHECK(run({"count", "--tau", "hom", "--pattern", big, "--host", p3}).status == cli::limit_failure);
}

TEST_CASE("graph file parsing") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return io::parse_graph(in);
  };
  const auto g = parse("c a path\np edge 3 2\ne 1 2\n\ne 2 3\n");
  CHECK(g == generators::path(3));
  for (const char* bad : {"", "e 1 2\n", "p edge 3 1\ne 1 1\n", "p edge 3 2\ne 1 2\ne 2 1\n", "p edge 3 1\ne 1 4\n",
                          "p edge 3 1\ne 0 1\n", "p edge 3 2\ne 1 2\n", "p edge 3 0\nx\n", "p edge 3\n",
                          "p edge 2 0\np edge 2 0\n", "p edge 3 1\ne 1 two\n", "p edge 3 1\ne 1 2 3\n"})
    CHECK_THROWS_AS(parse(bad), parse_error);
}

TEST_CASE("graph files round-trip") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(1 + trial % 12, 0.4, rng);
    const auto text = io::format_graph(g);
    std::istringstream in(text);
    const auto back = io::parse_graph(in);
    CHECK(back == g);
    CHECK(io::format_graph(back) == text);
  }
}

TEST_CASE("rationals") {
  CHECK(io::parse_rational("3") == 3);
  CHECK(io::parse_rational("6/4") == Rational(3, 2));
  CHECK(io::format_rational(Rational(6, 4)) == "3/2");
  CHECK(io::format_rational(Rational(5)) == "5");
  for (const char* bad : {"", "/2", "1/", "a", "1.5", "-2", "1/0", "1/2/3"})
    CHECK_THROWS_AS(io::parse_rational(bad), parse_error);
}

TEST_CASE("output is deterministic") {
  Workspace ws;
  const auto w = ws.graph("w.gr", generators::windmill(3));
  const auto a = run({"expand", "--tau", "li", "--pattern", w});
  const auto b = run({"expand", "--tau", "li", "--pattern", w});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run({"minors", "--tau", "li", "--pattern", w}).out == run({"minors", "--tau", "li", "--pattern", w}).out);
}

TEST_CASE("basis and oracle methods agree") {
  Workspace ws;
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    const auto pattern = ws.graph("h.gr", testing::random_graph(1 + trial % 5, 0.5, rng));
    const auto host = ws.graph("g.gr", testing::random_graph(2 + trial % 6, 0.5, rng));
    for (const char* tau : {"hom", "emb", "li", "li:2"}) {
      const auto basis = run({"count", "--tau", tau, "--pattern", pattern, "--host", host});
      const auto oracle = run({"count", "--tau", tau, "--pattern", pattern, "--host", host, "--method", "oracle"});
      CHECK(basis.status == 0);
      CHECK(basis.out == oracle.out);
    }
  }
}
