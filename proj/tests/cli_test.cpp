#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

// Drives the installed binary end to end.  SIEGELVAN_BIN is injected by the
// build; every case works inside its own temp directory.

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    std::string path;
    TempDir() {
        char tmpl[] = "/tmp/siegelvan_cli_XXXXXX";
        path = mkdtemp(tmpl);
    }
    std::string file(const std::string& name) const { return path + "/" + name; }
};

RunResult run(const TempDir& dir, const std::string& args) {
    std::string out = dir.file("stdout.cap"), err = dir.file("stderr.cap");
    std::string cmd = std::string(SIEGELVAN_BIN) + " " + args + " > " + out + " 2> " + err;
    int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

} // namespace

TEST_CASE("cli divisor: pinned outputs and parse failures") {
    TempDir dir;
    auto r = run(dir, "divisor --g 3 --p 7 --w \"s1 s2 s3\" --lambda=-1,-3,-5");
    CHECK(r.code == 0);
    CHECK(r.out == "5/6 [s2 s3] + 1/2 [s1 s3] + 1/6 [s1 s2]\n");

    auto r2 = run(dir, "divisor --g 2 --p 7 --w s1 --lambda=-3,-5");
    CHECK(r2.code == 0);
    CHECK(r2.out == "1/4 [e]\n");

    auto r3 = run(dir, "divisor --g 2 --p 7 --w \"\" --lambda=-3,-5");
    CHECK(r3.code == 0);
    CHECK(r3.out == "0\n");

    auto bad = run(dir, "divisor --g 2 --p 7 --w s9 --lambda=-3,-5");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("s9") != std::string::npos);

    auto badlam = run(dir, "divisor --g 2 --p 7 --w s1 --lambda=-3,-5,-7");
    CHECK(badlam.code == 1);

    auto badp = run(dir, "divisor --g 2 --p 6 --w s1 --lambda=-3,-5");
    CHECK(badp.code == 1);
}

TEST_CASE("cli ample: transcript value and failure reasons") {
    TempDir dir;
    auto r = run(dir, "ample --g 2 --p 7 --lambda=-2,-8");
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");

    auto f = run(dir, "ample --g 2 --p 7 --lambda=-1,-8");
    CHECK(f.code == 0);
    CHECK(f.out.rfind("false", 0) == 0);
    CHECK(f.out.find("[") != std::string::npos); // names the failing stratum

    auto z = run(dir, "ample --g 2 --p 7 --lambda=0,0");
    CHECK(z.out.rfind("false", 0) == 0);

    auto notlevi = run(dir, "ample --g 2 --p 7 --I0 s1 --lambda=-2,-8");
    CHECK(notlevi.out.rfind("false", 0) == 0);

    auto orb = run(dir, "ample --g 2 --p 7 --I0 s1 --mode orbital --lambda=-3,-3");
    CHECK(orb.out == "true\n");
}

TEST_CASE("cli transcript flow: compute, fixpoint, query") {
    TempDir dir;
    std::string led = dir.file("ledger.txt");
    std::string base = "--g 2 --p 7 --kmin=-30 --kmax 0 --ledger " + led;

    auto c0 = run(dir, "compute " + base + " --e 0");
    CHECK(c0.code == 0);
    CHECK(c0.out.find("changed: true") != std::string::npos);

    auto c0again = run(dir, "compute " + base + " --e 0");
    CHECK(c0again.out.find("changed: false") != std::string::npos);

    auto fx = run(dir, "fixpoint " + base);
    CHECK(fx.code == 0);
    CHECK(fx.out.find("changed: true") != std::string::npos);
    // sweep counter is printed and at least 2 (one productive + the check)
    auto pos = fx.out.find("sweeps: ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::atoi(fx.out.c_str() + pos + 8) >= 2);

    auto ca = run(dir, "compute-all " + base);
    CHECK(ca.out.find("changed: false") != std::string::npos);

    auto q1 = run(dir, "query " + base + " --e 1 --lambda=-4,-6");
    CHECK(q1.code == 0);
    CHECK(q1.out == "true\n");
    auto q0 = run(dir, "query " + base + " --e 0 --lambda=-4,-6");
    CHECK(q0.out == "false\n");
    auto q3 = run(dir, "query " + base + " --e 3 --lambda=5,17");
    CHECK(q3.out == "true\n"); // above dimension; not even L-dominant
}

TEST_CASE("cli ledger files: atomic no-change stability and header mismatch") {
    TempDir dir;
    std::string led = dir.file("ledger.txt");
    std::string base = "--g 2 --p 7 --kmin=-15 --kmax 0 --ledger " + led;

    run(dir, "fixpoint " + base);
    std::string bytes = slurp(led);
    CHECK(!bytes.empty());

    auto again = run(dir, "compute-all " + base);
    CHECK(again.out.find("changed: false") != std::string::npos);
    CHECK(slurp(led) == bytes); // byte-identical after a no-op sweep

    // query must not mutate
    run(dir, "query " + base + " --e 0 --lambda=-5,-5");
    CHECK(slurp(led) == bytes);

    auto clash = run(dir, "query --g 2 --p 11 --kmin=-15 --kmax 0 --ledger " + led +
                              " --e 0 --lambda=-5,-5");
    CHECK(clash.code == 2);
    auto clash2 = run(dir, "compute-all --g 2 --p 7 --kmin=-16 --kmax 0 --ledger " + led);
    CHECK(clash2.code == 2);
    auto clash3 =
        run(dir, "compute-all --g 2 --p 7 --kmin=-15 --kmax 0 --mode orbital --ledger " + led);
    CHECK(clash3.code == 2);
    CHECK(slurp(led) == bytes);

    auto missing = run(dir, "query --g 2 --p 7 --kmin=-15 --kmax 0 --ledger " +
                                dir.file("nope.txt") + " --e 0 --lambda=-5,-5");
    CHECK(missing.code == 1);
}

TEST_CASE("cli export: display sets, cumulative nesting, reversed columns") {
    TempDir dir;
    std::string led = dir.file("ledger.txt");
    std::string base = "--g 2 --p 5 --kmin=-20 --kmax 0 --ledger " + led;
    run(dir, "fixpoint " + base);

    auto e0 = run(dir, "export " + base + " --e 0");
    CHECK(e0.code == 0);
    CHECK(!e0.out.empty());
    // parallel weights dominate the degree-0 display set at p=5
    CHECK(e0.out.find("-4 -4\n") != std::string::npos);

    auto e0rev = run(dir, "export " + base + " --e 0 --reverse-columns --out " + dir.file("r.txt"));
    CHECK(e0rev.code == 0);
    std::string rev = slurp(dir.file("r.txt"));
    CHECK(rev.find("-4 -4\n") != std::string::npos);

    // non-cumulative display sets are pairwise disjoint; cumulative ones nest
    auto rows = [&](const std::string& extra, int e) {
        auto r = run(dir, "export " + base + " --e " + std::to_string(e) + extra);
        std::set<std::string> s;
        std::istringstream in(r.out);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) s.insert(line);
        return s;
    };
    auto d0 = rows("", 0), d1 = rows("", 1), d2 = rows("", 2);
    for (const auto& x : d0) CHECK(d1.count(x) == 0);
    for (const auto& x : d1) CHECK(d2.count(x) == 0);
    auto c0 = rows(" --cumulative", 0), c1 = rows(" --cumulative", 1),
         c2 = rows(" --cumulative", 2);
    CHECK(c0 == d0);
    for (const auto& x : c0) CHECK(c1.count(x) == 1);
    for (const auto& x : c1) CHECK(c2.count(x) == 1);
    CHECK(c1.size() == d0.size() + d1.size());
    CHECK(c2.size() == c1.size() + d2.size());
}

TEST_CASE("cli plot: deterministic bytes, g=2 only, empty ledger ok") {
    TempDir dir;
    std::string led = dir.file("ledger.txt");
    std::string base = "--g 2 --p 5 --kmin=-18 --kmax 0 --ledger " + led;
    run(dir, "fixpoint " + base);

    auto p1 = run(dir, "plot " + base + " --out " + dir.file("a.svg"));
    CHECK(p1.code == 0);
    auto p2 = run(dir, "plot " + base + " --out " + dir.file("b.svg"));
    CHECK(p2.code == 0);
    std::string svg = slurp(dir.file("a.svg"));
    CHECK(svg == slurp(dir.file("b.svg")));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("k1 = k2") != std::string::npos); // diagonal guide label

    // empty ledger still renders axes + legend
    std::string led2 = dir.file("empty.txt");
    run(dir, "compute-all --g 2 --p 31 --kmin=-3 --kmax 0 --ledger " + led2);
    auto pe = run(dir, "plot --g 2 --p 31 --kmin=-3 --kmax 0 --ledger " + led2 + " --out " +
                           dir.file("e.svg"));
    CHECK(pe.code == 0);
    CHECK(slurp(dir.file("e.svg")).rfind("<svg", 0) == 0);

    // higher genus points to export instead
    std::string led3 = dir.file("g3.txt");
    run(dir, "compute-all --g 3 --p 11 --kmin=-4 --kmax 0 --ledger " + led3);
    auto pg3 = run(dir, "plot --g 3 --p 11 --kmin=-4 --kmax 0 --ledger " + led3 + " --out " +
                            dir.file("x.svg"));
    CHECK(pg3.code == 1);
    CHECK(pg3.err.find("export") != std::string::npos);
}

TEST_CASE("cli seeding of the hand-derived g=2 families") {
    TempDir dir;
    std::string led = dir.file("ledger.txt");
    std::string base = "--g 2 --p 7 --kmin=-12 --kmax 0 --ledger " + led;
    run(dir, "fixpoint " + base);
    auto q = run(dir, "query " + base + " --e 1 --lambda=-2,-4");
    CHECK(q.out == "false\n"); // general operator cannot reach it

    std::string led2 = dir.file("seeded.txt");
    std::string base2 = "--g 2 --p 7 --kmin=-12 --kmax 0 --ledger " + led2;
    run(dir, "fixpoint " + base2 + " --seed-g2-special");
    auto q2 = run(dir, "query " + base2 + " --e 1 --lambda=-2,-4");
    CHECK(q2.out == "true\n");
}

TEST_CASE("cli show-config and I0 spellings") {
    TempDir dir;
    auto r = run(dir, "show-config");
    CHECK(r.code == 0);
    CHECK(r.out.find("g=2") != std::string::npos);
    CHECK(r.out.find("p=7") != std::string::npos);
    CHECK(r.out.find("mode=hasse") != std::string::npos);

    auto a1 = run(dir, "ample --g 2 --p 7 --I0 s1 --lambda=-3,-3");
    auto a2 = run(dir, "ample --g 2 --p 7 --I0 1 --lambda=-3,-3");
    CHECK(a1.out == a2.out);
    CHECK(a1.out == "true\n");

    auto bad = run(dir, "ample --g 2 --p 7 --I0 s2 --lambda=-3,-3");
    CHECK(bad.code == 1); // s2 is not a Levi generator at g=2

    auto cfgpath = dir.file("cfg.ini");
    std::ofstream cfg(cfgpath);
    cfg << "g=2\np=5\nkmin=-9\nkmax=0\n";
    cfg.close();
    auto c = run(dir, "show-config --config " + cfgpath);
    CHECK(c.out.find("p=5") != std::string::npos);
    auto c2 = run(dir, "show-config --config " + cfgpath + " --p 11");
    CHECK(c2.out.find("p=11") != std::string::npos); // flags beat config file
}
