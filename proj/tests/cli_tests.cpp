// Behavior tests driving the installed CLI binary. The binary path
// comes from the SPHFN_CLI environment variable (set by CTest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string cli_path()
{
    const char* p = std::getenv("SPHFN_CLI");
    REQUIRE_MESSAGE(p != nullptr, "SPHFN_CLI must point at the CLI binary");
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& catalog_env = {})
{
    static int counter = 0;
    std::string file = "cli_out_" + std::to_string(counter++) + ".txt";
    std::string env = catalog_env.empty() ? "SPHFN_CATALOG= " : "SPHFN_CATALOG=" + catalog_env + " ";
    std::string cmd = env + cli_path() + " " + args + " > " + file + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(file.c_str());
    return r;
}

std::string first_line(const std::string& s)
{
    return s.substr(0, s.find('\n'));
}

} // namespace

TEST_CASE("eval: value 1 at the identity")
{
    auto r = run("eval --group sl2r-sec4 --lambda 1.0 --t 0 --route hyp");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value_re  1\n") != std::string::npos);
    CHECK(r.out.find("route     hyp") != std::string::npos);
}

TEST_CASE("eval: confluent at lambda 0 vanishes in paper-literal mode")
{
    auto r = run("eval --route confluent --lambda 0 --t 0.4 --mode paper-literal");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value_re  0\n") != std::string::npos);
}

TEST_CASE("eval: domain and convergence exit codes")
{
    CHECK(run("eval --group sl2r-sec2 --route integral-hc --lambda 1 --t -1").exit_code == 2);
    CHECK(run("eval --group sl2r-sec4 --route integral-hc --lambda 1 --t 0.5").exit_code == 2);
    CHECK(run("eval --group nope --lambda 1 --t 0.5 --route hyp").exit_code == 2);
    CHECK(run("eval --route stanton-tomas --lambda 1 --t 1.7").exit_code == 2);
    // series budget blown: convergence failure
    CHECK(run("eval --p 5 --q 5 --lambda 0.1 --t 12 --route hyp").exit_code == 3);
}

TEST_CASE("eval: csv format is locale-free key-value data")
{
    auto r = run("eval --lambda 0.5 --t 0.25 --route hyp --format csv");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) ==
          "group,lambda_re,lambda_im,t,route,value_re,value_im,abs_diff_vs_first");
    CHECK(r.out.find(',') != std::string::npos);
    CHECK(r.out.find(';') == std::string::npos);
}

TEST_CASE("compare: agreeing routes exit 0 with the exact CSV header")
{
    auto r = run("compare --lambda 0.7 --lambda 1.3 --t-min 0.05 --t-max 1.0 --t-steps 4 "
                 "--routes hyp,ode --tol 1e-6");
    CHECK(r.exit_code == 0);
    CHECK(first_line(r.out) ==
          "group,lambda_re,lambda_im,t,route,value_re,value_im,abs_diff_vs_first");
    // 2 lambdas x 4 t x 2 routes rows + header
    int lines = 0;
    for (char c : r.out)
        if (c == '\n')
            ++lines;
    CHECK(lines == 1 + 16);
}

TEST_CASE("compare: identical route listed twice gives all-zero diffs")
{
    auto r = run("compare --lambda 0.9 --t 0.6 --routes hyp,hyp --tol 0");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line))
        CHECK(line.substr(line.rfind(',') + 1) == "0");
}

TEST_CASE("compare: tol 0 with distinct routes exits nonzero")
{
    auto r = run("compare --lambda 0.9 --t 0.6 --routes hyp,ode --tol 0");
    CHECK(r.exit_code == 1);
}

TEST_CASE("compare: per-point failures keep empty value fields and exit 4")
{
    auto r = run("compare --lambda 0.8 --t 1.7 --routes hyp,stanton-tomas --tol 1");
    CHECK(r.exit_code == 4);
    CHECK(r.out.find("stanton-tomas,,,\n") != std::string::npos);
}

TEST_CASE("compare: the two integral representations agree on sl2r-sec2")
{
    auto r = run("compare --group sl2r-sec2 --lambda 0.8,1.3 --t-min 0.2 --t-max 1.2 "
                 "--t-steps 4 --routes integral-hc,integral-contour --tol 1e-5");
    CHECK(r.exit_code == 0);
}

TEST_CASE("compare: serial and parallel sweeps emit identical bytes")
{
    std::string args = "compare --lambda 0.6,1.9 --t-min 0.1 --t-max 0.9 --t-steps 5 "
                       "--routes hyp,ode,confluent --tol 10";
    auto a = run(args);
    auto b = run(args + " --serial");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("axioms: deterministic under a fixed seed, 15 lines")
{
    auto a = run("axioms --trials 1000 --seed 42");
    auto b = run("axioms --trials 1000 --seed 42");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    int pass_lines = 0;
    std::istringstream in(a.out);
    std::string line;
    while (std::getline(in, line))
        if (line.find("1000/1000 pass") != std::string::npos)
            ++pass_lines;
    CHECK(pass_lines == 15);

    auto single = run("axioms --trials 1");
    int lines = 0;
    std::istringstream sin(single.out);
    while (std::getline(sin, line))
        if (line.find("1/1 pass") != std::string::npos)
            ++lines;
    CHECK(lines == 15);
}

TEST_CASE("error-order: defaults pass, bad inputs exit 2")
{
    auto r = run("error-order --group sl2r-sec4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict    pass") != std::string::npos);

    CHECK(run("error-order --points 2").exit_code == 2);
    CHECK(run("error-order --lambda 200").exit_code == 2); // |lambda t| > 1
    CHECK(run("error-order --m 1").exit_code == 2);
}

TEST_CASE("catalog: file groups resolve, built-ins cannot be shadowed")
{
    {
        std::ofstream cat("cli_catalog.txt");
        cat << "name = h4\np = 3\nq = 0\n";
    }
    auto r = run("eval --catalog cli_catalog.txt --group h4 --lambda 0.5 --t 0.3 --route hyp");
    CHECK(r.exit_code == 0);

    auto none = run("eval --group h4 --lambda 0.5 --t 0.3 --route hyp");
    CHECK(none.exit_code == 2); // no catalog given

    auto env = run("eval --group h4 --lambda 0.5 --t 0.3 --route hyp", "cli_catalog.txt");
    CHECK(env.exit_code == 0); // picked up from SPHFN_CATALOG

    {
        std::ofstream cat("cli_catalog.txt");
        cat << "name = sl2r-sec4\np = 9\nq = 0\n";
    }
    auto shadow =
        run("eval --catalog cli_catalog.txt --group other --lambda 0.5 --t 0.3 --route hyp");
    CHECK(shadow.exit_code == 2);
    std::remove("cli_catalog.txt");
}

TEST_CASE("multiplicity overrides bypass the catalog")
{
    auto a = run("eval --p 1 --q 0 --lambda 0.9 --t 0.4 --route hyp --format csv");
    CHECK(a.exit_code == 0);
    // (1,0) differs from the default (2,0) at the same point
    auto b = run("eval --lambda 0.9 --t 0.4 --route hyp --format csv");
    CHECK(first_line(a.out) == first_line(b.out));
    CHECK(a.out != b.out);
}

TEST_CASE("complex lambda syntax")
{
    CHECK(run("eval --lambda 2+1i --t 0.5 --route hyp").exit_code == 0);
    CHECK(run("eval --lambda -1.5i --t 0.5 --route hyp").exit_code == 0);
    CHECK(run("eval --lambda i --t 0.5 --route hyp").exit_code == 0);
    CHECK(run("eval --lambda 1.2e-1+3i --t 0.5 --route hyp").exit_code == 0);
    CHECK(run("eval --lambda nonsense --t 0.5 --route hyp").exit_code == 2);
}
