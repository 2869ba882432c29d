#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    std::string out;
    int code = -1;
};

RunResult run(const std::string& args)
{
    const std::string cmd = std::string(MILNORLAB_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("cli: fibration on the first example pair")
{
    auto r = run("fibration -f \"x^3+y^2\" -g \"x^2+y^2\"");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\": \"obstructed\"") != std::string::npos);
    CHECK(r.out.find("\"witness\"") != std::string::npos);
}

TEST_CASE("cli: zeta factors and milnor number")
{
    auto r = run("zeta -f \"x^2+y^3\"");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"milnor\": 2") != std::string::npos);
    CHECK(r.out.find("\"convention\": \"corner-positive-edge-negative\"") != std::string::npos);
}

TEST_CASE("cli: zeta-mixed maps a violated multiplicity condition to exit 2")
{
    auto r = run("zeta-mixed -f \"x^3+y^2\" -g \"x^2+y^2\"");
    CHECK(r.code == 2);
    CHECK(r.out.find("witness P=(1,1)") != std::string::npos);
}

TEST_CASE("cli: parse errors exit 1")
{
    CHECK(run("zeta -f \"x + $\"").code == 1);
    CHECK(run("jacobian -f \"x\"").code == 1); // missing -g
}

TEST_CASE("cli: reports are byte-identical across runs and thread settings")
{
    const std::string args = "fibration -f \"x^5+x^2y^2+y^6\" -g \"x^6+x^2y^2+y^5\"";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    // batch: three jobs, order preserved, threads do not change the bytes
    const std::string jobfile = std::string(JOBDIR) + "/jobs_det.json";
    {
        std::ofstream out(jobfile);
        out << R"([
  {"command":"zeta","f":"x^2+y^3"},
  {"command":"fibration","f":"x^3+y^2","g":"x^2+y^2"},
  {"command":"multcond","f":"x^3-y^2","g":"x^2-y^3"}
])";
    }
    auto one = run("batch " + jobfile + " 2>/dev/null");
    setenv("MILNORLAB_THREADS", "4", 1);
    auto four = run("batch " + jobfile);
    unsetenv("MILNORLAB_THREADS");
    setenv("MILNORLAB_THREADS", "1", 1);
    auto single = run("batch " + jobfile);
    unsetenv("MILNORLAB_THREADS");
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
    CHECK(one.out == single.out);
}

TEST_CASE("cli: batch isolates malformed jobs and reports max exit code")
{
    const std::string jobfile = std::string(JOBDIR) + "/jobs_mixed.json";
    {
        std::ofstream out(jobfile);
        out << R"([
  {"command":"zeta","f":"x^2+y^3"},
  {"command":"zeta","f":"x + ("},
  {"command":"newton","f":"x^5+x^2y^2+y^6"}
])";
    }
    auto r = run("batch " + jobfile);
    CHECK(r.code == 1);
    CHECK(r.out.find("\"milnor\": 2") != std::string::npos);   // first job computed
    CHECK(r.out.find("\"error\"") != std::string::npos);       // second job failed
    CHECK(r.out.find("\"convenient\": true") != std::string::npos); // third computed
}

TEST_CASE("cli: empty batch")
{
    const std::string jobfile = std::string(JOBDIR) + "/jobs_empty.json";
    {
        std::ofstream out(jobfile);
        out << "[]";
    }
    auto r = run("batch " + jobfile);
    CHECK(r.code == 0);
}

TEST_CASE("cli: text format renders the same data")
{
    auto r = run("zeta -f \"x^2+y^3\" --format text");
    CHECK(r.code == 0);
    CHECK(r.out.find("milnor: 2") != std::string::npos);
}

TEST_CASE("cli: inconclusive fibration exits 3")
{
    // multiplicity satisfied but the pair is degenerate on a shared face:
    // the guarantee cannot be issued
    auto r = run("fibration -f \"x^2+2xy+y^2+x^5+y^5\" -g \"x^7+x^3y^3+y^7\"");
    CHECK(r.code == 3);
    CHECK(r.out.find("\"verdict\": \"inconclusive\"") != std::string::npos);
}
