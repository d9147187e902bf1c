#include <doctest.h>

#include <sstream>

#include "cli_util.hpp"

using cliutil::run_cli;

TEST_CASE("solve subcommand")
{
    auto r = run_cli("solve --n 4 --k 2 --secret 1,0,1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# recovered=1,0,1,0 queries=5 bound=12") != std::string::npos);

    r = run_cli("solve --n 1 --k 1 --secret 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("queries=1") != std::string::npos);

    r = run_cli("solve --n 4 --k 6 --seed 7 --algorithm naive");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("queries=21") != std::string::npos);
}

TEST_CASE("solve usage errors exit 2")
{
    CHECK(run_cli("solve --n 4").exit_code == 2);
    CHECK(run_cli("solve --n 4 --k 2").exit_code == 2);           // no secret/seed
    CHECK(run_cli("solve --n 4 --k 2 --secret 1,0").exit_code == 2);
    CHECK(run_cli("solve --n 2 --k 2 --secret 5,0").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("play replays a solve transcript byte-for-byte")
{
    auto solved = run_cli("solve --n 4 --k 3 --secret 2,0,1,2");
    REQUIRE(solved.exit_code == 0);

    // Feed the recorded responses (last token of each query line) back
    // through the interactive oracle.
    std::istringstream lines(solved.out);
    std::string line, responses;
    std::getline(lines, line); // N K header
    while (std::getline(lines, line)) {
        if (line.rfind("#", 0) == 0)
            continue;
        auto pos = line.find_last_of(' ');
        responses += line.substr(pos + 1) + "\n";
    }
    auto played = run_cli("play --n 4 --k 3", responses);
    CHECK(played.exit_code == 0);
    CHECK(played.out == solved.out);
}

TEST_CASE("play reports inconsistent scores with exit 3")
{
    // Census answers summing to != N.
    auto r = run_cli("play --n 3 --k 2", "1\n1\n");
    CHECK(r.exit_code == 3);
}

TEST_CASE("sat subcommand")
{
    std::string path = cliutil::temp_path("inst");

    cliutil::write_file(path, "2 3\n1 1 1\n1 2 2\n");
    auto r = run_cli("sat --instance " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "SAT 1,2\n");

    r = run_cli("sat --instance " + path + " --method exhaustive");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "SAT 1,2\n");

    cliutil::write_file(path, "2 3\n1 1 2\n2 2 1\n");
    r = run_cli("sat --instance " + path);
    CHECK(r.exit_code == 1);
    CHECK(r.out == "UNSAT\n");

    cliutil::write_file(path, "1 1\n");
    r = run_cli("sat --instance " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "SAT 0\n");

    cliutil::write_file(path, "4 4\n0 0 0 0 5\n");
    CHECK(run_cli("sat --instance " + path).exit_code == 2);

    cliutil::write_file(path, "8 8\n" + std::string("0 0 0 0 0 0 0 0 4\n") +
                                  "0 0 0 0 0 0 0 0 5\n");
    r = run_cli("sat --instance " + path + " --budget 5");
    CHECK(r.exit_code == 4);
    CHECK(r.out == "UNKNOWN (budget)\n");

    CHECK(run_cli("sat --instance /nonexistent").exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("reduce subcommand")
{
    std::string tdm = cliutil::temp_path("tdm");
    std::string out = cliutil::temp_path("red");

    cliutil::write_file(tdm, "1 1\n1 1 1\n");
    auto r = run_cli("reduce --tdm " + tdm + " --out " + out + " --check");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "EQUIV OK (sat=true)\n");
    // The emitted file is a valid 6-constraint instance.
    std::string emitted = cliutil::read_file(out);
    CHECK(emitted.find("4 3\n") != std::string::npos);

    cliutil::write_file(tdm, "2 2\n1 1 1\n1 2 2\n");
    r = run_cli("reduce --tdm " + tdm + " --out " + out + " --check");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "EQUIV OK (sat=false)\n");

    cliutil::write_file(tdm, "2 1\n1 1 1\n");
    CHECK(run_cli("reduce --tdm " + tdm + " --out " + out).exit_code == 2);

    std::remove(tdm.c_str());
    std::remove(out.c_str());
}

TEST_CASE("bench emits one CSV row per pair and respects bounds")
{
    auto r = run_cli("bench --n-list 4 --k-list 2,3 --trials 10 --seed 5");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "N,K,trials,max_queries,mean_queries,our_bound,chvatal_bound,chen_bound");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 2);

    auto ex = run_cli("bench --n-list 4 --k-list 6 --trials 1 --exhaustive");
    CHECK(ex.exit_code == 0);
    CHECK(ex.out.find("4,6,1296,") != std::string::npos);
}
