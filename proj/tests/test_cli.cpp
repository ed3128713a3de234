#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "idec/config.hpp"

using namespace idec;

namespace {

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("idec");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("idec_cli_" + name) {}
    TempFile(const std::string& name, const std::string& content) : TempFile(name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }

    std::string slurp() const {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

std::string periodic_fasta(int repeats) {
    std::string body;
    for (int i = 0; i < repeats; ++i) body += "ataaact";
    return ">toy repeat\n" + body + "\n";
}

}  // namespace

TEST_CASE("spectrum subcommand emits the TSV contract and clamps n_max") {
    TempFile input("short.fa", ">tiny\nacgtacgtac\n");
    TempFile output("short.tsv");
    // n-max far beyond L/2 must clamp to 5 (with a warning on stderr).
    const int rc = run({"spectrum", input.path, "--n-max", "200", "--trials", "20",
                        "--output", output.path});
    CHECK(rc == 0);
    std::istringstream lines(output.slurp());
    std::string line;
    std::getline(lines, line);  // provenance comment
    CHECK(line.rfind("# sequence", 0) == 0);
    std::getline(lines, line);
    CHECK(line == "n\tI_nats\tJ_nats\tdf\tmc_mean\tmc_sd\tZ");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        if (!line.empty() && line[0] != '#') ++rows;
    }
    CHECK(rows == 4);  // n = 2..5
}

TEST_CASE("usage errors exit 1, data errors exit 2") {
    CHECK(run({"spectrum"}) == 1);                       // missing file argument
    CHECK(run({"nonsense-subcommand"}) == 1);
    TempFile input("bad.fa", ">x\nacgtn\n");
    CHECK(run({"spectrum", input.path, "--trials", "10"}) == 2);  // 'n' not in alphabet
    CHECK(run({"spectrum", "no_such_file.fa", "--trials", "10"}) == 2);
    TempFile tiny("tiny.fa", ">x\nacgt\n");
    CHECK(run({"spectrum", tiny.path, "--alphabet", "klingon"}) == 1);
}

TEST_CASE("skip-invalid rescues sequences with foreign characters") {
    TempFile input("skip.fa", ">x\nacgtnacgtnacgtnacgtn\n");
    TempFile output("skip.tsv");
    CHECK(run({"spectrum", input.path, "--trials", "10", "--skip-invalid", "--n-max",
               "4", "--output", output.path}) == 0);
}

TEST_CASE("simulate reports a dominant Z(7) for the clean repeat") {
    TempFile output("sim.tsv");
    const int rc = run({"simulate", "--pattern", "ATAAACT", "--repeats", "100",
                        "--mutation", "0", "--trials", "100", "--seed", "1",
                        "--output", output.path});
    CHECK(rc == 0);

    double best_z = 0.0;
    std::size_t best_n = 0;
    std::istringstream lines(output.slurp());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "replicate\tn\tI_nats\tJ_nats\tdf\tmc_mean\tmc_sd\tZ");
    while (std::getline(lines, line)) {
        std::istringstream row(line);
        std::string replicate;
        std::size_t n;
        double i_nats, j_nats, mc_mean, mc_sd, z;
        std::size_t df;
        std::string mean_col, sd_col;
        row >> replicate >> n >> i_nats >> j_nats >> df;
        if (replicate == "mean") {
            row >> mean_col >> sd_col >> z;
        } else {
            row >> mc_mean >> mc_sd >> z;
        }
        if (replicate == "mean" && z > best_z) {
            best_z = z;
            best_n = n;
        }
    }
    CHECK(best_n == 7);
    CHECK(best_z > 100.0);
}

TEST_CASE("calibrate emits per-window rows and a suggested threshold") {
    TempFile output("cal.tsv");
    const int rc = run({"calibrate", "--k", "4", "--freqs", "0.26,0.26,0.24,0.24",
                        "--length", "400", "--windows", "6", "--n-max", "20",
                        "--trials", "30", "--output", output.path});
    CHECK(rc == 0);
    const std::string text = output.slurp();
    CHECK(text.find("window\tmax_z\tn_at_max") == 0);
    CHECK(text.find("# suggested_threshold") != std::string::npos);
    CHECK(text.find("# fraction_above_threshold") != std::string::npos);
}

TEST_CASE("scan emits JSON lines that re-validate") {
    TempFile input("scan.fa", periodic_fasta(100));
    TempFile output("scan.jsonl");
    const int rc = run({"scan", input.path, "--n-max", "10", "--trials", "50",
                        "--seed", "3", "--output", output.path});
    CHECK(rc == 0);
    std::istringstream lines(output.slurp());
    std::string line;
    bool saw_period7 = false;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j["Z"].get<double>() >= j["threshold"].get<double>());
        if (j["n"] == 7) saw_period7 = true;
    }
    CHECK(saw_period7);
}

TEST_CASE("typematrix emits the rotated probability rows") {
    TempFile input("tm.fa", periodic_fasta(50));
    TempFile output("tm.json");
    const int rc = run({"typematrix", input.path, "--n", "7", "--output", output.path});
    CHECK(rc == 0);
    const nlohmann::json j = nlohmann::json::parse(output.slurp());
    CHECK(j["n"] == 7);
    CHECK(j["rows"].size() == 7);
    for (const auto& row : j["rows"]) {
        double sum = 0.0;
        for (const auto& p : row["t"]) sum += p.get<double>();
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("fourier subcommand reports power scaled by 1000") {
    TempFile input("four.fa", ">alt\n" + std::string(1, 'a') + std::string(1, 't') +
                                  "atatatatatatatatat\n");
    TempFile output("four.tsv");
    const int rc = run({"fourier", input.path, "--output", output.path});
    CHECK(rc == 0);
    std::istringstream lines(output.slurp());
    std::string line;
    std::getline(lines, line);  // comment
    std::getline(lines, line);
    CHECK(line == "period\tpower_x1000");
}

TEST_CASE("threshold defaults resolve from the alphabet policy") {
    CHECK(default_threshold(AlphabetPolicy::dna) == 7.0);
    CHECK(default_threshold(AlphabetPolicy::protein) == 6.0);
    CHECK(default_threshold(AlphabetPolicy::text) == 5.0);
    RunConfig cfg;
    cfg.policy = AlphabetPolicy::protein;
    CHECK(cfg.resolved_threshold() == 6.0);
    cfg.threshold = 4.5;
    CHECK(cfg.resolved_threshold() == 4.5);
}

TEST_CASE("identical config and seed give byte-identical outputs") {
    TempFile input("det.fa", periodic_fasta(100));
    TempFile out1("det1.jsonl");
    TempFile out2("det2.jsonl");
    CHECK(run({"scan", input.path, "--n-max", "9", "--trials", "40", "--seed", "5",
               "--output", out1.path}) == 0);
    CHECK(run({"scan", input.path, "--n-max", "9", "--trials", "40", "--seed", "5",
               "--output", out2.path}) == 0);
    CHECK(out1.slurp() == out2.slurp());
    CHECK_FALSE(out1.slurp().empty());
}
