#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "helpers.hpp"
#include "idec/fasta.hpp"
#include "idec/serialize.hpp"
#include "idec/spectrum.hpp"
#include "idec/zscore.hpp"

using namespace idec;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("idec_test_" + name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

EncodeOptions dna_options() {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::dna;
    return opt;
}

}  // namespace

TEST_CASE("read_fasta parses multi-record files in order") {
    TempFile f("multi.fa", ">first record\nacgt\nACGT\n>second\nttgg\n");
    const auto records = read_fasta(f.path, dna_options());
    REQUIRE(records.size() == 2);
    CHECK(records[0].id == "first record");
    CHECK(records[0].record_index == 0);
    CHECK(records[0].seq.decode() == "acgtacgt");
    CHECK(records[1].id == "second");
    CHECK(records[1].seq.decode() == "ttgg");
}

TEST_CASE("line wrapping does not change the sequence") {
    TempFile wrapped("wrap.fa", ">x\nacg\ntac\ngt\n");
    TempFile flat("flat.fa", ">x\nacgtacgt\n");
    const auto a = read_fasta(wrapped.path, dna_options());
    const auto b = read_fasta(flat.path, dna_options());
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0].seq.data() == b[0].seq.data());
}

TEST_CASE("empty file yields an empty record list") {
    TempFile f("empty.fa", "");
    CHECK(read_fasta(f.path, dna_options()).empty());
}

TEST_CASE("malformed fasta is rejected") {
    TempFile headerless("headerless.fa", "acgt\n>x\nacgt\n");
    CHECK_THROWS_AS(read_fasta(headerless.path, dna_options()), std::runtime_error);
    TempFile bodyless("bodyless.fa", ">x\n>y\nacgt\n");
    CHECK_THROWS_AS(read_fasta(bodyless.path, dna_options()), std::runtime_error);
}

TEST_CASE("looks_like_fasta sniffs the first significant byte") {
    TempFile fa("sniff.fa", "  \n>seq\nacgt\n");
    TempFile txt("sniff.txt", "acgtacgt\n");
    CHECK(looks_like_fasta(fa.path));
    CHECK_FALSE(looks_like_fasta(txt.path));
}

TEST_CASE("spectrum TSV has the exact column contract") {
    const EncodedSequence s = test::repeat("ATAAACT", 20, "ACT");
    IdSpectrum spec = spectrum(s, {2, 4}, BackgroundModel::shuffled(20, 0), false, 1);
    spec.sequence_id = "unit";
    const std::string tsv = spectrum_to_tsv(spec);

    std::istringstream lines(tsv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "n\tI_nats\tJ_nats\tdf\tmc_mean\tmc_sd\tZ");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 3);

    // Byte-deterministic.
    CHECK(spectrum_to_tsv(spec) == tsv);
}

TEST_CASE("json spectrum round-trips at 6 significant digits") {
    const EncodedSequence s = test::repeat("ATAAACT", 20, "ACT");
    IdSpectrum spec = spectrum(s, {2, 6}, BackgroundModel::shuffled(20, 1), false, 1);
    spec.sequence_id = "roundtrip";
    const nlohmann::json j = spectrum_to_json(spec);
    const nlohmann::json parsed = nlohmann::json::parse(j.dump());

    REQUIRE(parsed["entries"].size() == spec.entries.size());
    for (std::size_t i = 0; i < spec.entries.size(); ++i) {
        const auto& e = parsed["entries"][i];
        CHECK(e["n"].get<std::size_t>() == spec.entries[i].n);
        CHECK(e["df"].get<std::size_t>() == spec.entries[i].stat.df);
        const double z = e["Z"].get<double>();
        const double expect = std::strtod(format_double(spec.entries[i].stat.z).c_str(),
                                          nullptr);
        CHECK(z == expect);
    }
    CHECK(parsed["sequence_id"] == "roundtrip");
}

TEST_CASE("format_double uses 6 significant digits and flags nan") {
    CHECK(format_double(1.23456789) == "1.23457");
    CHECK(format_double(484.2030263919617) == "484.203");
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("scan hits serialize as one JSON object per line") {
    ScanHit hit;
    hit.window_start = 0;
    hit.window_end = 2000;
    hit.sub_start = 100;
    hit.sub_end = 800;
    hit.n = 7;
    hit.stat.info_nats = 650.0;
    hit.stat.j_stat = 638.0;
    hit.stat.df = 12;
    hit.stat.mc_mean = -5.9;
    hit.stat.mc_sd = 2.4;
    hit.stat.z = 268.0;
    hit.threshold_used = 7.0;
    const std::string line = hit_to_jsonl(hit, "file.fa#0:seq");
    CHECK(line.find('\n') == std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(line);
    CHECK(j["subseq"][0] == 100);
    CHECK(j["subseq"][1] == 800);
    CHECK(j["n"] == 7);
    CHECK(j["Z"].get<double>() == 268.0);
    CHECK(j["sequence_id"] == "file.fa#0:seq");
}
