#include "doctest.h"

#include "helpers.hpp"
#include "idec/sequence.hpp"

using namespace idec;

TEST_CASE("dna encoding maps acgt to canonical indices") {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::dna;
    const EncodedSequence seq = encode_text("acgt", opt);
    CHECK(seq.length() == 4);
    CHECK(seq.alphabet_size() == 4);
    CHECK(seq.data() == std::vector<SymbolIndex>{0, 1, 2, 3});
    CHECK(seq.decode() == "acgt");

    // Case-insensitive.
    CHECK(encode_text("ACGT", opt).data() == seq.data());
}

TEST_CASE("dna encoding rejects or skips foreign symbols") {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::dna;
    CHECK_THROWS_AS(encode_text("acgtx", opt), std::runtime_error);

    opt.skip_unknown = true;
    const EncodedSequence seq = encode_text("acgtx", opt);
    CHECK(seq.length() == 4);
    CHECK(seq.decode() == "acgt");
}

TEST_CASE("protein alphabet is the 20 standard residues") {
    CHECK(Alphabet::protein().size() == 20);
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::protein;
    const EncodedSequence seq = encode_text("ACDWY", opt);
    CHECK(seq.length() == 5);
    CHECK(seq.decode() == "acdwy");
}

TEST_CASE("text policy folds case and turns punctuation into word spaces") {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::text;

    const EncodedSequence seq = encode_text("Я помню…", opt);
    const Alphabet& a = seq.alphabet();
    // The ellipsis became a space; the space is an alphabet member.
    CHECK(a.index_of(" ").has_value());
    const std::string decoded = seq.decode();
    CHECK(decoded.back() == ' ');
    // Case folding: the leading uppercase Я matches the я later.
    CHECK(decoded.substr(0, 2) == "я");
}

TEST_CASE("text policy keeps runs of spaces") {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::text;
    const EncodedSequence seq = encode_text("a  b", opt);
    CHECK(seq.length() == 4);
    CHECK(seq.decode() == "a  b");
}

TEST_CASE("normalize_text maps every non-word code point to one space") {
    CHECK(normalize_text("don't stop!") == "don t stop ");
    CHECK(normalize_text("A-B") == "a b");
    CHECK(normalize_text("x\ny") == "x y");
}

TEST_CASE("encode/decode round-trips the normalized input") {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::text;
    const std::string raw = "Have more than thou showest, Speak less than thou knowest.";
    const EncodedSequence seq = encode_text(raw, opt);
    CHECK(seq.decode() == normalize_text(raw));
}

TEST_CASE("empty-after-normalization is an error") {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::dna;
    opt.skip_unknown = true;
    CHECK_THROWS_AS(encode_text("xyz", opt), std::runtime_error);
}

TEST_CASE("custom alphabets preserve symbol order") {
    const Alphabet binary = Alphabet::from_string("01");
    CHECK(binary.size() == 2);
    CHECK(binary.symbol(0) == "0");
    CHECK(*binary.index_of("1") == 1);
    CHECK_THROWS_AS(Alphabet::from_string("aa"), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::from_string("a"), std::invalid_argument);
}

TEST_CASE("custom policy ignores whitespace unless the alphabet claims it") {
    EncodeOptions opt;
    opt.policy = AlphabetPolicy::custom;
    opt.alphabet = std::make_shared<const Alphabet>(Alphabet::from_string("01"));
    const EncodedSequence seq = encode_text("0101\n0101\n", opt);
    CHECK(seq.length() == 8);

    EncodeOptions spaced;
    spaced.policy = AlphabetPolicy::custom;
    spaced.alphabet = std::make_shared<const Alphabet>(Alphabet::from_string("01 "));
    CHECK(encode_text("01 01", spaced).length() == 5);
}

TEST_CASE("subsequence slices and validates bounds") {
    const EncodedSequence seq = test::dna("acgtacgt");
    const EncodedSequence sub = seq.subsequence(2, 6);
    CHECK(sub.decode() == "gtac");
    CHECK_THROWS_AS(seq.subsequence(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(seq.subsequence(0, 9), std::invalid_argument);
}
