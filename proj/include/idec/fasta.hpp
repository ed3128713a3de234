#pragma once

#include <string>
#include <vector>

#include "idec/sequence.hpp"

namespace idec {

// One ingested sequence with file provenance.
struct SequenceRecord {
    std::string id;           // FASTA header text (or file name for plain text)
    std::string source_file;
    std::size_t record_index = 0;
    EncodedSequence seq;
};

// Parses a FASTA file: each '>' line starts a record, the header text after
// '>' is the id, sequence lines are concatenated and encoded per options.
// An empty file yields an empty list (the CLI warns); a record with no
// sequence data, or sequence data before the first header, is an error.
std::vector<SequenceRecord> read_fasta(const std::string& path, const EncodeOptions& options);

// Reads a whole file as one plain-text sequence.
SequenceRecord read_text_file(const std::string& path, const EncodeOptions& options);

// First non-whitespace byte is '>'.
bool looks_like_fasta(const std::string& path);

}  // namespace idec
