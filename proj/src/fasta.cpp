#include "idec/fasta.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace idec {

namespace {

std::string read_entire_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::vector<SequenceRecord> read_fasta(const std::string& path, const EncodeOptions& options) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    std::vector<SequenceRecord> records;
    std::string line;
    std::string id;
    std::string body;
    bool in_record = false;

    auto flush = [&]() {
        if (!in_record) return;
        if (body.empty()) {
            throw std::runtime_error(path + ": record '" + id + "' has no sequence data");
        }
        SequenceRecord rec;
        rec.id = id;
        rec.source_file = path;
        rec.record_index = records.size();
        rec.seq = encode_text(body, options);
        records.push_back(std::move(rec));
        body.clear();
    };

    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush();
            id = line.substr(1);
            in_record = true;
        } else {
            if (!in_record) {
                throw std::runtime_error(path + ": sequence data before first '>' header");
            }
            body += line;
        }
    }
    flush();
    return records;
}

SequenceRecord read_text_file(const std::string& path, const EncodeOptions& options) {
    SequenceRecord rec;
    rec.id = path;
    rec.source_file = path;
    rec.record_index = 0;
    rec.seq = encode_text(read_entire_file(path), options);
    return rec;
}

bool looks_like_fasta(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    char c;
    while (in.get(c)) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '>';
    }
    return false;
}

}  // namespace idec
