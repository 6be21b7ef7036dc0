#pragma once

#include <crcforge/hamming.hpp>
#include <crcforge/verifier.hpp>

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace crcforge {

inline constexpr const char * code_file_format = "crc-code.v1";

/// Contents of a crc-code.v1 file: a single JSON object
///   {"format":"crc-code.v1","n":N,"q":Q,"codewords":[[...],...],"meta":{...}}
/// with codewords sorted lexicographically on output.
struct CodeFile {
    Code code;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

/// Throws Error(format_error) on malformed input, unknown keys, invalid or
/// duplicate codewords.
auto parse_code_file(const std::string & text) -> CodeFile;
auto read_code_file(const std::string & path) -> CodeFile;

/// Canonical serialization: one codeword per line, LF line endings.
auto serialize_code_file(const CodeFile & file) -> std::string;
void write_code_file(const std::string & path, const CodeFile & file);

auto certificate_to_json(const CrcCertificate & cert) -> nlohmann::ordered_json;

}
