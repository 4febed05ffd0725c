#pragma once

#include <string>
#include <string_view>

#include "oseq/sequence.hpp"

namespace oseq {

// Text form of one period: for k <= 10 a single line of digit characters,
// for larger k comma-separated decimal integers. No whitespace, no trailing
// separator; callers append the final newline.
std::string format_sequence_line(const Sequence& s);

// Inverse of format_sequence_line. Accepts an optional trailing newline.
// Throws std::invalid_argument on empty input or symbols outside [0, k).
Sequence parse_sequence_line(std::string_view text, int k, int order);

std::string sha256_hex(std::string_view bytes);

// Manifest fields for an emitted sequence; checksum is over the text line
// excluding the trailing newline.
std::string manifest_json(const std::string& kind, const Sequence& s,
                          const std::string& line);

}  // namespace oseq
