#pragma once

#include <cstddef>
#include <string_view>

namespace negext {

// Character counts throughout the pipeline are Unicode scalar values, not
// bytes. Helpers below treat the input as UTF-8 and never validate it;
// ill-formed bytes are counted as one scalar each so counting stays total.

// Number of Unicode scalar values in a UTF-8 string.
std::size_t utf8_length(std::string_view text);

// Byte offset of the codepoint with index `cp_index` (0-based). Returns
// text.size() when cp_index is at or past the end.
std::size_t utf8_byte_offset(std::string_view text, std::size_t cp_index);

// Slice [cp_begin, cp_end) measured in codepoints.
std::string_view utf8_slice(std::string_view text, std::size_t cp_begin,
                            std::size_t cp_end);

}  // namespace negext
