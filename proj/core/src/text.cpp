#include "negext/text.hpp"

namespace negext {

namespace {
inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }
}  // namespace

std::size_t utf8_length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char b : text) {
    if (!is_continuation(b)) ++n;
  }
  return n;
}

std::size_t utf8_byte_offset(std::string_view text, std::size_t cp_index) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_continuation(static_cast<unsigned char>(text[i]))) {
      if (seen == cp_index) return i;
      ++seen;
    }
  }
  return text.size();
}

std::string_view utf8_slice(std::string_view text, std::size_t cp_begin,
                            std::size_t cp_end) {
  if (cp_end <= cp_begin) return std::string_view{};
  const std::size_t b = utf8_byte_offset(text, cp_begin);
  const std::size_t e = utf8_byte_offset(text, cp_end);
  return text.substr(b, e - b);
}

}  // namespace negext
