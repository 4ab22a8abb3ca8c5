#ifndef TAG5_TOKENS_HPP
#define TAG5_TOKENS_HPP

#include <string>
#include <string_view>
#include <vector>

namespace tag5 {

/// Splits on runs of ASCII whitespace.
std::vector<std::string> split_whitespace(std::string_view text);

/// Splits on every occurrence of sep; empty fields are dropped.
std::vector<std::string> split_on(std::string_view text, std::string_view sep);

/// One token per UTF-8 code point. Throws Error on malformed UTF-8.
std::vector<std::string> split_chars(std::string_view text);

std::string join(const std::vector<std::string>& tokens, std::string_view sep);

}  // namespace tag5

#endif  // TAG5_TOKENS_HPP
