#ifndef CHAMBERS_TEXTUTIL_HPP
#define CHAMBERS_TEXTUTIL_HPP

#include <string>
#include <string_view>
#include <vector>

namespace chambers {

// Small text helpers shared by the lexer, the label normalizer, identifier
// minting and the turtle emitter. All functions are pure and UTF-8 aware to
// the extent the 1728 source material needs (Latin letters, ligatures,
// period apostrophes like "publish'd" and "'em").

/// Decodes the code point starting at s[i]; advances i past it.
/// Invalid sequences decode as U+FFFD one byte at a time.
char32_t decode_utf8(std::string_view s, size_t& i);

/// Number of code points in s.
size_t utf8_length(std::string_view s);

/// ASCII + Latin-1/Latin-Extended-A lowercasing; leaves other points alone.
std::string fold_case(std::string_view s);

/// Case fold plus diacritic/ligature folding to plain ASCII letters
/// (ae for the ash, oe for ethel, ss for eszett and so on).
std::string fold_label(std::string_view s);

/// Identifier slug: fold_label, drop apostrophes, map every other
/// non-alphanumeric run to a single hyphen, trim hyphens.
/// Returns "" when nothing survives; callers decide whether that is fatal.
std::string slug(std::string_view s);

/// Word tokens of s: maximal runs of letters/digits/apostrophes/hyphens.
/// Multi-byte sequences count as letters. Punctuation and whitespace split.
std::vector<std::string> split_words(std::string_view s);

/// "GEOMETRY" -> "Geometry"; applied per whitespace-separated word.
std::string display_case(std::string_view s);

std::string trim(std::string_view s);

bool is_all_whitespace(std::string_view s);

/// True when text starts with the given word sequence (case-folded,
/// punctuation between words ignored, whole-word boundaries respected).
bool starts_with_words(std::string_view text, const std::vector<std::string>& words);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace chambers

#endif
