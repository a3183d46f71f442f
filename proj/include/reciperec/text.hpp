#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 text helpers shared by the normaliser, skill miner and text model.
// Case folding and character classes cover the five corpus scripts (Latin,
// Cyrillic, Arabic); anything outside those ranges passes through untouched.

namespace reciperec::text {

std::vector<std::uint32_t> decode_utf8(std::string_view s);
void append_utf8(std::string& out, std::uint32_t cp);

bool is_space(std::uint32_t cp);
bool is_digit(std::uint32_t cp);   // ASCII, Arabic-Indic, vulgar fractions
bool is_punct(std::uint32_t cp);
bool is_letter(std::uint32_t cp);
std::uint32_t to_lower(std::uint32_t cp);

std::string lower(std::string_view s);

// Lowercases and strips punctuation from both ends of a single token.
std::string clean_token(std::string_view token);

// Whitespace split + clean_token on every piece; empty pieces dropped.
std::vector<std::string> tokenize(std::string_view s);

// True when the token carries no letters and at least one digit-like char:
// "2", "1/2", "3,5" are numeric; "2kg" and "cups" are not.
bool numeric_token(std::string_view token);

// Code-point Levenshtein distance.
int levenshtein(std::string_view a, std::string_view b);

// Character n-grams of "<token>" (with boundary markers) for n in
// [nmin, nmax], plus the whole marked token itself.
std::vector<std::string> char_ngrams(std::string_view token, int nmin, int nmax);

// Splits free text into sentences on ., !, ?, their Arabic/CJK variants
// and newlines. Keeps non-empty pieces, separators dropped.
std::vector<std::string> split_sentences(std::string_view s);

bool contains(std::string_view haystack, std::string_view needle);

}  // namespace reciperec::text
