#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ontokg {

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view line, char delimiter);
bool contains_whitespace(std::string_view s);

// Reads a whole text file; throws IoError when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Splits file content into lines, treating both LF and CRLF as terminators.
std::vector<std::string> read_lines(const std::string& path);

// Uniform integer in [0, bound) drawn by rejection; the result sequence
// depends only on the engine state, not on the standard library.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound);

// Deterministic k-subset of {0..n-1} by partial Fisher-Yates, returned sorted.
std::vector<std::uint32_t> sample_without_replacement(std::size_t n, std::size_t k,
                                                      std::mt19937_64& rng);

}  // namespace ontokg
