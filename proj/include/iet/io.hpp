#pragma once

/**
 * @file io.hpp
 * @brief JSON documents for Iets and coding morphisms, and input hashing.
 *
 * Iet document:
 *   {"field_d": 5, "order1": ["a","b"], "order2": ["b","a"],
 *    "lengths": {"a": "-1/2+1/2*sqrt(5)", "b": "3/2-1/2*sqrt(5)"}}
 * Names longer than one character get internal letters; the names survive
 * as labels and are written back unchanged.
 *
 * Code document:
 *   {"source_alphabet": ["u","v","w"], "images": {"u": "aa", "v": "ab", "w": "ba"}}
 */

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "iet/bifix.hpp"
#include "iet/iet.hpp"

namespace iet::io {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t h);

/// Whole file as bytes. Throws IoError.
std::string read_file(const std::filesystem::path& path);
/// Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// Throws ParseError on malformed documents, plus the Iet constructor errors.
Iet iet_from_json(const nlohmann::json& doc);
nlohmann::json iet_to_json(const Iet& t);

CodingMorphism code_from_json(const nlohmann::json& doc);
nlohmann::json code_to_json(const CodingMorphism& f);

/// Inline code syntax: "u:aa;v:ab;w:ba", or a bare list "aa,ab,ba" whose
/// sorted words receive source letters u, v, w, ... in turn.
CodingMorphism parse_inline_code(std::string_view text);

}  // namespace iet::io
