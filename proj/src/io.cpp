#include "iet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "iet/errors.hpp"

namespace iet::io {

using nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw IoError("write to " + path.string() + " failed");
}

namespace {

std::vector<std::string> name_list(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(std::string("missing array \"") + key + "\"");
  std::vector<std::string> names;
  for (const auto& item : doc[key]) {
    if (!item.is_string() || item.get<std::string>().empty())
      throw ParseError(std::string("\"") + key + "\" must list nonempty strings");
    names.push_back(item.get<std::string>());
  }
  return names;
}

}  // namespace

Iet iet_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("an Iet document is a JSON object");
  const auto order1 = name_list(doc, "order1");
  const auto order2 = name_list(doc, "order2");
  if (!doc.contains("lengths") || !doc["lengths"].is_object()) throw ParseError("missing object \"lengths\"");
  const json& lengths = doc["lengths"];

  std::int64_t field = 0;
  if (doc.contains("field_d")) {
    if (!doc["field_d"].is_number_integer()) throw ParseError("\"field_d\" must be an integer");
    field = doc["field_d"].get<std::int64_t>();
  }

  const std::set<std::string> names1(order1.begin(), order1.end());
  const std::set<std::string> names2(order2.begin(), order2.end());
  if (names1.size() != order1.size() || names2.size() != order2.size()) throw ParseError("repeated letter in an order");
  if (names1 != names2) throw AlphabetMismatch("order1 and order2 list different letters");
  if (lengths.size() != names1.size()) throw AlphabetMismatch("lengths must be given for exactly the letters of the orders");
  if (names1.size() > fresh_letters().size()) throw ParseError("too many letters");

  const bool single = std::all_of(order1.begin(), order1.end(), [](const std::string& n) { return n.size() == 1; });
  std::map<std::string, char> letter;
  for (std::size_t i = 0; i < order1.size(); ++i) letter[order1[i]] = single ? order1[i][0] : fresh_letters()[i];

  std::string o1, o2;
  std::vector<QuadraticNumber> values;
  for (const auto& name : order1) {
    o1 += letter[name];
    if (!lengths.contains(name) || !lengths[name].is_string())
      throw ParseError("length of \"" + name + "\" must be a QuadraticNumber string");
    QuadraticNumber v = QuadraticNumber::parse(lengths[name].get<std::string>());
    if (!v.is_rational() && field != 0 && v.field() != field)
      throw MixedFieldError("length of \"" + name + "\" lies outside Q(sqrt(" + std::to_string(field) + "))");
    values.push_back(std::move(v));
  }
  for (const auto& name : order2) o2 += letter[name];
  return Iet(std::move(o1), std::move(o2), std::move(values), order1);
}

json iet_to_json(const Iet& t) {
  json doc = json::object();
  doc["field_d"] = t.field();
  json o1 = json::array(), o2 = json::array(), lengths = json::object();
  for (char a : t.order1()) {
    o1.push_back(t.label(a));
    lengths[t.label(a)] = t.length(a).str();
  }
  for (char a : t.order2()) o2.push_back(t.label(a));
  doc["order1"] = std::move(o1);
  doc["order2"] = std::move(o2);
  doc["lengths"] = std::move(lengths);
  return doc;
}

CodingMorphism code_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("a code document is a JSON object");
  const auto alphabet = name_list(doc, "source_alphabet");
  if (!doc.contains("images") || !doc["images"].is_object()) throw ParseError("missing object \"images\"");
  const json& images = doc["images"];
  if (images.size() != alphabet.size()) throw AlphabetMismatch("images must cover exactly the source alphabet");
  std::map<char, Word> map;
  for (const auto& b : alphabet) {
    if (b.size() != 1) throw ParseError("source letters must be single characters");
    if (!images.contains(b) || !images[b].is_string()) throw ParseError("image of \"" + b + "\" must be a string");
    if (!map.emplace(b[0], images[b].get<std::string>()).second) throw ParseError("source letter repeated");
  }
  return CodingMorphism(std::move(map));
}

json code_to_json(const CodingMorphism& f) {
  json doc = json::object();
  json alphabet = json::array(), images = json::object();
  for (const auto& [b, x] : f.images()) {
    alphabet.push_back(std::string(1, b));
    images[std::string(1, b)] = x;
  }
  doc["source_alphabet"] = std::move(alphabet);
  doc["images"] = std::move(images);
  return doc;
}

CodingMorphism parse_inline_code(std::string_view text) {
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        parts.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    parts.push_back(cur);
    parts.erase(std::remove(parts.begin(), parts.end(), std::string()), parts.end());
    return parts;
  };
  std::map<char, Word> map;
  if (text.find(':') != std::string_view::npos) {
    for (const auto& item : split(text, ';')) {
      const auto colon = item.find(':');
      if (colon != 1 || item.size() < 3) throw ParseError("expected letter:word in \"" + item + "\"");
      if (!map.emplace(item[0], item.substr(2)).second) throw ParseError("source letter repeated");
    }
  } else {
    auto words = split(text, ',');
    std::sort(words.begin(), words.end());
    static constexpr std::string_view letters = "uvwxyzpqrstmnoklghijdefc";
    if (words.size() > letters.size()) throw ParseError("too many code words for automatic source letters");
    for (std::size_t i = 0; i < words.size(); ++i) map.emplace(letters[i], words[i]);
  }
  if (map.empty()) throw ParseError("empty code");
  return CodingMorphism(std::move(map));
}

}  // namespace iet::io
