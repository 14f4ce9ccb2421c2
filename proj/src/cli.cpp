#include "iet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "iet/bifix.hpp"
#include "iet/errors.hpp"
#include "iet/extension.hpp"
#include "iet/io.hpp"
#include "iet/language.hpp"
#include "iet/rauzy.hpp"
#include "iet/skew.hpp"

namespace iet::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "json";
  std::string iet_path;
  std::string code;
  std::string subst;
  std::string seed = "a";
  std::string lang_path;
  std::string planar;
  std::string perm;
  std::string word;
  std::string out_path;
  std::string csv_path;
  std::size_t depth = 64;
  std::size_t max_len = 6;
  std::size_t degree = 2;
  std::size_t max_word_len = 4;
  std::size_t out_len = 8;
  std::size_t n = 2;
  std::size_t points = 20000;
  std::size_t home = 1;
  bool force = false;
  bool return_words = false;
};

// Bytes of every input, in the order read, feed the input hash.
class Inputs {
 public:
  void add(std::string_view name, std::string_view bytes) {
    blob_ += name;
    blob_ += '\0';
    blob_ += bytes;
    blob_ += '\0';
  }
  std::string hash() const { return io::hex64(io::fnv1a64(blob_)); }

 private:
  std::string blob_;
};

Iet load_iet(const std::string& path, Inputs& inputs) {
  const std::string bytes = io::read_file(path);
  inputs.add("iet", bytes);
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return io::iet_from_json(doc);
}

CodingMorphism load_code(const std::string& source, Inputs& inputs) {
  if (std::filesystem::is_regular_file(source)) {
    const std::string bytes = io::read_file(source);
    inputs.add("code", bytes);
    try {
      return io::code_from_json(json::parse(bytes));
    } catch (const json::parse_error& e) {
      throw ParseError(source + ": " + e.what());
    }
  }
  inputs.add("code", source);
  return io::parse_inline_code(source);
}

Substitution parse_substitution(const std::string& source) {
  if (source == "fibonacci") return Substitution::fibonacci();
  if (source == "tribonacci") return Substitution::tribonacci();
  std::map<char, Word> rules;
  std::stringstream ss(source);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    if (item.empty()) continue;
    if (item.size() < 3 || item[1] != ':') throw ParseError("expected letter:image in \"" + item + "\"");
    if (!rules.emplace(item[0], item.substr(2)).second) throw ParseError("letter assigned twice");
  }
  if (rules.empty()) throw ParseError("empty substitution");
  return Substitution(std::move(rules));
}

json words_json(const std::vector<Word>& words) {
  json arr = json::array();
  for (const auto& w : words) arr.push_back(w);
  return arr;
}

json language_json(const FactorialLanguage& s) {
  return {{"alphabet", s.alphabet()}, {"max_len", s.max_len()}, {"size", s.size()}, {"words", words_json(s.words())}};
}

json regularity_json(const RegularityReport& r) {
  json doc = {{"status", r.regular() ? "RegularUpToDepth" : "ConnectionFound"}, {"depth", r.depth}};
  if (r.witness) doc["witness"] = {{"from", r.witness->from}, {"to", r.witness->to}, {"steps", r.witness->steps}};
  return doc;
}

json bifix_json(const CodeSet& x, const BifixReport& r) {
  return {{"code", words_json(x.words())},       {"s_maximal", r.s_maximal},
          {"degree", r.degree},                  {"internal_factors", words_json(r.internal_factors)},
          {"kernel", words_json(r.kernel)},      {"order1", words_json(r.order1)},
          {"order2", words_json(r.order2)}};
}

std::string reason_name(FailureReason r) {
  switch (r) {
    case FailureReason::NotConnected:
      return "NotConnected";
    case FailureReason::HasCycle:
      return "HasCycle";
    case FailureReason::OrderViolation:
      return "OrderViolation";
    case FailureReason::ConditionIII:
      return "ConditionIII";
  }
  return "Unknown";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::TreeSet:
      return "TreeSet";
    case Verdict::PlanarTreeSet:
      return "PlanarTreeSet";
    case Verdict::Fails:
      return "Fails";
  }
  return "Unknown";
}

// Plain-text rendering of a result document: one "key: value" per line.
void render_text(std::ostream& os, const json& v, const std::string& indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& x = it.value();
    os << indent << it.key() << ':';
    if (x.is_object()) {
      os << '\n';
      render_text(os, x, indent + "  ");
    } else if (x.is_array()) {
      const bool flat = std::all_of(x.begin(), x.end(), [](const json& e) { return e.is_primitive(); });
      if (flat) {
        for (const auto& e : x) os << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
        os << '\n';
      } else {
        os << '\n';
        for (const auto& e : x) {
          os << indent << "  -\n";
          if (e.is_object()) render_text(os, e, indent + "    ");
          else os << indent << "    " << e.dump() << '\n';
        }
      }
    } else {
      os << ' ' << (x.is_string() ? x.get<std::string>() : x.dump()) << '\n';
    }
  }
}

void emit(std::ostream& out, const Options& opt, const std::string& command, const json& parameters,
          const Inputs& inputs, const json& result) {
  json doc = {{"command", command}, {"input_hash", inputs.hash()}, {"parameters", parameters}, {"result", result}};
  if (opt.format == "text") render_text(out, doc, "");
  else out << doc.dump(2) << '\n';
}

// The language an Iet document describes, long enough for words up to `len`.
FactorialLanguage iet_language(const Iet& t, std::size_t len, bool force) { return language_of_iet(t, len, force); }

std::size_t longest(const CodingMorphism& f) {
  std::size_t m = 0;
  for (const auto& [b, x] : f.images()) m = std::max(m, x.size());
  return m;
}

void cmd_regular(const Options& opt, std::ostream& out) {
  Inputs inputs;
  const Iet t = load_iet(opt.iet_path, inputs);
  emit(out, opt, "regular", {{"iet", opt.iet_path}, {"depth", opt.depth}}, inputs,
       regularity_json(check_regular(t, opt.depth)));
}

void cmd_lang(const Options& opt, std::ostream& out) {
  Inputs inputs;
  json params = {{"max_len", opt.max_len}, {"force", opt.force}};
  std::optional<FactorialLanguage> s;
  if (!opt.iet_path.empty()) {
    const Iet t = load_iet(opt.iet_path, inputs);
    params["iet"] = opt.iet_path;
    s = iet_language(t, opt.max_len, opt.force);
  } else {
    const Substitution f = parse_substitution(opt.subst);
    if (opt.seed.size() != 1) throw ParseError("--seed takes a single letter");
    inputs.add("subst", opt.subst);
    inputs.add("seed", opt.seed);
    params["subst"] = opt.subst;
    params["seed"] = opt.seed;
    s = substitution_language(f, opt.seed[0], opt.max_len);
  }
  std::ostringstream file;
  file << "# input_hash " << inputs.hash() << '\n';
  write_language(file, *s);
  if (!opt.out_path.empty()) {
    io::write_file(opt.out_path, file.str());
    params["out"] = opt.out_path;
  }
  if (opt.format == "text") out << file.str();
  else emit(out, opt, "lang", params, inputs, language_json(*s));
}

void cmd_measure(const Options& opt, std::ostream& out) {
  Inputs inputs;
  const Iet t = load_iet(opt.iet_path, inputs);
  inputs.add("word", opt.word);
  for (char c : opt.word)
    if (!t.has_letter(c)) throw AlphabetMismatch(std::string("letter '") + c + "' is not in the Iet");
  emit(out, opt, "measure", {{"iet", opt.iet_path}, {"word", opt.word}}, inputs,
       {{"word", opt.word}, {"measure", invariant_measure(t, opt.word).str()}});
}

void cmd_bifix_analyze(const Options& opt, std::ostream& out) {
  Inputs inputs;
  const Iet t = load_iet(opt.iet_path, inputs);
  const CodingMorphism f = load_code(opt.code, inputs);
  const CodeSet x = f.code();
  const FactorialLanguage s = iet_language(t, 2 * x.max_length(), false);
  emit(out, opt, "bifix analyze", {{"iet", opt.iet_path}, {"code", opt.code}}, inputs, bifix_json(x, analyze_bifix(x, s, t)));
}

void cmd_bifix_enum(const Options& opt, std::ostream& out) {
  Inputs inputs;
  const Iet t = load_iet(opt.iet_path, inputs);
  const FactorialLanguage s = iet_language(t, 2 * opt.max_word_len, false);
  json codes = json::array();
  for (const CodeSet& x : enumerate_maximal_bifix(s, opt.degree, opt.max_word_len))
    codes.push_back(bifix_json(x, analyze_bifix(x, s, t)));
  const std::size_t count = codes.size();
  emit(out, opt, "bifix enum",
       {{"iet", opt.iet_path}, {"degree", opt.degree}, {"max_word_len", opt.max_word_len}}, inputs,
       {{"count", count}, {"codes", std::move(codes)}});
}

void cmd_decode(const Options& opt, std::ostream& out) {
  Inputs inputs;
  const Iet t = load_iet(opt.iet_path, inputs);
  const CodingMorphism f = load_code(opt.code, inputs);
  const FactorialLanguage s = iet_language(t, std::max<std::size_t>(opt.out_len, 2) * longest(f), false);
  const FactorialLanguage decoded = decode_language(s, f, opt.out_len);
  const Iet tf = build_tf(t, f, s);
  json params = {{"iet", opt.iet_path}, {"code", opt.code}, {"out_len", opt.out_len}};
  if (!opt.out_path.empty()) {
    io::write_file(opt.out_path, io::iet_to_json(tf).dump(2) + "\n");
    params["out"] = opt.out_path;
  }
  emit(out, opt, "decode", params, inputs,
       {{"morphism", io::code_to_json(f)}, {"decoded_language", language_json(decoded)}, {"decoded_iet", io::iet_to_json(tf)}});
}

void cmd_tree(const Options& opt, std::ostream& out) {
  Inputs inputs;
  const std::string bytes = io::read_file(opt.lang_path);
  inputs.add("lang", bytes);
  std::istringstream is(bytes);
  const FactorialLanguage s = read_language(is);
  json params = {{"lang", opt.lang_path}, {"max_len", opt.max_len}};
  std::optional<OrderPair> orders;
  if (!opt.planar.empty()) {
    const auto comma = opt.planar.find(',');
    if (comma == std::string::npos) throw ParseError("--planar expects LEFT,RIGHT");
    orders = OrderPair{opt.planar.substr(0, comma), opt.planar.substr(comma + 1)};
    params["planar"] = opt.planar;
  }
  const TreeCheckReport r = check_planar_tree_set(s, orders, opt.max_len);
  json result = {{"verdict", verdict_name(r.verdict)}, {"max_len_checked", r.max_len_checked}};
  if (r.counterexample)
    result["counterexample"] = {{"word", r.counterexample->word}, {"reason", reason_name(r.counterexample->reason)}};
  emit(out, opt, "tree", params, inputs, result);
}

void cmd_skew(const Options& opt, std::ostream& out) {
  Inputs inputs;
  Iet t = load_iet(opt.iet_path, inputs);
  inputs.add("perm", opt.perm);
  const SkewIet u(std::move(t), PermMorphism::parse(opt.perm));
  json params = {{"iet", opt.iet_path}, {"perm", opt.perm}, {"home", opt.home}, {"degree", u.degree()}};
  json result = {{"stacked_iet", io::iet_to_json(skew_as_iet(u))}};
  if (opt.return_words) {
    params["max_word_len"] = opt.max_word_len;
    const CodeSet x = return_words(u, opt.home, opt.max_word_len);
    result["return_words"] = words_json(x.words());
    result["schreier"] = {{"expected", u.degree() * (u.base().size() - 1) + 1},
                          {"holds", schreier_check(x, u.degree(), u.base().size())}};
  }
  emit(out, opt, "skew", params, inputs, result);
}

void cmd_power(const Options& opt, std::ostream& out) {
  Inputs inputs;
  const Iet t = load_iet(opt.iet_path, inputs);
  const json doc = io::iet_to_json(power(t, opt.n));
  if (opt.format == "text") out << doc.dump(2) << '\n';
  else emit(out, opt, "power", {{"iet", opt.iet_path}, {"n", opt.n}}, inputs, doc);
}

void cmd_rauzy(const Options& opt, std::ostream& out) {
  Inputs inputs;
  const rauzy::PointCloud cloud = rauzy::rauzy_cloud(opt.points);
  const std::string svg = rauzy::svg_document(cloud);
  json params = {{"points", opt.points}};
  if (!opt.out_path.empty()) {
    io::write_file(opt.out_path, svg);
    params["out"] = opt.out_path;
  }
  if (!opt.csv_path.empty()) {
    std::ostringstream csv;
    rauzy::write_csv(csv, cloud);
    io::write_file(opt.csv_path, csv.str());
    params["csv"] = opt.csv_path;
  }
  char beta[64];
  std::snprintf(beta, sizeof beta, "%.17Lg", rauzy::tribonacci_beta());
  emit(out, opt, "rauzy", params, inputs,
       {{"beta", beta},
        {"max_exchange_deviation", rauzy::max_exchange_deviation(cloud)},
        {"svg_hash", io::hex64(io::fnv1a64(svg))}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Interval exchanges, bifix codes and tree sets with exact arithmetic", "ietool"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto add_iet = [&](CLI::App* sub) { return sub->add_option("--iet", opt.iet_path, "Iet JSON file")->check(CLI::ExistingFile); };

  auto* regular = app.add_subcommand("regular", "Depth-bounded regularity check");
  add_iet(regular)->required();
  regular->add_option("--depth", opt.depth)->check(CLI::PositiveNumber)->capture_default_str();

  auto* lang = app.add_subcommand("lang", "Truncated language of an Iet or a substitution");
  auto* lang_iet = add_iet(lang);
  auto* lang_subst = lang->add_option("--subst", opt.subst, "fibonacci, tribonacci or rules like a:ab;b:a");
  lang_iet->excludes(lang_subst);
  lang->add_option("--seed", opt.seed)->capture_default_str();
  lang->add_option("--max-len", opt.max_len)->required()->check(CLI::PositiveNumber);
  lang->add_option("--out", opt.out_path, "Language file to write");
  lang->add_flag("--force", opt.force, "Skip the regularity guard");

  auto* measure = app.add_subcommand("measure", "Invariant measure of a word");
  add_iet(measure)->required();
  measure->add_option("--word", opt.word)->required();

  auto* bifix = app.add_subcommand("bifix", "Bifix code analysis and enumeration");
  bifix->require_subcommand(1);
  auto* analyze = bifix->add_subcommand("analyze", "Degree, kernel and orders of one code");
  add_iet(analyze)->required();
  analyze->add_option("--code", opt.code, "Code JSON file, u:aa;v:ab or aa,ab,ba")->required();
  auto* enumerate = bifix->add_subcommand("enum", "All S-maximal bifix codes of a degree");
  add_iet(enumerate)->required();
  enumerate->add_option("--degree", opt.degree)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--max-word-len", opt.max_word_len)->required()->check(CLI::PositiveNumber);

  auto* decode = app.add_subcommand("decode", "Maximal bifix decoding");
  add_iet(decode)->required();
  decode->add_option("--code", opt.code)->required();
  decode->add_option("--out-len", opt.out_len)->check(CLI::PositiveNumber)->capture_default_str();
  decode->add_option("--out", opt.out_path, "Iet JSON file for the decoded transformation");

  auto* tree = app.add_subcommand("tree", "Tree and planar tree set check");
  tree->add_option("--lang", opt.lang_path, "Language file")->required()->check(CLI::ExistingFile);
  tree->add_option("--planar", opt.planar, "LEFT,RIGHT letter orders");
  tree->add_option("--max-len", opt.max_len)->required();

  auto* skew = app.add_subcommand("skew", "Skew product with a permutation group");
  add_iet(skew)->required();
  skew->add_option("--perm", opt.perm, "e.g. a:(2 3);b:(1 2)")->required();
  skew->add_option("--home", opt.home)->check(CLI::PositiveNumber)->capture_default_str();
  skew->add_flag("--return-words", opt.return_words);
  skew->add_option("--max-word-len", opt.max_word_len)->check(CLI::PositiveNumber)->capture_default_str();

  auto* pw = app.add_subcommand("power", "T^n as an Iet");
  add_iet(pw)->required();
  pw->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);

  auto* rz = app.add_subcommand("rauzy", "Rauzy fractal point cloud");
  rz->add_option("--points", opt.points)->check(CLI::PositiveNumber)->capture_default_str();
  rz->add_option("--out", opt.out_path, "SVG file");
  rz->add_option("--csv", opt.csv_path, "CSV dump");

  for (auto* sub : {regular, lang, measure, bifix, decode, tree, skew, pw, rz}) sub->fallthrough();
  analyze->fallthrough();
  enumerate->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (lang->parsed() && opt.iet_path.empty() && opt.subst.empty())
      throw CLI::ValidationError("lang", "one of --iet or --subst is required");
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (regular->parsed()) cmd_regular(opt, out);
    else if (lang->parsed()) cmd_lang(opt, out);
    else if (measure->parsed()) cmd_measure(opt, out);
    else if (analyze->parsed()) cmd_bifix_analyze(opt, out);
    else if (enumerate->parsed()) cmd_bifix_enum(opt, out);
    else if (decode->parsed()) cmd_decode(opt, out);
    else if (tree->parsed()) cmd_tree(opt, out);
    else if (skew->parsed()) cmd_skew(opt, out);
    else if (pw->parsed()) cmd_power(opt, out);
    else if (rz->parsed()) cmd_rauzy(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace iet::cli
