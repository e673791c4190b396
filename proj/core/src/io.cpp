#include "freewidth/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace freewidth {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("BadFile", "malformed JSON in " + what);
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("BadFile", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string dir_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

FiniteGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("mult"))
    throw Error("BadFile", "group description needs a 'mult' table");
  std::vector<std::vector<Elem>> mult;
  for (const auto& row : j.at("mult")) mult.push_back(row.get<std::vector<Elem>>());
  if (j.contains("order") && j.at("order").get<int>() != static_cast<int>(mult.size()))
    throw Error("NotAGroup", "declared order disagrees with the table size");
  std::string name = j.value("name", std::string{});
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return FiniteGroup::validated(std::move(mult), std::move(name), std::move(names));
}

// Inline object or a path relative to the instance file.
FiniteGroup group_field(const json& j, const std::string& base_dir) {
  if (j.is_string()) return group_from_json(parse_json(slurp(base_dir + "/" + j.get<std::string>()), "group file"));
  return group_from_json(j);
}

std::vector<std::pair<Elem, Elem>> pairs_field(const json& j) {
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& p : j) out.emplace_back(p.at(0).get<Elem>(), p.at(1).get<Elem>());
  return out;
}

Elem lookup_element(const FiniteGroup& g, const std::string& token, const std::string& word_token,
                    std::size_t position) {
  try {
    std::size_t used = 0;
    int idx = std::stoi(token, &used);
    if (used == token.size()) {
      if (idx < 0 || idx >= g.order())
        throw Error("UnknownLetter", "token '" + word_token + "' at position " +
                                         std::to_string(position) + " is out of range");
      return idx;
    }
  } catch (const Error&) {
    throw;
  } catch (...) {
    // fall through to name lookup
  }
  Elem byname = g.element_by_name(token);
  if (byname < 0)
    throw Error("UnknownLetter", "token '" + word_token + "' at position " +
                                     std::to_string(position) + " names no element");
  return byname;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

FiniteGroup group_from_json_text(const std::string& text) {
  return group_from_json(parse_json(text, "group description"));
}

FiniteGroup load_group_file(const std::string& path) {
  return group_from_json(parse_json(slurp(path), path));
}

InstanceKind probe_instance(const std::string& path) {
  json j = parse_json(slurp(path), path);
  if (j.contains("group")) return InstanceKind::kHnn;
  if (j.contains("g1")) return InstanceKind::kAmalgam;
  throw Error("BadFile", path + " is neither an HNN nor an amalgam instance");
}

HnnInstance load_hnn_instance(const std::string& path) {
  json j = parse_json(slurp(path), path);
  FiniteGroup base = group_field(j.at("group"), dir_of(path));
  Subgroup h1 = check_subgroup(base, j.at("h1").get<std::vector<Elem>>());
  Subgroup h2 = check_subgroup(base, j.at("h2").get<std::vector<Elem>>());
  SubgroupIso phi = check_iso(base, h1, base, h2, pairs_field(j.at("phi")));
  return HnnInstance(std::move(base), std::move(h1), std::move(h2), std::move(phi),
                     j.value("name", std::string{}));
}

AmalInstance load_amalgam_instance(const std::string& path) {
  json j = parse_json(slurp(path), path);
  FiniteGroup g1 = group_field(j.at("g1"), dir_of(path));
  FiniteGroup g2 = group_field(j.at("g2"), dir_of(path));
  Subgroup h1 = check_subgroup(g1, j.at("h_in_g1").get<std::vector<Elem>>());
  Subgroup h2 = check_subgroup(g2, j.at("h_in_g2").get<std::vector<Elem>>());
  SubgroupIso ident = check_iso(g1, h1, g2, h2, pairs_field(j.at("h_iso")));
  return AmalInstance(std::move(g1), std::move(g2), std::move(h1), std::move(h2),
                      std::move(ident), j.value("name", std::string{}));
}

Letters parse_letters(const HnnInstance& inst, const std::string& text) {
  Letters out;
  auto tokens = split_tokens(text);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    if (tok == "t") {
      out.push_back(inst.t_letter());
    } else if (tok == "t^-1") {
      out.push_back(inst.t_inverse_letter());
    } else if (tok.rfind("g:", 0) == 0) {
      out.push_back(lookup_element(inst.base(), tok.substr(2), tok, i));
    } else {
      throw Error("UnknownLetter",
                  "token '" + tok + "' at position " + std::to_string(i) + " is not a letter");
    }
  }
  return out;
}

Letters parse_letters(const AmalInstance& inst, const std::string& text) {
  Letters out;
  auto tokens = split_tokens(text);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& tok = tokens[i];
    int factor = 0;
    if (tok.rfind("1:", 0) == 0) factor = 1;
    if (tok.rfind("2:", 0) == 0) factor = 2;
    if (factor == 0)
      throw Error("UnknownLetter",
                  "token '" + tok + "' at position " + std::to_string(i) + " is not factor-tagged");
    Elem e = lookup_element(inst.factor(factor), tok.substr(2), tok, i);
    out.push_back(inst.letter_code({static_cast<std::int8_t>(factor), e}));
  }
  return out;
}

std::string format_word(const HnnInstance& inst, const HnnWord& w) {
  (void)inst;
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& tok) {
    if (!first) out << ' ';
    out << tok;
    first = false;
  };
  if (w.head != 0 || w.tail.empty()) emit("g:" + std::to_string(w.head));
  for (const auto& syl : w.tail) {
    emit(syl.beta > 0 ? "t" : "t^-1");
    if (syl.g != 0) emit("g:" + std::to_string(syl.g));
  }
  return out.str();
}

std::string format_word(const AmalInstance& inst, const AmalWord& w) {
  (void)inst;
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << static_cast<int>(w[i].factor) << ':' << w[i].g;
  }
  return out.str();
}

}  // namespace freewidth
