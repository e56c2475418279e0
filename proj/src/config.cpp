#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qcn/error.hpp"
#include "qcn/system.hpp"

namespace qcn {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

class LineError {
 public:
  explicit LineError(int line) : line_(line) {}
  [[noreturn]] void fail(const std::string& msg) const { throw Error("line " + std::to_string(line_) + ": " + msg); }

 private:
  int line_;
};

int parse_positive(const std::string& value, const LineError& at, const std::string& what) {
  if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    at.fail(what + " must be a positive integer, got '" + value + "'");
  long v = 0;
  try {
    v = std::stol(value);
  } catch (...) {
    at.fail(what + " is out of range");
  }
  if (v < 1 || v > 1'000'000) at.fail(what + " must be a positive integer, got '" + value + "'");
  return static_cast<int>(v);
}

int parse_chunk(const std::string& tok, const LineError& at) {
  if (tok.size() < 2 || (tok[0] != 'f' && tok[0] != 'F')) at.fail("expected chunk name like f1, got '" + tok + "'");
  return parse_positive(tok.substr(1), at, "chunk index") - 1;
}

bool parse_bool(const std::string& v, const LineError& at) {
  if (v == "true") return true;
  if (v == "false") return false;
  at.fail("expected true or false, got '" + v + "'");
}

enum class Section { None, System, Drive, Traffic, Coding };

}  // namespace

SystemDescription parse_system_description(std::string_view text) {
  SystemDescription desc;
  Section section = Section::None;
  DriveSpec* drive = nullptr;
  std::map<int, DriveSpec> drives;
  std::set<std::string> seen_keys;  // "<section>/<key>" to reject duplicates
  std::string section_tag;
  bool saw_system = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    LineError at(lineno);
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') at.fail("unterminated section header");
      auto parts = split_ws(line.substr(1, line.size() - 2));
      if (parts.empty()) at.fail("empty section header");
      drive = nullptr;
      if (parts[0] == "system" && parts.size() == 1) {
        section = Section::System;
        saw_system = true;
      } else if (parts[0] == "traffic" && parts.size() == 1) {
        section = Section::Traffic;
      } else if (parts[0] == "coding" && parts.size() == 1) {
        section = Section::Coding;
        if (!desc.coding) desc.coding.emplace();
      } else if (parts[0] == "drive" && parts.size() == 2) {
        int id = parse_positive(parts[1], at, "drive id");
        if (drives.count(id)) at.fail("duplicate section [drive " + parts[1] + "]");
        section = Section::Drive;
        drive = &drives[id];
        drive->id = id;
      } else {
        at.fail("unknown section '" + line + "'");
      }
      section_tag = line;
      continue;
    }

    if (section == Section::Coding) {
      auto toks = split_ws(line);
      // drive <n> stores <count> of <gen>
      if (!toks.empty() && toks[0] == "drive") {
        if (toks.size() != 6 || toks[2] != "stores" || toks[4] != "of")
          at.fail("expected 'drive <n> stores <count> of <generation>'");
        CodedPlacementSpec p;
        p.drive = parse_positive(toks[1], at, "drive id");
        p.count = parse_positive(toks[3], at, "coded chunk count");
        p.generation = toks[5];
        desc.coding->placements.push_back(p);
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) at.fail("expected 'key = value' in [coding]");
      std::string lhs = trim(line.substr(0, eq));
      std::string rhs = trim(line.substr(eq + 1));
      auto lhs_toks = split_ws(lhs);
      if (lhs_toks.size() == 2 && lhs_toks[0] == "generation") {
        // generation <id> = f1 f2 ... ; s = <int>
        auto semi = rhs.find(';');
        if (semi == std::string::npos) at.fail("generation needs '; s = <int>'");
        GenerationSpec g;
        g.id = lhs_toks[1];
        for (const auto& tok : split_ws(rhs.substr(0, semi))) g.chunks.push_back(parse_chunk(tok, at));
        if (g.chunks.empty()) at.fail("generation " + g.id + " has no chunks");
        std::string tail = trim(rhs.substr(semi + 1));
        auto teq = tail.find('=');
        if (teq == std::string::npos || trim(tail.substr(0, teq)) != "s") at.fail("generation needs '; s = <int>'");
        g.decode_threshold = parse_positive(trim(tail.substr(teq + 1)), at, "s");
        for (const auto& other : desc.coding->generations)
          if (other.id == g.id) at.fail("duplicate generation '" + g.id + "'");
        desc.coding->generations.push_back(std::move(g));
      } else if (lhs == "coefficient_cycling") {
        if (!seen_keys.insert("coding/" + lhs).second) at.fail("duplicate key '" + lhs + "'");
        desc.coding->coefficient_cycling = parse_bool(rhs, at);
      } else {
        at.fail("unknown key '" + lhs + "' in [coding]");
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos) at.fail("expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (!seen_keys.insert(section_tag + "/" + key).second) at.fail("duplicate key '" + key + "' in " + section_tag);

    switch (section) {
      case Section::None:
        at.fail("key '" + key + "' outside of any section");
      case Section::System:
        if (key == "users")
          desc.num_users = parse_positive(value, at, "users");
        else if (key == "chunks")
          desc.num_chunks = parse_positive(value, at, "chunks");
        else
          at.fail("unknown key '" + key + "' in [system]");
        break;
      case Section::Drive:
        if (key == "units") {
          drive->units = parse_positive(value, at, "units");
        } else if (key == "stores") {
          for (const auto& tok : split_ws(value)) drive->chunks.push_back(parse_chunk(tok, at));
        } else {
          at.fail("unknown key '" + key + "' in " + section_tag);
        }
        break;
      case Section::Traffic:
        if (key == "pattern") {
          try {
            desc.pattern = parse_pattern(value);
          } catch (const Error& e) {
            at.fail(e.what());
          }
        } else if (key == "rx") {
          for (const auto& tok : split_ws(value)) desc.reception.push_back(parse_positive(tok, at, "rx"));
        } else {
          at.fail("unknown key '" + key + "' in [traffic]");
        }
        break;
      case Section::Coding:
        break;
    }
  }

  if (!saw_system) throw Error("missing [system] section");
  if (desc.num_users == 0) throw Error("[system] is missing 'users'");
  if (desc.num_chunks == 0) throw Error("[system] is missing 'chunks'");
  if (drives.empty()) throw Error("no [drive <n>] sections");
  for (auto& [id, d] : drives) desc.drives.push_back(std::move(d));
  return desc;
}

SystemDescription load_system_description(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_system_description(ss.str());
}

}  // namespace qcn
