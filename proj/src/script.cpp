#include "pacheck/script.hpp"

#include <fstream>
#include <sstream>

namespace pacheck {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::int64_t parse_index(const std::string& s) {
  if (s.empty()) throw Error("empty line index");
  for (char c : s)
    if (c < '0' || c > '9') throw Error("bad line index: " + s);
  if (s.size() > 12) throw Error("line index too large: " + s);
  return std::stoll(s);
}

VarIndex parse_var_token(const std::string& s) {
  if (s.size() < 2 || s[0] != 'x') throw Error("expected variable token, got: " + s);
  for (std::size_t k = 1; k < s.size(); k++)
    if (s[k] < '0' || s[k] > '9') throw Error("bad variable token: " + s);
  if (s[1] == '0') throw Error("variable index has leading zero: " + s);
  if (s.size() > 10) throw Error("variable index too large: " + s);
  return static_cast<VarIndex>(std::stol(s.substr(1)));
}

}  // namespace

std::string Justification::render() const {
  switch (kind) {
    case Kind::Axiom: return "axiom " + axiom_tag_name(tag);
    case Kind::Hyp: return "hyp";
    case Kind::MP: return "mp " + std::to_string(i) + " " + std::to_string(j);
    case Kind::Gen: return "gen " + std::to_string(i) + " x" + std::to_string(var);
    case Kind::IndClosed:
      return "ind-closed " + std::to_string(i) + " " + std::to_string(j);
    case Kind::IndOpen:
      return "ind-open " + std::to_string(i) + " " + std::to_string(j);
    case Kind::OmegaNum: return "omega-num " + std::to_string(i) + " " + to_decimal(n);
    case Kind::OmegaSpec: return "omega-spec " + cert_path;
  }
  return "?";
}

Justification parse_justification(const std::string& text) {
  auto words = split_ws(text);
  if (words.empty()) throw Error("empty justification");
  Justification j;
  const std::string& head = words[0];
  auto want = [&](std::size_t n) {
    if (words.size() != n) throw Error("malformed justification: " + text);
  };
  if (head == "axiom") {
    want(2);
    j.kind = Justification::Kind::Axiom;
    j.tag = parse_axiom_tag(words[1]);
  } else if (head == "hyp") {
    want(1);
    j.kind = Justification::Kind::Hyp;
  } else if (head == "mp") {
    want(3);
    j.kind = Justification::Kind::MP;
    j.i = parse_index(words[1]);
    j.j = parse_index(words[2]);
  } else if (head == "gen") {
    want(3);
    j.kind = Justification::Kind::Gen;
    j.i = parse_index(words[1]);
    j.var = parse_var_token(words[2]);
  } else if (head == "ind-closed") {
    want(3);
    j.kind = Justification::Kind::IndClosed;
    j.i = parse_index(words[1]);
    j.j = parse_index(words[2]);
  } else if (head == "ind-open") {
    want(3);
    j.kind = Justification::Kind::IndOpen;
    j.i = parse_index(words[1]);
    j.j = parse_index(words[2]);
  } else if (head == "omega-num") {
    want(3);
    j.kind = Justification::Kind::OmegaNum;
    j.i = parse_index(words[1]);
    j.n = from_decimal(words[2]);
  } else if (head == "omega-spec") {
    want(2);
    j.kind = Justification::Kind::OmegaSpec;
    if (words[1].find('|') != std::string::npos)
      throw Error("certificate path may not contain '|'");
    j.cert_path = words[1];
  } else {
    throw Error("unknown justification: " + head);
  }
  return j;
}

bool ProofScript::uses_hypotheses() const {
  for (const auto& l : lines)
    if (l.just.kind == Justification::Kind::Hyp) return true;
  return false;
}

static bool justification_equal(const Justification& a, const Justification& b) {
  if (a.kind != b.kind) return false;
  using K = Justification::Kind;
  switch (a.kind) {
    case K::Axiom: return a.tag == b.tag;
    case K::Hyp: return true;
    case K::MP:
    case K::IndClosed:
    case K::IndOpen: return a.i == b.i && a.j == b.j;
    case K::Gen: return a.i == b.i && a.var == b.var;
    case K::OmegaNum: return a.i == b.i && a.n == b.n;
    case K::OmegaSpec: return a.cert_path == b.cert_path;
  }
  return false;
}

bool script_equal(const ProofScript& a, const ProofScript& b) {
  if (a.name != b.name || a.system != b.system || a.lines.size() != b.lines.size())
    return false;
  for (std::size_t k = 0; k < a.lines.size(); k++) {
    if (a.lines[k].index != b.lines[k].index) return false;
    if (!justification_equal(a.lines[k].just, b.lines[k].just)) return false;
    if (!formula_equal(a.lines[k].formula, b.lines[k].formula)) return false;
  }
  return true;
}

// Splits a rope at newline bytes.  Runs of '\'' never contain separators, so
// scanning runs is enough.
static std::vector<Rope> split_rope_lines(const Rope& text) {
  std::vector<Rope> out;
  Rope cur;
  for (const auto& run : text.runs()) {
    if (run.byte == '\n') {
      BigNat k = run.count;
      while (k > 0) {
        out.push_back(cur);
        cur = Rope();
        k -= 1;
      }
    } else {
      cur.append(run.byte, run.count);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Splits a script line at the first and last '|', so formula text containing
// the or-abbreviation bar stays intact.
static void split_line_fields(const Rope& line, std::string& index_field,
                              Rope& formula_field, std::string& just_field) {
  const auto& runs = line.runs();
  std::size_t first = runs.size(), last = runs.size();
  for (std::size_t k = 0; k < runs.size(); k++) {
    if (runs[k].byte == '|') {
      if (first == runs.size()) first = k;
      last = k;
    }
  }
  if (first == runs.size() || first == last)
    throw Error("proof line needs two '|' separators");
  Rope idx, just;
  for (std::size_t k = 0; k < first; k++) idx.append(runs[k].byte, runs[k].count);
  // middle: everything after the first bar of run `first` up to run `last`
  if (runs[first].count > 1) formula_field.append('|', runs[first].count - 1);
  for (std::size_t k = first + 1; k < last; k++)
    formula_field.append(runs[k].byte, runs[k].count);
  if (runs[last].count > 1) formula_field.append('|', runs[last].count - 1);
  for (std::size_t k = last + 1; k < runs.size(); k++)
    just.append(runs[k].byte, runs[k].count);
  index_field = trim(idx.to_string(1 << 10));
  just_field = trim(just.to_string(1 << 16));
}

ProofScript parse_script(const Rope& text) {
  ProofScript s;
  std::int64_t prev_index = 0;
  bool seen_line = false;
  for (const Rope& raw : split_rope_lines(text)) {
    if (raw.empty()) continue;
    uint8_t head = raw.runs().front().byte;
    if (head == '#') continue;
    if (head == '@') {
      std::string h = raw.to_string(1 << 16);
      if (h.rfind("@name:", 0) == 0) {
        if (seen_line) throw Error("@name header after proof lines");
        s.name = trim(h.substr(6));
      } else if (h.rfind("@system:", 0) == 0) {
        if (seen_line) throw Error("@system header after proof lines");
        s.system = trim(h.substr(8));
      } else {
        throw Error("unknown header line: " + h);
      }
      continue;
    }
    std::string idx_field, just_field;
    Rope fml_field;
    split_line_fields(raw, idx_field, fml_field, just_field);
    ProofLine line;
    line.index = parse_index(idx_field);
    if (line.index <= prev_index)
      throw Error("line indices must be strictly increasing at " + idx_field);
    prev_index = line.index;
    line.formula = parse_formula(fml_field);
    line.just = parse_justification(just_field);
    s.lines.push_back(std::move(line));
    seen_line = true;
  }
  return s;
}

ProofScript parse_script(const std::string& text) { return parse_script(Rope(text)); }

ProofScript load_script(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open proof script: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_script(buf.str());
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace pacheck
