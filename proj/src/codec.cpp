#include "pacheck/codec.hpp"

#include <cmath>
#include <mutex>

namespace pacheck {

// -- prime table ---------------------------------------------------------

namespace {
std::vector<BigNat> g_primes = {2, 3, 5, 7, 11, 13};
std::mutex g_primes_mu;
}  // namespace

const BigNat& nth_prime(std::size_t i) {
  std::lock_guard<std::mutex> lock(g_primes_mu);
  while (g_primes.size() <= i) {
    BigNat c = g_primes.back() + 2;
    for (;;) {
      bool prime = true;
      for (const BigNat& p : g_primes) {
        if (p * p > c) break;
        if (c % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) break;
      c += 2;
    }
    g_primes.push_back(c);
  }
  return g_primes[i];
}

Codec parse_codec(const std::string& name) {
  if (name == "positional") return Codec::Positional;
  if (name == "prime") return Codec::PrimePower;
  throw CodecError("unknown codec: " + name + " (want positional|prime)");
}

std::string codec_name(Codec c) {
  return c == Codec::Positional ? "positional" : "prime";
}

// -- canonical script rendering -------------------------------------------

static void check_header_field(const std::string& s, const char* what) {
  if (s.find('\n') != std::string::npos)
    throw CodecError(std::string(what) + " may not contain newlines");
  if (!s.empty() && (s.front() == ' ' || s.back() == ' '))
    throw CodecError(std::string(what) + " may not have surrounding spaces");
}

std::vector<Rope> render_script_lines(const ProofScript& s) {
  check_header_field(s.name, "script name");
  check_header_field(s.system, "script system");
  std::vector<Rope> out;
  {
    Rope h;
    h.append("@name: " + s.name);
    out.push_back(std::move(h));
  }
  {
    Rope h;
    h.append("@system: " + s.system);
    out.push_back(std::move(h));
  }
  for (const auto& line : s.lines) {
    Rope r;
    r.append(std::to_string(line.index) + " | ");
    render_formula(line.formula, r);
    r.append(" | " + line.just.render());
    out.push_back(std::move(r));
  }
  return out;
}

Rope render_script(const ProofScript& s) {
  Rope out;
  bool first = true;
  for (const Rope& line : render_script_lines(s)) {
    if (!first) out.append('\n');
    first = false;
    out.append(line);
  }
  return out;
}

// -- symbol table ----------------------------------------------------------

namespace {

// Fixed codes: 0->1, '->3, ~->5, "->"->7, (->9, )->11, =->13, +->15, *->17,
// A->19, space->21, x_i -> 2i.
std::optional<BigNat> byte_symbol_code(uint8_t b) {
  switch (b) {
    case '0': return BigNat(1);
    case '\'': return BigNat(3);
    case '~': return BigNat(5);
    case '(': return BigNat(9);
    case ')': return BigNat(11);
    case '=': return BigNat(13);
    case '+': return BigNat(15);
    case '*': return BigNat(17);
    case 'A': return BigNat(19);
    case ' ': return BigNat(21);
    default: return std::nullopt;
  }
}

void push_symbol(std::vector<SymbolRun>& out, const BigNat& code, const BigNat& count) {
  if (count == 0) return;
  if (!out.empty() && out.back().code == code)
    out.back().count += count;
  else
    out.push_back(SymbolRun{code, count});
}

std::vector<SymbolRun> tokenize_symbols(const Rope& text) {
  std::vector<SymbolRun> out;
  const auto& runs = text.runs();
  std::size_t ri = 0;
  BigNat off = 0;
  auto peek = [&]() -> std::optional<uint8_t> {
    if (ri >= runs.size()) return std::nullopt;
    return runs[ri].byte;
  };
  auto step = [&]() {
    off += 1;
    if (off == runs[ri].count) {
      ri++;
      off = 0;
    }
  };
  while (auto c = peek()) {
    if (*c == '\'' && off == 0) {  // whole apostrophe run at once
      push_symbol(out, 3, runs[ri].count);
      ri++;
      continue;
    }
    if (*c == '-') {
      step();
      auto c2 = peek();
      if (!c2 || *c2 != '>') throw CodecError("stray '-' in rendering");
      step();
      push_symbol(out, 7, 1);
      continue;
    }
    if (*c == 'x') {
      step();
      std::string digits;
      while (auto d = peek()) {
        if (*d >= '0' && *d <= '9') {
          digits += static_cast<char>(*d);
          step();
        } else
          break;
      }
      if (digits.empty() || digits.size() > 9 || digits[0] == '0')
        throw CodecError("bad variable in rendering");
      push_symbol(out, BigNat(2) * BigNat(digits), 1);
      continue;
    }
    if (auto code = byte_symbol_code(*c)) {
      push_symbol(out, *code, 1);
      step();
      continue;
    }
    throw CodecError("symbol not in PrimePower table: byte " + std::to_string(*c));
  }
  return out;
}

Rope symbols_to_rope(const std::vector<SymbolRun>& symbols) {
  Rope out;
  for (const auto& s : symbols) {
    if (s.code == 1) out.append('0', s.count);
    else if (s.code == 3) out.append('\'', s.count);
    else if (s.code == 5) out.append('~', s.count);
    else if (s.code == 7) {
      for (BigNat k = 0; k < s.count; k++) out.append("->");
    } else if (s.code == 9) out.append('(', s.count);
    else if (s.code == 11) out.append(')', s.count);
    else if (s.code == 13) out.append('=', s.count);
    else if (s.code == 15) out.append('+', s.count);
    else if (s.code == 17) out.append('*', s.count);
    else if (s.code == 19) out.append('A', s.count);
    else if (s.code == 21) out.append(' ', s.count);
    else if (s.code >= 2 && s.code % 2 == 0) {
      std::string v = "x" + to_decimal(s.code / 2);
      for (BigNat k = 0; k < s.count; k++) out.append(v);
    } else {
      throw NotAnEncoding("code " + to_decimal(s.code) + " is not a symbol");
    }
  }
  return out;
}

}  // namespace

// -- GodelNumber -------------------------------------------------------------

GodelNumber GodelNumber::positional(Rope rendering) {
  GodelNumber g;
  g.codec_ = Codec::Positional;
  g.bytes_ = std::move(rendering);
  return g;
}

GodelNumber GodelNumber::prime_symbols(std::vector<SymbolRun> codes) {
  GodelNumber g;
  g.codec_ = Codec::PrimePower;
  g.symbol_runs_ = std::move(codes);
  return g;
}

GodelNumber GodelNumber::prime_lines(std::vector<Rope> lines) {
  GodelNumber g;
  g.codec_ = Codec::PrimePower;
  g.line_ropes_ = std::move(lines);
  g.is_script_ = true;
  return g;
}

const Rope& GodelNumber::rendering() const {
  if (codec_ != Codec::Positional)
    throw CodecError("rendering() is positional-only");
  return bytes_;
}

bool GodelNumber::value_fits(std::size_t limit) const {
  if (codec_ == Codec::Positional) return bytes_.size() <= limit;
  if (!is_script_) {
    BigNat total = 0;
    for (const auto& s : symbol_runs_) total += s.count;
    return total <= limit / 64;
  }
  for (const auto& line : line_ropes_)
    if (line.size() > 8) return false;  // exponent itself would be astronomical
  return line_ropes_.size() <= 16;
}

BigNat GodelNumber::value(std::size_t limit) const {
  if (!value_fits(limit))
    throw ValueTooLarge("Godel number too large to materialize as a numeral");
  if (codec_ == Codec::Positional) return bytes_.to_value(limit);
  BigNat v = 1;
  std::size_t pos = 0;
  if (!is_script_) {
    for (const auto& s : symbol_runs_) {
      for (BigNat k = 0; k < s.count; k++) v *= big_pow(nth_prime(pos++), s.code);
    }
  } else {
    for (const auto& line : line_ropes_)
      v *= big_pow(nth_prime(pos++), line.to_value());
  }
  return v;
}

std::string GodelNumber::describe() const {
  if (value_fits()) return to_decimal(value());
  if (codec_ == Codec::Positional)
    return "[positional value of a " + to_decimal(bytes_.size()) + "-byte rendering]";
  return "[prime-power value beyond materialization]";
}

bool GodelNumber::operator==(const GodelNumber& other) const {
  if (codec_ != other.codec_) return false;
  if (codec_ == Codec::Positional) return bytes_ == other.bytes_;
  if (is_script_ != other.is_script_) return false;
  if (is_script_) return line_ropes_ == other.line_ropes_;
  return symbol_runs_ == other.symbol_runs_;
}

int gn_compare(const GodelNumber& a, const GodelNumber& b) {
  if (a.codec_ != b.codec_) throw CodecError("gn_compare: codec mismatch");
  if (a == b) return 0;
  if (a.codec_ == Codec::Positional) {
    // Bijective numeration is strictly monotone in length.
    if (a.bytes_.size() != b.bytes_.size())
      return a.bytes_.size() < b.bytes_.size() ? -1 : 1;
    return a.bytes_.lex_compare(b.bytes_);
  }
  BigNat va = a.value();
  BigNat vb = b.value();
  return va < vb ? -1 : (va == vb ? 0 : 1);
}

// -- encode -------------------------------------------------------------------

GodelNumber encode(const Term& t, Codec c) {
  Rope r;
  render_term(t, r);
  if (c == Codec::Positional) return GodelNumber::positional(std::move(r));
  return GodelNumber::prime_symbols(tokenize_symbols(r));
}

GodelNumber encode(const Formula& f, Codec c) {
  Rope r = render_formula(f);
  if (c == Codec::Positional) return GodelNumber::positional(std::move(r));
  return GodelNumber::prime_symbols(tokenize_symbols(r));
}

GodelNumber encode(const ProofScript& s, Codec c) {
  if (c == Codec::Positional) return GodelNumber::positional(render_script(s));
  return GodelNumber::prime_lines(render_script_lines(s));
}

// -- decode -------------------------------------------------------------------

static Encodable decode_rendering(const Rope& r) {
  if (r.empty()) throw NotAnEncoding("empty rendering encodes no object");
  if (r.runs().front().byte == '@') {
    try {
      return parse_script(r);
    } catch (const Error& e) {
      throw NotAnEncoding(std::string("not a proof script: ") + e.what());
    }
  }
  try {
    return parse_formula(r);
  } catch (const Error&) {
  }
  try {
    return parse_term(r);
  } catch (const Error& e) {
    throw NotAnEncoding(std::string("not a term or formula: ") + e.what());
  }
}

Encodable decode(const GodelNumber& g) {
  if (g.codec() == Codec::Positional) return decode_rendering(g.bytes_);
  if (g.is_script_) {
    Rope joined;
    bool first = true;
    for (const Rope& line : g.line_ropes_) {
      if (!first) joined.append('\n');
      first = false;
      joined.append(line);
    }
    if (joined.empty() || joined.runs().front().byte != '@')
      throw NotAnEncoding("prime-power line sequence is not a proof script");
    try {
      return parse_script(joined);
    } catch (const Error& e) {
      throw NotAnEncoding(std::string("not a proof script: ") + e.what());
    }
  }
  Rope r = symbols_to_rope(g.symbol_runs_);
  Encodable obj = decode_rendering(r);
  if (std::holds_alternative<ProofScript>(obj))
    throw NotAnEncoding("symbol sequence decodes to no term or formula");
  return obj;
}

GodelNumber gn_from_value(Codec c, const BigNat& value) {
  if (value < 0) throw NotAnEncoding("negative value");
  if (c == Codec::Positional) return GodelNumber::positional(Rope::from_value(value));
  if (value == 0) throw NotAnEncoding("0 encodes no object");
  // Recover the exponent sequence by trial division over consecutive primes;
  // a skipped prime or leftover factor means the value was never an encoding.
  std::vector<BigNat> exps;
  BigNat v = value;
  std::size_t pi = 0;
  constexpr std::size_t kMaxPrimes = 100000;
  while (v > 1) {
    if (pi >= kMaxPrimes) throw NotAnEncoding("too many prime factors");
    const BigNat& p = nth_prime(pi++);
    BigNat e = 0;
    while (v % p == 0) {
      v /= p;
      e += 1;
    }
    if (e == 0) throw NotAnEncoding("prime gap at " + to_decimal(p));
    exps.push_back(e);
  }
  // Symbol sequence first; if the codes do not tokenize, try reading each
  // exponent as the positional value of a script line.
  std::vector<SymbolRun> runs;
  for (const BigNat& e : exps) push_symbol(runs, e, 1);
  try {
    symbols_to_rope(runs);
    return GodelNumber::prime_symbols(std::move(runs));
  } catch (const Error&) {
  }
  std::vector<Rope> lines;
  for (const BigNat& e : exps) lines.push_back(Rope::from_value(e));
  return GodelNumber::prime_lines(std::move(lines));
}

}  // namespace pacheck
