#include "pacheck/profile.hpp"

#include <algorithm>
#include <map>

namespace pacheck {

std::string axiom_tag_name(AxiomTag t) {
  switch (t) {
    case AxiomTag::K1: return "K1";
    case AxiomTag::K2: return "K2";
    case AxiomTag::K3: return "K3";
    case AxiomTag::K4: return "K4";
    case AxiomTag::K5: return "K5";
    case AxiomTag::A1: return "A1";
    case AxiomTag::A2: return "A2";
    case AxiomTag::A3: return "A3";
    case AxiomTag::A4: return "A4";
    case AxiomTag::A5: return "A5";
    case AxiomTag::A6: return "A6";
    case AxiomTag::A7: return "A7";
    case AxiomTag::A8: return "A8";
    case AxiomTag::A9: return "A9";
  }
  return "?";
}

AxiomTag parse_axiom_tag(const std::string& s) {
  static const std::map<std::string, AxiomTag> table = {
      {"K1", AxiomTag::K1}, {"K2", AxiomTag::K2}, {"K3", AxiomTag::K3},
      {"K4", AxiomTag::K4}, {"K5", AxiomTag::K5}, {"A1", AxiomTag::A1},
      {"A2", AxiomTag::A2}, {"A3", AxiomTag::A3}, {"A4", AxiomTag::A4},
      {"A5", AxiomTag::A5}, {"A6", AxiomTag::A6}, {"A7", AxiomTag::A7},
      {"A8", AxiomTag::A8}, {"A9", AxiomTag::A9},
  };
  auto it = table.find(s);
  if (it == table.end()) throw Error("unknown axiom tag: " + s);
  return it->second;
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::MP: return "MP";
    case Rule::GEN: return "GEN";
    case Rule::OMEGA_NUM: return "OMEGA-NUM";
    case Rule::OMEGA_SPEC: return "OMEGA-SPEC";
  }
  return "?";
}

namespace {

std::set<AxiomTag> all_axioms() {
  return {AxiomTag::K1, AxiomTag::K2, AxiomTag::K3, AxiomTag::K4, AxiomTag::K5,
          AxiomTag::A1, AxiomTag::A2, AxiomTag::A3, AxiomTag::A4, AxiomTag::A5,
          AxiomTag::A6, AxiomTag::A7, AxiomTag::A8, AxiomTag::A9};
}

std::vector<SystemProfile> make_profiles() {
  const auto ax = all_axioms();
  using enum Rule;
  using enum Induction;
  return {
      {"weak-GA", ax, {}, {MP}},
      {"strong-GA", ax, {}, {MP, GEN}},
      {"weak-PA", ax, {Closed}, {MP}},
      {"PA", ax, {Closed}, {MP, GEN}},
      {"omega-GA", ax, {}, {MP, OMEGA_NUM}},
      {"omega-PA", ax, {Open}, {MP, OMEGA_NUM}},
      {"omega1-PA", ax, {Closed, Open}, {MP, OMEGA_NUM}},
      {"omega2-PA", ax, {Closed, Open}, {MP, OMEGA_NUM, OMEGA_SPEC}},
  };
}

const std::vector<SystemProfile>& profiles() {
  static const std::vector<SystemProfile> p = make_profiles();
  return p;
}

}  // namespace

const SystemProfile& system_profile(const std::string& name) {
  for (const auto& p : profiles())
    if (p.name == name) return p;
  throw Error("unknown system profile: " + name);
}

const std::vector<std::string>& profile_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& p : profiles()) out.push_back(p.name);
    return out;
  }();
  return names;
}

bool profile_leq(const SystemProfile& a, const SystemProfile& b) {
  return std::includes(b.axioms.begin(), b.axioms.end(), a.axioms.begin(), a.axioms.end()) &&
         std::includes(b.induction.begin(), b.induction.end(), a.induction.begin(), a.induction.end()) &&
         std::includes(b.rules.begin(), b.rules.end(), a.rules.begin(), a.rules.end());
}

const std::vector<std::vector<std::string>>& profile_chains() {
  static const std::vector<std::vector<std::string>> chains = {
      {"weak-GA", "strong-GA", "PA"},
      {"weak-GA", "weak-PA", "PA"},
      {"weak-GA", "omega-GA", "omega-PA", "omega1-PA", "omega2-PA"},
  };
  return chains;
}

}  // namespace pacheck
