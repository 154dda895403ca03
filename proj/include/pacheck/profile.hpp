// The eight systems of first-order arithmetic as fixed axiom/rule profiles.

#ifndef PACHECK_PROFILE_HPP
#define PACHECK_PROFILE_HPP

#include <set>
#include <string>
#include <vector>

#include "pacheck/bignat.hpp"

namespace pacheck {

enum class AxiomTag {
  K1, K2, K3, K4, K5,
  A1, A2, A3, A4, A5, A6, A7, A8, A9,
};

enum class Rule { MP, GEN, OMEGA_NUM, OMEGA_SPEC };
enum class Induction { Closed, Open };

std::string axiom_tag_name(AxiomTag t);
AxiomTag parse_axiom_tag(const std::string& s);
std::string rule_name(Rule r);

struct SystemProfile {
  std::string name;
  std::set<AxiomTag> axioms;
  std::set<Induction> induction;
  std::set<Rule> rules;

  bool has(Rule r) const { return rules.count(r) > 0; }
  bool has(Induction i) const { return induction.count(i) > 0; }
  bool has(AxiomTag t) const { return axioms.count(t) > 0; }
};

// One of: weak-GA, strong-GA, weak-PA, PA, omega-GA, omega-PA, omega1-PA,
// omega2-PA.  Throws on unknown names.
const SystemProfile& system_profile(const std::string& name);
const std::vector<std::string>& profile_names();

// componentwise-subset order between two named profiles
bool profile_leq(const SystemProfile& a, const SystemProfile& b);
// the five inclusion chains the lattice invariants quantify over
const std::vector<std::vector<std::string>>& profile_chains();

}  // namespace pacheck

#endif
