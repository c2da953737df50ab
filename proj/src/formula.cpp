#include "rlmc/formula.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace rlmc {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

FormulaPtr make(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

void print_coalition(std::ostream& os, const std::vector<std::string>& names) {
  os << '{';
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) os << ',';
    os << names[i];
  }
  os << '}';
}

void print_vectors(std::ostream& os,
                   const std::map<std::string, ResourceVector>& per_agent) {
  os << '[';
  bool first = true;
  for (const auto& [agent, v] : per_agent) {
    if (!first) os << ',';
    first = false;
    os << agent << '=' << vec_to_string(v);
  }
  os << ']';
}

void print(std::ostream& os, const Formula& f) {
  switch (f.kind) {
    case FormulaKind::True:
      os << "true";
      return;
    case FormulaKind::False:
      os << "false";
      return;
    case FormulaKind::Prop:
      os << f.prop;
      return;
    case FormulaKind::Not:
      os << '!';
      print(os, *f.children[0]);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      os << '(';
      print(os, *f.children[0]);
      os << (f.kind == FormulaKind::And ? " & " : " | ");
      print(os, *f.children[1]);
      os << ')';
      return;
    case FormulaKind::Next:
    case FormulaKind::Until:
    case FormulaKind::Release:
      os << '<';
      print_coalition(os, f.coalition);
      os << ':';
      print_vectors(os, f.bound);
      os << "> ";
      break;
    case FormulaKind::RalNext:
    case FormulaKind::RalUntil:
    case FormulaKind::RalRelease:
      os << '<';
      print_coalition(os, f.coalition);
      os << '|';
      print_coalition(os, f.opponents);
      if (f.mode == RalMode::Down) {
        os << " down";
      } else {
        os << " eta=";
        print_vectors(os, f.endowment);
      }
      os << "> ";
      break;
  }
  switch (f.kind) {
    case FormulaKind::Next:
    case FormulaKind::RalNext:
      os << "X ";
      print(os, *f.children[0]);
      return;
    case FormulaKind::Until:
    case FormulaKind::RalUntil:
      os << '(';
      print(os, *f.children[0]);
      os << " U ";
      print(os, *f.children[1]);
      os << ')';
      return;
    case FormulaKind::Release:
    case FormulaKind::RalRelease:
      os << '(';
      print(os, *f.children[0]);
      os << " R ";
      print(os, *f.children[1]);
      os << ')';
      return;
    default:
      assert(false);
  }
}

}  // namespace

FormulaPtr f_true() {
  Formula f;
  f.kind = FormulaKind::True;
  return make(std::move(f));
}

FormulaPtr f_false() {
  Formula f;
  f.kind = FormulaKind::False;
  return make(std::move(f));
}

FormulaPtr f_prop(std::string name) {
  Formula f;
  f.kind = FormulaKind::Prop;
  f.prop = std::move(name);
  return make(std::move(f));
}

FormulaPtr f_not(FormulaPtr g) {
  Formula f;
  f.kind = FormulaKind::Not;
  f.children = {std::move(g)};
  return make(std::move(f));
}

FormulaPtr f_and(FormulaPtr g, FormulaPtr h) {
  Formula f;
  f.kind = FormulaKind::And;
  f.children = {std::move(g), std::move(h)};
  return make(std::move(f));
}

FormulaPtr f_or(FormulaPtr g, FormulaPtr h) {
  Formula f;
  f.kind = FormulaKind::Or;
  f.children = {std::move(g), std::move(h)};
  return make(std::move(f));
}

namespace {
FormulaPtr make_rb(FormulaKind kind, std::vector<std::string> coalition,
                   std::map<std::string, ResourceVector> bound,
                   std::vector<FormulaPtr> children) {
  Formula f;
  f.kind = kind;
  f.coalition = sorted_unique(std::move(coalition));
  f.bound = std::move(bound);
  f.children = std::move(children);
  return make(std::move(f));
}

FormulaPtr make_ral(FormulaKind kind, std::vector<std::string> coalition,
                    std::vector<std::string> opponents, RalMode mode,
                    std::map<std::string, ResourceVector> endowment,
                    std::vector<FormulaPtr> children) {
  Formula f;
  f.kind = kind;
  f.coalition = sorted_unique(std::move(coalition));
  f.opponents = sorted_unique(std::move(opponents));
  f.mode = mode;
  f.endowment = std::move(endowment);
  f.children = std::move(children);
  return make(std::move(f));
}
}  // namespace

FormulaPtr f_next(std::vector<std::string> coalition,
                  std::map<std::string, ResourceVector> bound, FormulaPtr f) {
  return make_rb(FormulaKind::Next, std::move(coalition), std::move(bound),
                 {std::move(f)});
}

FormulaPtr f_until(std::vector<std::string> coalition,
                   std::map<std::string, ResourceVector> bound, FormulaPtr f,
                   FormulaPtr g) {
  return make_rb(FormulaKind::Until, std::move(coalition), std::move(bound),
                 {std::move(f), std::move(g)});
}

FormulaPtr f_release(std::vector<std::string> coalition,
                     std::map<std::string, ResourceVector> bound, FormulaPtr f,
                     FormulaPtr g) {
  return make_rb(FormulaKind::Release, std::move(coalition), std::move(bound),
                 {std::move(f), std::move(g)});
}

FormulaPtr f_ral_next(std::vector<std::string> coalition,
                      std::vector<std::string> opponents, RalMode mode,
                      std::map<std::string, ResourceVector> endowment, FormulaPtr f) {
  return make_ral(FormulaKind::RalNext, std::move(coalition), std::move(opponents),
                  mode, std::move(endowment), {std::move(f)});
}

FormulaPtr f_ral_until(std::vector<std::string> coalition,
                       std::vector<std::string> opponents, RalMode mode,
                       std::map<std::string, ResourceVector> endowment, FormulaPtr f,
                       FormulaPtr g) {
  return make_ral(FormulaKind::RalUntil, std::move(coalition), std::move(opponents),
                  mode, std::move(endowment), {std::move(f), std::move(g)});
}

FormulaPtr f_ral_release(std::vector<std::string> coalition,
                         std::vector<std::string> opponents, RalMode mode,
                         std::map<std::string, ResourceVector> endowment,
                         FormulaPtr f, FormulaPtr g) {
  return make_ral(FormulaKind::RalRelease, std::move(coalition), std::move(opponents),
                  mode, std::move(endowment), {std::move(f), std::move(g)});
}

std::string to_text(const FormulaPtr& f) {
  std::ostringstream os;
  print(os, *f);
  return os.str();
}

std::vector<FormulaPtr> subformulas(const FormulaPtr& f) {
  std::vector<FormulaPtr> order;
  std::set<std::string> seen;
  auto visit = [&](auto&& self, const FormulaPtr& g) -> void {
    for (const FormulaPtr& child : g->children) self(self, child);
    std::string text = to_text(g);
    if (seen.insert(std::move(text)).second) order.push_back(g);
  };
  visit(visit, f);
  return order;
}

Family family_of(const FormulaPtr& f) {
  bool rb = false, ral = false;
  for (const FormulaPtr& g : subformulas(f)) {
    switch (g->kind) {
      case FormulaKind::Next:
      case FormulaKind::Until:
      case FormulaKind::Release:
        rb = true;
        break;
      case FormulaKind::RalNext:
      case FormulaKind::RalUntil:
      case FormulaKind::RalRelease:
        ral = true;
        break;
      default:
        break;
    }
  }
  if (rb && ral) return Family::Mixed;
  if (rb) return Family::ResourceBound;
  if (ral) return Family::Endowment;
  return Family::Boolean;
}

std::vector<std::string> validate_formula(const FormulaPtr& f, const GameModel& m) {
  std::vector<std::string> diags;
  if (family_of(f) == Family::Mixed)
    diags.push_back("mixed logic families: a formula may not combine "
                    "bound-carrying and endowment-carrying modalities");

  const int nr = m.resource_count();
  auto check_vectors = [&](const std::map<std::string, ResourceVector>& per_agent,
                           const std::string& what, const std::string& ctx) {
    for (const auto& [agent, v] : per_agent) {
      if (m.agent_index(agent) < 0)
        diags.push_back(what + " names unknown agent " + agent + " in " + ctx);
      if (static_cast<int>(v.size()) != nr)
        diags.push_back(what + " for agent " + agent + " has " +
                        std::to_string(v.size()) + " components, model has " +
                        std::to_string(nr) + " resources, in " + ctx);
      if (!vec_nonneg(v))
        diags.push_back(what + " for agent " + agent + " has a negative entry in " + ctx);
    }
  };

  for (const FormulaPtr& g : subformulas(f)) {
    const std::string ctx = to_text(g);
    switch (g->kind) {
      case FormulaKind::Prop:
        if (!m.propositions.count(g->prop))
          diags.push_back("unknown proposition " + g->prop);
        break;
      case FormulaKind::Next:
      case FormulaKind::Until:
      case FormulaKind::Release: {
        if (g->coalition.empty())
          diags.push_back("empty coalition in " + ctx);
        for (const auto& a : g->coalition)
          if (m.agent_index(a) < 0)
            diags.push_back("coalition names unknown agent " + a + " in " + ctx);
        std::set<std::string> dom;
        for (const auto& [agent, v] : g->bound) dom.insert(agent);
        if (dom != std::set<std::string>(g->coalition.begin(), g->coalition.end()))
          diags.push_back("bound domain must equal the coalition in " + ctx);
        check_vectors(g->bound, "bound", ctx);
        break;
      }
      case FormulaKind::RalNext:
      case FormulaKind::RalUntil:
      case FormulaKind::RalRelease: {
        if (g->coalition.empty())
          diags.push_back("empty coalition in " + ctx);
        for (const auto& a : g->coalition)
          if (m.agent_index(a) < 0)
            diags.push_back("coalition names unknown agent " + a + " in " + ctx);
        for (const auto& a : g->opponents)
          if (m.agent_index(a) < 0)
            diags.push_back("opponent coalition names unknown agent " + a + " in " + ctx);
        if (g->mode == RalMode::Fresh) {
          std::set<std::string> dom;
          for (const auto& [agent, v] : g->endowment) dom.insert(agent);
          if (dom != std::set<std::string>(m.agents.begin(), m.agents.end()))
            diags.push_back("endowment must cover all agents in " + ctx);
          check_vectors(g->endowment, "endowment", ctx);
        }
        break;
      }
      default:
        break;
    }
  }
  return diags;
}

std::vector<int> coalition_indices(const GameModel& m,
                                   const std::vector<std::string>& names) {
  std::vector<int> idx;
  for (const auto& name : names) {
    int a = m.agent_index(name);
    assert(a >= 0);
    idx.push_back(a);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

AgentVectors aligned_budget(const GameModel& m,
                            const std::map<std::string, ResourceVector>& bound,
                            const std::vector<int>& coalition) {
  AgentVectors budget;
  for (int a : coalition) {
    auto it = bound.find(m.agents[a]);
    assert(it != bound.end());
    budget.push_back(it->second);
  }
  return budget;
}

AgentVectors full_endowment(const GameModel& m,
                            const std::map<std::string, ResourceVector>& endowment) {
  AgentVectors out(m.agent_count());
  for (int a = 0; a < m.agent_count(); ++a) {
    auto it = endowment.find(m.agents[a]);
    assert(it != endowment.end());
    out[a] = it->second;
  }
  return out;
}

}  // namespace rlmc
