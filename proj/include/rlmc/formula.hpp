#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rlmc/model.hpp"
#include "rlmc/resource_vector.hpp"

namespace rlmc {

enum class FormulaKind {
  True,
  False,
  Prop,
  Not,
  And,
  Or,
  Next,      // <A : bound> X f
  Until,     // <A : bound> (f U g)
  Release,   // <A : bound> (f R g)
  RalNext,   // <A | B mode> X f
  RalUntil,
  RalRelease,
};

// How an endowment-carrying modality charges its coalition: Down continues
// with whatever resources are currently available, Fresh starts from the
// endowment written on the modality.
enum class RalMode { Down, Fresh };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind = FormulaKind::True;
  std::string prop;                    // Prop
  std::vector<FormulaPtr> children;    // Not: 1; And/Or/Until/Release: 2; Next: 1

  std::vector<std::string> coalition;  // modalities: proponents, sorted by name
  std::vector<std::string> opponents;  // Ral modalities: resource-bounded opponents
  std::map<std::string, ResourceVector> bound;      // Next/Until/Release: exactly A
  RalMode mode = RalMode::Down;
  std::map<std::string, ResourceVector> endowment;  // Ral Fresh: all agents
};

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr f_prop(std::string name);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr f, FormulaPtr g);
FormulaPtr f_or(FormulaPtr f, FormulaPtr g);
FormulaPtr f_next(std::vector<std::string> coalition,
                  std::map<std::string, ResourceVector> bound, FormulaPtr f);
FormulaPtr f_until(std::vector<std::string> coalition,
                   std::map<std::string, ResourceVector> bound, FormulaPtr f,
                   FormulaPtr g);
FormulaPtr f_release(std::vector<std::string> coalition,
                     std::map<std::string, ResourceVector> bound, FormulaPtr f,
                     FormulaPtr g);
FormulaPtr f_ral_next(std::vector<std::string> coalition,
                      std::vector<std::string> opponents, RalMode mode,
                      std::map<std::string, ResourceVector> endowment, FormulaPtr f);
FormulaPtr f_ral_until(std::vector<std::string> coalition,
                       std::vector<std::string> opponents, RalMode mode,
                       std::map<std::string, ResourceVector> endowment, FormulaPtr f,
                       FormulaPtr g);
FormulaPtr f_ral_release(std::vector<std::string> coalition,
                         std::vector<std::string> opponents, RalMode mode,
                         std::map<std::string, ResourceVector> endowment,
                         FormulaPtr f, FormulaPtr g);

// Canonical text; parsing it reproduces the formula exactly.
std::string to_text(const FormulaPtr& f);

// Distinct subformulas in bottom-up order: every proper subformula precedes
// the formulas containing it, the root comes last. Structural duplicates
// appear once.
std::vector<FormulaPtr> subformulas(const FormulaPtr& f);

// Which logic the modalities of a formula belong to.
enum class Family { Boolean, ResourceBound, Endowment, Mixed };
Family family_of(const FormulaPtr& f);

// Compatibility with a model: declared propositions and agents, bound domain
// equal to the coalition, endowments covering all agents, vector arities,
// non-empty proponent coalitions, no mixing of logic families.
std::vector<std::string> validate_formula(const FormulaPtr& f, const GameModel& m);

// Agent indices for a name list, ascending; names must exist in the model.
std::vector<int> coalition_indices(const GameModel& m,
                                   const std::vector<std::string>& names);

// Budget vectors aligned with the ascending coalition indices.
AgentVectors aligned_budget(const GameModel& m,
                            const std::map<std::string, ResourceVector>& bound,
                            const std::vector<int>& coalition);

// Endowment for every agent of the model, indexed by agent.
AgentVectors full_endowment(const GameModel& m,
                            const std::map<std::string, ResourceVector>& endowment);

}  // namespace rlmc
