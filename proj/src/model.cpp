#include "rlmc/model.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rlmc {

namespace {

using nlohmann::json;

const json& expect_object(const json& j, const std::string& what) {
  if (!j.is_object()) throw ModelFormatError(what + " must be a JSON object");
  return j;
}

const json& expect_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw ModelFormatError(what + " must be a JSON array");
  return j;
}

std::string expect_string(const json& j, const std::string& what) {
  if (!j.is_string()) throw ModelFormatError(what + " must be a string");
  return j.get<std::string>();
}

int expect_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ModelFormatError(what + " must be an integer");
  return j.get<int>();
}

std::vector<std::string> name_list(const json& j, const std::string& what,
                                   std::vector<std::string>& diags) {
  std::vector<std::string> out;
  for (const auto& item : expect_array(j, what)) {
    std::string name = expect_string(item, what + " entry");
    if (std::find(out.begin(), out.end(), name) != out.end())
      diags.push_back("duplicate " + what + " name: " + name);
    else
      out.push_back(name);
  }
  if (out.empty()) diags.push_back(what + " list is empty");
  return out;
}

int index_of(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

std::vector<std::string> split_joint_key(const std::string& key) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : key) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

// Every combination of per-agent choices, last position varying fastest.
template <typename Fn>
void cross_product(const std::vector<const std::vector<int>*>& choices, Fn&& fn) {
  std::vector<int> pick(choices.size(), 0);
  for (const auto* c : choices)
    if (c->empty()) return;
  for (;;) {
    std::vector<int> tuple(choices.size());
    for (size_t i = 0; i < choices.size(); ++i) tuple[i] = (*choices[i])[pick[i]];
    fn(tuple);
    size_t i = choices.size();
    while (i > 0) {
      --i;
      if (static_cast<size_t>(++pick[i]) < choices[i]->size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

int GameModel::state_index(const std::string& name) const {
  return index_of(states, name);
}
int GameModel::agent_index(const std::string& name) const {
  return index_of(agents, name);
}
int GameModel::action_index(const std::string& name) const {
  return index_of(actions, name);
}

LoadResult load_model(const json& doc) {
  LoadResult res;
  GameModel& m = res.model;
  auto& diags = res.diagnostics;

  expect_object(doc, "model");
  static const std::vector<std::string> known = {
      "agents", "resources", "states",      "propositions",
      "actions", "costs",    "transitions", "indist"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ModelFormatError("unknown model key: " + key);
  }
  for (const auto& key : known) {
    if (key != "indist" && !doc.contains(key))
      throw ModelFormatError("missing model key: " + key);
  }

  m.agents = name_list(doc.at("agents"), "agent", diags);
  m.resources = name_list(doc.at("resources"), "resource", diags);
  m.states = name_list(doc.at("states"), "state", diags);

  const int ns = m.state_count();
  const int na = m.agent_count();
  const int nr = m.resource_count();

  // propositions
  for (const auto& [prop, members] : expect_object(doc.at("propositions"),
                                                   "propositions").items()) {
    StateSet set;
    for (const auto& item : expect_array(members, "proposition " + prop)) {
      std::string sname = expect_string(item, "proposition " + prop + " entry");
      int s = m.state_index(sname);
      if (s < 0)
        diags.push_back("proposition " + prop + " refers to unknown state " + sname);
      else
        set.insert(s);
    }
    m.propositions[prop] = std::move(set);
  }

  // actions: build availability and the global alphabet in declared order
  const json& jactions = expect_object(doc.at("actions"), "actions");
  for (const auto& [sname, per_agent] : jactions.items()) {
    if (m.state_index(sname) < 0)
      diags.push_back("actions section refers to unknown state " + sname);
    else
      for (const auto& [aname, list] : expect_object(per_agent,
                                                     "actions[" + sname + "]").items()) {
        (void)list;
        if (m.agent_index(aname) < 0)
          diags.push_back("actions[" + sname + "] refers to unknown agent " + aname);
      }
  }
  m.avail.assign(ns, std::vector<std::vector<int>>(na));
  for (int s = 0; s < ns; ++s) {
    if (!jactions.contains(m.states[s])) continue;
    const json& per_agent = expect_object(jactions.at(m.states[s]),
                                          "actions[" + m.states[s] + "]");
    for (int a = 0; a < na; ++a) {
      if (!per_agent.contains(m.agents[a])) continue;
      const json& list = expect_array(per_agent.at(m.agents[a]),
                                      "actions[" + m.states[s] + "][" + m.agents[a] + "]");
      for (const auto& item : list) {
        std::string act = expect_string(item, "action name");
        int id = m.action_index(act);
        if (id < 0) {
          id = static_cast<int>(m.actions.size());
          m.actions.push_back(act);
        }
        auto& d = m.avail[s][a];
        if (std::find(d.begin(), d.end(), id) != d.end())
          diags.push_back("duplicate action " + act + " for agent " + m.agents[a] +
                          " at state " + m.states[s]);
        else
          d.push_back(id);
      }
    }
  }

  // costs
  m.cost.assign(ns, std::vector<std::optional<ResourceVector>>(m.actions.size()));
  for (const auto& [sname, per_action] : expect_object(doc.at("costs"), "costs").items()) {
    int s = m.state_index(sname);
    if (s < 0) {
      diags.push_back("costs section refers to unknown state " + sname);
      continue;
    }
    for (const auto& [act, entries] : expect_object(per_action,
                                                    "costs[" + sname + "]").items()) {
      int id = m.action_index(act);
      if (id < 0) {
        diags.push_back("cost for unknown action " + act + " at state " + sname);
        continue;
      }
      ResourceVector v;
      for (const auto& item : expect_array(entries, "cost entry"))
        v.push_back(expect_int(item, "cost component"));
      bool available = false;
      for (int a = 0; a < na && !available; ++a)
        available = std::find(m.avail[s][a].begin(), m.avail[s][a].end(), id) !=
                    m.avail[s][a].end();
      if (!available) {
        diags.push_back("cost for action " + act + " unavailable at state " + sname);
        continue;
      }
      if (static_cast<int>(v.size()) != nr) {
        diags.push_back("cost arity mismatch at (" + sname + ", " + act + ")");
        continue;
      }
      m.cost[s][id] = std::move(v);
    }
  }

  // transitions
  m.transition.assign(ns, {});
  for (const auto& [sname, table] : expect_object(doc.at("transitions"),
                                                  "transitions").items()) {
    int s = m.state_index(sname);
    if (s < 0) {
      diags.push_back("transitions section refers to unknown state " + sname);
      continue;
    }
    for (const auto& [key, target] : expect_object(table,
                                                   "transitions[" + sname + "]").items()) {
      auto parts = split_joint_key(key);
      if (static_cast<int>(parts.size()) != na) {
        diags.push_back("joint action '" + key + "' at state " + sname + " names " +
                        std::to_string(parts.size()) + " actions for " +
                        std::to_string(na) + " agents");
        continue;
      }
      std::vector<int> tuple(na);
      bool ok = true;
      for (int a = 0; a < na; ++a) {
        tuple[a] = m.action_index(parts[a]);
        if (tuple[a] < 0) {
          diags.push_back("joint action '" + key + "' at state " + sname +
                          " uses unknown action " + parts[a]);
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::string tname = expect_string(target, "transition target");
      int t = m.state_index(tname);
      if (t < 0) {
        diags.push_back("transition at state " + sname + " targets unknown state " + tname);
        continue;
      }
      if (!m.transition[s].emplace(tuple, t).second)
        diags.push_back("duplicate transition '" + key + "' at state " + sname);
    }
  }

  // indist (optional); absent partitions are identity
  m.indist.assign(na, {});
  for (int a = 0; a < na; ++a) {
    m.indist[a].resize(ns);
    for (int s = 0; s < ns; ++s) m.indist[a][s] = s;
  }
  if (doc.contains("indist")) {
    for (const auto& [aname, blocks] : expect_object(doc.at("indist"), "indist").items()) {
      int a = m.agent_index(aname);
      if (a < 0) {
        diags.push_back("indist section refers to unknown agent " + aname);
        continue;
      }
      std::vector<int> cls(ns, -1);
      int next = 0;
      for (const auto& block : expect_array(blocks, "indist[" + aname + "]")) {
        int id = next++;
        for (const auto& item : expect_array(block, "indist block")) {
          std::string sname = expect_string(item, "indist state");
          int s = m.state_index(sname);
          if (s < 0) {
            diags.push_back("indist for agent " + aname + " refers to unknown state " + sname);
            continue;
          }
          if (cls[s] >= 0) {
            diags.push_back("indist for agent " + aname + " lists state " + sname + " twice");
            continue;
          }
          cls[s] = id;
        }
      }
      for (int s = 0; s < ns; ++s)
        if (cls[s] < 0) cls[s] = next++;  // uncovered states are singletons
      m.indist[a] = std::move(cls);
    }
  }

  return res;
}

json model_to_json(const GameModel& m) {
  json doc;
  doc["agents"] = m.agents;
  doc["resources"] = m.resources;
  doc["states"] = m.states;

  json props = json::object();
  for (const auto& [name, set] : m.propositions) {
    json arr = json::array();
    for (int s : set) arr.push_back(m.states[s]);
    props[name] = std::move(arr);
  }
  doc["propositions"] = std::move(props);

  json actions = json::object();
  json costs = json::object();
  json transitions = json::object();
  for (int s = 0; s < m.state_count(); ++s) {
    json per_agent = json::object();
    for (int a = 0; a < m.agent_count(); ++a) {
      json names = json::array();
      for (int id : m.avail[s][a]) names.push_back(m.actions[id]);
      per_agent[m.agents[a]] = std::move(names);
    }
    actions[m.states[s]] = std::move(per_agent);

    json per_action = json::object();
    for (size_t id = 0; id < m.cost[s].size(); ++id)
      if (m.cost[s][id]) per_action[m.actions[id]] = *m.cost[s][id];
    costs[m.states[s]] = std::move(per_action);

    json table = json::object();
    for (const auto& [tuple, target] : m.transition[s]) {
      std::string key;
      for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) key.push_back(',');
        key += m.actions[tuple[i]];
      }
      table[key] = m.states[target];
    }
    transitions[m.states[s]] = std::move(table);
  }
  doc["actions"] = std::move(actions);
  doc["costs"] = std::move(costs);
  doc["transitions"] = std::move(transitions);

  bool any_nontrivial = false;
  json indist = json::object();
  for (int a = 0; a < m.agent_count(); ++a) {
    std::map<int, std::vector<int>> blocks;
    for (int s = 0; s < m.state_count(); ++s) blocks[m.indist[a][s]].push_back(s);
    if (blocks.size() == static_cast<size_t>(m.state_count())) continue;
    any_nontrivial = true;
    // blocks ordered by their smallest member
    std::vector<std::vector<int>> ordered;
    for (auto& [id, members] : blocks) ordered.push_back(members);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    json arr = json::array();
    for (const auto& block : ordered) {
      json names = json::array();
      for (int s : block) names.push_back(m.states[s]);
      arr.push_back(std::move(names));
    }
    indist[m.agents[a]] = std::move(arr);
  }
  if (any_nontrivial) doc["indist"] = std::move(indist);
  return doc;
}

std::vector<std::string> validate_model(const GameModel& m) {
  std::vector<std::string> diags;
  const int ns = m.state_count();
  const int na = m.agent_count();
  const int nr = m.resource_count();

  for (int s = 0; s < ns; ++s) {
    std::set<int> used;
    for (int a = 0; a < na; ++a) {
      if (m.avail[s][a].empty())
        diags.push_back("empty action set for agent " + m.agents[a] + " at state " +
                        m.states[s]);
      used.insert(m.avail[s][a].begin(), m.avail[s][a].end());
    }

    for (int id : used) {
      const auto& c = m.cost[s][id];
      if (!c) {
        diags.push_back("missing cost at (" + m.states[s] + ", " + m.actions[id] + ")");
        continue;
      }
      if (static_cast<int>(c->size()) != nr) {
        diags.push_back("cost arity mismatch at (" + m.states[s] + ", " +
                        m.actions[id] + ")");
        continue;
      }
      if ((*c)[0] > -1)
        diags.push_back("diminishing component must be <= -1 at (" + m.states[s] +
                        ", " + m.actions[id] + ")");
    }
    for (size_t id = 0; id < m.cost[s].size(); ++id)
      if (m.cost[s][id] && !used.count(static_cast<int>(id)))
        diags.push_back("cost for action " + m.actions[id] + " unavailable at state " +
                        m.states[s]);

    // transition totality: defined exactly on the joint products
    std::vector<const std::vector<int>*> choices;
    for (int a = 0; a < na; ++a) choices.push_back(&m.avail[s][a]);
    std::set<std::vector<int>> expected;
    bool complete = true;
    for (int a = 0; a < na; ++a) complete = complete && !m.avail[s][a].empty();
    if (complete)
      cross_product(choices, [&](const std::vector<int>& tuple) {
        expected.insert(tuple);
        if (!m.transition[s].count(tuple)) {
          std::string key;
          for (size_t i = 0; i < tuple.size(); ++i) {
            if (i) key.push_back(',');
            key += m.actions[tuple[i]];
          }
          diags.push_back("missing transition at " + m.states[s] + " for (" + key + ")");
        }
      });
    for (const auto& [tuple, target] : m.transition[s]) {
      (void)target;
      if (!expected.count(tuple)) {
        std::string key;
        for (size_t i = 0; i < tuple.size(); ++i) {
          if (i) key.push_back(',');
          key += m.actions[tuple[i]];
        }
        diags.push_back("transition for unavailable joint action at " + m.states[s] +
                        ": (" + key + ")");
      }
    }
  }
  return diags;
}

std::pair<ResourceVector, ResourceVector> decompose_cost(const GameModel& m,
                                                         int state, int action) {
  if (state < 0 || state >= m.state_count() || action < 0 ||
      action >= static_cast<int>(m.actions.size()) || !m.cost[state][action])
    throw std::invalid_argument("unknown action cost");
  const ResourceVector& c = *m.cost[state][action];
  ResourceVector cons(c.size()), prod(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    cons[i] = c[i] < 0 ? -c[i] : 0;
    prod[i] = c[i] > 0 ? c[i] : 0;
  }
  return {cons, prod};
}

std::vector<JointAction> joint_actions(const GameModel& m, int state,
                                       const std::vector<int>& coalition) {
  if (coalition.empty()) throw std::invalid_argument("empty coalition rejected");
  assert(std::is_sorted(coalition.begin(), coalition.end()));
  std::vector<const std::vector<int>*> choices;
  for (int a : coalition) choices.push_back(&m.avail[state][a]);
  std::vector<JointAction> out;
  cross_product(choices, [&](const std::vector<int>& tuple) {
    out.push_back(JointAction{coalition, tuple});
  });
  return out;
}

std::vector<std::vector<int>> full_profiles(const GameModel& m, int state,
                                            const JointAction& sigma) {
  for (size_t i = 0; i < sigma.agents.size(); ++i) {
    const auto& d = m.avail[state][sigma.agents[i]];
    if (std::find(d.begin(), d.end(), sigma.acts[i]) == d.end())
      throw std::invalid_argument("action unavailable");
  }
  const int na = m.agent_count();
  std::vector<int> fixed(na, -1);
  for (size_t i = 0; i < sigma.agents.size(); ++i)
    fixed[sigma.agents[i]] = sigma.acts[i];

  std::vector<std::vector<int>> single(na);
  std::vector<const std::vector<int>*> choices(na);
  for (int a = 0; a < na; ++a) {
    if (fixed[a] >= 0) {
      single[a] = {fixed[a]};
      choices[a] = &single[a];
    } else {
      choices[a] = &m.avail[state][a];
    }
  }
  std::vector<std::vector<int>> profiles;
  cross_product(choices, [&](const std::vector<int>& tuple) {
    profiles.push_back(tuple);
  });
  return profiles;
}

StateSet outcomes(const GameModel& m, int state, const JointAction& sigma) {
  StateSet out;
  for (const auto& tuple : full_profiles(m, state, sigma))
    out.insert(m.transition[state].at(tuple));
  return out;
}

AgentVectors action_consumption(const GameModel& m, int state,
                                const JointAction& sigma) {
  AgentVectors cons(sigma.agents.size());
  for (size_t i = 0; i < sigma.agents.size(); ++i)
    cons[i] = decompose_cost(m, state, sigma.acts[i]).first;
  return cons;
}

bool affordable(const GameModel& m, int state, const JointAction& sigma,
                const AgentVectors& budget) {
  assert(budget.size() == sigma.agents.size());
  for (size_t i = 0; i < sigma.agents.size(); ++i)
    if (!vec_leq(decompose_cost(m, state, sigma.acts[i]).first, budget[i]))
      return false;
  return true;
}

StateSet pre(const GameModel& m, const std::vector<int>& coalition,
             const StateSet& target, const AgentVectors& budget) {
  StateSet result;
  for (int s = 0; s < m.state_count(); ++s) {
    for (const JointAction& sigma : joint_actions(m, s, coalition)) {
      if (!affordable(m, s, sigma, budget)) continue;
      StateSet out = outcomes(m, s, sigma);
      if (std::includes(target.begin(), target.end(), out.begin(), out.end())) {
        result.insert(s);
        break;
      }
    }
  }
  return result;
}

}  // namespace rlmc
