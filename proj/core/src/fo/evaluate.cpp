#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgame/fo/formula.hpp"

namespace symgame::fo {

namespace {

// formulas are evaluated through a slot-compiled copy so the hot
// recursion never touches variable names
struct Node {
  Kind kind{};
  int slot = -1;   // quantifier binding, or left atom argument
  int slot2 = -1;  // right atom argument
  std::vector<int> kids;
};

struct Compiled {
  std::vector<Node> nodes;
  int root = -1;
  int slots = 0;
};

int compile(const FormulaPtr& f, std::vector<std::pair<std::string, int>>& scope,
            Compiled& out) {
  auto resolve = [&](const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return it->second;
    throw std::invalid_argument("free variable '" + name +
                                "' in evaluated formula");
  };
  Node node;
  node.kind = f->kind;
  switch (f->kind) {
    case Kind::edge:
    case Kind::equal:
      node.slot = resolve(f->var);
      node.slot2 = resolve(f->var2);
      break;
    case Kind::forall:
    case Kind::exists: {
      node.slot = out.slots++;
      scope.emplace_back(f->var, node.slot);
      node.kids.push_back(compile(f->kids[0], scope, out));
      scope.pop_back();
      break;
    }
    default:
      for (const FormulaPtr& k : f->kids)
        node.kids.push_back(compile(k, scope, out));
  }
  out.nodes.push_back(std::move(node));
  return static_cast<int>(out.nodes.size()) - 1;
}

bool eval(const Compiled& c, int idx, const Graph& g, std::vector<int>& env) {
  const Node& node = c.nodes[idx];
  switch (node.kind) {
    case Kind::edge:
      return g.adjacent(env[node.slot], env[node.slot2]);
    case Kind::equal:
      return env[node.slot] == env[node.slot2];
    case Kind::lnot:
      return !eval(c, node.kids[0], g, env);
    case Kind::land:
      for (int k : node.kids)
        if (!eval(c, k, g, env)) return false;
      return true;
    case Kind::lor:
      for (int k : node.kids)
        if (eval(c, k, g, env)) return true;
      return false;
    case Kind::implies:
      return !eval(c, node.kids[0], g, env) || eval(c, node.kids[1], g, env);
    case Kind::iff:
      return eval(c, node.kids[0], g, env) == eval(c, node.kids[1], g, env);
    case Kind::forall:
      for (int v = 0; v < g.vertex_count(); ++v) {
        env[node.slot] = v;
        if (!eval(c, node.kids[0], g, env)) return false;
      }
      return true;
    case Kind::exists:
      for (int v = 0; v < g.vertex_count(); ++v) {
        env[node.slot] = v;
        if (eval(c, node.kids[0], g, env)) return true;
      }
      return false;
  }
  throw std::logic_error("unhandled formula node");
}

}  // namespace

bool evaluate(const FormulaPtr& f, const Graph& g, uint64_t assignment_budget) {
  if (!f) throw std::invalid_argument("null formula");
  int q = quantifier_count(f);
  uint64_t assignments = 1;
  for (int i = 0; i < q; ++i) {
    if (assignments > assignment_budget / std::max(1, g.vertex_count())) {
      throw CapabilityError(
          "evaluation would expand |V|^" + std::to_string(q) + " = " +
          std::to_string(g.vertex_count()) + "^" + std::to_string(q) +
          " assignments, over the budget of " +
          std::to_string(assignment_budget));
    }
    assignments *= static_cast<uint64_t>(std::max(1, g.vertex_count()));
  }
  Compiled c;
  std::vector<std::pair<std::string, int>> scope;
  c.root = compile(f, scope, c);
  std::vector<int> env(std::max(1, c.slots), 0);
  return eval(c, c.root, g, env);
}

}  // namespace symgame::fo
