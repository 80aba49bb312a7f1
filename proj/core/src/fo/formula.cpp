#include "symgame/fo/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace symgame::fo {

namespace {

FormulaPtr node(Kind k, std::string v, std::string v2,
                std::vector<FormulaPtr> kids) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->var = std::move(v);
  f->var2 = std::move(v2);
  f->kids = std::move(kids);
  return f;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

FormulaPtr forall(std::string var, FormulaPtr body) {
  require(body != nullptr, "quantifier needs a body");
  return node(Kind::forall, std::move(var), "", {std::move(body)});
}

FormulaPtr exists(std::string var, FormulaPtr body) {
  require(body != nullptr, "quantifier needs a body");
  return node(Kind::exists, std::move(var), "", {std::move(body)});
}

FormulaPtr edge(std::string x, std::string y) {
  return node(Kind::edge, std::move(x), std::move(y), {});
}

FormulaPtr equal(std::string x, std::string y) {
  return node(Kind::equal, std::move(x), std::move(y), {});
}

FormulaPtr lnot(FormulaPtr f) {
  require(f != nullptr, "negation needs a child");
  return node(Kind::lnot, "", "", {std::move(f)});
}

FormulaPtr land(std::vector<FormulaPtr> fs) {
  require(!fs.empty(), "empty conjunction");
  if (fs.size() == 1) return fs.front();
  return node(Kind::land, "", "", std::move(fs));
}

FormulaPtr lor(std::vector<FormulaPtr> fs) {
  require(!fs.empty(), "empty disjunction");
  if (fs.size() == 1) return fs.front();
  return node(Kind::lor, "", "", std::move(fs));
}

FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  require(a && b, "implication needs two children");
  return node(Kind::implies, "", "", {std::move(a), std::move(b)});
}

FormulaPtr iff(FormulaPtr a, FormulaPtr b) {
  require(a && b, "biconditional needs two children");
  return node(Kind::iff, "", "", {std::move(a), std::move(b)});
}

int quantifier_count(const FormulaPtr& f) {
  require(f != nullptr, "null formula");
  int count = (f->kind == Kind::forall || f->kind == Kind::exists) ? 1 : 0;
  for (const FormulaPtr& k : f->kids) count += quantifier_count(k);
  return count;
}

namespace {

void collect_free(const FormulaPtr& f, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  auto seen = [&](const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  switch (f->kind) {
    case Kind::edge:
    case Kind::equal:
      if (!seen(bound, f->var) && !seen(out, f->var)) out.push_back(f->var);
      if (!seen(bound, f->var2) && !seen(out, f->var2)) out.push_back(f->var2);
      return;
    case Kind::forall:
    case Kind::exists:
      bound.push_back(f->var);
      collect_free(f->kids[0], bound, out);
      bound.pop_back();
      return;
    default:
      for (const FormulaPtr& k : f->kids) collect_free(k, bound, out);
  }
}

}  // namespace

std::vector<std::string> free_variables(const FormulaPtr& f) {
  require(f != nullptr, "null formula");
  std::vector<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

namespace {

void emit(const FormulaPtr& f, std::string& out) {
  out += '(';
  switch (f->kind) {
    case Kind::forall:
      out += "forall ";
      out += f->var;
      out += ' ';
      emit(f->kids[0], out);
      break;
    case Kind::exists:
      out += "exists ";
      out += f->var;
      out += ' ';
      emit(f->kids[0], out);
      break;
    case Kind::edge:
      out += "E ";
      out += f->var;
      out += ' ';
      out += f->var2;
      break;
    case Kind::equal:
      out += "= ";
      out += f->var;
      out += ' ';
      out += f->var2;
      break;
    case Kind::lnot:
      out += "not ";
      emit(f->kids[0], out);
      break;
    case Kind::land:
    case Kind::lor:
      out += (f->kind == Kind::land) ? "and" : "or";
      for (const FormulaPtr& k : f->kids) {
        out += ' ';
        emit(k, out);
      }
      break;
    case Kind::implies:
    case Kind::iff:
      out += (f->kind == Kind::implies) ? "imp " : "iff ";
      emit(f->kids[0], out);
      out += ' ';
      emit(f->kids[1], out);
      break;
  }
  out += ')';
}

}  // namespace

std::string to_text(const FormulaPtr& f) {
  require(f != nullptr, "null formula");
  std::string out;
  emit(f, out);
  return out;
}

namespace {

struct Parser {
  std::vector<std::string> tokens;
  size_t pos = 0;

  explicit Parser(const std::string& text) {
    std::string cur;
    for (char c : text) {
      if (c == '(' || c == ')') {
        if (!cur.empty()) tokens.push_back(cur), cur.clear();
        tokens.push_back(std::string(1, c));
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) tokens.push_back(cur), cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) tokens.push_back(cur);
  }

  const std::string& next() {
    if (pos >= tokens.size())
      throw std::invalid_argument("unexpected end of formula text");
    return tokens[pos++];
  }

  void expect(const char* tok) {
    if (next() != tok)
      throw std::invalid_argument(std::string("expected '") + tok + "'");
  }

  std::string name() {
    const std::string& t = next();
    if (t == "(" || t == ")")
      throw std::invalid_argument("expected a variable name");
    return t;
  }

  FormulaPtr formula() {
    expect("(");
    const std::string head = next();
    FormulaPtr out;
    if (head == "forall" || head == "exists") {
      std::string v = name();
      FormulaPtr body = formula();
      out = head == "forall" ? forall(std::move(v), std::move(body))
                             : exists(std::move(v), std::move(body));
    } else if (head == "E" || head == "=") {
      std::string x = name();
      std::string y = name();
      out = head == "E" ? edge(std::move(x), std::move(y))
                        : equal(std::move(x), std::move(y));
    } else if (head == "not") {
      out = lnot(formula());
    } else if (head == "and" || head == "or") {
      std::vector<FormulaPtr> kids;
      while (pos < tokens.size() && tokens[pos] != ")")
        kids.push_back(formula());
      out = head == "and" ? land(std::move(kids)) : lor(std::move(kids));
    } else if (head == "imp" || head == "iff") {
      FormulaPtr a = formula();
      FormulaPtr b = formula();
      out = head == "imp" ? implies(std::move(a), std::move(b))
                          : iff(std::move(a), std::move(b));
    } else {
      throw std::invalid_argument("unknown operator '" + head + "'");
    }
    expect(")");
    return out;
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.formula();
  if (p.pos != p.tokens.size())
    throw std::invalid_argument("trailing text after formula");
  return f;
}

std::vector<FormulaPtr> random_sentence_pool(int count, int max_quantifiers,
                                             int max_depth, uint64_t seed) {
  require(count >= 0, "negative pool size");
  require(max_quantifiers >= 1, "pool sentences need at least one quantifier");
  std::mt19937_64 rng(seed);
  std::vector<FormulaPtr> pool;

  // scope holds the currently bound variables; atoms draw from it, so
  // every generated sentence is closed by construction
  std::vector<std::string> scope;
  int quant_left = 0;
  int next_var = 0;

  std::function<FormulaPtr(int)> gen = [&](int depth) -> FormulaPtr {
    auto pick_var = [&]() {
      return scope[rng() % scope.size()];
    };
    bool must_quantify = scope.empty();
    bool can_quantify = quant_left > 0 && depth > 0;
    if (must_quantify && !can_quantify)
      throw std::logic_error("sentence generator ran out of quantifiers");
    int choice =
        must_quantify ? 0 : (depth == 0 ? 7 : static_cast<int>(rng() % 10));
    if (choice <= 1 && !can_quantify) choice = 7;
    switch (choice) {
      case 0:
      case 1: {
        quant_left--;
        std::string v = "x" + std::to_string(next_var++);
        scope.push_back(v);
        FormulaPtr body = gen(depth - 1);
        scope.pop_back();
        return choice == 0 ? forall(v, std::move(body))
                           : exists(v, std::move(body));
      }
      case 2:
        return lnot(gen(depth - 1));
      case 3:
        return land({gen(depth - 1), gen(depth - 1)});
      case 4:
        return lor({gen(depth - 1), gen(depth - 1)});
      case 5:
        return implies(gen(depth - 1), gen(depth - 1));
      case 6:
        return iff(gen(depth - 1), gen(depth - 1));
      default:
        return rng() % 2 ? edge(pick_var(), pick_var())
                         : equal(pick_var(), pick_var());
    }
  };

  for (int i = 0; i < count; ++i) {
    quant_left = 1 + static_cast<int>(rng() % max_quantifiers);
    next_var = 0;
    pool.push_back(gen(std::max(1, max_depth)));
  }
  return pool;
}

}  // namespace symgame::fo
