#include "reqlex/classic_metrics.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include <fmt/format.h>

#include "reqlex/error.hpp"

namespace reqlex::classic {

namespace {

double log2_or_zero(double x) { return x > 0 ? std::log2(x) : 0.0; }

using Frontier = std::vector<std::size_t>;

struct JumpScope {
  bool is_loop = false;
  Frontier breaks;
  Frontier continues;
  std::size_t switch_node = 0;  // switch scopes only
  bool saw_default = false;
};

JumpScope loop_scope() {
  JumpScope s;
  s.is_loop = true;
  return s;
}

JumpScope switch_scope(std::size_t dispatch) {
  JumpScope s;
  s.switch_node = dispatch;
  return s;
}

class CfgBuilder {
 public:
  explicit CfgBuilder(const code::Program& program) : program_(program) {}

  ControlFlowGraph run() {
    for (const auto& f : program_.functions) {
      const std::size_t entry = add_node(ControlFlowGraph::NodeKind::Entry, f.line, {});
      const std::size_t exit = add_node(ControlFlowGraph::NodeKind::Exit, f.line, {});
      ends_[f.name] = {entry, exit};
    }
    for (const auto& f : program_.functions) {
      const auto [entry, exit] = ends_.at(f.name);
      current_exit_ = exit;
      for (std::size_t n : build(f.body, {entry})) link(n, exit);
    }
    return std::move(g_);
  }

 private:
  using Kind = ControlFlowGraph::NodeKind;

  void link(std::size_t from, std::size_t to) { g_.edges.emplace_back(from, to); }

  std::size_t add_node(Kind kind, std::size_t line, const Frontier& preds) {
    g_.nodes.push_back({kind, line});
    const std::size_t id = g_.nodes.size() - 1;
    for (std::size_t p : preds) link(p, id);
    return id;
  }

  // Node for an expression segment followed by one return node per call and
  // a two-way split per ternary. Returns {first, last}.
  std::pair<std::size_t, std::size_t> chain(const Frontier& preds, const code::Expr& e,
                                            std::size_t line) {
    const std::size_t first = add_node(Kind::Statement, line, preds);
    std::size_t tail = first;
    for (const auto& call : e.calls) {
      const auto [entry, exit] = ends_.at(call.callee);
      link(tail, entry);
      tail = add_node(Kind::CallReturn, call.line, {});
      link(exit, tail);
    }
    for (std::size_t i = 0; i < e.ternaries; ++i) {
      g_.nodes[tail].kind = Kind::Predicate;
      const std::size_t join = add_node(Kind::Join, line, {tail, tail});
      tail = join;
    }
    return {first, tail};
  }

  JumpScope& innermost(bool loop_only, std::size_t line, const char* what) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (!loop_only || it->is_loop) return *it;
    }
    throw StructureError(fmt::format("'{}' outside of {}", what,
                                     loop_only ? "a loop" : "a loop or switch"),
                         line);
  }

  JumpScope& innermost_switch(std::size_t line) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (!it->is_loop) return *it;
    }
    throw StructureError("case label outside of a switch", line);
  }

  Frontier build(const std::vector<code::Statement>& stmts, Frontier frontier) {
    for (const auto& s : stmts) frontier = build(s, std::move(frontier));
    return frontier;
  }

  static void append(Frontier& dst, const Frontier& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  }

  Frontier build(const code::Statement& s, Frontier frontier) {
    using SK = code::Statement::Kind;
    if (s.kind == SK::Case || s.kind == SK::Default) {
      auto& scope = innermost_switch(s.line);
      if (s.kind == SK::Default) scope.saw_default = true;
      frontier.push_back(scope.switch_node);
      return frontier;
    }
    if (s.kind == SK::Block) return build(s.body, std::move(frontier));
    if (frontier.empty()) return frontier;  // unreachable

    switch (s.kind) {
      case SK::Simple: return {chain(frontier, s.head, s.line).second};
      case SK::Return: {
        link(chain(frontier, s.head, s.line).second, current_exit_);
        return {};
      }
      case SK::Break: append(innermost(false, s.line, "break").breaks, frontier); return {};
      case SK::Continue:
        append(innermost(true, s.line, "continue").continues, frontier);
        return {};
      case SK::If: {
        const std::size_t decision = chain(frontier, s.head, s.line).second;
        g_.nodes[decision].kind = Kind::Predicate;
        Frontier out = build(s.body, {decision});
        append(out, s.alt.empty() ? Frontier{decision} : build(s.alt, {decision}));
        return out;
      }
      case SK::While:
      case SK::ForEach: {
        const auto [head, decision] = chain(frontier, s.head, s.line);
        g_.nodes[decision].kind = Kind::Predicate;
        scopes_.push_back(loop_scope());
        Frontier back = build(s.body, {decision});
        append(back, scopes_.back().continues);
        for (std::size_t n : back) link(n, head);
        Frontier out{decision};
        append(out, scopes_.back().breaks);
        scopes_.pop_back();
        return out;
      }
      case SK::DoWhile: {
        const std::size_t top = add_node(Kind::Join, s.line, frontier);
        scopes_.push_back(loop_scope());
        Frontier into_cond = build(s.body, {top});
        append(into_cond, scopes_.back().continues);
        Frontier out = scopes_.back().breaks;
        scopes_.pop_back();
        if (into_cond.empty()) return out;
        const std::size_t decision = chain(into_cond, s.head, s.line).second;
        g_.nodes[decision].kind = Kind::Predicate;
        link(decision, top);
        out.insert(out.begin(), decision);
        return out;
      }
      case SK::For: {
        if (s.init.present) frontier = {chain(frontier, s.init, s.line).second};
        const auto [head, decision] = chain(frontier, s.head, s.line);
        g_.nodes[decision].kind = Kind::Predicate;
        scopes_.push_back(loop_scope());
        Frontier back = build(s.body, {decision});
        append(back, scopes_.back().continues);
        if (s.step.present && !back.empty()) back = {chain(back, s.step, s.line).second};
        for (std::size_t n : back) link(n, head);
        Frontier out{decision};
        append(out, scopes_.back().breaks);
        scopes_.pop_back();
        return out;
      }
      case SK::Switch: {
        const std::size_t dispatch = chain(frontier, s.head, s.line).second;
        g_.nodes[dispatch].kind = Kind::Predicate;
        scopes_.push_back(switch_scope(dispatch));
        Frontier out = build(s.body, {});
        append(out, scopes_.back().breaks);
        if (!scopes_.back().saw_default) out.push_back(dispatch);
        scopes_.pop_back();
        return out;
      }
      default: break;
    }
    return frontier;
  }

  const code::Program& program_;
  ControlFlowGraph g_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> ends_;
  std::size_t current_exit_ = 0;
  std::vector<JumpScope> scopes_;
};

void count_calls(const std::vector<code::Statement>& stmts,
                 std::map<std::string, std::size_t>& sites) {
  for (const auto& s : stmts) {
    for (const code::Expr* e : {&s.init, &s.head, &s.step}) {
      for (const auto& c : e->calls) ++sites[c.callee];
    }
    count_calls(s.body, sites);
    count_calls(s.alt, sites);
  }
}

}  // namespace

HalsteadCounts halstead_counts(const code::TokenStream& ts, const code::Dialect& d) {
  HalsteadCounts c;
  std::set<std::string> operators;
  std::set<std::string> operands;
  for (const auto& t : ts.tokens) {
    if (code::counts_as_operator(t, d)) {
      operators.insert(t.text);
      ++c.N1;
    } else if (code::counts_as_operand(t)) {
      operands.insert(t.text);
      ++c.N2;
    }
  }
  c.n1 = operators.size();
  c.n2 = operands.size();
  return c;
}

double halstead_time_minutes(double effort) { return effort / (kStroudNumber * 60.0); }

HalsteadMetrics halstead_metrics(const HalsteadCounts& c) {
  HalsteadMetrics m;
  if (c.n1 == 0 && c.n2 == 0) return m;
  const auto n1 = static_cast<double>(c.n1);
  const auto n2 = static_cast<double>(c.n2);
  m.vocabulary = n1 + n2;
  m.length = static_cast<double>(c.N1 + c.N2);
  m.volume = m.vocabulary >= 2 ? m.length * std::log2(m.vocabulary) : 0.0;
  m.estimated_length = n1 * log2_or_zero(n1) + n2 * log2_or_zero(n2);
  m.potential_volume = (2 + n1) * std::log2(2 + n1);
  m.level = m.volume > 0 ? m.potential_volume / m.volume : 0.0;
  m.difficulty = c.n2 > 0 ? (n1 / 2.0) * (static_cast<double>(c.N2) / n2) : 0.0;
  m.effort_dv = m.difficulty * m.volume;
  m.effort_vl = m.level > 0 ? m.volume / m.level : 0.0;
  m.time_minutes = halstead_time_minutes(m.effort_dv);
  return m;
}

std::size_t ControlFlowGraph::components() const {
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = nodes.size();
  for (const auto& [a, b] : edges) {
    const std::size_t ra = find(a);
    const std::size_t rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

std::vector<std::size_t> ControlFlowGraph::out_degrees() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (const auto& e : edges) ++deg[e.first];
  return deg;
}

std::size_t ControlFlowGraph::predicate_nodes() const {
  std::size_t count = 0;
  for (std::size_t d : out_degrees()) count += d >= 2 ? 1 : 0;
  return count;
}

ControlFlowGraph build_cfg(const code::Program& program) { return CfgBuilder(program).run(); }

ControlFlowGraph build_cfg(std::string_view source, const code::Dialect& d) {
  return build_cfg(code::parse_program(code::tokenize(source, d), d));
}

long cyclomatic_graph(const ControlFlowGraph& g) {
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.node_count()) +
         2 * static_cast<long>(g.components());
}

std::size_t cyclomatic_decisions(const code::TokenStream& ts, const code::Program& program) {
  std::map<std::string, std::size_t> sites;
  for (const auto& f : program.functions) count_calls(f.body, sites);
  std::size_t dispatch = 0;
  for (const auto& [callee, n] : sites) dispatch += n > 1 ? n - 1 : 0;
  return code::decision_keyword_count(ts) + dispatch + 1;
}

std::size_t cyclomatic_decisions(std::string_view source, const code::Dialect& d) {
  const auto ts = code::tokenize(source, d);
  return cyclomatic_decisions(ts, code::parse_program(ts, d));
}

long region_count(const ControlFlowGraph& g) {
  if (g.nodes.empty()) return 1;
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.node_count()) +
         static_cast<long>(g.components()) + 1;
}

}  // namespace reqlex::classic
