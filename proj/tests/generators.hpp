#pragma once

// Seeded random generators shared by the property tests and the acceptance
// suite.

#include <random>
#include <string>
#include <vector>

#include "reqlex/cognitive_metrics.hpp"
#include "reqlex/srs_model.hpp"

namespace reqlex::testing {

inline constexpr int kPropertyCases = 200;

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(range(0, static_cast<int>(items.size()) - 1))];
  }

  srs::SrsManifest manifest() {
    srs::SrsManifest m;
    m.name = "generated" + std::to_string(range(0, 9999));
    m.inputs = range(0, 9);
    m.outputs = range(0, 9);
    m.interfaces = range(0, 4);
    m.files = range(0, 4);
    for (int i = range(0, 4); i > 0; --i) {
      m.functions.push_back({"f" + std::to_string(i), static_cast<srs::Count>(range(0, 6))});
    }
    for (int i = range(0, 4); i > 0; --i) {
      m.nfrs.push_back({"q" + std::to_string(i), static_cast<srs::NfrCategory>(range(0, 2))});
    }
    for (int i = range(0, 3); i > 0; --i) {
      m.constraints.push_back({"c" + std::to_string(i), static_cast<srs::ConstraintKind>(range(0, 4))});
    }
    for (int i = range(0, 3); i > 0; --i) {
      m.external_interfaces.push_back(
          {"e" + std::to_string(i), static_cast<srs::InterfaceKind>(range(0, 3))});
    }
    m.users = range(1, 20);
    m.locations = range(1, 5);
    for (int i = range(0, 3); i > 0; --i) {
      m.features.push_back({"ft" + std::to_string(i), static_cast<srs::Count>(range(1, 5))});
    }
    for (int a = 0; a < 5; ++a) {
      if (!chance(0.5)) continue;
      const auto attribute = static_cast<srs::CostAttribute>(a);
      // The last three attributes have no VeryHigh multiplier.
      const int top = a >= 2 ? 3 : 4;
      m.personnel.push_back({attribute, static_cast<srs::Rating>(range(0, top))});
    }
    return m;
  }

  // A structured C program: helper functions each called at least once from
  // main (so the whole program is one CFG component), with nested control
  // structures, calls, comments and varied whitespace.
  std::string c_program() {
    const int helpers = range(0, 3);
    std::string out = "#include <stdio.h>\n/* generated */\n";
    for (int h = 0; h < helpers; ++h) {
      out += "int helper" + std::to_string(h) + "(int x)\n{\n";
      callable_ = h;  // helpers may call earlier helpers only
      out += block(2, 1);
      out += "    return x" + ws() + "+" + ws() + std::to_string(h) + ";\n}\n\n";
    }
    callable_ = helpers;
    out += "int main()\n{\n    int a = 1, b = 2, i;\n";
    for (int h = 0; h < helpers; ++h) {
      out += "    a = helper" + std::to_string(h) + "(a);  // ensure reachable\n";
    }
    out += block(3, 1);
    out += "    return 0;\n}\n";
    return out;
  }

  // Flat tree: a sequence root whose children have no nesting.
  cognitive::BcsNode flat_bcs_tree() {
    cognitive::BcsNode root{cognitive::BcsKind::Sequence, {}};
    for (int i = range(0, 8); i > 0; --i) {
      root.children.push_back({static_cast<cognitive::BcsKind>(range(1, 7)), {}});
    }
    return root;
  }

 private:
  std::string ws() {
    static const std::vector<std::string> spaces{"", " ", "  ", "\t"};
    return pick(spaces);
  }

  std::string indent(int depth) { return std::string(static_cast<std::size_t>(depth) * 4, ' '); }

  std::string cond() {
    static const std::vector<std::string> ops{"<", ">", "==", "!=", "<=", ">="};
    std::string c = "a" + ws() + pick(ops) + ws() + std::to_string(range(0, 9));
    if (chance(0.2)) c += " && b > 0";
    return c;
  }

  std::string call_expr() {
    if (callable_ == 0 || !chance(0.3)) return "a + b";
    return "helper" + std::to_string(range(0, callable_ - 1)) + "(a)";
  }

  std::string simple(int depth) {
    switch (range(0, 4)) {
      case 0: return indent(depth) + "a = " + call_expr() + ";\n";
      case 1: return indent(depth) + "b" + ws() + "+=" + ws() + "a * 2;\n";
      case 2: return indent(depth) + "printf(\"%d\\n\", a);\n";
      case 3: return indent(depth) + "b = a > 3 ? a : b;\n";
      default: return indent(depth) + "a++; // bump\n";
    }
  }

  std::string block(int budget, int depth) {
    std::string out;
    for (int n = range(1, 3); n > 0; --n) out += statement(budget, depth);
    return out;
  }

  std::string statement(int budget, int depth) {
    const int kind = budget > 0 ? range(0, 6) : 0;
    const std::string in = indent(depth);
    switch (kind) {
      case 1: {
        std::string s = in + "if (" + cond() + ")\n" + in + "{\n" + block(budget - 1, depth + 1) +
                        in + "}\n";
        if (chance(0.5)) s += in + "else\n" + in + "{\n" + block(budget - 1, depth + 1) + in + "}\n";
        return s;
      }
      case 2:
        return in + "while (" + cond() + ")\n" + in + "{\n" + block(budget - 1, depth + 1) +
               indent(depth + 1) + "a--;\n" + in + "}\n";
      case 3:
        return in + "for (i = 0; i < " + std::to_string(range(1, 9)) + "; i++)\n" + in + "{\n" +
               block(budget - 1, depth + 1) + in + "}\n";
      case 4: {
        std::string s = in + "switch (a)\n" + in + "{\n";
        for (int c = range(1, 3); c > 0; --c) {
          s += in + "case " + std::to_string(c) + ":\n" + block(budget - 1, depth + 1) +
               indent(depth + 1) + "break;\n";
        }
        if (chance(0.5)) s += in + "default:\n" + indent(depth + 1) + "b = 0;\n";
        return s + in + "}\n";
      }
      case 5:
        return in + "do\n" + in + "{\n" + block(budget - 1, depth + 1) + indent(depth + 1) +
               "a--;\n" + in + "} while (" + cond() + ");\n";
      default: return simple(depth);
    }
  }

  std::mt19937 rng_;
  int callable_ = 0;
};

}  // namespace reqlex::testing
