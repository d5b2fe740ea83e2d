#include "qutest/inliner/inliner.hpp"

#include <algorithm>
#include <set>

#include "qutest/diagnostic.hpp"
#include "qutest/sim/gates.hpp"

namespace qutest::inliner {

using qasm::CallStmt;
using qasm::GateApplication;
using qasm::MeasureStmt;
using qasm::RegisterDecl;
using qasm::RegisterKind;
using qasm::RegisterRef;
using qasm::Statement;
using qasm::SubroutineDef;

namespace {

std::string at_line(int line) { return "line " + std::to_string(line) + ": "; }

class Expander {
 public:
  Expander(const qasm::Program& program, FlatBody& out) : program_(program), out_(out) {}

  void expand(const SubroutineDef& def, const std::map<std::string, std::string>& renames) {
    stack_.push_back(def.name);
    auto rename = [&](RegisterRef ref) {
      if (auto it = renames.find(ref.name); it != renames.end()) ref.name = it->second;
      return ref;
    };

    for (const auto& stmt : def.body) {
      if (const auto* decl = std::get_if<RegisterDecl>(&stmt)) {
        if (out_.find_register(decl->name) != nullptr) {
          throw Error(at_line(decl->line) + "register '" + decl->name + "' declared in '" +
                      def.name + "' collides with a register already in scope " +
                      "(nested-scope renaming is not supported)");
        }
        out_.registers.push_back(*decl);
      } else if (const auto* gate = std::get_if<GateApplication>(&stmt)) {
        GateApplication g = *gate;
        for (auto& t : g.targets) t = rename(t);
        out_.statements.emplace_back(std::move(g));
      } else if (const auto* m = std::get_if<MeasureStmt>(&stmt)) {
        MeasureStmt copy = *m;
        copy.bits = rename(copy.bits);
        copy.qubits = rename(copy.qubits);
        out_.statements.emplace_back(std::move(copy));
      } else if (const auto* call = std::get_if<CallStmt>(&stmt)) {
        expand_call(*call, renames);
      }
    }
    stack_.pop_back();
  }

 private:
  void expand_call(const CallStmt& call, const std::map<std::string, std::string>& renames) {
    const SubroutineDef* callee = program_.find_subroutine(call.callee);
    if (callee == nullptr) {
      throw Error(at_line(call.line) + "call to undefined subroutine '" + call.callee + "'");
    }
    if (std::find(stack_.begin(), stack_.end(), callee->name) != stack_.end()) {
      throw Error(at_line(call.line) + "recursion not supported ('" + callee->name +
                  "' calls itself directly or through other subroutines)");
    }
    if (call.args.size() != callee->params.size()) {
      throw Error(at_line(call.line) + "'" + callee->name + "' expects " +
                  std::to_string(callee->params.size()) + " argument(s), got " +
                  std::to_string(call.args.size()));
    }
    std::map<std::string, std::string> inner;
    for (std::size_t i = 0; i < call.args.size(); ++i) {
      std::string actual = call.args[i];
      if (auto it = renames.find(actual); it != renames.end()) actual = it->second;
      const RegisterDecl* reg = out_.find_register(actual);
      const auto& param = callee->params[i];
      if (reg == nullptr) {
        throw Error(at_line(call.line) + "argument '" + call.args[i] + "' is not a register");
      }
      if (reg->kind != param.kind || reg->width != param.width) {
        throw Error(at_line(call.line) + "argument " + std::to_string(i + 1) + " of '" +
                    callee->name + "' must be " + qasm::to_string(param.kind) + "[" +
                    std::to_string(param.width) + "], got " + qasm::to_string(reg->kind) +
                    "[" + std::to_string(reg->width) + "] '" + call.args[i] + "'");
      }
      inner[param.name] = actual;
    }
    expand(*callee, inner);
  }

  const qasm::Program& program_;
  FlatBody& out_;
  std::vector<std::string> stack_;
};

const sim::RegisterInfo& lookup(const std::vector<sim::RegisterInfo>& layout,
                                const std::string& name, RegisterKind kind, int line) {
  for (const auto& r : layout) {
    if (r.name == name) {
      if (r.kind != kind) {
        throw Error(at_line(line) + "'" + name + "' is not a " + qasm::to_string(kind) +
                    " register");
      }
      return r;
    }
  }
  throw Error(at_line(line) + "undeclared register '" + name + "'");
}

int flat_index(const sim::RegisterInfo& reg, int index, int line) {
  if (index < 0 || index >= reg.width) {
    throw Error(at_line(line) + "index " + std::to_string(index) + " out of range for '" +
                reg.name + "'");
  }
  return reg.offset + index;
}

// Expanded (qubit, bit) pairs of one measurement statement.
std::vector<std::pair<int, int>> measured_pairs(const std::vector<sim::RegisterInfo>& layout,
                                                const MeasureStmt& m) {
  const auto& q = lookup(layout, m.qubits.name, RegisterKind::Qubit, m.line);
  const auto& b = lookup(layout, m.bits.name, RegisterKind::Bit, m.line);
  std::vector<std::pair<int, int>> pairs;
  if (m.qubits.index.has_value() != m.bits.index.has_value()) {
    throw Error(at_line(m.line) + "measurement mixes a whole register with a single element");
  }
  if (m.qubits.index) {
    pairs.emplace_back(flat_index(q, *m.qubits.index, m.line), flat_index(b, *m.bits.index, m.line));
  } else {
    if (q.width != b.width) throw Error(at_line(m.line) + "measurement width mismatch");
    for (int j = 0; j < q.width; ++j) pairs.emplace_back(q.offset + j, b.offset + j);
  }
  return pairs;
}

}  // namespace

const RegisterDecl* FlatBody::find_register(std::string_view name) const {
  for (const auto& r : registers) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::vector<sim::RegisterInfo> FlatBody::layout() const {
  std::vector<sim::RegisterInfo> out;
  int qubits = 0;
  int bits = 0;
  for (const auto& r : registers) {
    int& offset = r.kind == RegisterKind::Qubit ? qubits : bits;
    out.push_back(sim::RegisterInfo{r.name, r.kind, offset, r.width});
    offset += r.width;
  }
  return out;
}

FlatBody inline_calls(const SubroutineDef& test, const qasm::Program& program) {
  if (!test.params.empty()) {
    throw Error(at_line(test.start_line) + "test subroutine '" + test.name +
                "' must not take parameters");
  }
  FlatBody flat;
  Expander(program, flat).expand(test, {});

  const auto layout = flat.layout();
  std::set<int> bits_used;
  for (const auto& stmt : flat.statements) {
    const auto* m = std::get_if<MeasureStmt>(&stmt);
    if (m == nullptr) continue;
    for (const auto& [q, b] : measured_pairs(layout, *m)) {
      if (flat.measurement_map.count(q) != 0) {
        throw Error(at_line(m->line) + "qubit " + std::to_string(q) + " is measured twice");
      }
      if (!bits_used.insert(b).second) {
        throw Error(at_line(m->line) + "classical bit " + std::to_string(b) +
                    " receives more than one measurement");
      }
      flat.measurement_map.emplace(q, b);
    }
  }
  return flat;
}

sim::Circuit build_circuit(const FlatBody& flat) {
  sim::Circuit circuit;
  circuit.registers = flat.layout();
  for (const auto& r : circuit.registers) {
    (r.kind == RegisterKind::Qubit ? circuit.num_qubits : circuit.classical_width) += r.width;
  }
  circuit.measurement_map = flat.measurement_map;

  for (const auto& stmt : flat.statements) {
    if (const auto* g = std::get_if<GateApplication>(&stmt)) {
      const sim::GateSpec* spec = sim::find_gate(g->gate);
      if (spec == nullptr) throw Error(at_line(g->line) + "unknown gate '" + g->gate + "'");
      if (static_cast<int>(g->targets.size()) != spec->qubits ||
          static_cast<int>(g->angles.size()) != spec->angles) {
        throw Error(at_line(g->line) + "gate '" + g->gate + "' expects " +
                    std::to_string(spec->qubits) + " qubit(s) and " +
                    std::to_string(spec->angles) + " angle(s)");
      }
      std::vector<const sim::RegisterInfo*> regs;
      int repeat = 1;
      for (const auto& t : g->targets) {
        const auto& reg = lookup(circuit.registers, t.name, RegisterKind::Qubit, g->line);
        regs.push_back(&reg);
        if (!t.index) repeat = reg.width;
      }
      for (int j = 0; j < repeat; ++j) {
        sim::Operation op;
        op.name = g->gate;
        op.angles = g->angles;
        op.line = g->line;
        for (std::size_t t = 0; t < g->targets.size(); ++t) {
          const auto& ref = g->targets[t];
          op.qubits.push_back(flat_index(*regs[t], ref.index ? *ref.index : j, g->line));
        }
        std::set<int> distinct(op.qubits.begin(), op.qubits.end());
        if (distinct.size() != op.qubits.size()) {
          throw Error(at_line(g->line) + "gate '" + g->gate + "' repeats a qubit operand");
        }
        circuit.ops.push_back(std::move(op));
      }
    } else if (const auto* m = std::get_if<MeasureStmt>(&stmt)) {
      for (const auto& [q, b] : measured_pairs(circuit.registers, *m)) {
        sim::Operation op;
        op.name = "measure";
        op.qubits = {q};
        op.classical = b;
        op.line = m->line;
        circuit.ops.push_back(std::move(op));
      }
    } else {
      throw Error("flat body contains an unexpanded statement");
    }
  }
  return circuit;
}

}  // namespace qutest::inliner
