#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "qutest/diagnostic.hpp"
#include "qutest/inliner/inliner.hpp"
#include "qutest/qasm/discovery.hpp"
#include "qutest/sim/simulator.hpp"

using namespace qutest;
namespace ts = testing_support;

namespace {

double max_diff(const sim::Statevector& a, const sim::Statevector& b) {
  EXPECT_EQ(a.amplitudes.size(), b.amplitudes.size());
  double d = 0;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    d = std::max(d, std::abs(a.amplitudes[i] - b.amplitudes[i]));
  return d;
}

void expect_equivalent(const std::string& nested, const std::string& flat, const std::string& test) {
  const auto a = sim::statevector(ts::circuit_of(nested, test));
  const auto b = sim::statevector(ts::circuit_of(flat, test));
  EXPECT_LT(max_diff(a, b), 1e-12);
}

}  // namespace

TEST(Inliner, GhzCorpusMatchesHandFlattenedBody) {
  const auto nested = qasm::read_text_file(ts::corpus_dir() / "ghz_nested.qasm");
  const std::string flat = R"(OPENQASM 3;
include "stdgates.inc";
def test_ghz_parity() {
    qubit[2] a;
    qubit[1] b;
    bit[2] ma;
    bit[1] mb;
    h a[0];
    cx a[0], a[1];
    cx a[1], b[0];
    ma = measure a;
    mb = measure b;
}
)";
  expect_equivalent(nested, flat, "test_ghz_parity");
}

TEST(Inliner, BellCorpusMatchesHandFlattenedBody) {
  for (const char* file : {"bell_test.qasm", "noisy_bell.qasm", "structure.qasm"}) {
    const auto nested = qasm::read_text_file(ts::corpus_dir() / file);
    const auto program = ts::program_of(nested);
    for (const auto* def : qasm::list_tests(program)) {
      const bool calls_bell = std::any_of(def->body.begin(), def->body.end(), [](const auto& s) {
        return std::holds_alternative<qasm::CallStmt>(s);
      });
      if (!calls_bell) continue;
      const std::string flat = "OPENQASM 3;\ndef " + def->name +
                               "() {\n qubit[2] q;\n bit[2] m;\n h q[0];\n cx q[0], q[1];\n"
                               " m = measure q;\n}\n";
      expect_equivalent(nested, flat, def->name);
    }
  }
}

TEST(Inliner, SubstitutesFormalsAndHoistsLocals) {
  const std::string src = R"(OPENQASM 3;
include "stdgates.inc";
def helper(qubit[2] x) {
    qubit[1] anc;
    cx x[0], anc[0];
    cx x[1], anc[0];
}
def test_t() {
    qubit[2] q;
    bit[2] c;
    x q[1];
    helper(q);
    c = measure q;
}
)";
  const auto program = ts::program_of(src);
  const auto flat = inliner::inline_calls(*program.find_subroutine("test_t"), program);
  ASSERT_EQ(flat.registers.size(), 3u);
  EXPECT_EQ(flat.registers[2].name, "anc");
  const auto circuit = inliner::build_circuit(flat);
  EXPECT_EQ(circuit.num_qubits, 3);
  ASSERT_EQ(circuit.ops.size(), 5u);
  EXPECT_EQ(circuit.ops[1].qubits, (std::vector<int>{0, 2}));
  EXPECT_EQ(circuit.ops[2].qubits, (std::vector<int>{1, 2}));
  EXPECT_EQ(circuit.measurement_map, (std::map<int, int>{{0, 0}, {1, 1}}));
}

TEST(Inliner, BroadcastsWholeRegisterOperands) {
  const auto c = ts::circuit_of(
      "OPENQASM 3;\ndef test_b() {\n qubit[3] q;\n qubit[3] r;\n h q;\n cx q, r;\n}\n", "test_b");
  ASSERT_EQ(c.ops.size(), 6u);
  EXPECT_EQ(c.ops[3].qubits, (std::vector<int>{0, 3}));
  EXPECT_EQ(c.ops[5].qubits, (std::vector<int>{2, 5}));
}

TEST(Inliner, Errors) {
  const auto err = [](const std::string& body, const std::string& extra = "") {
    const std::string src = "OPENQASM 3;\n" + extra + "def test_e() {\n qubit[2] q;\n bit[2] c;\n" + body + "\n}\n";
    const auto program = ts::program_of(src);
    try {
      inliner::build_circuit(inliner::inline_calls(*program.find_subroutine("test_e"), program));
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(err("f(q);", "def f(qubit[2] a) { f(a); }\n").find("recursion"), std::string::npos);
  EXPECT_NE(err("f(q, q);", "def f(qubit[2] a) { h a; }\n").find("expects 1"), std::string::npos);
  EXPECT_NE(err("f(c);", "def f(qubit[2] a) { h a; }\n"), "");
  EXPECT_NE(err("f(q);", "def f(qubit[3] a) { h a; }\n"), "");
  EXPECT_NE(err("g(q);").find("undefined"), std::string::npos);
  EXPECT_NE(err("frob q[0];"), "");
  EXPECT_NE(err("c[0] = measure q[0];\nc[0] = measure q[1];"), "");
  EXPECT_NE(err("c[0] = measure q[0];\nc[1] = measure q[0];"), "");
  EXPECT_NE(err("f(q);", "def f(qubit[2] a) { qubit[1] c; h c; }\n").find("c"), std::string::npos);
}

TEST(Inliner, ParameterisedTestIsRejected) {
  const auto program = ts::program_of("OPENQASM 3;\ndef test_p(qubit[1] q) {\n h q;\n}\n");
  EXPECT_THROW(inliner::inline_calls(program.subroutines[0], program), Error);
}

TEST(Inliner, GateAfterMeasurementStillBuilds) {
  const auto c = ts::circuit_of(
      "OPENQASM 3;\ndef test_g() {\n qubit[1] q;\n bit[1] c;\n c = measure q;\n x q;\n}\n", "test_g");
  EXPECT_EQ(c.ops.size(), 2u);
  EXPECT_THROW(sim::require_terminal_measurements(c), Error);
}

TEST(Circuit, DepthCountsMeasurementsAndSharedBits) {
  const auto c = ts::circuit_of(
      "OPENQASM 3;\ninclude \"stdgates.inc\";\ndef test_d() {\n qubit[3] q;\n bit[3] m;\n"
      " h q[0];\n h q[1];\n cx q[0], q[1];\n x q[2];\n m = measure q;\n}\n",
      "test_d");
  EXPECT_EQ(sim::depth(c), 3);
  EXPECT_EQ(sim::depth(c.without_measurements()), 2);
  sim::Circuit empty;
  EXPECT_EQ(sim::depth(empty), 0);
}
