#pragma once

#include <string>
#include <vector>

#include "tensalg/adjunctions.hpp"
#include "tensalg/workspace.hpp"

namespace tensalg {

// The diamond-lattice worked example: M3, its subquantale V = {0,b,1}, the
// module A = M3 over V, F(x) = a*x, and L = {0,1}.
const std::string& paper_example_json();
// M3 exactly as printed: its declared unit b fails the right unit law at c.
const std::string& m3_printed_json();

struct PaperExampleResult {
  std::vector<std::string> carrier;                  // labels of A
  std::vector<std::vector<std::string>> homs;        // value tables over A
  std::vector<std::string> hom_names;                // f1..f8 in the example's numbering of join maps A -> L
  std::vector<std::vector<std::string>> r;           // r(alpha, beta)
  std::vector<std::vector<std::string>> mu;          // mu_H(x)(alpha), one row per x
  std::string m3_status;  // validation outcome of the printed M3 table
  bool v_commutative = false;
  bool lax = false;
  bool strict = false;
  bool injective = true;
  std::vector<CheckResult> checks;                   // against the expected tables
  bool ok() const;
};

PaperExampleResult run_paper_example(const Workspace& ws);
PaperExampleResult run_paper_example();

}  // namespace tensalg
