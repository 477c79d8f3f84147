#include "tensalg/paper_example.hpp"

#include <algorithm>

#include "tensalg/error.hpp"

namespace tensalg {

const std::string& paper_example_json() {
  static const std::string text = R"json(
{
  "quantales": [
    {
      "name": "V",
      "elements": ["0", "b", "1"],
      "leq": [
        [1, 1, 1],
        [0, 1, 1],
        [0, 0, 1]
      ],
      "tensor": [
        ["0", "0", "0"],
        ["0", "b", "1"],
        ["0", "1", "1"]
      ],
      "unit": "b"
    }
  ],
  "modules": [
    {
      "name": "A",
      "quantale": "V",
      "elements": ["0", "a", "b", "c", "1"],
      "leq": [
        [1, 1, 1, 1, 1],
        [0, 1, 0, 0, 1],
        [0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1]
      ],
      "action": [
        ["0", "0", "0", "0", "0"],
        ["0", "a", "b", "c", "1"],
        ["0", "a", "1", "1", "1"]
      ]
    },
    {
      "name": "L",
      "quantale": "V",
      "elements": ["0", "1"],
      "leq": [
        [1, 1],
        [0, 1]
      ],
      "action": [
        ["0", "0"],
        ["0", "1"],
        ["0", "1"]
      ]
    }
  ],
  "frames": [],
  "fsemilattices": [
    {
      "name": "H",
      "module": "A",
      "F": ["0", "0", "a", "a", "a"]
    }
  ]
}
)json";
  return text;
}

const std::string& m3_printed_json() {
  static const std::string text = R"json(
{
  "quantales": [
    {
      "name": "M3",
      "elements": ["0", "a", "b", "c", "1"],
      "leq": [
        [1, 1, 1, 1, 1],
        [0, 1, 0, 0, 1],
        [0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 0, 1]
      ],
      "tensor": [
        ["0", "0", "0", "0", "0"],
        ["0", "0", "a", "a", "a"],
        ["0", "a", "b", "c", "1"],
        ["0", "a", "1", "1", "1"],
        ["0", "a", "1", "1", "1"]
      ],
      "unit": "b"
    }
  ]
}
)json";
  return text;
}

bool PaperExampleResult::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

template <class T>
std::string show(const std::vector<std::vector<T>>& rows) {
  std::string s;
  for (const auto& row : rows) {
    s += "(";
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i];
    s += ")";
  }
  return s;
}

}  // namespace

PaperExampleResult run_paper_example(const Workspace& ws) {
  PaperExampleResult res;
  auto V = ws.quantale("V");
  res.v_commutative = V->commutative();
  try {
    auto M3 = parse_workspace(m3_printed_json()).quantale("M3");
    res.m3_status = M3->commutative() ? "accepted, commutative" : "accepted, not commutative";
  } catch (const AlgebraError& e) {
    res.m3_status = std::string("rejected: ") + e.what();
  }
  const FslPtr& H = ws.fsl("H").fsl;
  ModulePtr L = ws.module("L");
  const Module& A = *H->module();
  for (const auto& x : A.carrier().elems) res.carrier.push_back(A.format(x));

  // the eight join-preserving maps (0,a,b,c,1) -> {0,1}, numbered as in the worked example
  const std::vector<std::vector<std::string>> candidates{
      {"0", "0", "0", "0", "0"}, {"0", "0", "0", "1", "1"}, {"0", "0", "1", "0", "1"}, {"0", "1", "0", "0", "1"},
      {"0", "1", "1", "0", "1"}, {"0", "1", "0", "1", "1"}, {"0", "0", "1", "1", "1"}, {"0", "1", "1", "1", "1"}};
  auto HF = hom_frame(H, L);
  for (const auto& h : HF->homs()) {
    std::vector<std::string> row;
    for (const auto& y : h.values) row.push_back(L->format(y));
    auto it = std::find(candidates.begin(), candidates.end(), row);
    res.hom_names.push_back(it == candidates.end() ? "?" : "f" + std::to_string(it - candidates.begin() + 1));
    res.homs.push_back(std::move(row));
  }
  const VFrame& J = *HF->frame();
  for (std::size_t a = 0; a < J.size(); ++a) {
    std::vector<std::string> row;
    for (std::size_t b = 0; b < J.size(); ++b) row.push_back(V->label(J.r(a, b)));
    res.r.push_back(std::move(row));
  }
  auto mu = unit_mu(HF);
  auto P = std::dynamic_pointer_cast<const PowerFSemilattice>(mu.target);
  std::vector<Elem> images;
  for (const auto& x : A.carrier().elems) {
    Elem y = mu(x);
    images.push_back(y);
    std::vector<std::string> row;
    for (std::size_t a = 0; a < HF->size(); ++a) row.push_back(L->format(P->power().block(y, a)));
    res.mu.push_back(std::move(row));
  }
  res.lax = is_lax_morphism(mu);
  res.strict = is_f_hom(mu);
  res.injective = true;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t k = i + 1; k < images.size(); ++k)
      if (images[i] == images[k]) res.injective = false;

  const std::vector<std::vector<std::string>> homs_expected{
      {"0", "0", "0", "0", "0"}, {"0", "0", "1", "1", "1"}, {"0", "1", "1", "1", "1"}};
  const std::vector<std::vector<std::string>> r_expected{{"1", "0", "0"}, {"1", "0", "0"}, {"1", "1", "0"}};
  const std::vector<std::vector<std::string>> mu_expected{
      {"0", "0", "0"}, {"0", "0", "1"}, {"0", "1", "1"}, {"0", "1", "1"}, {"0", "1", "1"}};
  auto expect = [&](const std::string& name, bool ok, const std::string& got) {
    res.checks.push_back(CheckResult{name, "diamond example", ok, ok ? "" : "got " + got});
  };
  expect("quantale.V.commutative", res.v_commutative, res.v_commutative ? "" : "not commutative");
  expect("homs.A->L", res.homs == homs_expected, show(res.homs));
  expect("homs.names", res.hom_names == std::vector<std::string>{"f1", "f7", "f8"}, show(std::vector<std::vector<std::string>>{res.hom_names}));
  expect("hom_frame.r", res.r == r_expected, show(res.r));
  expect("mu_H.table", res.mu == mu_expected, show(res.mu));
  expect("mu_H.lax", res.lax, "not lax");
  expect("mu_H.not_injective", !res.injective, "injective");
  return res;
}

PaperExampleResult run_paper_example() { return run_paper_example(parse_workspace(paper_example_json())); }

}  // namespace tensalg
