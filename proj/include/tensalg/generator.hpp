#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tensalg/adjunctions.hpp"

namespace tensalg {

// Curated quantales.
QuantalePtr two_quantale();
QuantalePtr min_chain(int n);
QuantalePtr lukasiewicz_chain(int n);
QuantalePtr three_chain();  // {0, b, 1}, unit b, 1 (x) 1 = 1
QuantalePtr two_by_two();   // 2 x 2 with componentwise meet
std::vector<QuantalePtr> curated_quantales();

// V acting on itself by the tensor.
TableModulePtr self_module(QuantalePtr V);
// Sub-modules of V^2 generated by at most two elements, plus V and V^2
// when small enough; carriers of at most max_size elements.
std::vector<TableModulePtr> curated_modules(QuantalePtr V, std::size_t max_size = 5);

struct Instance {
  std::uint64_t seed = 0;
  std::size_t index = 0;
  QuantalePtr V;
  FslPtr H1, H2;
  FslMap f;  // lax H1 -> H2
  ModulePtr L1, L2;
  ModuleMap g;  // L1 -> L2
  FramePtr J1, J2;
  FrameHom t;  // J1 -> J2
  std::string describe() const;
};

struct GeneratorOptions {
  std::size_t max_module = 5;
  std::size_t max_points = 3;
  std::size_t max_quantale = 4;
};

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed, GeneratorOptions opt = {});
  // Deterministic in (seed, index, attempt).
  Instance draw(std::size_t index, std::size_t attempt);

  FramePtr random_frame(std::mt19937_64& rng, QuantalePtr V, std::size_t n, const std::string& name);
  FslPtr random_fsl(std::mt19937_64& rng, TableModulePtr A, const std::string& name);

 private:
  std::uint64_t seed_;
  GeneratorOptions opt_;
  std::vector<QuantalePtr> quantales_;
  std::vector<std::vector<TableModulePtr>> modules_;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  std::size_t count = 100;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::size_t max_attempts = 50;
  // Materialization cap while checking one instance. A draw whose derived
  // objects need more is rejected and redrawn, and counted in rejections.
  std::size_t budget = 5000;
};

// Triangles, naturality squares and component validators on generated instances.
CheckReport run_adjunction_suite(const SuiteOptions& opt);
// The six triangle identities only.
CheckReport run_triangle_suite(const SuiteOptions& opt);
// Module laws, hom enumeration against the all-functions oracle, F^J and
// tensor constructions against their literal definitions.
CheckReport run_laws_suite(const SuiteOptions& opt);
// Generated prenuclei: both closure routes, nucleus laws, quotients,
// congruence round trips, factorization.
CheckReport run_nuclei_suite(const SuiteOptions& opt);

// All |L|^|A| functions filtered by the module-hom laws.
std::vector<ModuleHom> brute_force_module_homs(ModulePtr A, ModulePtr L);

}  // namespace tensalg
