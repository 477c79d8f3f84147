#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tensalg/lattice.hpp"
#include "tensalg/quantale.hpp"

namespace tensalg {

// An element of any module: a flat tuple of base-carrier indices.
// Table modules use width 1; A^T uses |T| blocks of the base width.
using Elem = std::vector<int>;

struct ElemHash {
  std::size_t operator()(const Elem& e) const noexcept;
};

struct Carrier {
  std::vector<Elem> elems;  // lexicographic order
  std::unordered_map<Elem, std::size_t, ElemHash> index;
  std::size_t size() const { return elems.size(); }
  std::size_t index_of(const Elem& x) const;
  bool contains(const Elem& x) const { return index.count(x) != 0; }
};

class Module;
using ModulePtr = std::shared_ptr<const Module>;

// Left V-module. Implementations are immutable; the carrier cache is
// filled on first use under a mutex.
class Module {
 public:
  explicit Module(QuantalePtr q) : q_(std::move(q)) {}
  virtual ~Module() = default;
  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  const Quantale& quantale() const { return *q_; }
  const QuantalePtr& quantale_ptr() const { return q_; }

  virtual std::size_t width() const = 0;
  virtual Elem bottom() const = 0;
  virtual Elem join(const Elem& a, const Elem& b) const = 0;
  virtual bool leq(const Elem& a, const Elem& b) const = 0;
  virtual Elem act(int v, const Elem& a) const = 0;
  // Every element is a join of generators.
  virtual std::vector<Elem> generators() const = 0;
  virtual Elem meet(const Elem& a, const Elem& b) const;
  // Largest y with v*y <= m.
  virtual Elem residual(int v, const Elem& m) const;
  virtual std::string format(const Elem& a) const;
  virtual std::string name() const = 0;

  const Carrier& carrier() const;
  Elem top() const;

 protected:
  virtual std::vector<Elem> enumerate() const;

 private:
  QuantalePtr q_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const Carrier> carrier_;
};

Elem join_all(const Module& M, const std::vector<Elem>& xs);

class TableModule final : public Module {
 public:
  TableModule(QuantalePtr q, FinLattice lattice, std::vector<int> action, std::string name);

  const FinLattice& lattice() const { return lattice_; }
  int act_index(int v, int a) const { return action_[static_cast<std::size_t>(v) * lattice_.size() + a]; }
  const std::vector<int>& action_table() const { return action_; }
  std::size_t size() const { return lattice_.size(); }

  std::size_t width() const override { return 1; }
  Elem bottom() const override { return {lattice_.bottom()}; }
  Elem join(const Elem& a, const Elem& b) const override { return {lattice_.join(a[0], b[0])}; }
  bool leq(const Elem& a, const Elem& b) const override { return lattice_.leq(a[0], b[0]); }
  Elem act(int v, const Elem& a) const override { return {act_index(v, a[0])}; }
  std::vector<Elem> generators() const override;
  Elem meet(const Elem& a, const Elem& b) const override { return {lattice_.meet(a[0], b[0])}; }
  Elem residual(int v, const Elem& m) const override;
  std::string format(const Elem& a) const override { return lattice_.label(a[0]); }
  std::string name() const override { return name_; }

 protected:
  std::vector<Elem> enumerate() const override;

 private:
  FinLattice lattice_;
  std::vector<int> action_;
  std::string name_;
};

using TableModulePtr = std::shared_ptr<const TableModule>;

// action[v][a], both as indices.
TableModulePtr validate_module(QuantalePtr q, FinLattice carrier, const std::vector<std::vector<int>>& action,
                               std::string name = "A");

// A^n with pointwise order, joins and action; elements are row-major tuples.
class PowerModule final : public Module {
 public:
  PowerModule(ModulePtr base, std::size_t count);

  const ModulePtr& base() const { return base_; }
  std::size_t count() const { return count_; }
  Elem block(const Elem& x, std::size_t i) const;
  void set_block(Elem& x, std::size_t i, const Elem& v) const;

  std::size_t width() const override { return count_ * bw_; }
  Elem bottom() const override;
  Elem join(const Elem& a, const Elem& b) const override;
  bool leq(const Elem& a, const Elem& b) const override;
  Elem act(int v, const Elem& a) const override;
  std::vector<Elem> generators() const override;
  Elem meet(const Elem& a, const Elem& b) const override;
  Elem residual(int v, const Elem& m) const override;
  std::string format(const Elem& a) const override;
  std::string name() const override;

 protected:
  std::vector<Elem> enumerate() const override;

 private:
  ModulePtr base_;
  std::size_t count_;
  std::size_t bw_;
};

using Closure = std::function<Elem(const Elem&)>;

// Fixed points of a module nucleus on the host, with join, action computed
// by closing the host result.
class QuotientModule final : public Module {
 public:
  QuotientModule(ModulePtr host, Closure closure, std::string name);

  const ModulePtr& host() const { return host_; }
  Elem close(const Elem& x) const { return closure_(x); }

  std::size_t width() const override { return host_->width(); }
  Elem bottom() const override { return closure_(host_->bottom()); }
  Elem join(const Elem& a, const Elem& b) const override { return closure_(host_->join(a, b)); }
  bool leq(const Elem& a, const Elem& b) const override { return host_->leq(a, b); }
  Elem act(int v, const Elem& a) const override { return closure_(host_->act(v, a)); }
  std::vector<Elem> generators() const override;
  Elem meet(const Elem& a, const Elem& b) const override { return host_->meet(a, b); }
  Elem residual(int v, const Elem& m) const override { return host_->residual(v, m); }
  std::string format(const Elem& a) const override { return host_->format(a); }
  std::string name() const override { return name_; }

 protected:
  std::vector<Elem> enumerate() const override;

 private:
  ModulePtr host_;
  Closure closure_;
  std::string name_;
};

// Capped constructor for A^n (the eager public operation).
std::shared_ptr<const PowerModule> power_module(ModulePtr A, std::size_t n);
// Uncapped lazy constructor; only enumeration is capped.
std::shared_ptr<const PowerModule> lazy_power(ModulePtr A, std::size_t n);

// a -> b = join of v with v*a <= b.
int module_residuate(const Module& M, const Elem& a, const Elem& b);

struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  std::function<Elem(const Elem&)> fn;
  Elem operator()(const Elem& x) const { return fn(x); }
};

// Tabulated hom, values aligned with source->carrier().elems.
struct ModuleHom {
  ModulePtr source;
  ModulePtr target;
  std::vector<Elem> values;
  Elem operator()(const Elem& x) const { return values[source->carrier().index_of(x)]; }
  ModuleMap as_map() const;
  bool operator==(const ModuleHom& o) const { return values == o.values; }
};

ModuleHom tabulate(const ModuleMap& f);
ModuleMap identity_map(ModulePtr M);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

void require_same_quantale(const Module& A, const Module& B);

// nullopt when f is a module hom, otherwise a witness.
std::optional<std::string> module_hom_violation(const ModuleMap& f);
bool is_module_hom(const ModuleMap& f);

// First point of disagreement over the source carrier, if any.
std::optional<std::string> maps_differ(const ModuleMap& f, const ModuleMap& g);

// Generic law check for any module (A1)-(A4) plus lattice sanity.
std::optional<std::string> module_law_violation(const Module& M);

std::vector<ModuleHom> enumerate_module_homs(ModulePtr A, ModulePtr L);

// Index-level copy of an enumerable module (labels are formatted elements).
TableModulePtr materialize(const Module& M, std::string name = "");

}  // namespace tensalg
