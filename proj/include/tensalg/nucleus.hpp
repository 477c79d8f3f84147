#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensalg/fsemilattice.hpp"

namespace tensalg {

// Endomap of an enumerable F-semilattice, stored as carrier indices.
struct EndoOperator {
  FslPtr host;
  std::vector<std::size_t> values;

  const Carrier& carrier() const { return host->module()->carrier(); }
  Elem operator()(const Elem& x) const { return carrier().elems[values[carrier().index_of(x)]]; }
  bool operator==(const EndoOperator& o) const { return values == o.values; }
};

struct Congruence {
  FslPtr host;
  std::vector<std::size_t> class_of;  // class id per carrier index
};

using PairSet = std::vector<std::pair<Elem, Elem>>;

EndoOperator make_operator(FslPtr H, const std::function<Elem(const Elem&)>& fn);
EndoOperator identity_operator(FslPtr H);
EndoOperator constant_top_operator(FslPtr H);

std::optional<std::string> prenucleus_violation(const EndoOperator& j);
std::optional<std::string> nucleus_violation(const EndoOperator& j);
bool is_prenucleus(const EndoOperator& j);
bool is_nucleus(const EndoOperator& j);

struct Quotient {
  FslPtr fsl;         // fixed points with j after every operation
  FslMap surjection;  // host -> quotient
};

Quotient quotient(const EndoOperator& j);

// Least superset of X closed under F x F and under (v*c, v*d).
PairSet saturate_pairs(const FSemilattice& H, PairSet X);
// j[X](a) = a v join{ c | d <= a, (c,d) or (d,c) in X }, X saturated first.
EndoOperator prenucleus_from_pairs(FslPtr H, const PairSet& X);

EndoOperator closure_by_iteration(const EndoOperator& j);
EndoOperator closure_by_meets(const EndoOperator& j);
// Both routes; throws if they disagree.
EndoOperator closure_of(const EndoOperator& j);

struct Factorization {
  EndoOperator nucleus;
  Quotient quotient;
  FslMap gbar;  // quotient -> target of g
};

Factorization factor_through(const FslMap& g, const PairSet& X);

std::optional<std::string> congruence_violation(const Congruence& c);
Congruence congruence_from_nucleus(const EndoOperator& j);
EndoOperator nucleus_from_congruence(const Congruence& c);

}  // namespace tensalg
