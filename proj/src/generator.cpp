#include "tensalg/generator.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "tensalg/error.hpp"

namespace tensalg {

namespace {

QuantalePtr chain_quantale(const std::string& name, std::vector<std::string> labels, int unit,
                           const std::function<int(int, int)>& mul) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      leq[a][b] = a <= b;
      t[a][b] = mul(a, b);
    }
  return validate_quantale(validate_lattice(std::move(labels), leq), t, unit, name);
}

std::vector<std::string> numbered(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

QuantalePtr two_quantale() {
  return chain_quantale("2", {"0", "1"}, 1, [](int a, int b) { return std::min(a, b); });
}

QuantalePtr min_chain(int n) {
  return chain_quantale("min" + std::to_string(n), numbered(n), n - 1, [](int a, int b) { return std::min(a, b); });
}

QuantalePtr lukasiewicz_chain(int n) {
  return chain_quantale("luk" + std::to_string(n), numbered(n), n - 1,
                        [n](int a, int b) { return std::max(0, a + b - (n - 1)); });
}

QuantalePtr three_chain() {
  return chain_quantale("chain3", {"0", "b", "1"}, 1, [](int a, int b) {
    if (a == 0 || b == 0) return 0;
    return (a == 2 || b == 2) ? 2 : 1;
  });
}

QuantalePtr two_by_two() {
  std::vector<std::string> labels{"00", "01", "10", "11"};
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      leq[a][b] = (a & b) == a;
      t[a][b] = a & b;
    }
  return validate_quantale(validate_lattice(labels, leq), t, 3, "2x2");
}

std::vector<QuantalePtr> curated_quantales() {
  return {two_quantale(), min_chain(3), min_chain(4), lukasiewicz_chain(3), lukasiewicz_chain(4), three_chain(),
          two_by_two()};
}

TableModulePtr self_module(QuantalePtr V) {
  const int n = static_cast<int>(V->size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<int>> act(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      leq[a][b] = V->leq(a, b);
      act[a][b] = V->mul(a, b);
    }
  auto lat = validate_lattice(V->lattice().labels(), leq);
  return validate_module(V, std::move(lat), act, V->name());
}

namespace {

TableModulePtr submodule(QuantalePtr V, const PowerModule& P, const std::vector<Elem>& elems, const std::string& name) {
  const int n = static_cast<int>(elems.size());
  auto pos = [&](const Elem& x) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  };
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back(P.format(elems[a]));
    for (int b = 0; b < n; ++b) leq[a][b] = P.leq(elems[a], elems[b]);
  }
  std::vector<std::vector<int>> act(V->size(), std::vector<int>(n));
  for (int v = 0; v < static_cast<int>(V->size()); ++v)
    for (int a = 0; a < n; ++a) act[v][a] = pos(P.act(v, elems[a]));
  return validate_module(V, validate_lattice(labels, leq), act, name);
}

std::vector<Elem> closure(const PowerModule& P, std::vector<Elem> gens) {
  std::set<Elem> s{P.bottom()};
  std::vector<Elem> work{P.bottom()};
  for (auto& g : gens)
    if (s.insert(g).second) work.push_back(g);
  const int nv = static_cast<int>(P.quantale().size());
  for (std::size_t k = 0; k < work.size(); ++k) {
    std::vector<Elem> next;
    for (const auto& y : s) next.push_back(P.join(work[k], y));
    for (int v = 0; v < nv; ++v) next.push_back(P.act(v, work[k]));
    for (auto& y : next)
      if (s.insert(y).second) work.push_back(y);
    if (s.size() > 16) break;
  }
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<TableModulePtr> curated_modules(QuantalePtr V, std::size_t max_size) {
  std::vector<TableModulePtr> out;
  auto self = self_module(V);
  if (V->size() <= max_size) out.push_back(self);
  auto P = lazy_power(self, 2);
  const auto& all = P->carrier().elems;
  std::set<std::vector<Elem>> seen;
  std::vector<std::vector<Elem>> found;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) {
      auto c = closure(*P, {all[a], all[b]});
      if (c.size() >= 2 && c.size() <= max_size && seen.insert(c).second) found.push_back(c);
    }
  int k = 0;
  for (const auto& c : found) {
    out.push_back(submodule(V, *P, c, V->name() + ".sub" + std::to_string(k++)));
  }
  return out;
}

std::string Instance::describe() const {
  return "#" + std::to_string(index) + " seed=" + std::to_string(seed) + " V=" + V->name() +
         " |A|=" + std::to_string(H1->module()->carrier().size()) +
         " |L|=" + std::to_string(L1->carrier().size()) + " |T|=" + std::to_string(J1->size());
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, GeneratorOptions opt) : seed_(seed), opt_(opt) {
  for (auto& q : curated_quantales()) {
    if (q->size() > opt_.max_quantale) continue;
    quantales_.push_back(q);
    modules_.push_back(curated_modules(q, opt_.max_module));
  }
}

FramePtr InstanceGenerator::random_frame(std::mt19937_64& rng, QuantalePtr V, std::size_t n, const std::string& name) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(V->size()) - 1);
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back("t" + std::to_string(i));
  std::vector<std::vector<int>> r(n, std::vector<int>(n));
  for (auto& row : r)
    for (auto& x : row) x = pick(rng);
  return validate_frame(V, pts, r, name);
}

FslPtr InstanceGenerator::random_fsl(std::mt19937_64& rng, TableModulePtr A, const std::string& name) {
  auto homs = enumerate_module_homs(A, A);
  std::uniform_int_distribution<std::size_t> pick(0, homs.size() - 1);
  const ModuleHom& h = homs[pick(rng)];
  std::vector<int> F;
  for (const auto& y : h.values) F.push_back(y[0]);
  return validate_fsemilattice(A, F, name);
}

namespace {

template <class T>
const T& choose(std::mt19937_64& rng, const std::vector<T>& xs) {
  std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
  return xs[pick(rng)];
}

// Prefer a non-zero map most of the time; the zero map is always available.
template <class T, class IsZero>
const T& choose_nonzero(std::mt19937_64& rng, const std::vector<T>& xs, IsZero is_zero) {
  std::vector<const T*> nz;
  for (const auto& x : xs)
    if (!is_zero(x)) nz.push_back(&x);
  std::bernoulli_distribution coin(0.85);
  if (!nz.empty() && coin(rng)) return *choose(rng, nz);
  return choose(rng, xs);
}

}  // namespace

Instance InstanceGenerator::draw(std::size_t index, std::size_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(attempt)};
  std::mt19937_64 rng(seq);
  Instance in;
  in.seed = seed_;
  in.index = index;
  std::uniform_int_distribution<std::size_t> qpick(0, quantales_.size() - 1);
  const std::size_t qi = qpick(rng);
  in.V = quantales_[qi];
  const auto& pool = modules_[qi];
  auto A1 = choose(rng, pool);
  auto A2 = choose(rng, pool);
  auto L1 = choose(rng, pool);
  auto L2 = choose(rng, pool);
  in.H1 = random_fsl(rng, A1, "H1");
  in.H2 = random_fsl(rng, A2, "H2");
  in.L1 = L1;
  in.L2 = L2;

  std::vector<FslMap> lax;
  for (const auto& h : enumerate_module_homs(A1, A2)) {
    FslMap m{in.H1, in.H2, h.as_map().fn};
    if (is_lax_morphism(m)) lax.push_back(m);
  }
  const Elem zero2 = A2->bottom();
  in.f = choose_nonzero(rng, lax, [&](const FslMap& m) {
    for (const auto& x : A1->carrier().elems)
      if (m(x) != zero2) return false;
    return true;
  });
  auto ghoms = enumerate_module_homs(L1, L2);
  const ModuleHom& g = choose_nonzero(rng, ghoms, [&](const ModuleHom& h) {
    for (const auto& y : h.values)
      if (y != L2->bottom()) return false;
    return true;
  });
  in.g = g.as_map();

  std::uniform_int_distribution<std::size_t> npick(1, opt_.max_points);
  const std::size_t n1 = npick(rng), n2 = npick(rng);
  in.J2 = random_frame(rng, in.V, n2, "J2");
  std::uniform_int_distribution<std::size_t> tpick(0, n2 - 1);
  std::vector<std::size_t> tmap(n1);
  for (auto& x : tmap) x = tpick(rng);
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < n1; ++i) pts.push_back("t" + std::to_string(i));
  std::vector<std::vector<int>> r(n1, std::vector<int>(n1));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      std::vector<int> below;
      for (int v = 0; v < static_cast<int>(in.V->size()); ++v)
        if (in.V->leq(v, in.J2->r(tmap[i], tmap[j]))) below.push_back(v);
      r[i][j] = choose(rng, below);
    }
  in.J1 = validate_frame(in.V, pts, r, "J1");
  in.t = FrameHom{in.J1, in.J2, tmap};
  return in;
}

std::vector<ModuleHom> brute_force_module_homs(ModulePtr A, ModulePtr L) {
  require_same_quantale(*A, *L);
  auto a = materialize(*A);
  auto l = materialize(*L);
  const int n1 = static_cast<int>(a->size());
  const int n2 = static_cast<int>(l->size());
  const int nv = static_cast<int>(A->quantale().size());
  std::vector<int> f(static_cast<std::size_t>(n1), 0);
  std::vector<ModuleHom> out;
  for (;;) {
    bool ok = f[a->lattice().bottom()] == l->lattice().bottom();
    for (int x = 0; x < n1 && ok; ++x)
      for (int y = 0; y < n1 && ok; ++y) ok = f[a->lattice().join(x, y)] == l->lattice().join(f[x], f[y]);
    for (int v = 0; v < nv && ok; ++v)
      for (int x = 0; x < n1 && ok; ++x) ok = f[a->act_index(v, x)] == l->act_index(v, f[x]);
    if (ok) {
      ModuleHom h{A, L, {}};
      for (int y : f) h.values.push_back(L->carrier().elems[static_cast<std::size_t>(y)]);
      out.push_back(std::move(h));
    }
    int i = n1 - 1;
    while (i >= 0 && ++f[i] == n2) f[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

namespace {

using InstanceCheck = std::function<CheckReport(const Instance&)>;

CheckReport run_suite(const SuiteOptions& opt, const InstanceCheck& body) {
  InstanceGenerator gen(opt.seed);
  std::vector<CheckReport> reports(opt.count);
  std::atomic<std::size_t> next{0};
  std::size_t nthreads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min(nthreads, std::max<std::size_t>(opt.count, 1));
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= opt.count) return;
      CheckReport& rep = reports[k];
      rep.seed = opt.seed;
      for (std::size_t attempt = 0;; ++attempt) {
        try {
          Instance in = gen.draw(k, attempt);
          CheckReport r = body(in);
          r.rejections = rep.rejections;
          r.seed = opt.seed;
          rep = std::move(r);
          break;
        } catch (const AlgebraError& e) {
          if (e.kind() != ErrorKind::SizeLimitExceeded || attempt + 1 >= opt.max_attempts) {
            rep.add("instance", "#" + std::to_string(k), std::string("error: ") + e.what());
            break;
          }
          ++rep.rejections;
        } catch (const std::exception& e) {
          rep.add("instance", "#" + std::to_string(k), std::string("exception: ") + e.what());
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  CheckReport all;
  all.seed = opt.seed;
  for (const auto& r : reports) all.merge(r);
  return all;
}

}  // namespace

CheckReport run_adjunction_suite(const SuiteOptions& opt) {
  return run_suite(opt, [&opt](const Instance& in) {
    const std::string tag = in.describe();
    ScopedMaterializedCap budget(opt.budget);
    CheckReport rep;
    rep.merge(check_triangles_adjunction1(in.J1, in.H1, in.L1, tag));
    rep.merge(check_triangles_adjunction2(in.J1, in.H1, in.L1, tag));
    rep.merge(check_triangles_adjunction3(in.J1, in.H1, in.L1, tag));
    rep.add("naturality.eta", tag, naturality_eta(in.J1, in.f));
    rep.add("naturality.eps", tag, naturality_eps(in.J1, in.g));
    rep.add("naturality.phi", tag, naturality_phi(in.H1, in.t));
    rep.add("naturality.psi", tag, naturality_psi(in.H1, in.g));
    rep.add("naturality.nu", tag, naturality_nu(in.L1, in.t));
    rep.add("naturality.mu", tag, naturality_mu(in.L1, in.f));
    rep.merge(validate_components(in.J1, in.H1, in.L1, tag));
    return rep;
  });
}

CheckReport run_triangle_suite(const SuiteOptions& opt) {
  return run_suite(opt, [&opt](const Instance& in) {
    const std::string tag = in.describe();
    ScopedMaterializedCap budget(opt.budget);
    CheckReport rep;
    rep.merge(check_triangles_adjunction1(in.J1, in.H1, in.L1, tag));
    rep.merge(check_triangles_adjunction2(in.J1, in.H1, in.L1, tag));
    rep.merge(check_triangles_adjunction3(in.J1, in.H1, in.L1, tag));
    return rep;
  });
}

namespace {

std::optional<std::string> same_homs(const std::vector<ModuleHom>& a, const std::vector<ModuleHom>& b) {
  if (a.size() != b.size())
    return "enumerated " + std::to_string(a.size()) + " homs, oracle found " + std::to_string(b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].values != b[i].values) return "hom #" + std::to_string(i) + " differs";
  return std::nullopt;
}

std::optional<std::string> literal_tensor_agrees(FramePtr J, FslPtr H) {
  auto T = tensor(J, H);
  auto lit = tensor_from_pairs(J, H);
  const auto& C = T->power()->carrier();
  for (std::size_t k = 0; k < C.size(); ++k) {
    Elem a = T->nucleus(C.elems[k]);
    Elem b = lit.nucleus(C.elems[k]);
    if (a != b) return "nucleus differs at " + T->power()->format(C.elems[k]);
  }
  if (T->module()->carrier().elems != lit.quotient.fsl->module()->carrier().elems) return "fixed-point sets differ";
  for (const auto& [c, d] : lit.pairs)
    if (T->nucleus(c) != T->nucleus(d)) return "generating pair not collapsed at " + T->power()->format(d);
  return std::nullopt;
}

}  // namespace

CheckReport run_laws_suite(const SuiteOptions& opt) {
  return run_suite(opt, [](const Instance& in) {
    const std::string tag = in.describe();
    CheckReport rep;
    const ModulePtr& A1 = in.H1->module();
    const ModulePtr& A2 = in.H2->module();
    rep.add("homs.oracle.A1->L1", tag, same_homs(enumerate_module_homs(A1, in.L1), brute_force_module_homs(A1, in.L1)));
    rep.add("homs.oracle.A1->A2", tag, same_homs(enumerate_module_homs(A1, A2), brute_force_module_homs(A1, A2)));
    rep.add("law.power_module", tag, module_law_violation(*power_module(A1, in.J1->size())));
    auto AJ1 = construct_FJ(A1, in.J1);
    rep.add("law.FJ", tag, fsemilattice_violation(*AJ1));
    rep.add("tensor.literal_route", tag, literal_tensor_agrees(in.J1, in.H1));
    rep.add("tensor.quotient_laws", tag, module_law_violation(*tensor(in.J1, in.H1)->module()));
    {
      auto T1 = tensor(in.J1, in.H1);
      auto T2 = tensor(in.J2, in.H1);
      rep.add("tensor.frame_square", tag, tensor_frame_square_violation(in.t, T1, T2));
      auto T3 = tensor(in.J1, in.H2);
      rep.add("tensor.lax_square", tag, tensor_lax_square_violation(in.f, T1, T3));
      rep.add("tensor.frame_hom_is_module_hom", tag, module_hom_violation(tensor_frame_hom(in.t, T1, T2)));
      rep.add("tensor.lax_hom_is_module_hom", tag, module_hom_violation(tensor_lax_hom(in.f, T1, T3)));
    }
    rep.add("FJ.lift_is_f_hom", tag, f_hom_violation(lift_hom_FJ(in.g, in.J1)));
    rep.add("FJ.restrict_is_lax", tag, lax_violation(restrict_along_frame_hom(in.t, A1)));
    {
      std::optional<std::string> bad;
      const auto& P = *lazy_power(A1, in.J1->size());
      for (const auto& x : A1->carrier().elems)
        for (std::size_t i = 0; i < in.J1->size() && !bad; ++i) {
          Elem acc = P.bottom();
          for (std::size_t k = 0; k < in.J1->size(); ++k)
            acc = P.join(acc, P.act(in.J1->r(i, k), delta_element(P, x, k)));
          if (acc != smear_element(P, *in.J1, x, i)) bad = "smear identity fails at " + A1->format(x);
        }
      rep.add("elements.smear_identity", tag, bad);
    }
    {
      auto HF1 = hom_frame(in.H1, in.L1);
      auto HF2 = hom_frame(in.H1, in.L2);
      rep.add("homframe.covariant", tag, frame_hom_violation(hom_frame_covariant(in.g, HF1, HF2)));
      auto HF3 = hom_frame(in.H2, in.L1);
      rep.add("homframe.contravariant", tag, frame_hom_violation(hom_frame_contravariant(in.f, HF3, HF1)));
    }
    return rep;
  });
}

CheckReport run_nuclei_suite(const SuiteOptions& opt) {
  return run_suite(opt, [seed = opt.seed](const Instance& in) {
    const std::string tag = in.describe();
    CheckReport rep;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(in.index), 99u};
    std::mt19937_64 rng(seq);
    std::vector<FslPtr> hosts{in.H1, construct_FJ(in.H1->module(), in.J1)};
    for (std::size_t h = 0; h < hosts.size(); ++h) {
      const FslPtr& H = hosts[h];
      const std::string where = tag + (h ? " host=A^J" : " host=H");
      const auto& C = H->module()->carrier().elems;
      std::uniform_int_distribution<std::size_t> pick(0, C.size() - 1);
      std::uniform_int_distribution<int> npairs(1, 2);
      PairSet X;
      for (int k = npairs(rng); k > 0; --k) X.emplace_back(C[pick(rng)], C[pick(rng)]);
      auto j = prenucleus_from_pairs(H, X);
      rep.add("nucleus.generated_is_prenucleus", where, prenucleus_violation(j));
      auto by_iter = closure_by_iteration(j);
      auto by_meet = closure_by_meets(j);
      std::optional<std::string> diff;
      for (std::size_t a = 0; a < C.size() && !diff; ++a)
        if (by_iter.values[a] != by_meet.values[a]) diff = "closures differ at " + H->module()->format(C[a]);
      rep.add("nucleus.dual_oracle", where, diff);
      rep.add("nucleus.closure_is_nucleus", where, nucleus_violation(by_iter));
      {
        std::optional<std::string> bad;
        for (std::size_t a = 0; a < C.size() && !bad; ++a)
          if ((j.values[a] == a) != (by_iter.values[a] == a)) bad = "fixed points differ at " + H->module()->format(C[a]);
        rep.add("nucleus.same_fixed_points", where, bad);
      }
      auto q = quotient(by_iter);
      rep.add("nucleus.quotient_module_laws", where, module_law_violation(*q.fsl->module()));
      rep.add("nucleus.quotient_F", where, fsemilattice_violation(*q.fsl));
      rep.add("nucleus.surjection_is_f_hom", where, f_hom_violation(q.surjection));
      auto back = nucleus_from_congruence(congruence_from_nucleus(by_iter));
      rep.add("nucleus.congruence_round_trip", where,
              back.values == by_iter.values ? std::nullopt : std::optional<std::string>("round trip changed j"));
      // A coarser quotient map respects X, so it factors through A_{n(j[X])}.
      PairSet Y = X;
      Y.emplace_back(C[pick(rng)], C[pick(rng)]);
      auto coarse = quotient(closure_of(prenucleus_from_pairs(H, Y)));
      auto fac = factor_through(coarse.surjection, X);
      rep.add("nucleus.factorization_lax", where, lax_violation(fac.gbar));
    }
    return rep;
  });
}

}  // namespace tensalg
