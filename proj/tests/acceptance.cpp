// Acceptance checks. One PASS/FAIL line per criterion; the exit status is
// the number of failures. Pass --skip-slow to leave out genus 5.
#include "oracle.hpp"

#include "jloci/modular.hpp"
#include "jloci/reports.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>

using namespace jloci;

namespace {

class Criterion {
public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::string& what)
  {
    if (!ok) {
      pass_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return pass_; }

  void print(double seconds) const
  {
    std::cout << (pass_ ? "PASS" : "FAIL") << "  " << name_ << "  (" << seconds << " s)\n";
    for (const auto& f : failures_)
      std::cout << "      failed: " << f << "\n";
    for (const auto& n : notes_)
      std::cout << "      " << n << "\n";
  }

private:
  std::string name_;
  bool pass_ = true;
  std::vector<std::string> failures_, notes_;
};

int failures = 0;

void run(const std::string& name, double limit_seconds, const std::function<void(Criterion&)>& body)
{
  Criterion c(name);
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0)
    c.check(seconds < limit_seconds, "runtime under " + std::to_string(limit_seconds) + " s");
  c.print(seconds);
  if (!c.passed())
    ++failures;
}

std::string str(std::size_t x) { return std::to_string(x); }

void trivial_verdict(Criterion& c, int g)
{
  auto r = cmd_verify_resonance(g, 1, 50);
  const Json& ev = r.report["evidence"];
  c.check(r.report["verdict"] == "TRIVIAL", "verdict TRIVIAL, got " + r.report["verdict"].dump());
  c.check(r.exit_code == exit_ok, "exit code 0");
  c.check(ev["maximal_vectors_dim"] == 1, "maximal vectors of V form a line");
  c.check(ev["maximal_vectors_spanned_by_v0"] == true, "that line is spanned by v0");
  c.check(ev["weights"]["v0"] == Weight::fundamental(g, 3).to_string(), "v0 has weight lambda_3");
  c.check(ev["dim_ker_projected_mu_v0"] == 1, "dim ker(pi_W o mu_v0) = 1");
  c.check(ev["samples"] == 50 && ev["sample_members"] == 0, "all 50 random points fail depth-1 membership");
  c.check(ev["v0_membership"]["member"] == false, "v0 is not resonant");
  c.note("dim V = " + ev["dim_V"].dump() + ", dim W = " + ev["dim_W"].dump() +
         ", dim ker(pi_W o mu_v0) = " + ev["dim_ker_projected_mu_v0"].dump());
}

} // namespace

int main(int argc, char** argv)
{
  bool skip_slow = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--skip-slow") == 0)
      skip_slow = true;
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);

  run("1  genus 3: resonance is all of H^1", 60, [](Criterion& c) {
    auto r = cmd_verify_resonance(3, 1, 50);
    const Json& ev = r.report["evidence"];
    c.check(r.report["verdict"] == "FULL", "verdict FULL");
    c.check(r.exit_code == exit_ok, "exit code 0");
    c.check(ev["dim_V"] == 14, "dim V = 14");
    c.check(ev["dim_wedge2_V"] == 91, "dim of second exterior power = 91");
    c.check(ev["dim_W"] == 91, "dim W = 91");
    c.check(Rational(ev["dim_top_component"].get<std::size_t>()) == oracle::weyl_dimension({2, 2, 0}),
            "top component has the Weyl dimension of 2 lambda_2");
    c.note("dim V = 14, dim W = " + ev["dim_W"].dump() + ", sampled members " + ev["sample_members"].dump());
  });

  run("2  genus 4: resonance is {0}, with certificate", 15 * 60, [](Criterion& c) { trivial_verdict(c, 4); });

  if (skip_slow)
    std::cout << "SKIP  3  genus 5: resonance is {0} (slow tier skipped)\n";
  else
    run("3  genus 5: resonance is {0}", 4 * 3600, [](Criterion& c) { trivial_verdict(c, 5); });

  run("4  v0 ^ u0 and T1 e", 0, [](Criterion& c) {
    for (int g = 3; g <= 5; ++g) {
      auto l = nonvanishing_checks(g);
      c.check(l.v0_wedge_u0_zero == (g == 3), "v0 ^ u0 " + std::string(g == 3 ? "= 0" : "!= 0") + " for g=" +
                                                  std::to_string(g));
      c.check(l.t1e_nonzero, "T1 e != 0 for g=" + std::to_string(g));
      c.check(l.t1e_matches_expected, "T1 e = (a1^a2^a3)^(a1^b2^b3) for g=" + std::to_string(g));
    }
    c.note("T1 = X(2t1), sign +1");
  });

  run("5  structural identities", 0, [](Criterion& c) {
    std::mt19937_64 rng(5);
    for (int g : {3, 4}) {
      const std::string G = " (g=" + std::to_string(g) + ")";
      SymplecticSpace h(g);
      auto ops = sp_generators(g);
      auto cartan = cartan_part(ops);
      bool brackets = true, form = true, omega = true;
      for (const auto& op : ops) {
        form = form && h.is_infinitesimally_symplectic(op.matrix);
        omega = omega && act(op, h.omega()).is_zero();
        for (std::size_t k = 0; k < cartan.size(); ++k) {
          Rational alpha = op.root ? Rational(op.root->coeffs[k]) : Rational(0);
          brackets = brackets && commutator(cartan[k].matrix, op.matrix) == alpha * op.matrix;
        }
      }
      c.check(brackets, "[h, X] = alpha(h) X for all generators" + G);
      c.check(form, "infinitesimal form invariance" + G);
      c.check(omega, "X . omega = 0" + G);

      bool leibniz = true;
      for (int t = 0; t < 100; ++t) {
        std::size_t p = 1 + rng() % 3, q = 1 + rng() % 3;
        auto u = oracle::to_multivector(h.dim(), p, oracle::random_poly(h.dim(), p, rng));
        auto v = oracle::to_multivector(h.dim(), q, oracle::random_poly(h.dim(), q, rng));
        const auto& x = ops[rng() % ops.size()];
        leibniz = leibniz && act(x, wedge(u, v)) == wedge(act(x, u), v) + wedge(u, act(x, v));
        leibniz = leibniz && oracle::from_multivector(wedge(u, v)) ==
                                 oracle::wedge(oracle::from_multivector(u), oracle::from_multivector(v));
      }
      c.check(leibniz, "Leibniz rule on 100 random wedges" + G);

      bool scalar = true;
      for (std::size_t x = 0; x < h.dim(); ++x)
        scalar = scalar && contraction(h, wedge_omega(h, SparseVector::unit(x))) == SparseVector::unit(x, g - 1);
      c.check(scalar, "C(x ^ omega) = (g-1) x" + G);

      bool equivariant = true;
      auto us = unipotents(g);
      for (int t = 0; t < 100; ++t) {
        auto w = oracle::to_multivector(h.dim(), 3, oracle::random_poly(h.dim(), 3, rng));
        for (const auto& m : us)
          equivariant = equivariant && contraction(h, act(m, w)) == m.matrix.apply(contraction(h, w));
      }
      c.check(equivariant, "C equivariant under all unipotents on 100 random trivectors" + G);

      // v0 ^ V_mu lies in the weight space lambda_3 + mu, for every weight mu of V
      auto rep = TorelliRep::build(g);
      auto dv = distinguished_vectors(rep);
      auto cartan_v = cartan_part(rep.generators());
      auto cartan_m = matrices(cartan_v);
      std::set<Weight> weights(rep.basis_weights().begin(), rep.basis_weights().end());
      std::size_t total = 0;
      bool shift = true;
      for (const auto& mu : weights) {
        auto space = weight_space(cartan_m, mu);
        total += space.dim();
        for (const auto& v : space.basis()) {
          auto image = wedge(dv.v0, Multivector::vector(rep.dim(), v));
          shift = shift && (image.is_zero() || weight_of(cartan_v, image) == dv.v0_weight + mu);
        }
      }
      c.check(total == rep.dim(), "weight spaces of V add up to V" + G);
      c.check(shift, "v0 ^ V_mu lies in weight lambda_3 + mu for every weight space" + G);
    }
  });

  run("6  determinantal loci equal resonance away from 0", 0, [](Criterion& c) {
    auto r = cmd_crosscheck(20, 1, 20, 3);
    const Json& ev = r.report["evidence"];
    c.check(ev["cases"] == 1200, "1200 cases, got " + ev["cases"].dump());
    c.check(ev["discrepancies"].empty(), "no discrepancy, got " + str(ev["discrepancies"].size()));
    c.check(r.exit_code == exit_ok, "exit code 0");
    c.note("cases where both sides report membership: " + ev["positive_cases"].dump());
  });

  run("7  Chen ranks of free groups", 0, [](Criterion& c) {
    auto f2 = graded_dims(free_group_data(2), 5);
    auto f3 = graded_dims(free_group_data(3), 3);
    c.check(f2.dims == std::vector<std::size_t>{1, 2, 3, 4, 5, 6}, "F2 profile [1,2,3,4,5,6]");
    c.check(f3.dims == std::vector<std::size_t>{3, 8, 15, 24}, "F3 profile [3,8,15,24]");
    bool formula = true;
    for (std::size_t q = 0; q < f2.dims.size(); ++q)
      formula = formula && f2.dims[q] == oracle::chen_rank_free(2, q + 2);
    for (std::size_t q = 0; q < f3.dims.size(); ++q)
      formula = formula && f3.dims[q] == oracle::chen_rank_free(3, q + 2);
    c.check(formula, "(k-1) C(n+k-2, k) at k = q+2");
  });

  run("8  known resonance landscape", 0, [](Criterion& c) {
    std::mt19937_64 rng(8);
    auto surface = surface_data(2);
    auto heis = heisenberg_data();
    bool all_surface = true, all_heis = true;
    for (int t = 0; t < 20; ++t) {
      auto a = random_point(4, rng);
      all_surface = all_surface && resonance_membership(surface, a, 1).member;
      auto b = random_point(2, rng);
      all_heis = all_heis && resonance_membership(heis, b, 1).member;
    }
    c.check(all_surface, "genus-2 surface: 20 random nonzero points lie in R^1_1");
    c.check(all_heis, "Heisenberg: 20 random nonzero points lie in R^1_1");

    auto prod = free_product_data();
    Point x1{1, 0, 0, 0}, x1y1{1, 0, 1, 0};
    auto m2 = resonance_membership(prod, x1, 2);
    c.check(m2.member, "F2xF2: x1* in R^1_2 (h1 at x1* is " + str(m2.h1_dim) + ", brute force gives " +
                           str(oracle::resonance_h1(prod, x1)) + ")");
    c.check(!resonance_membership(prod, x1y1, 1).member, "F2xF2: x1*+y1* not in R^1_1");
  });

  run("9  finiteness of the infinitesimal Alexander invariant", 0, [](Criterion& c) {
    constexpr std::size_t frozen_vanishing_degree = 1;
    auto f = finiteness_detect(indecomposable_form_data(), 6);
    c.check(f.finite && *f.finite, "indecomposable two-form data is finite");
    c.check(f.vanishing_degree == frozen_vanishing_degree, "vanishes at q = 1");
    auto p = graded_dims(free_group_data(2), 10);
    c.check(!p.finite() && p.dims.size() == 11, "F2 profile has no zero up to q = 10");
    auto u = finiteness_detect(free_group_data(2), 10);
    c.check(!u.finite, "F2 finiteness is unknown, never infinite");
  });

  run("10 torus dynamics", 0, [](Criterion& c) {
    auto ia = induced_action(3);
    const auto& a = ia.action;
    bool shape = a.rank == 14 && a.matrices.size() == 18, integral = true, unimodular = true;
    for (const auto& m : a.matrices) {
      shape = shape && m.rows() == 14 && m.cols() == 14;
      integral = integral && m.is_integral();
      unimodular = unimodular && abs(integer_determinant(m)) == 1 &&
                   abs(oracle::dense_det(oracle::to_dense(m))) == 1;
    }
    c.check(shape, "14x14 matrices, one per root");
    c.check(integral, "integral");
    c.check(unimodular, "determinant +-1");
    c.check(commuting_diagram_holds(ia), "commuting diagram");

    auto i3 = irreducibility_witness(a, 3, 1);
    c.check(i3.irreducible.has_value(), "g=3 irreducible");
    auto i4 = irreducibility_witness(induced_action(4).action, 3, 1);
    c.check(i4.irreducible.has_value(), "g=4 irreducible");

    auto o = cmd_orbit(3, 2, 7, 20000);
    c.check(o.report["verdict"] == "FINITE_CLOSED", "seeded 2-torsion orbit finite and closed");
    c.check(o.report["evidence"]["closure_verified"] == true, "orbit passes invariant_set_check");
    c.note("orbit size " + o.report["evidence"]["orbit_size"].dump());

    auto full2 = full_torsion_subgroup(a.rank, 2);
    c.check(invariant_set_check(a, full2), "full 2-torsion invariant (enumerated)");
    for (std::int64_t m : {2, 3}) {
      c.check(full_torsion_invariant(a, m), "full " + std::to_string(m) + "-torsion invariant (criterion)");
      c.check(oracle::transports_permute_torsion(a, m),
              "every generator permutes all " + std::to_string(m) + "^14 points");
    }
  });

  run("11 reports reproduce from their seed", 0, [](Criterion& c) {
    std::vector<CommandResult> originals{cmd_verify_resonance(3, 4, 20),
                                         cmd_alexander(preset_data("surface2"), Json{{"preset", "surface2"}}, 3),
                                         cmd_orbit(3, 2, 5),
                                         cmd_invariance(3, "orbit-3", 6),
                                         cmd_crosscheck(5, 7),
                                         cmd_nonvanishing(3),
                                         cmd_irreducibility(3, 2, 8)};
    for (auto& o : originals) {
      finish_report(o.report, 0.25);
      const Json& p = o.report["parameters"];
      const std::string cmd = o.report["command"];
      std::uint64_t seed = o.report["seed"].is_null() ? 0 : o.report["seed"].get<std::uint64_t>();
      CommandResult again;
      if (cmd == "verify-resonance")
        again = cmd_verify_resonance(p["genus"], seed, p["samples"], p["max_genus"]);
      else if (cmd == "alexander")
        again = cmd_alexander(preset_data(p["source"]["preset"].get<std::string>()), p["source"], p["qmax"],
                              p["max_nnz"]);
      else if (cmd == "orbit")
        again = cmd_orbit(p["genus"], p["torsion"], seed, p["cap"]);
      else if (cmd == "invariance")
        again = cmd_invariance(p["genus"], p["set"].get<std::string>(), seed);
      else if (cmd == "crosscheck")
        again = cmd_crosscheck(p["random"], seed, p["points"], p["kmax"]);
      else if (cmd == "nonvanishing")
        again = cmd_nonvanishing(p["genus"]);
      else
        again = cmd_irreducibility(p["genus"], p["trials"], seed);
      finish_report(again.report, 9.75);
      c.check(reproducible_dump(o.report) == reproducible_dump(again.report), cmd + " regenerates identically");
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed") << "\n";
  return failures;
}
