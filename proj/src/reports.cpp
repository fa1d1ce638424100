#include "jloci/reports.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

namespace jloci {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
  // nlohmann reports the 1-based byte at which parsing stopped
  std::size_t line = 1, column = 1;
  std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void semantic(const std::string& pointer, const std::string& what)
{
  throw InputError(pointer + ": " + what, 0, 0, pointer);
}

std::size_t natural(const Json& j, const std::string& pointer)
{
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    semantic(pointer, "expected a non-negative integer");
  return j.get<std::size_t>();
}

} // namespace

GroupAlgebraData parse_algebra_input(std::string_view text)
{
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw InputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column), line,
                     column);
  }
  if (!doc.is_object())
    semantic("", "expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "n" && key != "h2" && key != "del" && key != "label")
      semantic("/" + key, "unknown field");
  for (const char* key : {"n", "h2", "del"})
    if (!doc.contains(key))
      semantic(std::string("/") + key, "missing field");

  const std::size_t n = natural(doc["n"], "/n");
  if (n < 1)
    semantic("/n", "n must be at least 1");
  if (n > 64)
    semantic("/n", "n larger than 64 is not supported");
  const std::size_t h2 = natural(doc["h2"], "/h2");
  const std::size_t pairs = binomial(n, 2);

  const Json& del = doc["del"];
  if (!del.is_array())
    semantic("/del", "expected an array of [row, col, \"p/q\"] triplets");
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> triplets;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < del.size(); ++k) {
    const std::string at = "/del/" + std::to_string(k);
    const Json& t = del[k];
    if (!t.is_array() || t.size() != 3)
      semantic(at, "expected a [row, col, \"p/q\"] triplet");
    std::size_t row = natural(t[0], at + "/0");
    std::size_t col = natural(t[1], at + "/1");
    if (row >= pairs)
      semantic(at + "/0", "row out of range, need row < C(n,2) = " + std::to_string(pairs));
    if (col >= h2)
      semantic(at + "/1", "column out of range, need col < h2 = " + std::to_string(h2));
    if (!t[2].is_string())
      semantic(at + "/2", "entries are strings \"p/q\"");
    Rational value;
    try {
      value = parse_rational(t[2].get<std::string>());
    } catch (const std::invalid_argument&) {
      semantic(at + "/2", "not an exact rational: " + t[2].get<std::string>());
    }
    if (!seen.emplace(row, col).second)
      semantic(at, "duplicate entry");
    triplets.emplace_back(row, col, value);
  }

  std::string label = "input";
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      semantic("/label", "expected a string");
    label = doc["label"].get<std::string>();
  }
  return GroupAlgebraData(n, ExactMatrix::from_triplets(pairs, h2, std::move(triplets)), label);
}

GroupAlgebraData load_algebra_input(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_input(buf.str());
}

Json rational_json(const Rational& q) { return to_string(q); }

Json point_json(std::span<const Rational> z)
{
  Json a = Json::array();
  for (const auto& q : z)
    a.push_back(rational_json(q));
  return a;
}

Json algebra_to_json(const GroupAlgebraData& data)
{
  Json del = Json::array();
  for (std::size_t j = 0; j < data.del.cols(); ++j)
    for (const auto& [i, c] : data.del.column(j))
      del.push_back(Json::array({i, j, rational_json(c)}));
  // keep triplets in row-major order, independent of storage
  std::sort(del.begin(), del.end(), [](const Json& a, const Json& b) {
    return std::pair(a[0].get<std::size_t>(), a[1].get<std::size_t>()) <
           std::pair(b[0].get<std::size_t>(), b[1].get<std::size_t>());
  });
  return Json{{"n", data.n}, {"h2", data.h2}, {"del", del}, {"label", data.label}};
}

Json make_report(std::string command, Json parameters, std::string anchor)
{
  Json r;
  r["schema_version"] = report_schema_version;
  r["command"] = std::move(command);
  r["parameters"] = std::move(parameters);
  r["anchor"] = std::move(anchor);
  r["verdict"] = nullptr;
  r["evidence"] = Json::object();
  r["seed"] = nullptr;
  r["library_version"] = library_version;
  return r;
}

void finish_report(Json& report, double wall_seconds) { report["wall_time_seconds"] = wall_seconds; }

std::string reproducible_dump(const Json& report)
{
  Json copy = report;
  copy.erase("wall_time_seconds");
  return copy.dump(2);
}

void write_atomically(const std::filesystem::path& path, const std::string& contents)
{
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out)
      throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move report into place: " + ec.message());
  }
}

// Commands

namespace {

void check_genus(int genus, int lo, int hi)
{
  if (genus < lo || genus > hi)
    throw UsageError("genus must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                     std::to_string(genus));
}

Json membership_json(const Membership& m) { return Json{{"member", m.member}, {"h1_dim", m.h1_dim}}; }

std::int64_t parse_order(std::string_view s)
{
  std::int64_t m = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), m);
  if (ec != std::errc() || p != s.data() + s.size() || m < 1)
    throw UsageError("bad torsion order '" + std::string(s) + "'");
  return m;
}

Json torsion_json(const TorsionPoint& t)
{
  auto c = t.coordinates();
  return Json{{"order", t.order()}, {"coordinates", point_json(c)}};
}

} // namespace

CommandResult cmd_verify_resonance(int genus, std::uint64_t seed, std::size_t samples, int max_genus)
{
  check_genus(genus, 3, max_genus);
  if (samples < 1)
    throw UsageError("samples must be at least 1");
  auto rep = verify_torelli_resonance(genus, seed, samples);
  const Verdict expected = genus == 3 ? Verdict::Full : Verdict::Trivial;

  CommandResult out;
  out.report = make_report(
      "verify-resonance", Json{{"genus", genus}, {"samples", samples}, {"max_genus", max_genus}},
      genus == 3 ? "The degree-one resonance variety of the genus-3 Torelli Lie algebra is all of H^1"
                 : "The degree-one resonance variety of the Torelli Lie algebra is {0} in genus >= 4");
  out.report["verdict"] = to_string(rep.verdict);
  out.report["seed"] = seed;
  Json& ev = out.report["evidence"];
  ev["expected_verdict"] = to_string(expected);
  ev["dim_V"] = rep.dim_v;
  ev["dim_wedge2_V"] = rep.dim_wedge2;
  ev["dim_top_component"] = rep.dim_top;
  ev["dim_W"] = rep.dim_w;
  ev["rank_del"] = rep.rank_del;
  ev["weights"] = Json{{"v0", rep.v0_weight}, {"u0", rep.u0_weight}, {"invariant", rep.z0_weight}};
  ev["maximal_vectors_dim"] = rep.maximal_vectors_dim;
  ev["maximal_vectors_spanned_by_v0"] = rep.maximal_vectors_is_v0;
  ev["v0_membership"] = membership_json(rep.v0);
  ev["dim_ker_projected_mu_v0"] = rep.kernel_mu_v0;
  ev["samples"] = rep.samples;
  ev["sample_members"] = rep.sample_members;
  ev["sample_h1_dims"] = rep.sample_h1;
  ev["origin_membership"] = membership_json(rep.origin);
  out.exit_code = rep.verdict == expected ? exit_ok : exit_mismatch;
  return out;
}

GroupAlgebraData preset_data(std::string_view name)
{
  if (name == "free2")
    return free_group_data(2);
  if (name == "free3")
    return free_group_data(3);
  if (name == "free4")
    return free_group_data(4);
  if (name == "surface2")
    return surface_data(2);
  if (name == "surface3")
    return surface_data(3);
  if (name == "heisenberg")
    return heisenberg_data();
  if (name == "free-product")
    return free_product_data();
  if (name == "indecomposable-form")
    return indecomposable_form_data();
  throw UsageError("unknown preset '" + std::string(name) + "'");
}

CommandResult cmd_alexander(const GroupAlgebraData& data, Json source, std::size_t qmax, std::size_t max_nnz)
{
  auto profile = graded_dims(data, qmax, max_nnz);
  CommandResult out;
  out.report = make_report("alexander",
                           Json{{"source", std::move(source)}, {"qmax", qmax}, {"max_nnz", max_nnz}},
                           "b(G) is the cokernel of delta_3 + id (x) del over Sym(H_1); it is finite-dimensional "
                           "exactly when the degree-one resonance variety is contained in {0}");
  const bool finite = profile.finite();
  out.report["verdict"] = finite ? "FINITE" : "UNKNOWN";
  Json& ev = out.report["evidence"];
  ev["n"] = data.n;
  ev["h2"] = data.h2;
  ev["label"] = data.label;
  ev["rank_del"] = rank(data.del);
  ev["grading"] = "generators in degree 0; b_q corresponds to (H'/H'')_{q+2}";
  Json dims = Json::array();
  for (std::size_t q = 0; q < profile.dims.size(); ++q)
    dims.push_back(Json{{"q", q}, {"dim", profile.dims[q]}, {"inferred", static_cast<bool>(profile.inferred[q])}});
  ev["profile"] = dims;
  ev["finite"] = finite;
  if (finite) {
    auto it = std::find(profile.dims.begin(), profile.dims.end(), std::size_t{0});
    ev["vanishing_degree"] = static_cast<std::size_t>(it - profile.dims.begin());
  } else {
    ev["vanishing_degree"] = nullptr;
  }
  ev["truncated"] = profile.truncated;
  ev["truncated_at"] = profile.truncated_at ? Json(*profile.truncated_at) : Json(nullptr);
  out.exit_code = profile.truncated ? exit_guard : exit_ok;
  return out;
}

CommandResult cmd_orbit(int genus, std::int64_t torsion, std::uint64_t seed, std::size_t cap)
{
  check_genus(genus, 3, default_max_genus);
  if (torsion < 1)
    throw UsageError("torsion order must be positive");
  if (cap < 1)
    throw UsageError("cap must be positive");
  auto ia = induced_action(genus);
  std::mt19937_64 rng(seed);
  auto t = random_torsion_point(ia.action.rank, torsion, rng);
  auto orb = orbit(ia.action, t, cap);
  bool orders = std::all_of(orb.points.begin(), orb.points.end(),
                            [&](const TorsionPoint& p) { return torsion % p.order() == 0; });
  bool closed = !orb.truncated && invariant_set_check(ia.action, orb.points);

  CommandResult out;
  out.report = make_report("orbit", Json{{"genus", genus}, {"torsion", torsion}, {"cap", cap}},
                           "The orbit of a torsion character under the arithmetic group action is finite and "
                           "generates a finitely generated subgroup");
  out.report["verdict"] = orb.truncated ? "TRUNCATED" : closed && orders ? "FINITE_CLOSED" : "NOT_CLOSED";
  out.report["seed"] = seed;
  Json& ev = out.report["evidence"];
  ev["lattice_rank"] = ia.action.rank;
  ev["generators"] = ia.action.matrices.size();
  ev["start"] = torsion_json(t);
  ev["orbit_size"] = orb.points.size();
  ev["truncated"] = orb.truncated;
  ev["closure_verified"] = closed;
  ev["orders_divide_start_order"] = orders;
  if (orb.truncated)
    out.exit_code = exit_guard;
  else if (!closed || !orders)
    out.exit_code = exit_mismatch;
  return out;
}

CommandResult cmd_invariance(int genus, std::string_view set, std::uint64_t seed)
{
  check_genus(genus, 3, default_max_genus);
  auto ia = induced_action(genus);
  const std::size_t r = ia.action.rank;
  std::mt19937_64 rng(seed);

  std::string name(set);
  if (name == "full-2-torsion-sample")
    name = "full-2-torsion";

  CommandResult out;
  out.report = make_report("invariance", Json{{"genus", genus}, {"set", std::string(set)}},
                           "Finite sets of torsion characters permuted by every generator are invariant under the "
                           "arithmetic group action");
  out.report["seed"] = seed;
  Json& ev = out.report["evidence"];
  ev["lattice_rank"] = r;

  bool expect_invariant = true;
  bool invariant = false;
  std::string method = "enumeration";
  std::size_t size = 0;
  bool truncated = false;

  auto suffix = [&](std::string_view prefix, std::string_view post = {}) -> std::optional<std::int64_t> {
    if (name.size() <= prefix.size() + post.size() || name.compare(0, prefix.size(), prefix) != 0 ||
        name.compare(name.size() - post.size(), post.size(), post) != 0)
      return std::nullopt;
    return parse_order(std::string_view(name).substr(prefix.size(), name.size() - prefix.size() - post.size()));
  };

  if (name == "zero") {
    std::vector<TorsionPoint> s{TorsionPoint::zero(r)};
    size = 1;
    invariant = invariant_set_check(ia.action, s);
  } else if (auto m = suffix("full-", "-torsion")) {
    bool structural = full_torsion_invariant(ia.action, *m);
    ev["structural_check"] = structural;
    ev["torsion"] = *m;
    try {
      auto s = full_torsion_subgroup(r, *m);
      size = s.size();
      invariant = invariant_set_check(ia.action, s) && structural;
    } catch (const std::length_error&) {
      // too many points; the structural criterion decides on its own
      method = "structural";
      invariant = structural;
    }
  } else if (auto m = suffix("orbit-")) {
    auto t = random_torsion_point(r, *m, rng);
    auto orb = orbit(ia.action, t, default_orbit_cap);
    ev["start"] = torsion_json(t);
    size = orb.points.size();
    truncated = orb.truncated;
    invariant = !truncated && invariant_set_check(ia.action, orb.points);
  } else if (auto m = suffix("point-")) {
    auto t = random_torsion_point(r, *m, rng);
    std::vector<TorsionPoint> s{t};
    ev["start"] = torsion_json(t);
    size = 1;
    expect_invariant = false; // a generic point is usually moved; no expectation
    invariant = invariant_set_check(ia.action, s);
  } else {
    throw UsageError("unknown set '" + std::string(set) +
                     "'; use zero, full-M-torsion, full-2-torsion-sample, orbit-M or point-M");
  }

  ev["method"] = method;
  ev["set_size"] = size;
  ev["truncated"] = truncated;
  ev["invariant"] = invariant;
  out.report["verdict"] = truncated ? "TRUNCATED" : invariant ? "INVARIANT" : "NOT_INVARIANT";
  if (truncated)
    out.exit_code = exit_guard;
  else if (expect_invariant && !invariant)
    out.exit_code = exit_mismatch;
  return out;
}

CommandResult cmd_crosscheck(std::size_t datasets, std::uint64_t seed, std::size_t points, std::size_t kmax)
{
  if (datasets < 1 || points < 1 || kmax < 1)
    throw UsageError("random, points and kmax must be positive");
  std::mt19937_64 rng(seed);
  std::size_t cases = 0, positives = 0;
  Json disc = Json::array();
  Json sets = Json::array();
  for (std::size_t d = 0; d < datasets; ++d) {
    auto data = random_algebra_data(rng);
    std::vector<Point> samples;
    for (std::size_t s = 0; s < points; ++s)
      samples.push_back(random_sparse_point(data.n, rng));
    auto rep = infares_crosscheck(data, samples, kmax);
    cases += rep.cases;
    positives += rep.positives;
    sets.push_back(Json{{"n", data.n}, {"h2", data.h2}, {"rank_del", rank(data.del)}, {"positives", rep.positives}});
    for (const auto& x : rep.discrepancies)
      disc.push_back(Json{{"dataset", d},
                          {"data", algebra_to_json(data)},
                          {"point", point_json(samples[x.sample])},
                          {"depth", x.depth},
                          {"wk", x.wk},
                          {"resonance", x.resonance}});
  }
  CommandResult out;
  out.report =
      make_report("crosscheck", Json{{"random", datasets}, {"points", points}, {"kmax", kmax}},
                  "Away from the origin, the determinantal loci of the infinitesimal Alexander invariant coincide "
                  "with the resonance varieties");
  out.report["verdict"] = disc.empty() ? "AGREE" : "DISCREPANCY";
  out.report["seed"] = seed;
  Json& ev = out.report["evidence"];
  ev["cases"] = cases;
  ev["positive_cases"] = positives;
  ev["datasets"] = sets;
  ev["discrepancies"] = disc;
  out.exit_code = disc.empty() ? exit_ok : exit_mismatch;
  return out;
}

CommandResult cmd_nonvanishing(int genus)
{
  check_genus(genus, 3, default_max_genus);
  auto rep = nonvanishing_checks(genus);
  bool expected_zero = genus == 3;
  bool ok = rep.v0_wedge_u0_zero == expected_zero && rep.t1e_nonzero && rep.t1e_matches_expected;
  CommandResult out;
  out.report = make_report("nonvanishing", Json{{"genus", genus}},
                           "v0 ^ u0 vanishes exactly in genus 3, and the raising operator T1 moves the invariant "
                           "pairing element e to (a1^a2^a3)^(a1^b2^b3)");
  out.report["verdict"] = ok ? "CONFIRMED" : "MISMATCH";
  Json& ev = out.report["evidence"];
  ev["v0_wedge_u0_zero"] = rep.v0_wedge_u0_zero;
  ev["v0_wedge_u0_terms"] = rep.v0_wedge_u0_terms;
  ev["t1e_nonzero"] = rep.t1e_nonzero;
  ev["t1e_matches_expected"] = rep.t1e_matches_expected;
  ev["e_invariant"] = rep.e_invariant;
  out.exit_code = ok ? exit_ok : exit_mismatch;
  return out;
}

CommandResult cmd_irreducibility(int genus, std::size_t trials, std::uint64_t seed)
{
  check_genus(genus, 3, default_max_genus);
  if (trials < 1)
    throw UsageError("trials must be at least 1");
  auto ia = induced_action(genus);
  auto res = irreducibility_witness(ia.action, trials, seed);
  CommandResult out;
  out.report = make_report("irreducibility", Json{{"genus", genus}, {"trials", trials}},
                           "The rationalized lattice L (x) Q is an irreducible module, so no proper rational "
                           "subspace is invariant");
  out.report["verdict"] = res.irreducible ? "IRREDUCIBLE" : "INCONCLUSIVE";
  out.report["seed"] = seed;
  Json& ev = out.report["evidence"];
  ev["lattice_rank"] = res.rank;
  ev["trials_used"] = res.trials_used;
  ev["vector_spin_dim"] = res.vector_spin_dim;
  ev["covector_spin_dim"] = res.covector_spin_dim;
  ev["unipotent_fixed_dim"] = res.fixed_dim ? Json(*res.fixed_dim) : Json(nullptr);
  ev["fixed_spin_dim"] = res.fixed_spin_dim ? Json(*res.fixed_spin_dim) : Json(nullptr);
  ev["unipotent_flag_ok"] = res.unipotent_flag_ok;
  return out;
}

} // namespace jloci
