#include "cliff/report.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "cliff/fixture.hpp"
#include "cliff/moduli.hpp"
#include "cliff/polyalg.hpp"

namespace cliff::report {

using poly::Var;

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

Check& Report::run(const std::string& name, const std::function<Status(Json&)>& body) {
  Check c;
  c.name = name;
  c.witness = Json::object();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.status = body(c.witness);
  } catch (const std::exception& e) {
    c.status = Status::fail;
    c.witness["error"] = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  checks.push_back(std::move(c));
  return checks.back();
}

Check& Report::skip(const std::string& name, const std::string& reason) {
  Check c;
  c.name = name;
  c.status = Status::skipped;
  c.witness = Json{{"reason", reason}};
  checks.push_back(std::move(c));
  return checks.back();
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["inputs"] = inputs;
  j["checks"] = Json::array();
  for (const auto& c : checks)
    j["checks"].push_back(Json{{"name", c.name}, {"status", report::to_string(c.status)}, {"witness", c.witness}});
  j["data"] = data;
  j["ok"] = ok();
  if (with_timing) {
    Json t = Json::object();
    for (const auto& c : checks) t[c.name] = c.seconds;
    j["timing"] = t;
  }
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << command << ":\n";
  for (const auto& c : checks) {
    os << "  " << (c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP") << "  " << c.name;
    if (c.status != Status::skipped) os << " (" << c.seconds << " s)";
    if (c.witness.is_object()) {
      if (c.witness.contains("error")) os << " : " << c.witness["error"].get<std::string>();
      if (c.witness.contains("reason")) os << " : " << c.witness["reason"].get<std::string>();
    }
    os << "\n";
  }
  os << (ok() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json to_json(const Rational& r) { return r.get_str(); }

namespace {

Json vec_json(const lattice::IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json vecs_json(const std::vector<lattice::IntVector>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(vec_json(v));
  return j;
}

Json mat_json(const lattice::IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vec_json(m.row(i)));
  return j;
}

Json poly_mat_json(const polyalg::Matrix<MultiPoly>& m) {
  Json j = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    j.push_back(r);
  }
  return j;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json integers_json(const std::vector<Integer>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Status verdict(bool ok) { return ok ? Status::pass : Status::fail; }

Json component_json(const moduli::ComponentReport& r) {
  Json j;
  j["tau"] = r.tau;
  j["discriminant"] = to_json(r.discriminant);
  j["positive_definite"] = r.positive_definite;
  j["short_root_witnesses"] = vecs_json(r.short_root_witnesses);
  j["long_root_witnesses"] = vecs_json(r.long_root_witnesses);
  j["evenness_checks"] = {r.primitive_part_even, r.alternate_form_even};
  if (r.positive_definite) {
    j["disc_group"] = {{"invariants", r.disc_group.invariants()},
                       {"primary", r.disc_group.primary_decomposition()},
                       {"order", r.disc_group.order()}};
    j["signature_mod8"] = r.signature_mod8;
    j["alternate_lattice_group"] = r.alternate_lattice_group;
    j["overlattice_status"] = moduli::to_string(r.overlattice_status);
    Json over = Json::array();
    for (const auto& o : r.overlattices)
      over.push_back({{"index", o.index}, {"gram", mat_json(o.gram)}, {"long_roots", vecs_json(o.long_roots)}});
    j["overlattices"] = over;
  }
  j["admissible"] = r.admissible;
  return j;
}

}  // namespace

Report cmd_classify() {
  Report rep;
  rep.command = "classify";
  rep.inputs = {{"tau_window", {-2, 4}}};
  std::vector<moduli::ComponentReport> comps;
  rep.run("scan", [&](Json& w) {
    comps = moduli::classify_components();
    w["taus"] = Json::array();
    for (const auto& c : comps) w["taus"].push_back(c.tau);
    return Status::pass;
  });
  Json arr = Json::array();
  for (const auto& c : comps) arr.push_back(component_json(c));
  rep.data["components"] = arr;

  const std::set<long> want_taus{-1, 0, 1, 2, 3};
  const std::set<long> want_discs{21, 29, 32, 36, 37};
  rep.run("admissible set", [&](Json& w) {
    std::set<long> got;
    for (const auto& c : comps)
      if (c.admissible) got.insert(c.tau);
    w["admissible"] = got;
    w["expected"] = want_taus;
    return verdict(got == want_taus);
  });
  rep.run("discriminants", [&](Json& w) {
    std::set<long> got;
    for (const auto& c : comps) {
      if (c.discriminant != moduli::a_tau_discriminant_formula(c.tau)) return Status::fail;
      if (c.admissible) got.insert(c.discriminant.get_si());
    }
    w["admissible_discriminants"] = got;
    return verdict(got == want_discs);
  });
  rep.run("discriminant groups", [&](Json& w) {
    bool ok = true;
    for (const auto& c : comps) {
      if (!c.admissible) continue;
      const auto got = c.disc_group.primary_decomposition();
      const auto want = moduli::expected_group(c.tau);
      w[std::to_string(c.tau)] = {{"computed", got}, {"expected", want}};
      ok = ok && got == want && c.disc_group.order() == abs(c.discriminant);
    }
    return verdict(ok);
  });
  rep.run("signatures", [&](Json& w) {
    bool ok = true;
    for (const auto& c : comps) {
      if (!c.admissible) continue;
      w[std::to_string(c.tau)] = c.signature_mod8;
      ok = ok && c.signature_mod8 == 0;
    }
    return verdict(ok);
  });
  rep.run("root exclusions", [&](Json& w) {
    bool ok = true;
    for (const auto& c : comps) {
      if (c.tau != -2 && c.tau != 4) continue;
      w[std::to_string(c.tau)] = vecs_json(c.short_root_witnesses);
      ok = ok && !c.short_root_witnesses.empty() && !c.admissible;
    }
    auto has = [&](long tau, const lattice::IntVector& v) {
      for (const auto& c : comps)
        if (c.tau == tau)
          for (const auto& r : c.short_root_witnesses) {
            lattice::IntVector neg;
            for (const auto& x : v) neg.push_back(-x);
            if (r == v || r == neg) return true;
          }
      return false;
    };
    const bool a = has(-2, {-2, 2, 1});
    const bool b = has(4, {1, 1, -1});
    w["contains (-2,2,1) at tau=-2"] = a;
    w["contains (1,1,-1) at tau=4"] = b;
    return verdict(ok && a && b);
  });
  rep.run("evenness", [&](Json& w) {
    bool ok = true;
    for (const auto& c : comps) ok = ok && c.primitive_part_even && c.alternate_form_even;
    w["taus"] = "-2..4";
    const auto alt = moduli::alternate_form_gram(moduli::a_tau(0));
    w["alternate_form_z2_coefficient"] = to_json(Integer(alt(2, 2) / 2));
    w["note"] = "(h^2,w)^2 - (w,w) recomputed from the Gram matrix has 3z^2, not z^2; evenness is unaffected";
    return verdict(ok);
  });
  rep.run("overlattices", [&](Json& w) {
    bool ok = true;
    for (const auto& c : comps) {
      if (!c.admissible) continue;
      w[std::to_string(c.tau)] = moduli::to_string(c.overlattice_status);
      ok = ok && c.overlattice_status != moduli::OverlatticeStatus::some_lack_long_roots;
    }
    return verdict(ok);
  });
  rep.run("clifford parity", [&](Json& w) {
    bool ok = true;
    for (long tau : want_taus) {
      auto cp = moduli::clifford_parity(tau);
      w[std::to_string(tau)] = {{"class", moduli::to_string(cp.cls)}, {"(P+T).Q", to_json(cp.pt_dot_q)}};
      const bool odd = tau % 2 != 0;
      ok = ok && (cp.cls == moduli::CliffordClass::trivial) == odd && (cp.pt_dot_q % 2 == 0) != odd;
    }
    w["note"] = "(P+T).Q from the Gram matrix is 2 - tau, not -tau; only its parity is used";
    return verdict(ok);
  });
  rep.run("tau=0 identification", [&](Json& w) {
    auto ident = moduli::compare_tau0_candidates(moduli::tau0_candidates());
    w["ns_complement_discriminant"] = to_json(ident.ns_complement_discriminant);
    int survivors = 0;
    long survivor = 0;
    Json v = Json::array();
    for (const auto& c : ident.verdicts) {
      v.push_back({{"tau", c.tau},
                   {"complement_discriminant", to_json(c.complement_discriminant)},
                   {"complement_basis", vecs_json(c.complement_basis)},
                   {"admissible", c.admissible}});
      if (c.admissible) ++survivors, survivor = c.tau;
    }
    w["candidates"] = v;
    w["survivors"] = survivors;
    return verdict(survivors == 1 && survivor == 0);
  });
  return rep;
}

// ---------------------------------------------------------------------------

PfaffianProblem example_problem() {
  const auto& ex = fixture::example();
  PfaffianProblem p;
  p.source = "fixture:paper";
  p.is_example = true;
  p.matrix = ex.matrix_text;
  p.cubic = ex.cubic_text;
  p.d = ex.d_text;
  p.f = ex.f_text;
  p.g = ex.g_text;
  p.conic = ex.conic_text;
  p.a = ex.a_text;
  p.b = ex.b_text;
  p.c = ex.c_text;
  p.bundle = ex.bundle_text;
  return p;
}

PfaffianProblem problem_from_json(const Json& j, const std::string& source) {
  PfaffianProblem p;
  p.source = source;
  if (!j.is_object() || !j.contains("matrix")) throw Error("problem file: object with a \"matrix\" entry expected");
  p.matrix = j.at("matrix").get<std::vector<std::vector<std::string>>>();
  if (p.matrix.size() != 6) throw Error("problem file: matrix must be 6x6");
  for (const auto& row : p.matrix)
    if (row.size() != 6) throw Error("problem file: matrix must be 6x6");
  auto opt = [&](const char* key, std::string& out) {
    if (j.contains(key)) out = j.at(key).get<std::string>();
  };
  opt("cubic", p.cubic);
  opt("d", p.d);
  opt("f", p.f);
  opt("g", p.g);
  opt("conic", p.conic);
  opt("a", p.a);
  opt("b", p.b);
  opt("c", p.c);
  if (j.contains("bundle")) p.bundle = j.at("bundle").get<std::vector<std::vector<std::string>>>();
  return p;
}

Json to_json(const PfaffianProblem& p) {
  Json j;
  j["source"] = p.source;
  j["matrix"] = p.matrix;
  for (auto [key, val] : {std::pair{"cubic", &p.cubic}, {"d", &p.d}, {"f", &p.f}, {"g", &p.g}, {"conic", &p.conic},
                          {"a", &p.a}, {"b", &p.b}, {"c", &p.c}})
    if (!val->empty()) j[key] = *val;
  if (!p.bundle.empty()) j["bundle"] = p.bundle;
  return j;
}

namespace {

const std::vector<int> kPlane{Var::X, Var::Y, Var::Z};
const std::vector<int> kFiber{Var::U, Var::V, Var::W};
const std::vector<int> kAmbient{Var::X, Var::Y, Var::Z, Var::U, Var::V, Var::W};

std::optional<MultiPoly> parse_optional(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return poly::parse(text);
}

// Parsed problem; parse errors escape before any check runs.
struct Parsed {
  polyalg::PfaffianInput matrix;
  std::optional<MultiPoly> cubic, d, f, g, conic, a, b, c;
  std::optional<polyalg::Matrix<MultiPoly>> bundle;
};

Parsed parse_problem(const PfaffianProblem& pr) {
  Parsed out;
  out.matrix.size = pr.matrix.size();
  out.matrix.upper.assign(pr.matrix.size(), std::vector<MultiPoly>(pr.matrix.size()));
  for (std::size_t i = 0; i < pr.matrix.size(); ++i)
    for (std::size_t j = i + 1; j < pr.matrix.size(); ++j) out.matrix.upper[i][j] = poly::parse(pr.matrix[i][j]);
  out.cubic = parse_optional(pr.cubic);
  out.d = parse_optional(pr.d);
  out.f = parse_optional(pr.f);
  out.g = parse_optional(pr.g);
  out.conic = parse_optional(pr.conic);
  out.a = parse_optional(pr.a);
  out.b = parse_optional(pr.b);
  out.c = parse_optional(pr.c);
  if (!pr.bundle.empty()) {
    polyalg::Matrix<MultiPoly> m(pr.bundle.size());
    for (std::size_t i = 0; i < pr.bundle.size(); ++i)
      for (const auto& e : pr.bundle[i]) m[i].push_back(poly::parse(e));
    out.bundle = m;
  }
  return out;
}

Json smoothness_json(const polyalg::SmoothnessReport& r) {
  return {{"status", polyalg::to_string(r.status)},
          {"prime", r.prime},
          {"basis_size", r.basis_size},
          {"max_degree", r.max_degree}};
}

struct CubicStage {
  std::optional<MultiPoly> cubic;
  bool plane = false;
};

// Runs pfaffian and plane containment.
CubicStage cubic_stage(Report& rep, const Parsed& in) {
  std::optional<MultiPoly> cubic;
  rep.run("pfaffian", [&](Json& w) {
    const MultiPoly pf = polyalg::pfaffian(in.matrix);
    w["pfaffian_upper"] = pf.to_string();
    if (!in.cubic) {
      cubic = pf;
      w["note"] = "no cubic given; the pfaffian is used as is";
      return Status::pass;
    }
    if (pf == *in.cubic) {
      cubic = pf;
      w["orientation"] = "upper";
      return Status::pass;
    }
    if (-pf == *in.cubic) {
      cubic = *in.cubic;
      w["orientation"] = "lower";
      w["note"] =
          "expanding along the given upper triangle yields minus the cubic; reading the given entries "
          "below the diagonal yields the cubic coefficient for coefficient";
      return Status::pass;
    }
    cubic = pf;
    w["difference"] = (pf - *in.cubic).to_string();
    return Status::fail;
  });
  if (!cubic) return {};
  bool plane = false;
  rep.run("plane containment", [&](Json& w) {
    w["plane"] = "x = y = z = 0";
    plane = cubic->is_homogeneous() && cubic->total_degree() == 3 && polyalg::contains_plane(*cubic, kPlane);
    return verdict(plane);
  });
  return {cubic, plane};
}

std::optional<polyalg::QuadricBundle> bundle_stage(Report& rep, const Parsed& in, const CubicStage& stage) {
  const auto& cubic = stage.cubic;
  if (!cubic || !stage.plane) {
    rep.skip("quadric bundle", "the cubic does not contain the plane");
    return std::nullopt;
  }
  std::optional<polyalg::QuadricBundle> qb;
  rep.run("quadric bundle", [&](Json& w) {
    qb = polyalg::extract_quadric_bundle(*cubic, kPlane, kFiber);
    w["gram"] = poly_mat_json(qb->gram);
    if (!in.bundle) return Status::pass;
    const bool same = *in.bundle == qb->gram;
    w["matches_given"] = same;
    return verdict(same);
  });
  return qb;
}

void symbol_stage(Report& rep, const Parsed& in, const std::optional<polyalg::QuadricBundle>& qb) {
  if (!qb) {
    rep.skip("quaternion symbol", "no quadric bundle");
    return;
  }
  rep.run("quaternion symbol", [&](Json& w) {
    const auto cs = polyalg::clifford_quaternion_symbol(*qb);
    Json minors = Json::array();
    for (const auto& m : cs.minors) minors.push_back(m.to_string());
    w["minors"] = minors;
    w["symbol"] = {cs.symbol.first.to_string(), cs.symbol.second.to_string()};
    if (!in.a || !in.b || !in.c) return Status::pass;
    const bool first = polyalg::same_square_class(cs.symbol.first, *in.b);
    const bool second = polyalg::same_square_class(cs.symbol.second, *in.a * *in.c);
    w["expected"] = {in.b->to_string(), (*in.a * *in.c).to_string()};
    w["first_matches"] = first;
    w["second_matches"] = second;
    return verdict(first && second);
  });
}

}  // namespace

Report cmd_verify_pfaffian(const PfaffianProblem& problem) {
  Report rep;
  rep.command = "verify-pfaffian";
  rep.inputs = to_json(problem);
  const Parsed in = parse_problem(problem);

  const auto stage = cubic_stage(rep, in);
  if (stage.cubic) {
    rep.run("X smooth", [&](Json& w) {
      const auto r = polyalg::certify_smooth(*stage.cubic, kAmbient, 100);
      w = smoothness_json(r);
      return verdict(r.status == polyalg::Smoothness::certified_smooth);
    });
  } else {
    rep.skip("X smooth", "no cubic");
  }
  const auto qb = bundle_stage(rep, in, stage);

  std::optional<MultiPoly> d = in.d;
  if (qb) {
    rep.run("discriminant sextic", [&](Json& w) {
      const auto ds = polyalg::discriminant_sextic(*qb);
      w["determinant"] = ds.determinant.to_string();
      if (!d) {
        d = ds.normalized;
        w["note"] = "no sextic given; the normalized determinant is used";
        w["scale"] = to_json(ds.scale);
        return Status::pass;
      }
      const auto c = polyalg::proportionality_constant(ds.determinant, *d);
      w["constant"] = c ? to_json(*c) : Json(nullptr);
      return verdict(c && *c > 0);
    });
  } else {
    rep.skip("discriminant sextic", "no quadric bundle");
  }

  if (d) {
    rep.run("D smooth", [&](Json& w) {
      const auto r = polyalg::certify_smooth(*d, kPlane, 100);
      w = smoothness_json(r);
      return verdict(r.status == polyalg::Smoothness::certified_smooth);
    });
  } else {
    rep.skip("D smooth", "no sextic");
  }

  if (d && in.f && in.g && in.conic) {
    rep.run("tangency identity", [&](Json& w) {
      const MultiPoly residual = *d - *in.conic * *in.f - *in.g * *in.g;
      w["residual"] = residual.to_string();
      return verdict(residual.is_zero() && polyalg::verify_tangency(*d, *in.conic, *in.f, *in.g));
    });
  } else {
    rep.skip("tangency identity", "d, f, g and the conic are needed");
  }

  if (in.g && in.conic) {
    rep.run("tangency points", [&](Json& w) {
      const auto tp = polyalg::tangency_points(*in.conic, *in.g);
      w["restriction"] = tp.restriction.to_string();
      w["degree"] = tp.total_degree;
      w["distinct"] = tp.distinct_count;
      if (problem.is_example) return verdict(tp.total_degree == 6 && tp.distinct_count == 5);
      return verdict(tp.total_degree == 6);
    });
  } else {
    rep.skip("tangency points", "g and the conic are needed");
  }

  symbol_stage(rep, in, qb);

  rep.run("tangent conic NS lattice", [&](Json& w) {
    const auto ns = moduli::tangent_conic_ns_lattice();
    const Integer disc = lattice::discriminant(ns);
    w["gram"] = mat_json(ns.gram());
    w["discriminant"] = to_json(disc);
    return verdict(disc == -8);
  });
  rep.run("det mod 8 obstruction", [&](Json& w) {
    std::set<int> residues;
    for (long x = 0; x < 8; ++x)
      for (long y = 0; y < 8; ++y) residues.insert(moduli::rq_obstruction_det({x, y}));
    w["residues"] = residues;
    return verdict(residues == std::set<int>{5});
  });
  return rep;
}

Report cmd_quaternion(const PfaffianProblem& problem) {
  Report rep;
  rep.command = "quaternion";
  rep.inputs = to_json(problem);
  const Parsed in = parse_problem(problem);
  const auto qb = bundle_stage(rep, in, cubic_stage(rep, in));
  symbol_stage(rep, in, qb);
  return rep;
}

// ---------------------------------------------------------------------------

SexticInput example_sextic() { return {"fixture:paper", true, fixture::example().d}; }

SexticInput sextic_from_text(const std::string& text, const std::string& source) {
  return {source, false, poly::parse(text)};
}

Json counts_to_json(const CountTable& counts) {
  Json j = Json::object();
  for (const auto& [n, c] : counts) j[std::to_string(n)] = c;
  return j;
}

CountTable counts_from_json(const Json& j_in) {
  const Json* j = &j_in;
  if (j->contains("data") && (*j)["data"].contains("counts")) j = &(*j)["data"]["counts"];
  if (!j->is_object()) throw Error("counts: JSON object {\"n\": count} expected");
  CountTable out;
  for (const auto& [key, val] : j->items()) {
    std::size_t used = 0;
    const unsigned long n = std::stoul(key, &used);
    if (used != key.size() || n == 0) throw Error("counts: bad key \"" + key + "\"");
    out[static_cast<unsigned>(n)] = val.is_string() ? std::stoull(val.get<std::string>()) : val.get<std::uint64_t>();
  }
  unsigned expect = 1;
  for (const auto& [n, c] : out)
    if (n != expect++) throw Error("counts: degrees must run 1, 2, ..., N without gaps");
  return out;
}

std::vector<std::uint32_t> listed_bad_primes() { return {5, 23, 263, 509, 1117, 6691, 3342589}; }

namespace {

constexpr std::uint64_t kReferenceLimit = 729;   // serial cross-check up to this q
constexpr std::uint64_t kTableLimit = 1U << 24;  // Zech tables stay below ~200 MB

Json sextic_inputs(const SexticInput& in) {
  Json j;
  j["source"] = in.source;
  j["d"] = in.d.to_string();
  return j;
}

void validate(const CountOptions& o) {
  if (o.p == 2 || !is_prime(o.p)) throw Error("p must be an odd prime");
  if (o.max_n == 0) throw Error("max-n must be positive");
  if (o.max_n > kShallowDepth && !o.deep)
    throw Error("max-n above " + std::to_string(kShallowDepth) + " needs --deep (long run)");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < o.max_n; ++i) {
    q *= o.p;
    if (q > kTableLimit) throw Error("field of size p^max-n is too large for the log tables");
  }
}

CountTable count_stage(Report& rep, const SexticInput& in, const CountOptions& o) {
  CountTable counts;
  rep.run("point counts", [&](Json& w) {
    for (unsigned n = 1; n <= o.max_n; ++n)
      counts[n] = pointcount::count_points_double_cover(in.d, fq::make_field(o.p, n), o.threads);
    w["max_n"] = o.max_n;
    return Status::pass;
  });
  rep.data["counts"] = counts_to_json(counts);
  if (counts.empty()) return counts;
  rep.run("reference agreement", [&](Json& w) {
    bool ok = true;
    for (const auto& [n, c] : counts) {
      const auto field = fq::make_field(o.p, n);
      if (field.q() > kReferenceLimit) break;
      const auto ref = pointcount::count_points_reference(in.d, field);
      w[std::to_string(n)] = ref;
      ok = ok && ref == c;
    }
    return verdict(ok);
  });
  return counts;
}

void charpoly_stage(Report& rep, const CountTable& counts, std::uint32_t p,
                    const std::optional<std::vector<Rational>>& expected, std::optional<int> expected_bound) {
  std::vector<std::uint64_t> series;
  for (const auto& [n, c] : counts) series.push_back(c);
  const auto traces = pointcount::traces_from_counts(series, p);
  rep.data["traces"] = integers_json(traces);
  rep.run("weil bound", [&](Json& w) {
    bool ok = true;
    for (std::size_t n = 1; n <= traces.size(); ++n) {
      const Integer bound = 22 * pow_int(Integer(p), n);
      if (abs(traces[n - 1]) > bound) {
        ok = false;
        w["violated_at"] = n;
      }
    }
    return verdict(ok);
  });

  if (traces.size() < kFullDepth) {
    const auto partial = pointcount::partial_charpoly(traces, p);
    rep.data["partial"] = {{"known_elementary", rationals_json(partial.known)},
                           {"unknown", partial.unknown},
                           {"relations", partial.relations}};
    const std::string why = "need " + std::to_string(kFullDepth) + " traces, have " + std::to_string(traces.size());
    rep.skip("charpoly", why);
    if (expected) rep.skip("phi-tilde matches expected", why);
    rep.skip("picard bound", why);
    return;
  }

  const std::vector<Integer> first(traces.begin(), traces.begin() + kFullDepth);
  std::optional<pointcount::Charpoly> cp;
  rep.run("charpoly", [&](Json& w) {
    Json cands = Json::array();
    try {
      cp = pointcount::charpoly_from_traces(first, p);
    } catch (const Error& e) {
      w["error"] = e.what();
      return Status::fail;
    }
    for (const auto& c : cp->candidates)
      cands.push_back({{"epsilon", c.epsilon},
                       {"integral", c.integral},
                       {"middle_consistent", c.middle_consistent},
                       {"root_at_p", c.root_at_p},
                       {"max_modulus_deviation", c.max_modulus_deviation},
                       {"accepted", c.accepted}});
    w["candidates"] = cands;
    w["epsilon"] = cp->epsilon;
    return Status::pass;
  });
  if (!cp) {
    if (expected) rep.skip("phi-tilde matches expected", "no characteristic polynomial");
    rep.skip("picard bound", "no characteristic polynomial");
    return;
  }
  rep.data["phi"] = integers_json(cp->phi);
  rep.data["phi_tilde"] = rationals_json(cp->phi_tilde);
  rep.data["epsilon"] = cp->epsilon;

  rep.run("functional equation", [&](Json& w) {
    bool ok = true;
    for (int i = 0; i <= 22; ++i)
      ok = ok && cp->phi[22 - i] * pow_int(Integer(p), 2 * i) ==
                     Integer(cp->epsilon) * pow_int(Integer(p), 22) * cp->phi[i];
    w["relation"] = "c_(22-i) p^(2i) = eps p^22 c_i";
    return verdict(ok);
  });
  if (expected) {
    rep.run("phi-tilde matches expected", [&](Json& w) {
      w["expected"] = rationals_json(*expected);
      return verdict(cp->phi_tilde == *expected);
    });
  }
  rep.run("picard bound", [&](Json& w) {
    const int bound = pointcount::picard_bound(*cp);
    rep.data["picard_bound"] = bound;
    w["bound"] = bound;
    if (!expected_bound) return Status::pass;
    w["expected"] = *expected_bound;
    return verdict(bound == *expected_bound);
  });
}

}  // namespace

Report cmd_count_points(const SexticInput& input, const CountOptions& options) {
  validate(options);
  Report rep;
  rep.command = "count-points";
  rep.inputs = sextic_inputs(input);
  rep.inputs["p"] = options.p;
  rep.inputs["max_n"] = options.max_n;
  rep.inputs["deep"] = options.deep;
  count_stage(rep, input, options);
  return rep;
}

Report cmd_charpoly(const CountTable& counts, std::uint32_t p, const std::optional<std::vector<Rational>>& expected,
                    std::optional<int> expected_bound) {
  if (p == 2 || !is_prime(p)) throw Error("p must be an odd prime");
  if (counts.empty()) throw Error("charpoly: no counts given");
  Report rep;
  rep.command = "charpoly";
  rep.inputs = {{"p", p}, {"counts", counts_to_json(counts)}};
  charpoly_stage(rep, counts, p, expected, expected_bound);
  return rep;
}

Report cmd_picard(const SexticInput& input, const CountOptions& options) {
  validate(options);
  Report rep;
  rep.command = "picard-bound";
  rep.inputs = sextic_inputs(input);
  rep.inputs["p"] = options.p;
  rep.inputs["max_n"] = options.max_n;
  rep.inputs["deep"] = options.deep;

  bool good = false;
  rep.run("good reduction", [&](Json& w) {
    good = !polyalg::plane_curve_singular_mod_p(input.d, options.p);
    w["p"] = options.p;
    if (!good) w["error"] = "refusing: the reduction of d mod p is singular";
    return verdict(good);
  });
  if (!good) {
    for (const char* name : {"point counts", "charpoly", "picard bound"}) rep.skip(name, "bad reduction");
    return rep;
  }
  const CountTable counts = count_stage(rep, input, options);
  if (counts.size() != options.max_n) return rep;
  std::optional<std::vector<Rational>> expected;
  std::optional<int> expected_bound;
  if (input.is_example && options.p == 3) {
    expected = fixture::example().phi_tilde;
    expected_bound = 2;
  }
  charpoly_stage(rep, counts, options.p, expected, expected_bound);
  return rep;
}

Report cmd_bad_primes(const SexticInput& input, std::uint32_t max_p) {
  Report rep;
  rep.command = "bad-primes";
  rep.inputs = sextic_inputs(input);
  rep.inputs["max_p"] = max_p;
  polyalg::BadPrimeScan scan;
  bool scanned = false;
  rep.run("scan", [&](Json& w) {
    scan = polyalg::bad_primes_scan(input.d, max_p);
    scanned = true;
    w["bad"] = scan.bad;
    w["skipped"] = scan.skipped;
    return Status::pass;
  });
  rep.data["bad"] = scan.bad;
  rep.data["skipped"] = scan.skipped;
  if (!input.is_example) return rep;
  if (!scanned) {
    rep.skip("matches listed primes", "scan failed");
  } else {
    rep.run("matches listed primes", [&](Json& w) {
      std::vector<std::uint32_t> want;
      for (auto p : listed_bad_primes())
        if (p <= max_p) want.push_back(p);
      w["expected"] = want;
      return verdict(scan.bad == want && scan.skipped.empty());
    });
  }
  rep.run("good at 3 and 7", [&](Json& w) {
    const bool g3 = !polyalg::plane_curve_singular_mod_p(input.d, 3);
    const bool g7 = !polyalg::plane_curve_singular_mod_p(input.d, 7);
    w["3"] = g3;
    w["7"] = g7;
    return verdict(g3 && g7);
  });
  return rep;
}

}  // namespace cliff::report
