#include "ltu/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ltu/error.hpp"

namespace ltu::io {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rationals");
  Vec out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw Error(ErrorCode::DimensionMismatch, "matrix has the wrong number of rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vec row = vec_from_json(j[r]);
    if (row.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

void read_types(const json& list, std::vector<std::string>& ids, Vec& mass) {
  if (!list.is_array()) throw Error(ErrorCode::ParseError, "type list must be an array");
  for (const auto& t : list) {
    ids.push_back(field(t, "id").get<std::string>());
    mass.push_back(rational_from_json(field(t, "mass")));
  }
}

json types_to_json(const std::vector<std::string>& ids, const Vec& mass, const Format& f) {
  json out = json::array();
  for (std::size_t i = 0; i < ids.size(); ++i)
    out.push_back({{"id", ids[i]}, {"mass", to_json(mass[i], f)}});
  return out;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& ids) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = i;
  return out;
}

// Reads one block of per-pair entries into the named matrices.
std::vector<Matrix> read_pair_block(const json& block, const LTUProblem& p,
                                    const std::vector<const char*>& keys) {
  if (!block.is_array()) throw Error(ErrorCode::ParseError, "pair block must be an array");
  const auto xs = index_of(p.workers), ys = index_of(p.jobs);
  const std::size_t nx = p.num_workers(), ny = p.num_jobs();
  std::vector<Matrix> out(keys.size(), Matrix(nx, ny));
  std::vector<bool> seen(nx * ny, false);
  for (const auto& e : block) {
    const auto xid = field(e, "x").get<std::string>();
    const auto yid = field(e, "y").get<std::string>();
    const auto xi = xs.find(xid);
    const auto yi = ys.find(yid);
    if (xi == xs.end() || yi == ys.end()) {
      throw Error(ErrorCode::DimensionMismatch, "pair (" + xid + "," + yid + ") names unknown types");
    }
    const std::size_t cell = xi->second * ny + yi->second;
    if (seen[cell]) {
      throw Error(ErrorCode::DimensionMismatch, "pair (" + xid + "," + yid + ") listed twice");
    }
    seen[cell] = true;
    for (std::size_t k = 0; k < keys.size(); ++k)
      out[k](xi->second, yi->second) = rational_from_json(field(e, keys[k]));
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (!seen[c]) {
      throw Error(ErrorCode::DimensionMismatch,
                  "pair (" + p.workers[c / ny] + "," + p.jobs[c % ny] + ") is missing");
    }
  }
  return out;
}

json ids_of(const std::vector<std::string>& ids, const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (std::size_t i : idx) out.push_back(ids[i]);
  return out;
}

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(std::to_string(j.get<std::uint64_t>()))
                                  : Rational(std::to_string(j.get<std::int64_t>()));
  }
  throw Error(ErrorCode::ParseError, "rational must be a \"p/q\" string or an integer, got " +
                                         j.dump());
}

json to_json(const Rational& r, const Format& f) {
  if (f.decimal_digits) return to_decimal(r, *f.decimal_digits);
  return to_string(r);
}

json to_json(const Vec& v, const Format& f) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x, f));
  return out;
}

json to_json(const Matrix& m, const Format& f) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r), f));
  return out;
}

LTUProblem problem_from_json(const json& j, OutputPolicy policy) {
  return guarded("problem", [&] {
    LTUProblem p;
    read_types(field(j, "workers"), p.workers, p.n);
    read_types(field(j, "jobs"), p.jobs, p.m);
    const int blocks = j.contains("pairs") + j.contains("linear_constraints") + j.contains("tax");
    if (blocks != 1) {
      throw Error(ErrorCode::ParseError,
                  "need exactly one of \"pairs\", \"linear_constraints\", \"tax\"");
    }
    if (j.contains("pairs")) {
      auto m = read_pair_block(j.at("pairs"), p, {"lambda", "phi"});
      p.lambda = std::move(m[0]);
      p.phi = std::move(m[1]);
    } else if (j.contains("linear_constraints")) {
      auto m = read_pair_block(j.at("linear_constraints"), p, {"a", "b", "c"});
      auto terms = from_linear_constraints(m[0], m[1], m[2]);
      p.lambda = std::move(terms.lambda);
      p.phi = std::move(terms.phi);
    } else {
      auto m = read_pair_block(j.at("tax"), p, {"S", "tau"});
      auto terms = from_tax_schedule(m[0], m[1]);
      p.lambda = std::move(terms.lambda);
      p.phi = std::move(terms.phi);
    }
    return validate_problem(std::move(p), policy);
  });
}

json problem_to_json(const LTUProblem& p, const Format& f) {
  json pairs = json::array();
  for (std::size_t x = 0; x < p.num_workers(); ++x) {
    for (std::size_t y = 0; y < p.num_jobs(); ++y) {
      pairs.push_back({{"x", p.workers[x]},
                       {"y", p.jobs[y]},
                       {"lambda", to_json(p.lambda(x, y), f)},
                       {"phi", to_json(p.phi(x, y), f)}});
    }
  }
  return {{"workers", types_to_json(p.workers, p.n, f)},
          {"jobs", types_to_json(p.jobs, p.m, f)},
          {"pairs", std::move(pairs)}};
}

Outcome outcome_from_json(const json& j, const LTUProblem& p) {
  return guarded("outcome", [&] {
    Outcome o{matrix_from_json(field(j, "mu"), p.num_workers(), p.num_jobs()),
              vec_from_json(field(j, "u")), vec_from_json(field(j, "v"))};
    check_dimensions(p, o);
    return o;
  });
}

json outcome_to_json(const Outcome& o, const Format& f) {
  return {{"mu", to_json(o.mu, f)}, {"u", to_json(o.u, f)}, {"v", to_json(o.v, f)}};
}

MixedProfile profile_from_json(const json& j) {
  return guarded("profile", [&] {
    return MixedProfile{vec_from_json(field(j, "p")), vec_from_json(field(j, "q"))};
  });
}

json profile_to_json(const MixedProfile& s, const Format& f) {
  return {{"p", to_json(s.p, f)}, {"q", to_json(s.q, f)}};
}

BimatrixGame game_from_json(const json& j) {
  return guarded("game", [&] {
    BimatrixGame g;
    g.rows = field(j, "rows").get<std::vector<std::string>>();
    g.cols = field(j, "cols").get<std::vector<std::string>>();
    g.loss = matrix_from_json(field(j, "loss"), g.rows.size(), g.cols.size());
    g.payoff = matrix_from_json(field(j, "payoff"), g.rows.size(), g.cols.size());
    return g;
  });
}

json game_to_json(const BimatrixGame& g, const Format& f) {
  return {{"rows", g.rows},
          {"cols", g.cols},
          {"loss", to_json(g.loss, f)},
          {"payoff", to_json(g.payoff, f)}};
}

json certificate_to_json(const EquilibriumCertificate& c, const Format& f) {
  return {{"p", to_json(c.profile.p, f)},
          {"q", to_json(c.profile.q, f)},
          {"hider_loss", to_json(c.hider_loss, f)},
          {"seeker_payoff", to_json(c.seeker_payoff, f)},
          {"hider_support", c.hider_support},
          {"seeker_support", c.seeker_support}};
}

json report_to_json(const StabilityReport& r, const Format& f) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"condition", v.condition},
                          {"indices", v.indices},
                          {"lhs", to_json(v.lhs, f)},
                          {"rhs", to_json(v.rhs, f)}});
  }
  return {{"stable", r.stable}, {"violations", std::move(violations)}};
}

ManyToOneProblem m2o_problem_from_json(const json& j, OutputPolicy policy) {
  return guarded("many-to-one problem", [&] {
    ManyToOneProblem p;
    read_types(j.contains("types") ? j.at("types") : field(j, "workers"), p.types, p.n);
    p.arrangement_size = field(j, "N").get<std::size_t>();
    const auto ids = index_of(p.types);
    for (const auto& a : field(j, "arrangements")) {
      Arrangement arr;
      for (const auto& s : field(a, "slots")) {
        if (s.is_null()) {
          arr.slots.emplace_back();
          continue;
        }
        const auto it = ids.find(s.get<std::string>());
        if (it == ids.end()) {
          throw Error(ErrorCode::InvalidArrangement, "unknown type " + s.get<std::string>());
        }
        arr.slots.emplace_back(it->second);
      }
      arr.lambda = vec_from_json(field(a, "lambda"));
      arr.phi = rational_from_json(field(a, "phi"));
      p.arrangements.push_back(std::move(arr));
    }
    return validate_many_to_one(std::move(p), policy);
  });
}

json m2o_problem_to_json(const ManyToOneProblem& p, const Format& f) {
  json arrangements = json::array();
  for (const auto& a : p.arrangements) {
    json slots = json::array();
    for (const auto& s : a.slots) slots.push_back(s ? json(p.types[*s]) : json(nullptr));
    arrangements.push_back(
        {{"slots", std::move(slots)}, {"lambda", to_json(a.lambda, f)}, {"phi", to_json(a.phi, f)}});
  }
  return {{"workers", types_to_json(p.types, p.n, f)},
          {"N", p.arrangement_size},
          {"arrangements", std::move(arrangements)}};
}

ManyToOneOutcome m2o_outcome_from_json(const json& j, const ManyToOneProblem& p) {
  return guarded("many-to-one outcome", [&] {
    ManyToOneOutcome o{vec_from_json(field(j, "mu")), vec_from_json(field(j, "u"))};
    check_dimensions(p, o);
    return o;
  });
}

json m2o_outcome_to_json(const ManyToOneOutcome& o, const Format& f) {
  return {{"mu", to_json(o.mu, f)}, {"u", to_json(o.u, f)}};
}

json witness_to_json(const TuWitness& w, const LTUProblem& p, const Format& f) {
  json out = {{"isTU", w.is_tu}, {"rho", to_json(w.rho, f)}};
  if (w.quadruple) {
    const auto& q = *w.quadruple;
    out["quadruple"] = {p.workers[q.x], p.workers[q.x2], p.jobs[q.y], p.jobs[q.y2]};
  }
  if (w.is_tu) {
    out["a"] = to_json(w.a, f);
    out["b"] = to_json(w.b, f);
  }
  return out;
}

json counterexample_to_json(const Counterexample& c, const Format& f) {
  const auto& q = c.quadruple;
  json targets = json::array();
  for (const auto& t : c.targets) targets.push_back(to_json(t, f));
  json scale = json::array();
  for (const auto& s : c.scale) scale.push_back(to_json(s, f));
  return {
      {"quadruple", {c.spec.parent.workers[q.x], c.spec.parent.workers[q.x2],
                     c.spec.parent.jobs[q.y], c.spec.parent.jobs[q.y2]}},
      {"rho", to_json(c.rho, f)},
      {"workingRho", to_json(c.working_rho, f)},
      {"swappedJobs", c.swapped_jobs},
      {"subproblem",
       {{"workers", ids_of(c.spec.parent.workers, c.spec.xsub)},
        {"jobs", ids_of(c.spec.parent.jobs, c.spec.ysub)},
        {"n", to_json(c.spec.n, f)},
        {"m", to_json(c.spec.m, f)},
        {"uReservation", to_json(c.spec.u_reservation, f)},
        {"vReservation", to_json(c.spec.v_reservation, f)}}},
      {"folded", problem_to_json(c.folded, f)},
      {"rescale", std::move(scale)},
      {"targets", std::move(targets)},
      {"outcomeBlack", outcome_to_json(c.worker_side, f)},
      {"outcomeWhite", outcome_to_json(c.job_side, f)},
      {"verificationReports",
       {{"black", report_to_json(c.worker_side_report, f)},
        {"white", report_to_json(c.job_side_report, f)},
        {"muWhiteWithUvBlack", report_to_json(c.exchange.mu2_with_uv1, f)},
        {"muBlackWithUvWhite", report_to_json(c.exchange.mu1_with_uv2, f)},
        {"exchangeable", c.exchange.exchangeable()}}}};
}

json oracle_to_json(const std::vector<OracleEntry>& entries, const Format& f) {
  json out = json::array();
  for (const auto& e : entries) {
    json cells = json::array();
    for (const auto& [x, y] : e.pattern.cells) cells.push_back({x, y});
    json binding = json::array();
    for (const auto& [x, y] : e.binding) binding.push_back({x, y});
    out.push_back({{"pattern", {{"cells", std::move(cells)},
                                {"rows", e.pattern.rows},
                                {"cols", e.pattern.cols}}},
                   {"outcome", outcome_to_json(e.outcome, f)},
                   {"binding", std::move(binding)}});
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

}  // namespace ltu::io
