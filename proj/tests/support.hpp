#pragma once

#include <random>
#include <string>

#include "ltu/error.hpp"
#include "ltu/fuzz.hpp"
#include "ltu/io.hpp"
#include "ltu/model.hpp"

namespace ltu::test {

inline Rational q(const char* text) { return parse_rational(text); }

// mpq_class(num, den) does not reduce; every test value goes through here.
inline Rational frac(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  Matrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const char* e : row) m(r, c++) = q(e);
    ++r;
  }
  return m;
}

inline Vec vec(std::initializer_list<const char*> xs) {
  Vec v;
  for (const char* e : xs) v.push_back(q(e));
  return v;
}

inline std::string data_path(const std::string& name) { return std::string(LTU_DATA_DIR) + "/" + name; }

inline LTUProblem make_problem(Matrix lambda, Matrix phi, Vec n, Vec m) {
  LTUProblem p;
  for (std::size_t x = 0; x < n.size(); ++x) p.workers.push_back(std::to_string(x + 1));
  for (std::size_t y = 0; y < m.size(); ++y) p.jobs.push_back(std::to_string(y + 1));
  p.n = std::move(n);
  p.m = std::move(m);
  p.lambda = std::move(lambda);
  p.phi = std::move(phi);
  return validate_problem(std::move(p));
}

// Canonical form of u1 + 2 v1 = 1, 2 u1 + v2 = 1, u2 + v1 = 1, u2 + v2 = 1.
inline LTUProblem crossed() {
  return make_problem(mat({{"1/3", "2/3"}, {"1/2", "1/2"}}), mat({{"2/3", "2/3"}, {"1", "1"}}),
                      vec({"1", "1"}), vec({"1", "1"}));
}

inline Outcome crossed_worker_side() {
  return {mat({{"1", "0"}, {"0", "1"}}), vec({"1", "1"}), vec({"0", "0"})};
}

inline Outcome crossed_job_side() {
  return {mat({{"0", "1"}, {"1", "0"}}), vec({"0", "0"}), vec({"1", "1"})};
}

// Job-side matching paired with the worker-side utilities.
inline Outcome crossed_mixed() {
  return {mat({{"0", "1"}, {"1", "0"}}), vec({"1", "1"}), vec({"0", "0"})};
}

// One type with mass 2 that can stay single (output 1/2) or pair up (output 2).
inline ManyToOneProblem roommate() {
  ManyToOneProblem p;
  p.types = {"1"};
  p.n = vec({"2"});
  p.arrangement_size = 2;
  p.arrangements.push_back({{0, std::nullopt}, vec({"1", "0"}), q("1/2")});
  p.arrangements.push_back({{0, 0}, vec({"1/2", "1/2"}), q("2")});
  return validate_many_to_one(std::move(p));
}

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace ltu::test
