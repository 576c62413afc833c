// Copyright 2026 The hlu-compiler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hlu/io.hpp"

#include <fstream>
#include <sstream>

#include "hlu/error.hpp"

namespace hlu::io {

namespace {

[[noreturn]] void schema(const std::string& what) { throw HluError(Reason::kSchema, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) schema(std::string("missing field '") + key + "'");
  return doc.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) schema(std::string(what) + " must be a number");
  return j.get<double>();
}

void expect_kind(const Json& doc, const char* kind) {
  if (!doc.is_object()) schema("document must be an object");
  if (doc.contains("kind") && doc.at("kind") != kind)
    schema(std::string("expected a document of kind '") + kind + "'");
}

Json real_vec(const Vector3& v) { return Json::array({v(0), v(1), v(2)}); }

Vector3 vec3(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) schema(std::string(what) + " must have 3 entries");
  return Vector3(number(j[0], what), number(j[1], what), number(j[2], what));
}

Json real_mat(const Matrix3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(real_vec(m.row(i).transpose()));
  return rows;
}

Matrix3 mat3(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) schema(std::string(what) + " must be 3x3");
  Matrix3 m;
  for (int i = 0; i < 3; ++i) m.row(i) = vec3(j[i], what).transpose();
  return m;
}

Json complex_mat(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXcd complex_mat(const Json& j, int dim, const char* what) {
  const std::string err = std::string(what) + " must be a " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " matrix of [re, im] pairs";
  if (!j.is_array() || static_cast<int>(j.size()) != dim) schema(err);
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != dim) schema(err);
    for (int k = 0; k < dim; ++k) {
      const Json& z = j[i][k];
      if (!z.is_array() || z.size() != 2) schema(err);
      m(i, k) = cplx(number(z[0], what), number(z[1], what));
    }
  }
  return m;
}

Json su2_json(const SU2Element& u) { return complex_mat(u.matrix()); }

SU2Element su2(const Json& j, const char* what) {
  try {
    return SU2Element(Matrix2c(complex_mat(j, 2, what)));
  } catch (const HluError& e) {
    if (e.reason() == Reason::kNotUnitary) schema(std::string(what) + ": " + e.what());
    throw;
  }
}

Json layer_json(const LocalLayer& l) { return {{"a", su2_json(l.a)}, {"b", su2_json(l.b)}}; }

LocalLayer layer(const Json& j, const char* what) {
  return {su2(field(j, "a"), what), su2(field(j, "b"), what)};
}

void put_layer(Json& doc, const char* key, const std::optional<LocalLayer>& l) {
  if (l) doc[key] = layer_json(*l);
}

std::optional<LocalLayer> get_layer(const Json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return layer(doc.at(key), key);
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HluError(Reason::kParse, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw HluError(Reason::kParse, path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw HluError(Reason::kParse, "cannot write " + path);
  out << doc.dump(2) << '\n';
}

PauliRep hamiltonian_from_json(const Json& doc) {
  expect_kind(doc, "hamiltonian");
  if (doc.contains("pauli")) {
    const Json& p = doc.at("pauli");
    PauliRep h;
    h.alpha = number(field(p, "alpha"), "alpha");
    h.local_a = vec3(field(p, "local_a"), "local_a");
    h.local_b = vec3(field(p, "local_b"), "local_b");
    h.m = mat3(field(p, "m"), "m");
    return h;
  }
  if (doc.contains("matrix")) {
    const Matrix4c h = complex_mat(doc.at("matrix"), 4, "matrix");
    return to_pauli(h);
  }
  schema("hamiltonian needs a 'pauli' or 'matrix' field");
}

Json hamiltonian_to_json(const PauliRep& h) {
  return {{"kind", "hamiltonian"},
          {"pauli",
           {{"alpha", h.alpha},
            {"local_a", real_vec(h.local_a)},
            {"local_b", real_vec(h.local_b)},
            {"m", real_mat(h.m)}}}};
}

TwoQubitOperator gate_from_json(const Json& doc) {
  expect_kind(doc, "gate");
  const Matrix4c u = complex_mat(field(doc, "matrix"), 4, "matrix");
  if (!is_unitary(u, 1e-9)) throw HluError(Reason::kNotUnitary, "gate matrix is not unitary");
  return u;
}

Json gate_to_json(const TwoQubitOperator& u) {
  return {{"kind", "gate"}, {"matrix", complex_mat(u)}};
}

HluProtocol protocol_from_json(const Json& doc) {
  expect_kind(doc, "protocol");
  HluProtocol p;
  p.overhead = number(field(doc, "overhead"), "overhead");
  const Json& steps = field(doc, "steps");
  if (!steps.is_array()) schema("steps must be an array");
  for (const Json& s : steps)
    p.steps.push_back({su2(field(s, "su2"), "su2"), number(field(s, "fraction"), "fraction")});
  if (doc.contains("local_field")) p.local_field = vec3(doc.at("local_field"), "local_field");
  p.local_pre = get_layer(doc, "local_pre");
  p.local_post = get_layer(doc, "local_post");
  p.validate();
  return p;
}

Json protocol_to_json(const HluProtocol& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps) steps.push_back({{"su2", su2_json(s.conjugation)}, {"fraction", s.fraction}});
  Json doc = {{"kind", "protocol"},
              {"overhead", p.overhead},
              {"steps", steps},
              {"local_field", real_vec(p.local_field)}};
  put_layer(doc, "local_pre", p.local_pre);
  put_layer(doc, "local_post", p.local_post);
  return doc;
}

SynthesisPlan plan_from_json(const Json& doc) {
  expect_kind(doc, "plan");
  SynthesisPlan plan;
  const Vector3 n = vec3(field(doc, "shift"), "shift");
  if ((n - n.array().round().matrix()).cwiseAbs().maxCoeff() != 0.0) schema("shift must be integer");
  plan.shift = n.cast<int>();
  const Json& perm = field(doc, "perm");
  if (!perm.is_array() || perm.size() != 3) schema("perm must have 3 entries");
  std::array<int, 3> to{};
  for (int k = 0; k < 3; ++k) {
    if (!perm[k].is_number_integer()) schema("perm entries must be integers");
    to[k] = perm[k].get<int>();
  }
  bool ok = false;
  for (const auto& q : Permutation::all()) ok = ok || q.to == to;
  if (!ok) schema("perm is not a permutation of (0, 1, 2)");
  plan.perm = Permutation{to};
  plan.canonical = vec3(field(doc, "canonical"), "canonical");
  plan.simulated = vec3(field(doc, "simulated"), "simulated");
  plan.overhead = number(field(doc, "overhead"), "overhead");
  const Json& reps = field(doc, "repetitions");
  if (!reps.is_number_integer() || reps.get<int>() < 1) schema("repetitions must be a positive integer");
  plan.repetitions = reps.get<int>();
  plan.protocol = protocol_from_json(field(doc, "protocol"));
  plan.interleave = get_layer(doc, "interleave");
  plan.pre_local = get_layer(doc, "pre_local");
  plan.post_local = get_layer(doc, "post_local");
  plan.target = complex_mat(field(doc, "target"), 4, "target");
  return plan;
}

Json plan_to_json(const SynthesisPlan& plan) {
  Json doc = {{"kind", "plan"},
              {"shift", Json::array({plan.shift(0), plan.shift(1), plan.shift(2)})},
              {"perm", Json::array({plan.perm.to[0], plan.perm.to[1], plan.perm.to[2]})},
              {"canonical", real_vec(plan.canonical)},
              {"simulated", real_vec(plan.simulated)},
              {"overhead", plan.overhead},
              {"repetitions", plan.repetitions},
              {"protocol", protocol_to_json(plan.protocol)},
              {"target", complex_mat(plan.target)}};
  put_layer(doc, "interleave", plan.interleave);
  put_layer(doc, "pre_local", plan.pre_local);
  put_layer(doc, "post_local", plan.post_local);
  return doc;
}

Json report_to_json(const VerificationReport& r) {
  return {{"kind", "report"},
          {"epsilon", r.epsilon},
          {"n_slices", r.n_slices},
          {"distance", r.distance},
          {"fidelity", r.fidelity}};
}

}  // namespace hlu::io
