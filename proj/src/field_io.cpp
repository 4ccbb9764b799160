#include "hitchin/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hitchin {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_field_json(std::ostream& os, const MatrixField& f) {
  const Grid& g = f.grid();
  os << "{\"n\": " << g.n << ", \"N\": " << g.N << ", \"Lx\": " << fmt17(g.Lx)
     << ", \"Ly\": " << fmt17(g.Ly) << ", \"data\": [";
  for (int iy = 0; iy < g.N; ++iy) {
    if (iy) os << ",";
    os << "[";
    for (int ix = 0; ix < g.N; ++ix) {
      if (ix) os << ",";
      os << "[";
      for (int r = 0; r < g.n; ++r) {
        if (r) os << ",";
        os << "[";
        for (int c = 0; c < g.n; ++c) {
          if (c) os << ",";
          const cplx v = f.at(iy, ix, r, c);
          os << "[" << fmt17(v.real()) << "," << fmt17(v.imag()) << "]";
        }
        os << "]";
      }
      os << "]";
    }
    os << "]";
  }
  os << "]}";
}

MatrixField parse_field(const nlohmann::json& j, const Grid& expected) {
  if (!j.is_object() || !j.contains("n") || !j.contains("N") || !j.contains("data"))
    throw std::invalid_argument("field file: missing keys");
  Grid g = expected;
  g.n = j.at("n").get<int>();
  g.N = j.at("N").get<int>();
  g.Lx = j.at("Lx").get<double>();
  g.Ly = j.at("Ly").get<double>();
  g.validate();
  if (g.N != expected.N || g.n != expected.n)
    throw std::invalid_argument("field file: shape does not match the expected grid");

  const auto& data = j.at("data");
  if (!data.is_array() || int(data.size()) != g.N)
    throw std::invalid_argument("field file: data has wrong row count");
  MatrixField f(g);
  for (int iy = 0; iy < g.N; ++iy) {
    const auto& row = data[iy];
    if (!row.is_array() || int(row.size()) != g.N)
      throw std::invalid_argument("field file: data has wrong column count");
    for (int ix = 0; ix < g.N; ++ix) {
      const auto& mat = row[ix];
      if (!mat.is_array() || int(mat.size()) != g.n)
        throw std::invalid_argument("field file: matrix has wrong row count");
      for (int r = 0; r < g.n; ++r) {
        const auto& mrow = mat[r];
        if (!mrow.is_array() || int(mrow.size()) != g.n)
          throw std::invalid_argument("field file: matrix has wrong column count");
        for (int c = 0; c < g.n; ++c) {
          const auto& entry = mrow[c];
          if (!entry.is_array() || entry.size() != 2)
            throw std::invalid_argument("field file: entry is not an (re, im) pair");
          f.at(iy, ix, r, c) = cplx(entry[0].get<double>(), entry[1].get<double>());
        }
      }
    }
  }
  return f;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

nlohmann::json cplx_json(cplx v) { return nlohmann::json::array({v.real(), v.imag()}); }

}  // namespace

void write_field(const std::string& path, const MatrixField& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_field_json(out, f);
  out << "\n";
}

MatrixField read_field(const std::string& path, const Grid& expected) {
  return parse_field(load_json(path), expected);
}

void write_configuration(const std::string& path, const Configuration& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "{\"a_zbar\": ";
  write_field_json(out, c.conn.a_zbar);
  out << ", \"phi_z\": ";
  write_field_json(out, c.higgs.phi_z);
  out << "}\n";
}

Configuration read_configuration(const std::string& path, const Grid& expected) {
  const nlohmann::json j = load_json(path);
  if (!j.contains("a_zbar") || !j.contains("phi_z"))
    throw std::invalid_argument("configuration file: expected fields a_zbar and phi_z");
  return Configuration(parse_field(j.at("a_zbar"), expected), parse_field(j.at("phi_z"), expected));
}

nlohmann::json to_json(const BilinearReport& r) {
  nlohmann::json j;
  j["g"] = r.g;
  j["omega"] = r.omega;
  j["q1"] = r.q1;
  j["q2"] = r.q2;
  j["q_complex"] = cplx_json(r.q_complex);
  j["omega123"] = nlohmann::json::array(
      {cplx_json(r.omega123[0]), cplx_json(r.omega123[1]), cplx_json(r.omega123[2])});
  j["identity_residuals"] = r.identity_residuals;
  return j;
}

nlohmann::json to_json(const LambdaScanReport& r) {
  nlohmann::json j;
  j["K"] = r.K;
  auto ls = nlohmann::json::array();
  for (cplx l : r.lambdas) ls.push_back(cplx_json(l));
  j["lambdas"] = ls;
  j["flatness_norms"] = r.flatness_norms;
  j["decomposition_residuals"] = r.decomposition_residuals;
  return j;
}

void write_trace_jsonl(const std::string& path, const SolveTrace& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const SolveRecord& rec : t.records) {
    nlohmann::json j;
    j["iter"] = rec.iter;
    j["energy"] = rec.energy;
    j["r1_norm"] = rec.r1_norm;
    j["r2_norm"] = rec.r2_norm;
    j["step"] = rec.step;
    out << j.dump() << "\n";
  }
  nlohmann::json fin;
  fin["status"] = to_string(t.status);
  out << fin.dump() << "\n";
}

}  // namespace hitchin
