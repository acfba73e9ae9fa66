#include "spinsym/json_io.hpp"

#include <fstream>

namespace spinsym::io {

Json sqrt_rational_json(const SqrtRational& v) {
  Json j;
  j["sign"] = v.sign();
  j["radicand"] = numerator(v.radicand()).str() + "/" + denominator(v.radicand()).str();
  j["decimal"] = v.to_double();
  return j;
}

Json harmonic_json(const sphere::HarmonicVector& f) {
  Json entries = Json::array();
  for (int l = 0; l <= f.cap(); ++l) {
    for (int m = -l; m <= l; ++m) {
      const auto v = f.at(l, m);
      if (v == sphere::Complex(0.0)) continue;
      entries.push_back({{"l", l}, {"m", m}, {"re", v.real()}, {"im", v.imag()}});
    }
  }
  Json j;
  j["n"] = f.cap();
  j["coefficients"] = std::move(entries);
  return j;
}

sphere::HarmonicVector harmonic_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  sphere::HarmonicVector f(n);
  for (const auto& e : j.at("coefficients")) {
    f.set(e.at("l").get<int>(), e.at("m").get<int>(),
          {e.at("re").get<double>(), e.value("im", 0.0)});
  }
  return f;
}

Json chars_json(const corr::CharacteristicNumbers& chars) {
  Json j;
  j["n"] = chars.n;
  j["c"] = chars.c;
  return j;
}

corr::CharacteristicNumbers chars_from_json(const Json& j) {
  return corr::CharacteristicNumbers(j.at("n").get<int>(),
                                     j.at("c").get<std::vector<double>>());
}

Json dense_matrix_json(const su2::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  Json j;
  j["n"] = static_cast<int>(m.rows()) - 1;
  j["rows"] = std::move(rows);
  return j;
}

su2::MatrixXcd dense_matrix_from_json(const Json& j) {
  const auto& rows = j.at("rows");
  const int dim = static_cast<int>(rows.size());
  su2::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const auto& row = rows[r];
    if (static_cast<int>(row.size()) != dim) throw DimensionMismatch("matrix JSON is not square");
    for (int c = 0; c < dim; ++c) {
      m(r, c) = std::complex<double>(row[c][0].get<double>(), row[c][1].get<double>());
    }
  }
  return m;
}

Json basis_matrix_json(const su2::BasisMatrix& e) {
  Json diag = Json::array();
  for (const auto& v : e.diag) diag.push_back(v.str());
  Json j;
  j["n"] = e.n;
  j["m"] = e.offset;
  j["diag"] = std::move(diag);
  return j;
}

std::vector<sphere::SpherePoint> points_from_json(const Json& j) {
  std::vector<sphere::SpherePoint> pts;
  for (const auto& e : j) {
    if (e.contains("x")) {
      pts.push_back(sphere::SpherePoint::from_xyz(e.at("x").get<double>(),
                                                  e.at("y").get<double>(),
                                                  e.at("z").get<double>()));
    } else {
      pts.push_back(sphere::SpherePoint::from_angles(e.at("theta").get<double>(),
                                                     e.at("phi").get<double>()));
    }
  }
  return pts;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace spinsym::io
