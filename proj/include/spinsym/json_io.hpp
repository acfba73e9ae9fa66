#pragma once

#include "spinsym/correspondence.hpp"
#include "spinsym/sphere.hpp"
#include "spinsym/su2_basis.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace spinsym::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "spinsym/1";

Json sqrt_rational_json(const SqrtRational& v);

Json harmonic_json(const sphere::HarmonicVector& f);
sphere::HarmonicVector harmonic_from_json(const Json& j);

Json chars_json(const corr::CharacteristicNumbers& chars);
corr::CharacteristicNumbers chars_from_json(const Json& j);

Json dense_matrix_json(const su2::MatrixXcd& m);
su2::MatrixXcd dense_matrix_from_json(const Json& j);

Json basis_matrix_json(const su2::BasisMatrix& e);

std::vector<sphere::SpherePoint> points_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace spinsym::io
