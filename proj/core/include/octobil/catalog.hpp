#pragma once

#include <string>
#include <vector>

#include "octobil/bilinear_map.hpp"

namespace octobil {

/// Returns the named builtin map, constructing and caching it on first use.
/// Fixed ids: real_mul, complex_mul, quaternion_mul, octonion_mul,
/// commutator_map, intro_f_deg1, intro_g, lam_map, adem_map, f1, f2, f3,
/// main_f. Parametric ids: "poly_mul(r,s)" and "complex_poly_mul(r,s)" with
/// positive integers (r, s even for the complex form).
/// Throws std::invalid_argument for unknown ids or bad parameters.
MapPtr builtin(const std::string& id);

/// Fixed builtin ids (without the parametric families), in catalog order.
const std::vector<std::string>& builtin_ids();

MapPtr make_poly_mul(int r, int s);
MapPtr make_complex_poly_mul(int r, int s);

}  // namespace octobil
