#pragma once

#include <string>

#include "json.hpp"

#include "clbits/classify.hpp"

namespace clbits {

/// True when CLBITS_ASCII is set to a non-empty value other than "0".
bool ascii_forced_by_env();

/// The Cl(m,m) EFB matrix: rows are h signatures, columns h o g signatures,
/// entries the matrix units E_ab as signed words. 1 <= m <= 4.
std::string efb_table_text(unsigned m, bool ascii);
/// {m, entries: [{row, col, sign, word}]} with sign +1 / -1.
nlohmann::json efb_table_json(unsigned m);

/// The nu cube: one division algebra per vertex, axes nu_0, nu_1, nu_2.
std::string cube_text(bool ascii);
nlohmann::json cube_json();

std::string classification_text(const AlgebraClass& c, bool ascii);
/// {k, l, n, nu, n_mod8, nu_mod8, base, matrix_size, doubled, central, simple,
///  omega_sq, tau_sq, omega_tau_sq, cube, varlamov}; tau fields null for odd n.
nlohmann::json classification_json(const AlgebraClass& c);

}  // namespace clbits
