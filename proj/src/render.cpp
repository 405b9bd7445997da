#include "clbits/render.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "clbits/efb.hpp"

namespace clbits {

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0U) != 0x80U) ++w;
  return w;
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string minus_sign(bool ascii) { return ascii ? "-" : "−"; }

nlohmann::json sign_json(SignBit s) { return s.value(); }

void require_table_range(unsigned m) {
  if (m < 1 || m > 4) throw std::invalid_argument("efb-table supports 1 <= m <= 4, got " + std::to_string(m));
}

}  // namespace

bool ascii_forced_by_env() {
  const char* v = std::getenv("CLBITS_ASCII");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

std::string efb_table_text(unsigned m, bool ascii) {
  require_table_range(m);
  const std::uint32_t dim = std::uint32_t{1} << m;
  std::vector<std::vector<std::string>> cells(dim + 1, std::vector<std::string>(dim + 1));
  for (std::uint32_t i = 0; i < dim; ++i) {
    const std::string label = signature_label(i, m, ascii) + " (" + std::to_string(i) + ")";
    cells[0][i + 1] = label;
    cells[i + 1][0] = label;
  }
  for (std::uint32_t a = 0; a < dim; ++a) {
    for (std::uint32_t b = 0; b < dim; ++b) {
      const std::string word = efb_element(a, b, m).to_string();
      cells[a + 1][b + 1] = matrix_unit_sign(a, b, m).is_negative() ? minus_sign(ascii) + " " + word : word;
    }
  }
  std::vector<std::size_t> width(dim + 1, 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], display_width(row[j]));

  std::ostringstream os;
  os << "EFB of Cl(" << m << "," << m << "): rows h, columns h" << (ascii ? "*" : "∘") << "g\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) line += " | ";
      line += pad(row[j], width[j]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

nlohmann::json efb_table_json(unsigned m) {
  require_table_range(m);
  const std::uint32_t dim = std::uint32_t{1} << m;
  nlohmann::json entries = nlohmann::json::array();
  for (std::uint32_t a = 0; a < dim; ++a)
    for (std::uint32_t b = 0; b < dim; ++b)
      entries.push_back({{"row", a},
                         {"col", b},
                         {"sign", sign_json(matrix_unit_sign(a, b, m))},
                         {"word", efb_element(a, b, m).to_string()}});
  return {{"m", m}, {"entries", entries}};
}

namespace {

// Character canvas addressed by glyph, so multi-byte symbols occupy one cell.
class Canvas {
 public:
  Canvas(std::size_t width, std::size_t height) : cells_(height, std::vector<std::string>(width, " ")) {}

  void put(std::size_t col, std::size_t row, const std::string& text) {
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t len = 1;
      while (i + len < text.size() && (static_cast<unsigned char>(text[i + len]) & 0xC0U) == 0x80U) ++len;
      if (col < cells_[row].size()) cells_[row][col] = text.substr(i, len);
      ++col;
      i += len;
    }
  }

  std::string str() const {
    std::string out;
    for (const auto& row : cells_) {
      std::string line;
      for (const auto& c : row) line += c;
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> cells_;
};

}  // namespace

std::string cube_text(bool ascii) {
  // front face: nu_1 = 0, back face shifted by (+8, -3); bottom: nu_2 = 0
  constexpr std::size_t kDx = 24;  // nu_0 edge
  constexpr std::size_t kBackX = 8;
  constexpr std::size_t kBackY = 3;
  constexpr std::size_t kDz = 5;  // nu_2 edge
  const auto vertex = [&](int nu) {
    const std::size_t x = 2 + (nu & 1 ? kDx : 0) + (nu & 2 ? kBackX : 0);
    const std::size_t y = kBackY + kDz - (nu & 2 ? kBackY : 0) - (nu & 4 ? kDz : 0);
    return std::pair{x, y};
  };
  const auto label = [&](int nu) { return "(" + std::to_string(nu) + ") " + division_algebra(nu).pretty(ascii); };
  Canvas canvas(2 + kDx + kBackX + 12, kBackY + kDz + 1);
  // hidden and visible edges alike, drawn before the labels
  for (int nu = 0; nu < 8; ++nu) {
    const auto [x, y] = vertex(nu);
    if (!(nu & 1))
      for (std::size_t c = x + display_width(label(nu)) + 1; c < x + kDx - 1; ++c) canvas.put(c, y, "-");
    if (!(nu & 4))
      for (std::size_t r = y - kDz + 1; r < y; ++r) canvas.put(x + 1, r, "|");
    if (!(nu & 2))
      for (std::size_t t = 1; t < kBackY; ++t) canvas.put(x + 1 + t * kBackX / kBackY, y - t, "/");
  }
  for (int nu = 0; nu < 8; ++nu) {
    const auto [x, y] = vertex(nu);
    canvas.put(x, y, label(nu));
  }
  const std::string mi = minus_sign(ascii);
  std::ostringstream os;
  os << canvas.str() << "\n"
     << "axes: nu_0 left to right, nu_1 front to back, nu_2 bottom to top\n"
     << "nu_0 = 0 face: central simple (n even); nu_0 = 1 face: not central (n odd)\n"
     << "nu_1 = 0 face: omega^2 = +1; nu_1 = 1 face: omega^2 = " << mi << "1\n"
     << "nu_2 = 0 face: R (or C); nu_2 = 1 face: H (or C)\n";
  return os.str();
}

nlohmann::json cube_json() {
  nlohmann::json vertices = nlohmann::json::array();
  for (int nu = 0; nu < 8; ++nu) {
    const auto bits = cube_coordinates(nu);
    const BaseAlgebra base = division_algebra(nu);
    vertices.push_back({{"nu", nu},
                        {"bits", {bits[0], bits[1], bits[2]}},
                        {"algebra", base.name()},
                        {"central", bits[0] == 0},
                        {"omega_sq", sign_json(sign_bit(nu, 1))}});
  }
  return {{"vertices", vertices},
          {"faces",
           {{"nu0", {{"0", "central simple"}, {"1", "not central"}}},
            {"nu1", {{"0", "omega^2 = +1"}, {"1", "omega^2 = -1"}}},
            {"nu2", {{"0", "R"}, {"1", "H"}}}}}};
}

std::string classification_text(const AlgebraClass& c, bool ascii) {
  std::ostringstream os;
  const auto& s = c.signature;
  const std::string sq = ascii ? "^2" : "²";
  const std::string omega = ascii ? "omega" : "ω";
  const std::string tau = ascii ? "tau" : "τ";
  const auto sv = [&](SignBit b) { return b.is_negative() ? minus_sign(ascii) + "1" : std::string("+1"); };

  const std::string d = c.base.division == DivisionAlgebra::R ? "R" : c.base.division == DivisionAlgebra::C ? "C" : "H";
  const std::string one = c.matrix_size == 1 ? d : d + "(" + std::to_string(c.matrix_size) + ")";
  const std::string name = c.base.doubled ? one + (ascii ? "+" : "⊕") + one : one;
  os << "Cl(" << s.k << "," << s.l << ") " << (ascii ? "~=" : "≅") << " " << name << ", "
     << (c.is_central ? "central" : "non-central") << " " << (c.is_simple ? "simple" : "not simple") << ", " << omega
     << sq << "=" << sv(c.omega_sq);
  if (c.tau_sq) os << ", " << tau << sq << "=" << sv(*c.tau_sq);
  if (c.omega_tau_sq) os << ", (" << omega << (ascii ? " " : "") << tau << ")" << sq << "=" << sv(*c.omega_tau_sq);
  os << "\n";
  os << "n=" << s.n() << " (mod 8: " << s.n_mod8() << "), nu=" << s.nu() << " (mod 8: " << s.nu_mod8()
     << "), cube (nu_0,nu_1,nu_2)=(" << c.cube[0] << "," << c.cube[1] << "," << c.cube[2] << ")";
  if (c.tau_sq) {
    os << ", (a,b,c)=(" << sv(*c.omega_tau_sq) << "," << sv(*c.tau_sq) << "," << sv(c.omega_sq) << ")";
  }
  os << "\n";
  return os.str();
}

nlohmann::json classification_json(const AlgebraClass& c) {
  const auto& s = c.signature;
  nlohmann::json j = {
      {"k", s.k},
      {"l", s.l},
      {"n", s.n()},
      {"nu", s.nu()},
      {"n_mod8", s.n_mod8()},
      {"nu_mod8", s.nu_mod8()},
      {"base", c.base.division == DivisionAlgebra::R ? "R" : c.base.division == DivisionAlgebra::C ? "C" : "H"},
      {"matrix_size", c.matrix_size},
      {"doubled", c.base.doubled},
      {"central", c.is_central},
      {"simple", c.is_simple},
      {"omega_sq", sign_json(c.omega_sq)},
      {"cube", {c.cube[0], c.cube[1], c.cube[2]}},
  };
  if (c.tau_sq && c.omega_tau_sq) {
    j["tau_sq"] = sign_json(*c.tau_sq);
    j["omega_tau_sq"] = sign_json(*c.omega_tau_sq);
    j["varlamov"] = {sign_json(*c.omega_tau_sq), sign_json(*c.tau_sq), sign_json(c.omega_sq)};
  } else {
    j["tau_sq"] = nullptr;
    j["omega_tau_sq"] = nullptr;
    j["varlamov"] = nullptr;
  }
  return j;
}

}  // namespace clbits
