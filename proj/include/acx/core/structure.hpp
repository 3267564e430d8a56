#pragma once

// Almost complex structures J on the coordinate box: J(p) is a real 4x4
// matrix with J^2 = -I, entries available as degree-2 jets.

#include <array>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "acx/core/point.hpp"
#include "acx/core/scalar_field.hpp"

namespace acx {

using Mat4Jet = std::array<RJet, 16>;  // row-major, J[i][j] = m[4*i+j]

class AlmostComplexStructure {
 public:
  virtual ~AlmostComplexStructure() = default;
  virtual Mat4Jet matrix_jets(const Point& p) const = 0;
  virtual std::string describe() const = 0;

  std::array<double, 16> matrix(const Point& p) const {
    Mat4Jet m = matrix_jets(p);
    std::array<double, 16> out;
    for (int i = 0; i < 16; ++i) out[size_t(i)] = m[size_t(i)].v;
    return out;
  }
};

using StructurePtr = std::shared_ptr<const AlmostComplexStructure>;

struct StructureReport {
  bool ok = false;
  double worst = 0.0;   // sup over grid of ||J(p)^2 + I||_inf
  Point worst_point{};
};

struct StructureError : std::runtime_error {
  StructureReport report;
  StructureError(const std::string& what, StructureReport r)
      : std::runtime_error(what), report(r) {}
};

StructurePtr jst_structure();
StructurePtr ja_structure(FieldPtr a);

// J = S J_st S^{-1}; rejects |det S| < 1e-6 anywhere on the box
StructurePtr similarity_structure(std::function<std::array<RJet, 16>(const Point&)> S,
                                  const Box& box);
// convenience: S = I + amplitude * (seeded degree-2 polynomial entries)
StructurePtr similarity_structure_seeded(unsigned long long seed, const Box& box,
                                         double amplitude = 0.1);

// wraps an arbitrary matrix provider; validates J^2 = -I on the grid and
// throws StructureError with the worst point otherwise
StructurePtr make_structure(std::function<Mat4Jet(const Point&)> provider, const Box& box,
                            double tol = 1e-9);

StructureReport validate_structure(const AlmostComplexStructure& J, const Box& box, double tol);

// parse "jst" | "ja:<expr>" | "similarity:<seed>"
StructurePtr structure_from_spec(const std::string& spec, const Box& box);

}  // namespace acx
