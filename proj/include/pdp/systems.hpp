#ifndef PDP_SYSTEMS_HPP
#define PDP_SYSTEMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pdp/descent.hpp"
#include "pdp/semaev.hpp"

namespace pdp {

/// One PDP(n, m, n') instance: decompose R into m factor-base points.
struct PdpInstance {
  CurveParams E;
  int m = 0;
  unsigned n_prime = 0;
  Point R;
  std::optional<std::vector<Point>> planted;
};

enum class VariantTag { Classic, Split2, FullSplit };

const char* variant_name(VariantTag tag);
VariantTag parse_variant(const std::string& name);

/// A PDP equation system over F_{2^n} before descent: equations, their
/// Semaev classes, and the ordered boolean block layout (factor-base
/// variables first, auxiliaries after).
struct SystemVariant {
  VariantTag tag;
  int m = 0;
  unsigned n_prime = 0;
  std::vector<MvPoly> field_equations;
  std::vector<SemaevClass> classes;
  std::vector<std::pair<std::string, unsigned>> blocks;

  unsigned fb_bits() const;     // sum of factor-base block dims (= m n')
  unsigned total_bits() const;  // all blocks
};

/// Single equation S_{m+1}(x_1..x_m, x_R): blocks all of dimension n'.
SystemVariant build_classic(const PdpInstance& inst);
/// The two-equation split systems for m = 3, 4, 5 with one n-dimensional
/// auxiliary (x12 or x123).
SystemVariant build_split(const PdpInstance& inst);
/// Four S_3-class equations over x1..x5, x12, x34, x50 (m = 5 only).
SystemVariant build_full_split_m5(const PdpInstance& inst);
SystemVariant build_variant(const PdpInstance& inst, VariantTag tag);

BoolSystem descend_variant(const SystemVariant& v, const ContextPtr& ctx);

enum class InstanceMode { Planted, Random };

/// Planted mode samples m factor-base points and sets R to their sum
/// (resampling until R is affine); random mode samples R uniformly among
/// points with nonempty lift.
PdpInstance generate_instance(const CurveParams& E, int m, unsigned n_prime,
                              InstanceMode mode, uint64_t seed,
                              const FactorBase* fb = nullptr);

bool verify_decomposition(const PdpInstance& inst, const std::vector<Point>& points);

/// Lifts each x and searches the <= 2^m sign choices for a tuple summing to R.
std::optional<std::vector<Point>> points_from_x(const CurveParams& E, const Point& R,
                                                const std::vector<FieldElement>& xs);

// Instance file format: curve line, "m;n_prime;R" line, one planted point per line.
std::string instance_to_string(const PdpInstance& inst);
PdpInstance parse_instance(const std::string& text);

}  // namespace pdp

#endif
