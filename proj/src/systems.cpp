#include "pdp/systems.hpp"

#include <sstream>

namespace pdp {

const char* variant_name(VariantTag tag) {
  switch (tag) {
    case VariantTag::Classic: return "classic";
    case VariantTag::Split2: return "split";
    case VariantTag::FullSplit: return "fullsplit";
  }
  return "?";
}

VariantTag parse_variant(const std::string& name) {
  if (name == "classic") return VariantTag::Classic;
  if (name == "split") return VariantTag::Split2;
  if (name == "fullsplit") return VariantTag::FullSplit;
  fail(Errc::ParseError, "unknown variant '" + name + "'");
}

unsigned SystemVariant::fb_bits() const { return unsigned(m) * n_prime; }

unsigned SystemVariant::total_bits() const {
  unsigned s = 0;
  for (const auto& [name, dim] : blocks) s += dim;
  return s;
}

namespace {

FieldElement x_of_R(const PdpInstance& inst) {
  require(!inst.R.infinity, Errc::Unsupported,
          "target point is the identity; x_R undefined");
  return inst.R.x;
}

std::vector<std::string> fb_names(int m) {
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace

SystemVariant build_classic(const PdpInstance& inst) {
  require(inst.m >= 2 && inst.m <= 5, Errc::Unsupported,
          "classic variant supports 2 <= m <= 5");
  FieldElement xr = x_of_R(inst);
  SystemVariant v{VariantTag::Classic, inst.m, inst.n_prime, {}, {}, {}};
  auto names = fb_names(inst.m);
  auto vars = names;
  vars.push_back("xR");
  MvPoly S = semaev_poly(inst.E, inst.m + 1, vars);
  v.field_equations.push_back(S.evaluate_last(xr));
  v.classes.push_back(SemaevClass::bound(inst.m + 1, xr));
  for (const auto& nme : names) v.blocks.emplace_back(nme, inst.n_prime);
  return v;
}

SystemVariant build_split(const PdpInstance& inst) {
  require(inst.m >= 3 && inst.m <= 5, Errc::Unsupported,
          "split variant supports m in {3,4,5}");
  FieldElement xr = x_of_R(inst);
  const CurveParams& E = inst.E;
  const unsigned n = E.n();
  SystemVariant v{VariantTag::Split2, inst.m, inst.n_prime, {}, {}, {}};
  for (const auto& nme : fb_names(inst.m)) v.blocks.emplace_back(nme, inst.n_prime);
  if (inst.m == 3) {
    v.blocks.emplace_back("x12", n);
    v.field_equations.push_back(s3(E, "x1", "x2", "x12"));
    v.classes.push_back(SemaevClass::full(3));
    v.field_equations.push_back(s3(E, "x3", "x12", "xR").evaluate_last(xr));
    v.classes.push_back(SemaevClass::bound(3, xr));
  } else if (inst.m == 4) {
    v.blocks.emplace_back("x12", n);
    v.field_equations.push_back(s3(E, "x1", "x2", "x12"));
    v.classes.push_back(SemaevClass::full(3));
    v.field_equations.push_back(
        semaev_poly(E, 4, {"x3", "x4", "x12", "xR"}).evaluate_last(xr));
    v.classes.push_back(SemaevClass::bound(4, xr));
  } else {
    v.blocks.emplace_back("x123", n);
    v.field_equations.push_back(semaev_poly(E, 4, {"x1", "x2", "x3", "x123"}));
    v.classes.push_back(SemaevClass::full(4));
    v.field_equations.push_back(
        semaev_poly(E, 4, {"x4", "x5", "x123", "xR"}).evaluate_last(xr));
    v.classes.push_back(SemaevClass::bound(4, xr));
  }
  return v;
}

SystemVariant build_full_split_m5(const PdpInstance& inst) {
  require(inst.m == 5, Errc::Unsupported, "full split is the m = 5 construction");
  FieldElement xr = x_of_R(inst);
  const CurveParams& E = inst.E;
  const unsigned n = E.n();
  SystemVariant v{VariantTag::FullSplit, 5, inst.n_prime, {}, {}, {}};
  for (const auto& nme : fb_names(5)) v.blocks.emplace_back(nme, inst.n_prime);
  v.blocks.emplace_back("x12", n);
  v.blocks.emplace_back("x34", n);
  v.blocks.emplace_back("x50", n);
  v.field_equations.push_back(s3(E, "x1", "x2", "x12"));
  v.classes.push_back(SemaevClass::full(3));
  v.field_equations.push_back(s3(E, "x3", "x4", "x34"));
  v.classes.push_back(SemaevClass::full(3));
  v.field_equations.push_back(s3(E, "x5", "x50", "xR").evaluate_last(xr));
  v.classes.push_back(SemaevClass::bound(3, xr));
  v.field_equations.push_back(s3(E, "x12", "x34", "x50"));
  v.classes.push_back(SemaevClass::full(3));
  return v;
}

SystemVariant build_variant(const PdpInstance& inst, VariantTag tag) {
  switch (tag) {
    case VariantTag::Classic: return build_classic(inst);
    case VariantTag::Split2: return build_split(inst);
    case VariantTag::FullSplit: return build_full_split_m5(inst);
  }
  fail(Errc::Unsupported, "unknown variant");
}

BoolSystem descend_variant(const SystemVariant& v, const ContextPtr& ctx) {
  return descend(ctx, v.field_equations, v.blocks);
}

PdpInstance generate_instance(const CurveParams& E, int m, unsigned n_prime,
                              InstanceMode mode, uint64_t seed, const FactorBase* fb) {
  require(m >= 2 && m <= 5, Errc::Unsupported, "m in {2,..,5}");
  FactorBase local;
  if (!fb) {
    local = build_factor_base(E, n_prime);
    fb = &local;
  }
  require(!fb->members.empty(), Errc::EmptyFactorBase,
          "factor base is empty for this curve and n'");
  std::mt19937_64 rng(seed);
  PdpInstance inst{E, m, n_prime, Point::make_infinity(), std::nullopt};
  if (mode == InstanceMode::Random) {
    inst.R = random_point(E, rng);
    return inst;
  }
  for (int tries = 0; tries < 4096; ++tries) {
    std::vector<Point> pts;
    Point sum = Point::make_infinity();
    for (int i = 0; i < m; ++i) {
      const Point& P = fb->members[rng() % fb->members.size()];
      pts.push_back(P);
      sum = add(E, sum, P);
    }
    if (sum.infinity) continue;  // x_R must exist
    inst.R = sum;
    inst.planted = std::move(pts);
    return inst;
  }
  fail(Errc::EmptyFactorBase, "could not plant an instance with affine R");
}

bool verify_decomposition(const PdpInstance& inst, const std::vector<Point>& points) {
  if (int(points.size()) != inst.m) return false;
  Point sum = Point::make_infinity();
  for (const auto& P : points) {
    if (P.infinity) return false;
    if ((P.x.bits() >> inst.n_prime) != 0) return false;
    if (!is_on_curve(inst.E, P)) return false;
    sum = add(inst.E, sum, P);
  }
  return sum == inst.R;
}

std::optional<std::vector<Point>> points_from_x(const CurveParams& E, const Point& R,
                                                const std::vector<FieldElement>& xs) {
  std::vector<std::vector<Point>> lifts;
  for (const auto& x : xs) {
    auto l = lift_x(E, x);
    if (l.empty()) return std::nullopt;
    lifts.push_back(std::move(l));
  }
  unsigned combos = 1;
  for (const auto& l : lifts) combos *= unsigned(l.size());
  for (unsigned c = 0; c < combos; ++c) {
    unsigned idx = c;
    Point sum = Point::make_infinity();
    std::vector<Point> pick;
    for (const auto& l : lifts) {
      const Point& P = l[idx % l.size()];
      idx /= unsigned(l.size());
      pick.push_back(P);
      sum = add(E, sum, P);
    }
    if (sum == R) return pick;
  }
  return std::nullopt;
}

std::string instance_to_string(const PdpInstance& inst) {
  std::ostringstream os;
  os << curve_to_string(inst.E) << "\n";
  os << inst.m << ";" << inst.n_prime << ";" << point_to_string(inst.R) << "\n";
  if (inst.planted)
    for (const auto& P : *inst.planted) os << point_to_string(P) << "\n";
  return os.str();
}

PdpInstance parse_instance(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  require(bool(std::getline(is, line)), Errc::ParseError, "missing curve line");
  CurveParams E = parse_curve(line);
  require(bool(std::getline(is, line)), Errc::ParseError, "missing instance line");
  auto c1 = line.find(';');
  auto c2 = line.find(';', c1 + 1);
  require(c1 != std::string::npos && c2 != std::string::npos, Errc::ParseError,
          "instance line needs m;n_prime;R");
  PdpInstance inst{E, std::stoi(line.substr(0, c1)),
                   unsigned(std::stoul(line.substr(c1 + 1, c2 - c1 - 1))),
                   parse_point(E, line.substr(c2 + 1)), std::nullopt};
  std::vector<Point> planted;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    planted.push_back(parse_point(E, line));
  }
  if (!planted.empty()) {
    require(int(planted.size()) == inst.m, Errc::ParseError,
            "planted point count differs from m");
    inst.planted = std::move(planted);
  }
  return inst;
}

}  // namespace pdp
