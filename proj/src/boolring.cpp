#include "pdp/boolring.hpp"

#include <algorithm>
#include <sstream>

namespace pdp {

std::vector<unsigned> BoolMonomial::indices() const {
  std::vector<unsigned> out;
  for (unsigned k = 0; k < 4; ++k) {
    uint64_t word = w[k];
    while (word) {
      out.push_back(64 * k + unsigned(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

VarUniverse::VarUniverse(const std::vector<std::pair<std::string, unsigned>>& blocks) {
  for (const auto& [name, dim] : blocks) {
    require(dim > 0, Errc::UnknownBlock, "block '" + name + "' has dimension 0");
    require(!has_block(name), Errc::DuplicateVariable, "duplicate block '" + name + "'");
    blocks_.push_back({name, dim, total_});
    total_ += dim;
  }
  require(total_ <= BoolMonomial::kMaxVars, Errc::TooLarge,
          "universe capped at 256 variables");
}

const VarUniverse::Block& VarUniverse::block(const std::string& name) const {
  for (const auto& b : blocks_)
    if (b.name == name) return b;
  fail(Errc::UnknownBlock, "no block named '" + name + "'");
}

bool VarUniverse::has_block(const std::string& name) const {
  for (const auto& b : blocks_)
    if (b.name == name) return true;
  return false;
}

bool VarUniverse::same(const VarUniverse& o) const {
  if (total_ != o.total_ || blocks_.size() != o.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].name != o.blocks_[i].name || blocks_[i].dim != o.blocks_[i].dim)
      return false;
  return true;
}

std::string VarUniverse::var_label(unsigned idx) const {
  for (const auto& b : blocks_)
    if (idx >= b.offset && idx < b.offset + b.dim)
      return "b" + b.name + "_" + std::to_string(idx - b.offset);
  return "x" + std::to_string(idx);
}

UniversePtr make_universe(const std::vector<std::pair<std::string, unsigned>>& blocks) {
  return std::make_shared<VarUniverse>(blocks);
}

BoolPoly BoolPoly::one(UniversePtr u) {
  BoolPoly p(std::move(u));
  p.monos_.push_back(BoolMonomial::one());
  return p;
}

BoolPoly BoolPoly::variable(UniversePtr u, unsigned idx) {
  require(idx < u->total(), Errc::UnknownBlock, "variable index outside universe");
  BoolPoly p(std::move(u));
  p.monos_.push_back(BoolMonomial::single(idx));
  return p;
}

BoolPoly BoolPoly::from_sorted(UniversePtr u, std::vector<BoolMonomial> monos) {
  BoolPoly p(std::move(u));
  p.monos_ = std::move(monos);
  return p;
}

BoolPoly BoolPoly::from_unsorted(UniversePtr u, std::vector<BoolMonomial> monos) {
  std::sort(monos.begin(), monos.end(), BoolMonomialGrevlexGreater{});
  std::vector<BoolMonomial> out;
  out.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size();) {
    std::size_t j = i;
    while (j < monos.size() && monos[j] == monos[i]) ++j;
    if ((j - i) & 1) out.push_back(monos[i]);
    i = j;
  }
  BoolPoly p(std::move(u));
  p.monos_ = std::move(out);
  return p;
}

void BoolPoly::check_universe(const BoolPoly& o) const {
  require(universe_ && o.universe_ &&
              (universe_ == o.universe_ || universe_->same(*o.universe_)),
          Errc::UniverseMismatch, "boolean polynomials over different universes");
}

BoolPoly BoolPoly::operator+(const BoolPoly& o) const {
  check_universe(o);
  std::vector<BoolMonomial> out;
  out.reserve(monos_.size() + o.monos_.size());
  std::size_t i = 0, j = 0;
  while (i < monos_.size() && j < o.monos_.size()) {
    int c = BoolMonomial::cmp(monos_[i], o.monos_[j]);
    if (c > 0) out.push_back(monos_[i++]);
    else if (c < 0) out.push_back(o.monos_[j++]);
    else { ++i; ++j; }  // cancellation mod 2
  }
  out.insert(out.end(), monos_.begin() + i, monos_.end());
  out.insert(out.end(), o.monos_.begin() + j, o.monos_.end());
  return from_sorted(universe_, std::move(out));
}

BoolPoly BoolPoly::times_monomial(const BoolMonomial& v) const {
  std::vector<BoolMonomial> out;
  out.reserve(monos_.size());
  for (const auto& m : monos_) out.push_back(m.united(v));
  // unions may collide or reorder; renormalize
  return from_unsorted(universe_, std::move(out));
}

BoolPoly BoolPoly::operator*(const BoolPoly& o) const {
  check_universe(o);
  std::vector<BoolMonomial> out;
  out.reserve(monos_.size() * o.monos_.size());
  for (const auto& a : monos_)
    for (const auto& b : o.monos_) out.push_back(a.united(b));
  return from_unsorted(universe_, std::move(out));
}

int BoolPoly::evaluate(const BoolMonomial& assignment) const {
  int acc = 0;
  for (const auto& m : monos_) acc ^= assignment.contains(m) ? 1 : 0;
  return acc;
}

std::string BoolPoly::to_anf() const {
  if (monos_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : monos_) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << "1";
      continue;
    }
    bool inner = true;
    for (unsigned idx : m.indices()) {
      if (!inner) os << "*";
      inner = false;
      os << "x" << idx;
    }
  }
  return os.str();
}

namespace {
std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}
}  // namespace

BoolPoly BoolPoly::parse_anf(UniversePtr u, const std::string& line) {
  std::vector<BoolMonomial> monos;
  std::size_t pos = 0;
  const std::string text = trimmed(line);
  if (text == "0" || text.empty()) return BoolPoly::zero(std::move(u));
  while (pos <= text.size()) {
    auto next = text.find('+', pos);
    std::string term =
        trimmed(text.substr(pos, next == std::string::npos ? next : next - pos));
    pos = next == std::string::npos ? text.size() + 1 : next + 1;
    if (term.empty()) fail(Errc::ParseError, "empty ANF term");
    if (term == "1") {
      monos.push_back(BoolMonomial::one());
      continue;
    }
    BoolMonomial m;
    std::size_t fpos = 0;
    while (fpos <= term.size()) {
      auto fnext = term.find('*', fpos);
      std::string factor =
          trimmed(term.substr(fpos, fnext == std::string::npos ? fnext : fnext - fpos));
      fpos = fnext == std::string::npos ? term.size() + 1 : fnext + 1;
      require(factor.size() >= 2 && factor[0] == 'x', Errc::ParseError,
              "bad ANF factor '" + factor + "'");
      unsigned idx = 0;
      for (char c : factor.substr(1)) {
        require(isdigit(static_cast<unsigned char>(c)), Errc::ParseError,
                "bad ANF factor '" + factor + "'");
        idx = idx * 10 + unsigned(c - '0');
      }
      require(idx < u->total(), Errc::ParseError, "variable index outside universe");
      m.set(idx);
    }
    monos.push_back(m);
  }
  return from_unsorted(std::move(u), std::move(monos));
}

std::string export_anf(const BoolSystem& sys) {
  std::ostringstream os;
  os << "# ANF system; variable x<k> is bit k of the universe.\n";
  os << "# Block naming: x<k> = b<block>_<j> with j = k - offset of its block.\n";
  for (const auto& b : sys.universe->blocks())
    os << "#block " << b.name << " dim=" << b.dim << " offset=" << b.offset << "\n";
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    os << "#eq group=" << (i < sys.group.size() ? sys.group[i] : 0) << "\n";
    os << sys.equations[i].to_anf() << "\n";
  }
  return os.str();
}

BoolSystem import_anf(const std::string& text) {
  std::vector<std::pair<std::string, unsigned>> blocks;
  std::vector<std::string> lines;
  std::vector<unsigned> groups;
  std::istringstream is(text);
  std::string line;
  unsigned pending_group = 0;
  std::vector<std::pair<std::string, unsigned>> pending;
  std::vector<std::pair<unsigned, std::string>> eq_lines;
  while (std::getline(is, line)) {
    line = trimmed(line);
    if (line.empty()) continue;
    if (line.rfind("#block ", 0) == 0) {
      std::istringstream ls(line.substr(7));
      std::string name, dim_kv, off_kv;
      ls >> name >> dim_kv >> off_kv;
      require(dim_kv.rfind("dim=", 0) == 0, Errc::ParseError, "bad #block line");
      blocks.emplace_back(name, unsigned(std::stoul(dim_kv.substr(4))));
      continue;
    }
    if (line.rfind("#eq", 0) == 0) {
      auto eq = line.find("group=");
      pending_group = eq == std::string::npos ? 0 : unsigned(std::stoul(line.substr(eq + 6)));
      continue;
    }
    if (line[0] == '#') continue;
    eq_lines.emplace_back(pending_group, line);
  }
  require(!blocks.empty(), Errc::ParseError, "ANF file lacks #block headers");
  BoolSystem sys;
  sys.universe = make_universe(blocks);
  for (auto& [g, l] : eq_lines) {
    sys.equations.push_back(BoolPoly::parse_anf(sys.universe, l));
    sys.group.push_back(g);
  }
  return sys;
}

}  // namespace pdp
