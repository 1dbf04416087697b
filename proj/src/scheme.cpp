#include "schemata/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schemata {

DvPair::DvPair(Metavariable m, Metavariable n) {
  if (m == n) throw std::invalid_argument("DV pair needs two distinct metavariables");
  if (n < m) std::swap(m, n);
  a = m;
  b = n;
}

std::string to_string(const DvPair& p) {
  return "{" + to_string(p.a) + "," + to_string(p.b) + "}";
}

bool DvSet::contains(Metavariable m, Metavariable n) const {
  if (m == n) return false;
  return pairs_.count(DvPair(m, n)) > 0;
}

bool DvSet::contains_all(const DvSet& other) const {
  return std::includes(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end());
}

DvSet DvSet::restricted_to(const MvSet& keep) const {
  DvSet out;
  for (const DvPair& p : pairs_)
    if (keep.count(p.a) && keep.count(p.b)) out.insert(p);
  return out;
}

void Substitution::set_var(uint32_t mv_index, Var image) {
  if (image.kind == VarKind::Meta && image.index == mv_index) {
    var_map_.erase(mv_index);
    return;
  }
  var_map_[mv_index] = image;
}

void Substitution::set_fm(uint32_t mv_index, Formula image) {
  if (image.kind() == Formula::Kind::FmVar && image.fm_index() == mv_index) {
    fm_map_.erase(mv_index);
    return;
  }
  fm_map_[mv_index] = std::move(image);
}

Var Substitution::var_image(uint32_t mv_index) const {
  auto it = var_map_.find(mv_index);
  return it == var_map_.end() ? meta_var(mv_index) : it->second;
}

std::optional<Formula> Substitution::fm_image(uint32_t mv_index) const {
  auto it = fm_map_.find(mv_index);
  if (it == fm_map_.end()) return std::nullopt;
  return it->second;
}

bool Substitution::is_identity() const { return var_map_.empty() && fm_map_.empty(); }

bool Substitution::maps_into_meta() const {
  for (const auto& [i, v] : var_map_)
    if (v.kind != VarKind::Meta) return false;
  for (const auto& [i, f] : fm_map_)
    if (!is_meta_formula(f)) return false;
  return true;
}

bool Substitution::maps_into_object() const {
  for (const auto& [i, v] : var_map_)
    if (v.kind != VarKind::Object) return false;
  for (const auto& [i, f] : fm_map_)
    if (!is_object_formula(f)) return false;
  return true;
}

MvSet Substitution::image_occurring(Metavariable m) const {
  MvSet out;
  if (m.kind == MvKind::Variable) {
    Var v = var_image(m.index);
    if (v.kind == VarKind::Meta) out.insert(var_mv(v.index));
  } else {
    auto f = fm_image(m.index);
    if (f)
      collect_occurring(*f, out);
    else
      out.insert(m);
  }
  return out;
}

int64_t Substitution::max_active_index() const {
  int64_t n = -1;
  auto bump = [&n](uint32_t i) { n = std::max<int64_t>(n, i); };
  for (const auto& [i, v] : var_map_) {
    bump(i);
    if (v.kind == VarKind::Meta) bump(v.index);
  }
  for (const auto& [i, f] : fm_map_) {
    bump(i);
    for (Metavariable m : occurring(f)) bump(m.index);
  }
  return n;
}

std::string Substitution::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, v] : var_map_) {
    os << (first ? "" : " ; ") << "x" << i << " := " << to_string(v);
    first = false;
  }
  for (const auto& [i, f] : fm_map_) {
    os << (first ? "" : " ; ") << "f" << i << " := " << render(f);
    first = false;
  }
  return first ? "(identity)" : os.str();
}

Formula apply_subst(const Substitution& s, const Formula& f) {
  auto map_var = [&s](Var v) { return v.kind == VarKind::Meta ? s.var_image(v.index) : v; };
  switch (f.kind()) {
    case Formula::Kind::FmVar: {
      auto img = s.fm_image(f.fm_index());
      return img ? *img : f;
    }
    case Formula::Kind::Equals:
      return Formula::equals(map_var(f.eq_lhs()), map_var(f.eq_rhs()));
    case Formula::Kind::Pred: {
      std::vector<Var> args;
      args.reserve(f.pred_args().size());
      for (Var v : f.pred_args()) args.push_back(map_var(v));
      return Formula::pred(f.pred_name(), std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::negation(apply_subst(s, f.child()));
    case Formula::Kind::Implies:
      return Formula::implies(apply_subst(s, f.lhs()), apply_subst(s, f.rhs()));
    case Formula::Kind::Forall:
      return Formula::forall(map_var(f.bound()), apply_subst(s, f.child()));
  }
  return f;
}

Substitution compose(const Substitution& second, const Substitution& first) {
  Substitution out;
  for (const auto& [i, v] : first.var_map()) {
    Var img = v.kind == VarKind::Meta ? second.var_image(v.index) : v;
    out.set_var(i, img);
  }
  for (const auto& [i, v] : second.var_map())
    if (!first.var_map().count(i)) out.set_var(i, v);
  for (const auto& [i, f] : first.fm_map()) out.set_fm(i, apply_subst(second, f));
  for (const auto& [i, f] : second.fm_map())
    if (!first.fm_map().count(i)) out.set_fm(i, f);
  return out;
}

DvSet propagate_dv(const DvSet& d, const Substitution& s) {
  DvSet out;
  for (const DvPair& p : d.pairs()) {
    MvSet va = s.image_occurring(p.a);
    MvSet vb = s.image_occurring(p.b);
    for (Metavariable m : va)
      for (Metavariable n : vb)
        if (m != n) out.insert(m, n);
  }
  return out;
}

Scheme::Scheme(std::vector<Formula> hypotheses, Formula conclusion, DvSet dv)
    : hyps_(std::move(hypotheses)), concl_(std::move(conclusion)) {
  dv_ = dv.restricted_to(occurring_mvs());
}

Scheme::Scheme(Formula conclusion, DvSet dv)
    : Scheme(std::vector<Formula>{}, std::move(conclusion), std::move(dv)) {}

MvSet Scheme::occurring_mvs() const {
  MvSet out;
  for (const Formula& h : hyps_) collect_occurring(h, out);
  if (!concl_.empty()) collect_occurring(concl_, out);
  return out;
}

std::string Scheme::describe() const {
  std::ostringstream os;
  for (size_t i = 0; i < hyps_.size(); ++i) os << render(hyps_[i]) << " & ";
  if (!hyps_.empty()) os << "=> ";
  os << render(concl_);
  for (const DvPair& p : dv_.pairs()) os << " , DV" << to_string(p);
  return os.str();
}

bool operator==(const Scheme& a, const Scheme& b) {
  if (!(a.concl_ == b.concl_) || !(a.dv_ == b.dv_)) return false;
  if (a.hyps_.size() != b.hyps_.size()) return false;
  std::vector<Formula> ha = a.hyps_, hb = b.hyps_;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  return ha == hb;
}

std::optional<LegitimacyViolation> check_legitimate(const Substitution& s, const Scheme& scheme) {
  // DV semantics: the images of a DV pair must share no variables. At the
  // scheme level these are metavariables, across the object embedding they
  // are object variables; both are checked.
  auto obj_occ = [&s](Metavariable m) -> std::set<uint32_t> {
    if (m.kind == MvKind::Variable) {
      Var v = s.var_image(m.index);
      if (v.kind == VarKind::Object) return {v.index};
      return {};
    }
    auto f = s.fm_image(m.index);
    return f ? object_vars(*f) : std::set<uint32_t>{};
  };
  for (const DvPair& p : scheme.dv().pairs()) {
    MvSet va = s.image_occurring(p.a);
    MvSet vb = s.image_occurring(p.b);
    for (Metavariable m : va)
      if (vb.count(m)) return LegitimacyViolation{p, to_string(m)};
    std::set<uint32_t> oa = obj_occ(p.a), ob = obj_occ(p.b);
    for (uint32_t v : oa)
      if (ob.count(v)) return LegitimacyViolation{p, "v" + std::to_string(v)};
  }
  return std::nullopt;
}

IllegitimateSubstitution::IllegitimateSubstitution(const LegitimacyViolation& v)
    : std::runtime_error("illegitimate substitution: DV pair " + to_string(v.pair) +
                         " shares " + v.shared),
      violation(v) {}

Scheme instantiate(const Substitution& s, const Scheme& scheme, const DvSet& extra_dv) {
  if (auto v = check_legitimate(s, scheme)) throw IllegitimateSubstitution(*v);
  std::vector<Formula> hyps;
  hyps.reserve(scheme.hypotheses().size());
  for (const Formula& h : scheme.hypotheses()) hyps.push_back(apply_subst(s, h));
  Formula concl = apply_subst(s, scheme.conclusion());
  DvSet dv = propagate_dv(scheme.dv(), s);
  dv.merge(extra_dv);
  return Scheme(std::move(hyps), std::move(concl), std::move(dv));
}

namespace {

// Working state for one-way matching. Unlike Substitution, identity bindings
// are kept so re-encounters stay consistency checks.
struct Binding {
  std::map<uint32_t, Var> vars;
  std::map<uint32_t, Formula> fms;

  bool bind_var(uint32_t mv_index, Var image) {
    auto [it, inserted] = vars.emplace(mv_index, image);
    return inserted || it->second == image;
  }

  bool bind_fm(uint32_t mv_index, const Formula& image) {
    auto [it, inserted] = fms.emplace(mv_index, image);
    return inserted || it->second == image;
  }

  Substitution to_substitution() const {
    Substitution s;
    for (const auto& [i, v] : vars) s.set_var(i, v);
    for (const auto& [i, f] : fms) s.set_fm(i, f);
    return s;
  }
};

bool match_rec(const Formula& templ, const Formula& target, Binding& b) {
  if (templ.kind() == Formula::Kind::FmVar) return b.bind_fm(templ.fm_index(), target);
  if (templ.kind() != target.kind()) return false;
  switch (templ.kind()) {
    case Formula::Kind::Equals:
      return templ.eq_lhs().kind == VarKind::Meta && templ.eq_rhs().kind == VarKind::Meta &&
             b.bind_var(templ.eq_lhs().index, target.eq_lhs()) &&
             b.bind_var(templ.eq_rhs().index, target.eq_rhs());
    case Formula::Kind::Pred: {
      if (templ.pred_name() != target.pred_name()) return false;
      if (templ.pred_args().size() != target.pred_args().size()) return false;
      for (size_t i = 0; i < templ.pred_args().size(); ++i) {
        if (templ.pred_args()[i].kind != VarKind::Meta) return false;
        if (!b.bind_var(templ.pred_args()[i].index, target.pred_args()[i])) return false;
      }
      return true;
    }
    case Formula::Kind::Not:
      return match_rec(templ.child(), target.child(), b);
    case Formula::Kind::Implies:
      return match_rec(templ.lhs(), target.lhs(), b) && match_rec(templ.rhs(), target.rhs(), b);
    case Formula::Kind::Forall:
      return templ.bound().kind == VarKind::Meta &&
             b.bind_var(templ.bound().index, target.bound()) &&
             match_rec(templ.child(), target.child(), b);
    default:
      return false;
  }
}

}  // namespace

std::optional<Substitution> match_formula(const Formula& templ, const Formula& target) {
  Binding b;
  if (match_rec(templ, target, b)) return b.to_substitution();
  return std::nullopt;
}

std::optional<Substitution> is_instance(const Scheme& psi, const Scheme& phi) {
  if (psi.hypotheses().size() != phi.hypotheses().size()) return std::nullopt;

  const size_t n = phi.hypotheses().size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  do {
    Binding b;
    if (!match_rec(phi.conclusion(), psi.conclusion(), b)) continue;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      ok = match_rec(phi.hypotheses()[i], psi.hypotheses()[perm[i]], b);
    if (!ok) continue;
    Substitution s = b.to_substitution();
    if (check_legitimate(s, phi)) continue;
    if (!psi.dv().contains_all(propagate_dv(phi.dv(), s))) continue;
    return s;
  } while (std::next_permutation(perm.begin(), perm.end()));

  return std::nullopt;
}

}  // namespace schemata
