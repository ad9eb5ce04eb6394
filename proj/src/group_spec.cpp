#include <sstream>

#include "powerspec/error.hpp"
#include "powerspec/groups.hpp"

namespace powerspec {

namespace {

struct FamilyInfo {
  GroupFamily family;
  const char* tag;
  std::size_t min_params;
  std::size_t max_params;
};

constexpr FamilyInfo kFamilies[] = {
    {GroupFamily::Cyclic, "cyclic", 1, 1},      {GroupFamily::Dihedral, "dihedral", 1, 1},
    {GroupFamily::Dicyclic, "dicyclic", 1, 1},  {GroupFamily::Frobenius, "frobenius", 2, 2},
    {GroupFamily::FPqr, "fpqr", 3, 3},          {GroupFamily::Gi5, "gi5", 3, 4},
    {GroupFamily::ZpZp2, "zpzp2", 1, 1},        {GroupFamily::ElemAbelianP3, "elemab3", 1, 1},
    {GroupFamily::ZpSdZp2, "zpsdzp2", 1, 1},
};

const FamilyInfo& info(GroupFamily f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw Error("unknown group family");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& s, const std::string& context) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument("bad integer '" + s + "' in group spec '" + context + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InvalidArgument("integer out of range in group spec '" + context + "'");
  }
}

GroupFactor parse_factor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidArgument("group spec '" + text + "' needs the form family:params");
  const std::string tag = trim(text.substr(0, colon));
  const FamilyInfo* found = nullptr;
  for (const auto& i : kFamilies)
    if (tag == i.tag) found = &i;
  if (!found) throw InvalidArgument("unknown group family '" + tag + "'");
  GroupFactor f{found->family, {}};
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) f.params.push_back(parse_uint(trim(item), text));
  if (f.params.size() < found->min_params || f.params.size() > found->max_params)
    throw InvalidArgument("wrong number of parameters for '" + tag + "'");
  return f;
}

FiniteGroup build_factor(const GroupFactor& f) {
  const auto& a = f.params;
  switch (f.family) {
    case GroupFamily::Cyclic: return make_cyclic(a[0]);
    case GroupFamily::Dihedral: return make_dihedral(a[0]);
    case GroupFamily::Dicyclic: return make_dicyclic(a[0]);
    case GroupFamily::Frobenius: return make_frobenius(a[0], a[1]);
    case GroupFamily::FPqr: return make_f_p_qr(a[0], a[1], a[2]);
    case GroupFamily::Gi5: return make_g_i5(a[0], a[1], a[2], a.size() > 3 ? a[3] : 1);
    case GroupFamily::ZpZp2: return make_zp_zp2(a[0]);
    case GroupFamily::ElemAbelianP3: return make_elementary_abelian_p3(a[0]);
    case GroupFamily::ZpSdZp2: return make_zp2_semidirect_zp(a[0]);
  }
  throw Error("unknown group family");
}

std::uint64_t factor_order(const GroupFactor& f) {
  const auto& a = f.params;
  switch (f.family) {
    case GroupFamily::Cyclic: return a[0];
    case GroupFamily::Dihedral: return 2 * a[0];
    case GroupFamily::Dicyclic: return 4 * a[0];
    case GroupFamily::Frobenius: return a[0] * a[1];
    case GroupFamily::FPqr:
    case GroupFamily::Gi5: return a[0] * a[1] * a[2];
    case GroupFamily::ZpZp2:
    case GroupFamily::ElemAbelianP3:
    case GroupFamily::ZpSdZp2: return a[0] * a[0] * a[0];
  }
  return 0;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  GroupSpec spec;
  std::string rest = text;
  for (;;) {
    const auto pos = rest.find(" x ");
    spec.factors.push_back(parse_factor(trim(rest.substr(0, pos))));
    if (pos == std::string::npos) break;
    rest = rest.substr(pos + 3);
  }
  return spec;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += " x ";
    out += info(factors[k].family).tag;
    out += ':';
    for (std::size_t i = 0; i < factors[k].params.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(factors[k].params[i]);
    }
  }
  return out;
}

FiniteGroup GroupSpec::build() const {
  if (factors.empty()) throw InvalidArgument("empty group spec");
  if (order() > 5000) throw InvalidArgument("group order " + std::to_string(order()) + " exceeds the 5000 limit");
  FiniteGroup g = build_factor(factors[0]);
  for (std::size_t k = 1; k < factors.size(); ++k) g = direct_product(g, build_factor(factors[k]));
  return g;
}

std::uint64_t GroupSpec::order() const {
  std::uint64_t n = 1;
  for (const auto& f : factors) n *= factor_order(f);
  return n;
}

}  // namespace powerspec
