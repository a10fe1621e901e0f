#include "qck/mutate.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "qck/errors.hpp"

namespace qck {

std::string to_string(MutationKind k) {
  static const char* names[] = {"phi-shift", "eps-shift", "redirect-e", "delete-f",
                                "add-e",     "wt-shift",  "+inf-with-edge", "-inf-with-edge"};
  return names[static_cast<int>(k)];
}

namespace {

bool eligible(const QuasiCrystalTable& t, MutationKind k, int x, int i) {
  const bool fin = t.eps_at(x, i).finite() && t.phi_at(x, i).finite();
  const bool edge = t.e_at(x, i) != kUndef || t.f_at(x, i) != kUndef;
  switch (k) {
    case MutationKind::PhiShift:
    case MutationKind::EpsShift:
    case MutationKind::WtShift: return fin;
    case MutationKind::RedirectE: return t.e_at(x, i) != kUndef && t.size() > 1;
    case MutationKind::DeleteF: return t.f_at(x, i) != kUndef;
    case MutationKind::AddE: return t.e_at(x, i) == kUndef;
    default: return edge;
  }
}

}  // namespace

Mutation mutate(const QuasiCrystalTable& t, MutationKind kind, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> sites;
  for (int x = 0; x < t.size(); ++x)
    for (int i = 1; i <= t.index_count(); ++i)
      if (eligible(t, kind, x, i)) sites.emplace_back(x, i);
  if (sites.empty()) throw InvalidData("no site for mutation " + to_string(kind));
  auto [x, i] = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
  Mutation m{kind, x, i, t};
  QuasiCrystalTable& u = m.table;
  auto other = [&](int avoid) {
    int y = std::uniform_int_distribution<int>(0, t.size() - 2)(rng);
    return y >= avoid ? y + 1 : y;
  };
  const int shift = std::uniform_int_distribution<int>(1, 3)(rng) * (rng() % 2 ? 1 : -1);
  switch (kind) {
    case MutationKind::PhiShift: u.phi[x][i - 1] = u.phi[x][i - 1] + ExtInt(shift); break;
    case MutationKind::EpsShift: u.eps[x][i - 1] = u.eps[x][i - 1] + ExtInt(shift); break;
    case MutationKind::RedirectE: u.e[x][i - 1] = other(t.e_at(x, i)); break;
    case MutationKind::DeleteF: u.f[x][i - 1] = kUndef; break;
    case MutationKind::AddE: u.e[x][i - 1] = std::uniform_int_distribution<int>(0, t.size() - 1)(rng); break;
    case MutationKind::WtShift: u.wt[x] = u.wt[x] + t.root.alpha(i); break;
    case MutationKind::PosInfWithEdge:
      u.eps[x][i - 1] = u.phi[x][i - 1] = ExtInt::pos_inf();
      break;
    case MutationKind::NegInfWithEdge:
      u.eps[x][i - 1] = u.phi[x][i - 1] = ExtInt::neg_inf();
      break;
  }
  return m;
}

Mutation mutate(const QuasiCrystalTable& t, std::mt19937_64& rng) {
  std::vector<MutationKind> kinds;
  for (int k = 0; k < kMutationKinds; ++k) kinds.push_back(static_cast<MutationKind>(k));
  std::shuffle(kinds.begin(), kinds.end(), rng);
  for (MutationKind k : kinds) {
    try {
      return mutate(t, k, rng);
    } catch (const InvalidData&) {
    }
  }
  throw InvalidData("table offers no mutation site");
}

}  // namespace qck
