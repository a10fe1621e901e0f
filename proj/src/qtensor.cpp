#include "qck/qtensor.hpp"

#include "qck/errors.hpp"

namespace qck {

Sig sig_mul(const Sig& s, const Sig& t) {
  if (s.zero || t.zero) return Sig::Zero();
  if (s.plus > 0 && t.minus > 0) return Sig::Zero();
  return Sig::Pair(s.minus + t.minus, s.plus + t.plus);
}

std::string to_string(const Sig& s) {
  if (s.zero) return "0";
  return std::string(s.minus, '-') + std::string(s.plus, '+');
}

Sig sig_of_unchecked(const QuasiCrystalTable& t, int x, int i) {
  ExtInt e = t.eps_at(x, i);
  if (e.is_pos_inf()) return Sig::Zero();
  return Sig::Pair(static_cast<int>(e.value()), static_cast<int>(t.phi_at(x, i).value()));
}

Sig sig_of(const QuasiCrystalTable& t, int x, int i) {
  if (!is_seminormal(t)) throw NotSeminormal("signatures need a seminormal quasi-crystal");
  return sig_of_unchecked(t, x, i);
}

QuasiCrystalTable qtensor(const QuasiCrystalTable& t1, const QuasiCrystalTable& t2) {
  if (!(t1.root == t2.root)) throw MismatchedType("quasi-tensor of different types");
  if (!is_seminormal(t1) || !is_seminormal(t2))
    throw NotSeminormal("the quasi-tensor product needs seminormal factors");
  QuasiCrystalTable t(t1.root);
  const int N2 = t2.size();
  for (int x = 0; x < t1.size(); ++x)
    for (int y = 0; y < N2; ++y)
      t.add("(" + t1.elements[x] + "," + t2.elements[y] + ")", t1.wt[x] + t2.wt[y]);

  const ExtInt inf = ExtInt::pos_inf();
  for (int x = 0; x < t1.size(); ++x) {
    for (int y = 0; y < N2; ++y) {
      const int xy = x * N2 + y;
      for (int i = 1; i <= t.index_count(); ++i) {
        const ExtInt ex = t1.eps_at(x, i), px = t1.phi_at(x, i);
        const ExtInt ey = t2.eps_at(y, i), py = t2.phi_at(y, i);
        // lowerable left meets raisable right, or an infinity in a factor
        if ((px > 0 && ey > 0) || ex.is_pos_inf() || ey.is_pos_inf()) {
          t.eps[xy][i - 1] = inf;
          t.phi[xy][i - 1] = inf;
          continue;
        }
        const std::int64_t wx = t1.root.pairing(t1.wt[x], i);
        const std::int64_t wy = t1.root.pairing(t2.wt[y], i);
        t.eps[xy][i - 1] = max(ex, ey - wx);
        t.phi[xy][i - 1] = max(px + ExtInt(wy), py);
        if (px >= ey) {
          if (int z = t1.e_at(x, i); z != kUndef) t.e[xy][i - 1] = z * N2 + y;
        } else if (int z = t2.e_at(y, i); z != kUndef) {
          t.e[xy][i - 1] = x * N2 + z;
        }
        if (px > ey) {
          if (int z = t1.f_at(x, i); z != kUndef) t.f[xy][i - 1] = z * N2 + y;
        } else if (int z = t2.f_at(y, i); z != kUndef) {
          t.f[xy][i - 1] = x * N2 + z;
        }
      }
    }
  }
  return t;
}

MFold mfold(const std::vector<Sig>& letters) {
  const std::size_t m = letters.size();
  MFold r;
  // p = max{k : eps(x_k) > 0} (0 if none), q = min{l : phi(x_l) > 0} (m+1 if none), 1-based
  std::size_t p = 0, q = m + 1;
  bool inf = false;
  for (std::size_t k = 1; k <= m; ++k) {
    const Sig& s = letters[k - 1];
    if (s.zero) {
      inf = true;
      continue;
    }
    if (s.minus > 0) p = k;
    if (s.plus > 0 && q == m + 1) q = k;
  }
  if (inf || p > q) {
    r.sig = Sig::Zero();
    return r;
  }
  int eps = 0, phi = 0;
  for (std::size_t k = 1; k <= p; ++k) eps += letters[k - 1].minus;
  for (std::size_t l = q; l <= m; ++l) phi += letters[l - 1].plus;
  r.sig = Sig::Pair(eps, phi);
  if (p > 0) r.e_pos = p - 1;
  if (q <= m) r.f_pos = q - 1;
  return r;
}

}  // namespace qck
