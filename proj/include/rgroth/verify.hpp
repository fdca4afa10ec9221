#pragma once

// Verification sweeps: each one compares independent evaluations exactly and
// stops at the first disagreement.

#include "rgroth/grothendieck.hpp"
#include "rgroth/lgv.hpp"
#include "rgroth/symfunc.hpp"
#include "rgroth/tableaux.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace rgroth {

struct Report {
  bool ok = true;
  long checked = 0;
  std::string failure;  // first failure
  std::vector<std::string> notes;

  void fail(const std::string& what) {
    if (ok) failure = what;
    ok = false;
  }
  // Records a comparison; returns false once the report has failed.
  bool expect(bool cond, const std::string& what) {
    ++checked;
    if (!cond) fail(what);
    return ok;
  }
};

namespace detail {
inline std::vector<std::vector<int>> all_vectors(int n, int max_value) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < n && v[static_cast<std::size_t>(i)] == max_value) v[static_cast<std::size_t>(i++)] = 1;
    if (i == n) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

inline std::string vec_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string case_str(const Partition& l, const Partition& m, const std::vector<int>& r, const std::vector<int>& s) {
  return l.str() + "/" + m.str() + " r=" + vec_str(r) + " s=" + vec_str(s);
}
}  // namespace detail

// bialternant = Jacobi-Trudi = modified = flagged determinant = tableau model.
inline Report verify_concordance(Kind kind, int max_size, int max_n, int D) {
  Report rep;
  for (int n = 1; n <= max_n; ++n)
    for (auto& l : partitions_up_to(max_size, n)) {
      Context c{n, D};
      FlaggedSpec spec{l, {}, n, FlagPair::standard(n), Orientation::Row, kind};
      std::vector<Poly> v;
      if (kind == Kind::G) {
        v = {G_bialternant(l, n, c), G_jt(l, n, c), G_jt_modified(l, n, c), G_flagged_det(spec, c).value,
             enum_mmsvt(SkewShape(l), FlagPair::standard(n), FlagAxis::Row, c)};
      } else {
        v = {g_bialternant(l, n, c), g_jt(l, n, c), g_jt_modified(l, n, c), g_flagged_det(spec, c).value,
             enum_mrpp(SkewShape(l), MrppVariant::Left, FlagPair::standard(n), FlagAxis::Row, c)};
      }
      static const char* names[] = {"bialternant", "jacobi-trudi", "modified", "flagged", "tableaux"};
      for (std::size_t k = 1; k < v.size(); ++k)
        if (!rep.expect(v[k] == v[0], std::string(kind == Kind::G ? "G" : "g") + l.str() + " n=" +
                                          std::to_string(n) + ": " + names[k] + " differs from bialternant"))
          return rep;
    }
  return rep;
}

inline Report verify_duality(int max_size) {
  Report rep;
  Context c{1, 0};
  for (auto& l : partitions_up_to(max_size))
    for (auto& m : partitions_up_to(max_size)) {
      Poly p = hall_pairing(l, m, c);
      if (!rep.expect(p == Poly(c, l == m ? 1 : 0), "<G" + l.str() + ", g" + m.str() + "> is not the Kronecker delta"))
        return rep;
    }
  return rep;
}

// C = inelegant tableaux = path families, c = elegant tableaux = path families.
inline Report verify_coefficients(int max_size) {
  Report rep;
  Context c{1, 0};
  for (auto& mu : partitions_up_to(max_size))
    for (auto& l : partitions_between({}, mu)) {
      Poly C = C_coeff(l, mu, c);
      const std::string cs = l.str() + "," + mu.str();
      if (!rep.expect(C == enum_elegant(SkewShape(mu, l), ElegantFamily::IET_Z, ElegantRule::C, c),
                      "C_" + cs + ": determinant vs inelegant tableaux"))
        return rep;
      if (!rep.expect(C == nonintersecting_coeff(l, mu, CoeffKind::C, c), "C_" + cs + ": determinant vs paths"))
        return rep;
      Poly s = c_coeff(mu, l, c);
      const std::string ss = mu.str() + "," + l.str();
      if (!rep.expect(s == enum_elegant(SkewShape(mu, l), ElegantFamily::ET_Z, ElegantRule::c, c),
                      "c_" + ss + ": determinant vs elegant tableaux"))
        return rep;
      if (!rep.expect(s == nonintersecting_coeff(mu, l, CoeffKind::c, c), "c_" + ss + ": determinant vs paths"))
        return rep;
    }
  return rep;
}

// Every coefficient of C(a,-b) and c(-a,b) is nonnegative.
inline Report verify_positivity(int max_size) {
  Report rep;
  Context c{1, 0};
  auto flip = [&](const Poly& p, Family f) {
    return p.substitute([&](VarId v) -> std::optional<Poly> {
      if (v.family == f) return -Poly::var(c, v);
      return std::nullopt;
    });
  };
  auto nonneg = [](const Poly& p) {
    for (auto& [m, k] : p.terms())
      if (k < 0) return false;
    return true;
  };
  for (auto& mu : partitions_up_to(max_size))
    for (auto& l : partitions_between({}, mu)) {
      if (!rep.expect(nonneg(flip(C_coeff(l, mu, c), Family::BETA)), "C_" + l.str() + "," + mu.str() + "(a,-b)"))
        return rep;
      if (!rep.expect(nonneg(flip(c_coeff(mu, l, c), Family::ALPHA)), "c_" + mu.str() + "," + l.str() + "(-a,b)"))
        return rep;
    }
  return rep;
}

// Flagged determinants against tableau enumeration on hypothesis-satisfying
// inputs, plus the boundary-marked RPP propositions on dented shapes.
inline Report verify_flagged(int max_size, int max_n, int max_flag) {
  Report rep;
  long weak_only = 0, weak_only_agree = 0, mrpp_i = 0, mrpp_i_dented = 0;
  for (int n = 1; n <= max_n; ++n)
    for (auto& l : partitions_up_to(max_size, n))
      for (auto& m : partitions_between({}, l)) {
        Context c{std::max(max_flag, n), l.size() - m.size() + 2};
        SkewShape sh(l, m);
        for (auto& r : detail::all_vectors(n, max_flag))
          for (auto& s : detail::all_vectors(n, max_flag)) {
            FlagPair f{r, s};
            const std::string cs = detail::case_str(l, m, r, s);
            FlaggedSpec spec{l, m, n, f, Orientation::Row, Kind::G};
            if (flag_hypotheses(spec, n) &&
                !rep.expect(G_flagged_det(spec, c).value == enum_mmsvt(sh, f, FlagAxis::Row, c), "row G " + cs))
              return rep;
            spec.kind = Kind::g;
            if (flag_hypotheses(spec, n) &&
                !rep.expect(g_flagged_det(spec, c).value == enum_mrpp(sh, MrppVariant::Left, f, FlagAxis::Row, c),
                            "row g " + cs))
              return rep;
            spec.orientation = Orientation::Col;
            if (flag_hypotheses(spec, n) &&
                !rep.expect(g_flagged_det(spec, c).value ==
                                enum_mrpp(sh.conjugate(), MrppVariant::Left, f, FlagAxis::Col, c),
                            "col g " + cs))
              return rep;
            spec.kind = Kind::G;
            const bool strong = flag_hypotheses(spec, n), weak = flag_hypotheses(spec, n, true);
            if (!weak) continue;
            const bool agree = G_flagged_det(spec, c).value == enum_mmsvt(sh.conjugate(), f, FlagAxis::Col, c);
            if (strong) {
              if (!rep.expect(agree, "col G " + cs)) return rep;
            } else {
              ++weak_only;
              weak_only_agree += agree;
            }
          }
      }

  // boundary-marked RPPs: all dented partitions with at most max_n parts
  for (int n = 1; n <= max_n; ++n)
    for (auto& seq : detail::all_vectors(n, max_size + 1)) {
      std::vector<int> v = seq;
      for (auto& x : v) --x;
      if (v.back() == 0 && n > 1) continue;
      int size = 0;
      for (int x : v) size += x;
      if (size > max_size + 1 || !DentedPartition::find_dent(v)) continue;
      DentedPartition l(v);
      for (auto& m : partitions_up_to(size, n)) {
        if (!contains(m, l)) continue;
        Context c{std::max(max_flag, n), size - m.size() + 2};
        for (auto& I : admissible_mark_sets(l))
          for (auto& r : detail::all_vectors(n, max_flag))
            for (auto& s : detail::all_vectors(n, max_flag)) {
              bool hyp = true;
              for (int i = 1; i < n; ++i)
                if (m.part(i) < l.part(i + 1) &&
                    (r[static_cast<std::size_t>(i - 1)] > r[static_cast<std::size_t>(i)] ||
                     s[static_cast<std::size_t>(i - 1)] > s[static_cast<std::size_t>(i)]))
                  hyp = false;
              if (!hyp) continue;
              FlagPair f{r, s};
              ++mrpp_i;
              mrpp_i_dented += !l.is_partition();
              std::ostringstream cs;
              cs << "dented " << detail::vec_str(l.parts()) << "/" << m.str() << " I={";
              for (int i : I) cs << i << ' ';
              cs << "} r=" << detail::vec_str(r) << " s=" << detail::vec_str(s);
              if (!rep.expect(mrpp_I_det(l, m, f, I, c) == enum_mrpp_I(l, m, f, I, c, MrppVariant::Left),
                              "MRPP_I " + cs.str()))
                return rep;
              if (!rep.expect(bmrpp_I_det(l, m, f, I, c) == enum_mrpp_I(l, m, f, I, c, MrppVariant::Bottom),
                              "BMRPP_I " + cs.str()))
                return rep;
            }
      }
    }
  rep.notes.push_back("boundary-marked instances: " + std::to_string(mrpp_i) + " (" + std::to_string(mrpp_i_dented) +
                      " on dented shapes)");
  rep.notes.push_back("weakened column condition (conjecture, not asserted): " + std::to_string(weak_only_agree) +
                      "/" + std::to_string(weak_only) + " extra instances agree");
  return rep;
}

inline Report verify_cauchy(int nx, int ny, int bound) {
  Report rep;
  rep.expect(cauchy_check(nx, ny, bound), "Cauchy identity fails up to x-degree " + std::to_string(bound));
  return rep;
}

inline Report verify_omega(int max_outer, int max_inner, int budget) {
  Report rep;
  for (auto& l : partitions_up_to(max_outer))
    for (auto& m : partitions_between({}, l)) {
      if (m.size() > max_inner) continue;
      Context c{1, 0};
      for (Kind k : {Kind::G, Kind::g})
        if (!rep.expect(omega_check(l, m, k, budget, c),
                        std::string("omega ") + (k == Kind::G ? "G" : "g") + " " + l.str() + "/" + m.str()))
          return rep;
    }
  return rep;
}

// Set-valued tableaux against the Matsumura forms and the two readings of the
// one-parameter specialization of the row-flagged G.
inline Report verify_matsumura(int max_outer, int max_cells, int max_flag) {
  Report rep;
  long plus_agree = 0, minus_agree = 0, literal_agree = 0, total = 0;
  for (auto& l : partitions_up_to(max_outer, 3))
    for (auto& m : partitions_between({}, l)) {
      if (l.empty() || l.size() - m.size() > max_cells) continue;
      const int n = l.length();
      Context c{max_flag, l.size() - m.size() + 2};
      for (auto& g : detail::all_vectors(n, max_flag))
        for (auto& f : detail::all_vectors(n, max_flag)) {
          FlaggedSpec spec{l, m, n, FlagPair{g, f}, Orientation::Row, Kind::G};
          if (!flag_hypotheses(spec, n)) continue;
          ++total;
          Poly F = enum_fsvt(SkewShape(l, m), f, g, c);
          const std::string cs = detail::case_str(l, m, g, f);
          if (!rep.expect(F == matsumura_det(l, m, f, g, c), "ominus form " + cs)) return rep;
          if (!rep.expect(F == matsumura_original_det(l, m, f, g, c), "original determinant " + cs)) return rep;
          minus_agree += F == G_flagged_collapsed(l, m, f, g, -1, c);
          plus_agree += F == G_flagged_collapsed(l, m, f, g, +1, c);
          literal_agree += F == matsumura_det(l, m, f, g, c, true);
        }
    }
  const bool minus = minus_agree == total, plus = plus_agree == total;
  rep.expect(minus != plus, "exactly one of b=(beta,...) and b=(-beta,...) must match");
  rep.notes.push_back("instances: " + std::to_string(total));
  rep.notes.push_back("b=(-beta,...): " + std::to_string(minus_agree) + "/" + std::to_string(total) +
                      ", b=(beta,...): " + std::to_string(plus_agree) + "/" + std::to_string(total));
  rep.notes.push_back(std::string("verified convention: G_{l/m,f/g}(x) = G^{row(g,f)}_{l/m}(x; 0, ") +
                      (minus ? "-beta" : "beta") + ")");
  rep.notes.push_back("prefactor prod(1+beta x) with ominus argument (j-i+1)beta taken literally: " +
                      std::to_string(literal_agree) + "/" + std::to_string(total) + " agree");
  return rep;
}

// Generating function, single-letter recurrences, convolution and sign rule.
inline Report verify_kernel(unsigned seed, int trials) {
  Report rep;
  // sum_k h_k[A_r - B_s] t^k = prod (1 - b_i t) / prod (1 - a_i t), t realized as x1
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s) {
      Context c{1, 5};
      Poly t = Poly::var(c, xv(1)), lhs(c), rhs(c, 1);
      for (int k = 0; k <= 5; ++k) lhs += h_pleth(k, Alphabet::A(r) - Alphabet::B(s), c) * t.pow(static_cast<unsigned>(k));
      for (int i = 1; i <= s; ++i) rhs *= Poly(c, 1) - Poly::var(c, bv(i)) * t;
      for (int i = 1; i <= r; ++i) {
        Poly geo(c), at = Poly::var(c, av(i)) * t;
        for (int k = 0; k <= 5; ++k) geo += at.pow(static_cast<unsigned>(k));
        rhs *= geo;
      }
      if (!rep.expect(lhs == rhs, "generating function r=" + std::to_string(r) + " s=" + std::to_string(s))) return rep;
    }

  std::mt19937 rng(seed);
  auto rnd = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto random_alphabet = [&](bool allow_x) {
    Alphabet z;
    const int blocks = rnd(1, 3);
    for (int b = 0; b < blocks; ++b) {
      Alphabet piece;
      switch (rnd(allow_x ? 0 : 1, 4)) {
        case 0: piece = Alphabet::X(rnd(1, 2), rnd(1, 3)); break;
        case 1: piece = Alphabet::A(rnd(0, 3)); break;
        case 2: piece = Alphabet::B(rnd(0, 3)); break;
        case 3: piece = Alphabet::AI(rnd(1, 3), rnd(1, 3)); break;
        default: piece = Alphabet::multiple(rnd(1, 3), rnd(0, 1) ? av(rnd(1, 3)) : bv(rnd(1, 3))); break;
      }
      z = rnd(0, 1) ? z + piece : z - piece;
    }
    return z;
  };
  auto letter = [&] {
    switch (rnd(0, 2)) {
      case 0: return xv(rnd(1, 3));
      case 1: return av(rnd(1, 3));
      default: return bv(rnd(1, 3));
    }
  };
  Context c{3, 4};
  for (int t = 0; t < trials; ++t) {
    Alphabet Z = random_alphabet(true);
    VarId z = letter();
    Alphabet Zz = Z - Alphabet::single(z);
    Poly zp = Poly::var(c, z);
    for (int m = 0; m <= 4; ++m) {
      if (!rep.expect(h_pleth(m, Z, c) == h_pleth(m, Zz, c) + zp * h_pleth(m - 1, Z, c), "h recurrence trial " + std::to_string(t)))
        return rep;
      if (!rep.expect(e_pleth(m, Z, c) == e_pleth(m, Zz, c) + zp * e_pleth(m - 1, Zz, c), "e recurrence trial " + std::to_string(t)))
        return rep;
    }
  }
  for (int t = 0; t < trials; ++t) {
    Alphabet Z1 = random_alphabet(true), Z2 = random_alphabet(true);
    for (int m = 0; m <= 4; ++m) {
      Poly conv(c), econv(c);
      for (int a = 0; a <= m; ++a) {
        conv += h_pleth(a, Z1, c) * h_pleth(m - a, Z2, c);
        econv += e_pleth(a, Z1, c) * e_pleth(m - a, Z2, c);
      }
      if (!rep.expect(h_pleth(m, Z1 + Z2, c) == conv, "h convolution trial " + std::to_string(t))) return rep;
      if (!rep.expect(e_pleth(m, Z1 + Z2, c) == econv, "e convolution trial " + std::to_string(t))) return rep;
      Poly sign_rule = e_pleth(m, Z1, c);
      if (m % 2) sign_rule = -sign_rule;
      if (!rep.expect(h_pleth(m, -Z1, c) == sign_rule, "sign rule trial " + std::to_string(t))) return rep;
    }
  }
  return rep;
}

// Worked examples with known weights and values.
inline Report verify_fixtures() {
  Report rep;
  auto mono = [](Context c, std::initializer_list<std::pair<VarId, unsigned>> f, long coeff = 1) {
    Monomial m;
    for (auto& [v, e] : f) m = m * Monomial::var(v, e);
    return Poly::monomial(c, m, coeff);
  };
  {
    Context c{4, 9};
    auto T = parse_mmsvt_grid("_ {1,2*,2} {2,2,4*}\n{1} {3,3}\n");
    rep.expect(mmsvt_valid(T), "marked multiset-valued tableau is valid");
    rep.expect(mmsvt_weight(T, c) == mono(c, {{xv(1), 2}, {xv(2), 4}, {xv(3), 2}, {xv(4), 1}, {av(2), 2}, {av(3), 1}, {bv(1), 2}}),
               "marked multiset-valued tableau weight");
  }
  {
    Context c{5, 6};
    auto L = parse_mrpp_grid("_ _ 1 2 4* 4\n_ 1* 1 3 5\n_ 1 1\n3* 3* 3\n");
    rep.expect(mrpp_weight(L, MrppVariant::Left, c) ==
                   mono(c, {{xv(1), 1}, {xv(2), 1}, {xv(3), 2}, {xv(4), 1}, {xv(5), 1}, {av(1), 1}, {av(2), 2}, {av(5), 1},
                            {bv(1), 1}, {bv(2), 2}}),
               "left-marked plane partition weight");
    auto R = parse_mrpp_grid("_ _ 1 2 4 4*\n_ 1 1* 3 5\n_ 1 1\n3 3* 3*\n");
    rep.expect(mrpp_weight(R, MrppVariant::Right, c) ==
                   mono(c, {{xv(1), 2}, {xv(2), 1}, {xv(3), 2}, {xv(4), 1}, {xv(5), 1}, {av(1), 1}, {av(2), 2}, {av(5), 1},
                            {bv(1), 1}, {bv(2), 1}}),
               "right-marked plane partition weight");
  }
  {
    Context c{4, 6};
    auto T = parse_mrpp_grid("_ 1 2\n_ 1 3* 3\n2 2 3 4*\n4\n");
    T.boundary = {{{1, 4}, 3}, {{2, 5}, kInfEntry}, {{3, 5}, 4}, {{4, 2}, kInfEntry}};
    rep.expect(mrpp_weight(T, MrppVariant::Left, c) ==
                   mono(c, {{xv(1), 1}, {xv(2), 3}, {xv(4), 1}, {av(3), 1}, {av(4), 1}, {bv(1), 2}, {bv(2), 1}}),
               "boundary-marked plane partition weight");
  }
  {
    // the row and column flagged G determinants differ from enumeration off hypothesis
    Context c{1, 3};
    FlaggedSpec spec{Partition{1}, Partition{2}, 1, FlagPair{{1}, {1}}, Orientation::Row, Kind::G};
    rep.expect(G_flagged_det(spec, c).value == Poly::var(c, bv(1)) - Poly::var(c, av(2)), "row flagged G at 1/2");
    spec.orientation = Orientation::Col;
    rep.expect(G_flagged_det(spec, c).value == Poly::var(c, bv(2)) - Poly::var(c, av(1)), "column flagged G at 1/2");
  }
  {
    Context c{2, 2};
    FlaggedSpec spec{Partition{1, 1}, Partition{}, 2, FlagPair{{1, 1}, {2, 1}}, Orientation::Col, Kind::g};
    Poly x1 = Poly::var(c, xv(1)), x2 = Poly::var(c, xv(2)), a1 = Poly::var(c, av(1));
    rep.expect(g_flagged_det(spec, c).value == x1 * x1 - a1 * x1 - a1 * x2, "column flagged g determinant");
    rep.expect(enum_mrpp(SkewShape(Partition{1, 1}).conjugate(), MrppVariant::Left, spec.flags, FlagAxis::Col, c) ==
                   x1 * x1 - a1 * x1,
               "column flagged g enumeration");
  }
  {
    SkewShape s = circ(Partition{3, 1}, Partition{4, 2, 2}, 3);
    rep.expect(s.outer == Partition{7, 5, 5} && s.inner == Partition{3, 2}, "circle product shape");
  }
  return rep;
}

}  // namespace rgroth
