#include "qbax/identities.hpp"

#include <chrono>

#include "qbax/error.hpp"
#include "qbax/lmatrices.hpp"

namespace qbax {

namespace {

const Coefficient kQ = Coefficient::q_pow(1);
const Coefficient kQinv = Coefficient::q_pow(-1);
const Coefficient kLam = Coefficient::monomial(Param::lambda, 1);
const Coefficient kLamInv = Coefficient::monomial(Param::lambda, -1);

using Polys = std::vector<NCPoly>;

// Shorthands bound to one presentation.
struct Alg {
  PresentationPtr ptr;
  const Presentation& P;
  explicit Alg(AlgebraId id) : ptr(build_presentation(id)), P(*ptr) {}

  NCPoly w(std::string_view x) const { return normal_form(P.word(x), P); }
  /// x ⊗ y for single-site words.
  NCPoly t(std::string_view x, std::string_view y) const {
    return normal_form(free_mul(P.word(x, 0), P.word(y, 1)), P);
  }
  /// x ⊗ y for single-site polynomials.
  NCPoly tt(const NCPoly& x, const NCPoly& y) const { return normal_form(free_mul(x, y.shifted(1)), P); }
  NCPoly m(const NCPoly& a, const NCPoly& b) const { return mul(a, b, P); }
  NCPoly nf(const NCPoly& a) const { return normal_form(a, P); }
  NCPoly comm(const NCPoly& a, const NCPoly& b) const { return commutator(a, b, P); }
  /// a b - c b a
  NCPoly qcomm(const NCPoly& a, const NCPoly& b, const Coefficient& c) const {
    return nf(m(a, b) - c * m(b, a));
  }
  NCPoly Dq() const { return nf(P.word("a d") - kQ * P.word("b c")); }
  NCPoly eta1() const { return w("theta b"); }
  NCPoly eta2() const { return w("theta c"); }
};

NCPoly apply(MapId id, const NCPoly& p) { return apply_map(build_map(id), p); }

Polys matrix_residual(const OpMatrix& m) { return m.entries(); }

// (id ⊗ coproduct) applied to each entry of M, minus M_12 M_13.
OpMatrix coproduct_matrix_residual(const GenMap& cop, const OpMatrix& M, const Presentation& P) {
  OpMatrix left = M.map_entries([&](const NCPoly& e) { return apply_map(cop, e); });
  OpMatrix M1 = M.map_entries([](const NCPoly& e) { return e.shifted(1); });
  left -= mul(M, M1, P);
  return left;
}

// Relations between the two-site quantities of the fundamental R-operator proofs.
std::vector<IdentityCheck> make_registry() {
  std::vector<IdentityCheck> r;
  auto add = [&](std::string id, std::string anchor, std::string claim, AlgebraId alg,
                 std::function<Polys()> f, std::string note = {}) {
    r.push_back({std::move(id), std::move(anchor), std::move(claim), alg, std::move(note), std::move(f)});
  };

  // ---- coproducts --------------------------------------------------------
  add("coprod.Delta.matrix", "matrix form of the standard coproduct", "Delta(g_ij) = sum_k g_ik x g_kj",
      AlgebraId::GLq2, [] {
        Alg A(AlgebraId::GLq2);
        OpMatrix g = build_L(LKind::gconst, A.P);
        return matrix_residual(coproduct_matrix_residual(build_map(MapId::Delta), g, A.P));
      });
  add("coprod.Delta.Dq_grouplike", "D_q is group-like", "Delta(D_q) = D_q x D_q", AlgebraId::GLq2, [] {
    Alg A(AlgebraId::GLq2);
    return Polys{A.nf(apply(MapId::Delta, A.Dq()) - A.tt(A.Dq(), A.Dq()))};
  });
  add("coprod.Delta.ad_bc", "Delta(ad) in terms of Delta(bc)", "Delta(ad) = q Delta(bc) + D_q x D_q",
      AlgebraId::GLq2, [] {
        Alg A(AlgebraId::GLq2);
        return Polys{A.nf(apply(MapId::Delta, A.w("a d")) - kQ * apply(MapId::Delta, A.w("b c")) -
                          A.tt(A.Dq(), A.Dq()))};
      });
  add("coprod.delta.Dq", "delta(D_q) is not group-like", "delta(D_q) = ac x theta d + bc x D_q",
      AlgebraId::GLq2Ext, [] {
        Alg A(AlgebraId::GLq2Ext);
        return Polys{A.nf(apply(MapId::delta, A.Dq()) - A.t("a c", "theta d") - A.tt(A.w("b c"), A.Dq()))};
      });
  add("coprod.delta.Dq_expanded", "argument of the hatted fundamental R-operator",
      "delta(D_q) = ac x theta d + bc x ad - q bc x bc", AlgebraId::GLq2Ext, [] {
        Alg A(AlgebraId::GLq2Ext);
        return Polys{A.nf(apply(MapId::delta, A.Dq()) - A.t("a c", "theta d") - A.t("b c", "a d") +
                          kQ * A.t("b c", "b c"))};
      });
  add("coprod.delta.eta_prime", "eta' is group-like for delta", "delta(eta') = eta' x eta'", AlgebraId::GLq2Ext,
      [] {
        Alg A(AlgebraId::GLq2Ext);
        return Polys{A.nf(apply(MapId::delta, A.eta1()) - A.tt(A.eta1(), A.eta1()))};
      });
  add("coprod.delta.eta_doubleprime", "eta'' is group-like for delta", "delta(eta'') = eta'' x eta''",
      AlgebraId::GLq2Ext, [] {
        Alg A(AlgebraId::GLq2Ext);
        return Polys{A.nf(apply(MapId::delta, A.eta2()) - A.tt(A.eta2(), A.eta2()))};
      });
  add("coprod.delta.gplus", "coproduct delta on g+", "(id x delta) g+ = g+_12 g+_13", AlgebraId::GLq2Ext, [] {
    Alg A(AlgebraId::GLq2Ext);
    return matrix_residual(coproduct_matrix_residual(build_map(MapId::delta), build_L(LKind::gplus, A.P), A.P));
  });
  add("coprod.delta.gminus", "coproduct delta on g-", "(id x delta) g- = g-_12 g-_13", AlgebraId::GLq2Ext, [] {
    Alg A(AlgebraId::GLq2Ext);
    return matrix_residual(coproduct_matrix_residual(build_map(MapId::delta), build_L(LKind::gminus, A.P), A.P));
  });
  for (auto [sign, kind] : {std::pair{"plus", LKind::gplus}, std::pair{"minus", LKind::gminus}}) {
    add(std::string("coprod.deltaA.Qg") + sign, "q-oscillator coproduct on Q(g" + std::string(sign) + ")",
        "(id x deltaA) Q(g" + std::string(sign) + ") = Q(g)_12 Q(g)_13", AlgebraId::Aq, [kind] {
          Alg S(AlgebraId::GLq2ExtPrime), A(AlgebraId::Aq);
          OpMatrix M = apply_map(build_map(MapId::Q), build_L(kind, S.P));
          return matrix_residual(coproduct_matrix_residual(build_map(MapId::deltaA), M, A.P));
        });
    add(std::string("coprod.deltaW.Qg") + sign, "Weyl coproduct on Q''(g" + std::string(sign) + ")",
        "(id x deltaW) Q''(g" + std::string(sign) + ") = Q''(g)_12 Q''(g)_13", AlgebraId::Wq, [kind] {
          Alg S(AlgebraId::GLq2ExtDoublePrime), W(AlgebraId::Wq);
          OpMatrix M = apply_map(build_map(MapId::Qdoubleprime), build_L(kind, S.P));
          return matrix_residual(coproduct_matrix_residual(build_map(MapId::deltaW), M, W.P));
        });
  }
  add("coprod.deltaA.Cq", "argument of the hatted q-oscillator R-operator",
      "deltaA(C_q) = ek x kinv f + k^2 x ef - q k^2 x k^2", AlgebraId::Aq, [] {
        Alg A(AlgebraId::Aq);
        NCPoly Cq = A.nf(A.P.word("e f") - kQ * A.P.word("k k"));
        return Polys{A.nf(apply(MapId::deltaA, Cq) - A.t("e k", "kinv f") - A.t("k k", "e f") +
                          kQ * A.t("k k", "k k"))};
      });
  add("coprod.deltaW.Zq", "argument of the relativistic Toda R-operator", "deltaW(Z_q) = uv x vinv ut",
      AlgebraId::Wq, [] {
        Alg W(AlgebraId::Wq);
        return Polys{W.nf(apply(MapId::deltaW, W.w("u ut")) - W.t("u v", "vinv ut"))};
      });

  // ---- maps between algebras ----------------------------------------------
  add("maps.Q.Dq", "Q sends D_q to the Casimir", "Q(D_q) = C_q", AlgebraId::Aq, [] {
    Alg S(AlgebraId::GLq2ExtPrime), A(AlgebraId::Aq);
    return Polys{A.nf(apply(MapId::Q, S.Dq()) - A.P.word("e f") + kQ * A.P.word("k k"))};
  });
  add("maps.Q.eta", "Q kills the group-like central elements", "Q(eta') = Q(eta'') = 1", AlgebraId::Aq, [] {
    Alg S(AlgebraId::GLq2ExtPrime), A(AlgebraId::Aq);
    return Polys{A.nf(apply(MapId::Q, S.eta1()) - A.P.one()), A.nf(apply(MapId::Q, S.eta2()) - A.P.one())};
  });
  add("maps.intertwine.deltaA_Q", "deltaA restricts delta through Q", "deltaA o Q = (Q x Q) o delta",
      AlgebraId::Aq, [] {
        Alg E(AlgebraId::GLq2Ext), S(AlgebraId::GLq2ExtPrime), A(AlgebraId::Aq);
        Polys out;
        for (const auto& g : S.P.generators()) {
          NCPoly viaDelta = apply(MapId::Q, transport(apply(MapId::delta, E.P.g(g)), E.P, S.P));
          out.push_back(A.nf(apply(MapId::deltaA, apply(MapId::Q, S.P.g(g))) - viaDelta));
        }
        return out;
      });
  add("maps.intertwine.deltaW_Qpp", "deltaW restricts delta through Q''", "deltaW o Q'' = (Q'' x Q'') o delta",
      AlgebraId::Wq, [] {
        Alg E(AlgebraId::GLq2Ext), S(AlgebraId::GLq2ExtDoublePrime), W(AlgebraId::Wq);
        Polys out;
        for (const auto& g : S.P.generators()) {
          NCPoly viaDelta = apply(MapId::Qdoubleprime, transport(apply(MapId::delta, E.P.g(g)), E.P, S.P));
          out.push_back(W.nf(apply(MapId::deltaW, apply(MapId::Qdoubleprime, S.P.g(g))) - viaDelta));
        }
        return out;
      });
  add("maps.intertwine.DeltaW_Qp", "polynomial part of DeltaW restricts Delta through Q'",
      "DeltaW o Q' = (Q' x Q') o Delta on a, b, c, d", AlgebraId::Wq, [] {
        Alg S(AlgebraId::GLq2ExtPrime), W(AlgebraId::Wq);
        const GenMap& D = Delta_over(AlgebraId::GLq2ExtPrime);
        Polys out;
        for (auto g : {"a", "b", "c", "d"}) {
          NCPoly viaDelta = apply(MapId::Qprime, apply_map(D, S.P.g(g)));
          out.push_back(W.nf(apply(MapId::DeltaWpoly, apply(MapId::Qprime, S.P.g(g))) - viaDelta));
        }
        return out;
      });
  add("maps.intertwine.DeltaA_Q", "DeltaA is the Q-image of Delta", "DeltaA = (Q x Q) o Delta on a, b, c, d",
      AlgebraId::Aq, [] {
        Alg G(AlgebraId::GLq2), S(AlgebraId::GLq2ExtPrime), A(AlgebraId::Aq);
        const GenMap& D = Delta_over(AlgebraId::GLq2ExtPrime);
        Polys out;
        for (auto g : {"a", "b", "c", "d"})
          out.push_back(A.nf(apply(MapId::DeltaA, G.P.g(g)) - apply(MapId::Q, apply_map(D, S.P.g(g)))));
        return out;
      });

  // ---- fundamental R-operator for g(l) --------------------------------------
  auto DL = [](const Alg& A, std::string_view x) {
    return apply_map(Delta_over(AlgebraId::GLq2Ext), A.w(x));
  };
  add("fundr.Delta_a.commutes_b_theta", "Delta(a) commutes with b x theta", "[Delta(a), b x theta] = 0", AlgebraId::GLq2Ext, [DL] {
    Alg A(AlgebraId::GLq2Ext);
    return Polys{A.comm(DL(A, "a"), A.t("b", "theta"))};
  });
  add("fundr.Delta_b.qcommutes_b_theta", "Delta(b) q-commutes with b x theta", "Delta(b)(b x theta) = q (b x theta) Delta(b)",
      AlgebraId::GLq2Ext, [DL] {
        Alg A(AlgebraId::GLq2Ext);
        return Polys{A.qcomm(DL(A, "b"), A.t("b", "theta"), kQ)};
      });
  add("fundr.Delta_d.commutes_b_theta", "Delta(d) commutes with b x theta", "[Delta(d), b x theta] = 0", AlgebraId::GLq2Ext, [DL] {
    Alg A(AlgebraId::GLq2Ext);
    return Polys{A.comm(DL(A, "d"), A.t("b", "theta"))};
  });
  add("fundr.Delta_c.qcommutes_b_theta", "Delta(c) q-commutes with b x theta", "Delta(c)(b x theta) = q^-1 (b x theta) Delta(c)",
      AlgebraId::GLq2Ext, [DL] {
        Alg A(AlgebraId::GLq2Ext);
        return Polys{A.qcomm(DL(A, "c"), A.t("b", "theta"), kQinv)};
      });
  add("fundr.Delta_bc.commutes_invariants", "Delta(bc) commutes with the invariants of the R-operator",
      "Delta(bc) commutes with Delta(b), Delta(c), b x theta, theta x b", AlgebraId::GLq2Ext, [DL] {
        Alg A(AlgebraId::GLq2Ext);
        NCPoly X = DL(A, "b c");
        return Polys{A.comm(X, DL(A, "b")), A.comm(X, DL(A, "c")), A.comm(X, A.t("b", "theta")),
                     A.comm(X, A.t("theta", "b"))};
      });
  add("fundr.Delta_bc.grades_a_d", "Delta(bc) grades Delta(a) and Delta(d)",
      "Delta(bc) Delta(a) = q^-2 Delta(a) Delta(bc), Delta(bc) Delta(d) = q^2 Delta(d) Delta(bc)",
      AlgebraId::GLq2Ext, [DL] {
        Alg A(AlgebraId::GLq2Ext);
        NCPoly X = DL(A, "b c");
        return Polys{A.qcomm(X, DL(A, "a"), Coefficient::q_pow(-2)), A.qcomm(X, DL(A, "d"), Coefficient::q_pow(2))};
      });
  add("fundr.Xdecomp.Delta", "decomposition of X(l) for Delta",
      "Delta(b)(l theta x a + l^-1 d x theta) = q^-1 l (theta x b) Delta(a) + q l^-1 (b x theta) Delta(d) + "
      "l eta' x D_q + l^-1 D_q x eta'",
      AlgebraId::GLq2Ext, [DL] {
        Alg A(AlgebraId::GLq2Ext);
        NCPoly lhs = A.m(DL(A, "b"), kLam * A.t("theta", "a") + kLamInv * A.t("d", "theta"));
        NCPoly rhs = kQinv * kLam * A.m(A.t("theta", "b"), DL(A, "a")) +
                     kQ * kLamInv * A.m(A.t("b", "theta"), DL(A, "d")) + kLam * A.tt(A.eta1(), A.Dq()) +
                     kLamInv * A.tt(A.Dq(), A.eta1());
        return Polys{A.nf(lhs - rhs)};
      });

  // ---- fundamental R-operator for ghat(l) -----------------------------------
  add("fundr.Xdecomp.delta", "decomposition of X(l) for delta",
      "q^-1 delta(b)(l^-1 d x a + l^-1 c x theta + l theta x c) = (l theta x d + l^-1 d x b) delta(a) "
      "- q l delta(theta)(a x d) - l^-1 D_q x eta' - l eta' x D_q",
      AlgebraId::GLq2Ext,
      [] {
        Alg A(AlgebraId::GLq2Ext);
        NCPoly uncorrected = x_decomposition_uncorrected();
        NCPoly fix = (kLam - kLamInv) * (A.tt(A.Dq(), A.eta1()) - A.tt(A.eta1(), A.Dq()));
        return Polys{A.nf(uncorrected - fix)};
      },
      "the central pair carries l^-1 on D_q x eta' and l on eta' x D_q; the opposite placement leaves "
      "(l - l^-1)(D_q x eta' - eta' x D_q)");
  add("fundr.delta_Dq.grades_ad", "delta(D_q) grades a x d", "delta(D_q)(a x d) = q^-2 (a x d) delta(D_q)",
      AlgebraId::GLq2Ext, [] {
        Alg A(AlgebraId::GLq2Ext);
        return Polys{A.qcomm(apply(MapId::delta, A.Dq()), A.t("a", "d"), Coefficient::q_pow(-2))};
      });
  add("fundr.delta_Dq.grades_ac", "delta(D_q) grades a x c", "delta(D_q)(a x c) = q^-2 (a x c) delta(D_q)",
      AlgebraId::GLq2Ext, [] {
        Alg A(AlgebraId::GLq2Ext);
        return Polys{A.qcomm(apply(MapId::delta, A.Dq()), A.t("a", "c"), Coefficient::q_pow(-2))};
      });
  add("fundr.delta_Dq.commutes_image", "delta(D_q) commutes with the image of delta",
      "[delta(D_q), delta(x)] = 0 for every generator x", AlgebraId::GLq2Ext, [] {
        Alg A(AlgebraId::GLq2Ext);
        NCPoly X = apply(MapId::delta, A.Dq());
        Polys out;
        for (const auto& g : A.P.generators()) out.push_back(A.comm(X, apply(MapId::delta, A.P.g(g))));
        return out;
      });
  add("fundr.da_ad_Dq", "q da - q^-1 ad in terms of D_q", "q da - q^-1 ad = (q - q^-1) D_q", AlgebraId::GLq2, [] {
    Alg A(AlgebraId::GLq2);
    return Polys{A.nf(kQ * A.P.word("d a") - kQinv * A.P.word("a d") - (kQ - kQinv) * A.Dq())};
  });
  add("fundr.r_db.oscillator", "d x b and r close a q-oscillator relation",
      "(d x b) r' - r' (d x b) = (q - q^-1) D_q theta x d,  r' = theta a x theta d", AlgebraId::GLq2ExtPrime,
      [] {
        Alg A(AlgebraId::GLq2ExtPrime);
        NCPoly r = A.t("theta a", "theta d"), db = A.t("d", "b");
        return Polys{A.nf(A.comm(db, r) - (kQ - kQinv) * A.tt(A.m(A.Dq(), A.w("theta")), A.w("d")))};
      },
      "r = D_q^-1 b^-1 a x theta d with b^-1 = theta, multiplied through by the central D_q x 1");
  add("fundr.db_thetad.qcommute", "d x b q-commutes with theta x d", "(d x b)(theta x d) = q^2 (theta x d)(d x b)",
      AlgebraId::GLq2ExtPrime, [] {
        Alg A(AlgebraId::GLq2ExtPrime);
        return Polys{A.qcomm(A.t("d", "b"), A.t("theta", "d"), Coefficient::q_pow(2))};
      });
  add("fundr.r_thetad.qcommute", "r q-commutes with theta x d", "r' (theta x d) = q^-2 (theta x d) r'",
      AlgebraId::GLq2ExtPrime,
      [] {
        Alg A(AlgebraId::GLq2ExtPrime);
        return Polys{A.qcomm(A.t("theta a", "theta d"), A.t("theta", "d"), Coefficient::q_pow(-2))};
      },
      "cleared of D_q^-1 as in fundr.r_db.oscillator");

  // ---- Weyl algebra ----------------------------------------------------------
  add("weyl.z.DeltaW", "z = uv x u vinv commutes with the polynomial part of DeltaW",
      "[z, DeltaW(x)] = 0 for x = u, ut, v", AlgebraId::Wq, [] {
        Alg W(AlgebraId::Wq);
        NCPoly z = W.t("u v", "u vinv");
        Polys out;
        for (auto g : {"u", "ut", "v"}) out.push_back(W.comm(z, apply(MapId::DeltaWpoly, W.P.g(g))));
        return out;
      });
  add("weyl.z.pairs", "z commutes with the two-site monomials of the Volterra relations",
      "[z, v x vinv] = [z, vinv x u] = [z, ut x vinv] = 0", AlgebraId::Wq, [] {
        Alg W(AlgebraId::Wq);
        NCPoly z = W.t("u v", "u vinv");
        return Polys{W.comm(z, W.t("v", "vinv")), W.comm(z, W.t("vinv", "u")), W.comm(z, W.t("ut", "vinv"))};
      });
  add("weyl.w_ztilde", "w q-commutes with z~", "w z~ = q^4 z~ w,  w' = v ut x vinv ut,  z~ = ut vinv x u vinv",
      AlgebraId::Wq,
      [] {
        Alg W(AlgebraId::Wq);
        return Polys{W.qcomm(W.t("v ut", "vinv ut"), W.t("ut vinv", "u vinv"), Coefficient::q_pow(4))};
      },
      "w = v u^-1 x vinv ut contains u^-1 = ut Z_q^-1; the central factor is dropped");
  add("weyl.freefield.commuting", "the free-field Hamiltonian density is a log of commuting factors",
      "[u x v + v x ut, v x u + ut x v] = 0", AlgebraId::Wq, [] {
        Alg W(AlgebraId::Wq);
        return Polys{W.comm(W.t("u", "v") + W.t("v", "ut"), W.t("v", "u") + W.t("ut", "v"))};
      });
  return r;
}

}  // namespace

NCPoly x_decomposition_uncorrected() {
  Alg A(AlgebraId::GLq2Ext);
  auto dl = [&](std::string_view x) { return apply(MapId::delta, A.w(x)); };
  NCPoly lhs = kQinv * A.m(dl("b"), kLamInv * A.t("d", "a") + kLamInv * A.t("c", "theta") + kLam * A.t("theta", "c"));
  NCPoly rhs = A.m(kLam * A.t("theta", "d") + kLamInv * A.t("d", "b"), dl("a")) -
               kQ * kLam * A.m(dl("theta"), A.t("a", "d")) - kLam * A.tt(A.Dq(), A.eta1()) -
               kLamInv * A.tt(A.eta1(), A.Dq());
  return A.nf(lhs - rhs);
}

const std::vector<IdentityCheck>& identity_registry() {
  static const std::vector<IdentityCheck> reg = make_registry();
  return reg;
}

const IdentityCheck* find_identity(std::string_view id) {
  for (const auto& c : identity_registry())
    if (c.id == id) return &c;
  return nullptr;
}

CheckResult run_identity(const IdentityCheck& check) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t terms = 0;
  for (const auto& p : check.residual()) terms += p.size();
  CheckResult r = symbolic_result(terms, check.note);
  r.id = check.id;
  r.anchor = check.anchor;
  r.claim = check.claim;
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CheckResult run_identity(std::string_view id) {
  const IdentityCheck* c = find_identity(id);
  if (!c) throw ConfigError("unknown identity check '" + std::string(id) + "'");
  return run_identity(*c);
}

}  // namespace qbax
