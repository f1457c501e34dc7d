#include "qbax/cyclicrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <unsupported/Eigen/KroneckerProduct>

#include "qbax/error.hpp"

namespace qbax {

namespace {

constexpr double kPi = std::numbers::pi;

cplx root_of_unity(int N, int m) {
  if (N < 2) throw DomainError("representation dimension must be at least 2");
  if (std::gcd(m, N) != 1) throw DomainError("root index m must be coprime to N");
  return std::polar(1.0, 2.0 * kPi * m / N);
}

CMat clock(int N, cplx q) {
  CMat u = CMat::Zero(N, N);
  for (int j = 0; j < N; ++j) u(j, j) = std::pow(q, j);
  return u;
}

// e_j -> e_{j+1 mod N}
CMat shift(int N) {
  CMat v = CMat::Zero(N, N);
  for (int j = 0; j < N; ++j) v((j + 1) % N, j) = 1.0;
  return v;
}

CMat kron_all(const std::vector<CMat>& fs) {
  CMat r = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) r = Eigen::kroneckerProduct(r, fs[i]).eval();
  return r;
}

cplx eval_lambda(const Coefficient& c, const ParamValues& v) { return c.evaluate(v); }

const Presentation& pres_of(const MatrixRep& rep) { return *build_presentation(rep.algebra); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

ParamValues MatrixRep::params(cplx lambda) const {
  ParamValues v = default_param_values();
  v[static_cast<std::size_t>(Param::q)] = q;
  v[static_cast<std::size_t>(Param::lambda)] = lambda;
  v[static_cast<std::size_t>(Param::s)] = std::sqrt(lambda);
  v[static_cast<std::size_t>(Param::z)] = z;
  v[static_cast<std::size_t>(Param::c)] = c;
  return v;
}

const CMat& MatrixRep::image(const std::string& gen) const {
  auto it = images.find(gen);
  if (it == images.end()) throw ConfigError("representation has no image for '" + gen + "'");
  return it->second;
}

MatrixRep weyl_rep(int N, int m, cplx z) {
  if (z == 0.0) throw DomainError("weyl_rep: z must be nonzero");
  MatrixRep r{AlgebraId::Wq, N, m, root_of_unity(N, m), z, 0.0, {}};
  CMat u = clock(N, r.q), v = shift(N);
  r.images["u"] = u;
  r.images["ut"] = z * u.inverse();
  r.images["v"] = v;
  r.images["vinv"] = v.transpose();
  return r;
}

MatrixRep qosc_rep(int N, int m, cplx c) {
  MatrixRep r{AlgebraId::Aq, N, m, root_of_unity(N, m), 1.0, c, {}};
  CMat k = clock(N, r.q), f = shift(N);
  // e f on e_j equals A_{j+1}; e f - q k^2 = c forces A_{j+1} = c + q^{2j+1}.
  CMat e = CMat::Zero(N, N);
  for (int j = 0; j < N; ++j) {
    cplx a = c + std::pow(r.q, 2 * j + 1);
    if (std::abs(a) < 1e-12) throw DomainError("qosc_rep: degenerate c = -q^" + std::to_string(2 * j + 1));
    e(j, (j + 1) % N) = a;
  }
  r.images["e"] = e;
  r.images["f"] = f;
  r.images["k"] = k;
  r.images["kinv"] = k.inverse();
  return r;
}

MatrixRep glq2ext_rep(int N, int m, cplx c) {
  MatrixRep a = qosc_rep(N, m, c);
  MatrixRep r{AlgebraId::GLq2Ext, N, m, a.q, 1.0, c, {}};
  r.images["a"] = a.image("e");
  r.images["b"] = a.image("k");
  r.images["c"] = a.image("k");
  r.images["theta"] = a.image("kinv");
  r.images["d"] = a.image("f");
  return r;
}

MatrixRep rep_for(AlgebraId algebra, int N, int m) {
  switch (algebra) {
    case AlgebraId::Wq: return weyl_rep(N, m);
    case AlgebraId::Aq: return qosc_rep(N, m);
    default: {
      MatrixRep r = glq2ext_rep(N, m);
      r.algebra = algebra;
      return r;
    }
  }
}

CMat evaluate(const NCPoly& p, const Presentation& pres, const MatrixRep& rep, const ParamValues& v, int nsites) {
  const int dim = static_cast<int>(std::pow(rep.N, nsites));
  if (p.max_site() >= nsites) throw SizeError("evaluate: polynomial uses more sites than requested");
  CMat out = CMat::Zero(dim, dim);
  for (const auto& [w, c] : p.terms()) {
    std::vector<CMat> f(static_cast<std::size_t>(nsites), CMat::Identity(rep.N, rep.N));
    for (const auto& l : w) f[l.site] = f[l.site] * rep.image(pres.generator_name(l.gen));
    out += eval_lambda(c, v) * kron_all(f);
  }
  return out;
}

CMat evaluate_block(const OpMatrix& m, const Presentation& pres, const MatrixRep& rep, const ParamValues& v,
                    int nsites) {
  const int dim = static_cast<int>(std::pow(rep.N, nsites));
  CMat out = CMat::Zero(m.rows() * dim, m.cols() * dim);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out.block(i * dim, j * dim, dim, dim) = evaluate(m(i, j), pres, rep, v, nsites);
    }
  return out;
}

double relation_residual(const MatrixRep& rep) {
  const Presentation& P = pres_of(rep);
  const ParamValues v = rep.params();
  const CMat I = CMat::Identity(rep.N, rep.N);
  double worst = 0.0;
  for (const auto& rule : P.rules()) worst = std::max(worst, evaluate(P.relation(rule), P, rep, v).norm());
  auto central = [&](const char* word, cplx value) {
    worst = std::max(worst, (evaluate(P.word(word), P, rep, v) - value * I).norm());
  };
  switch (rep.algebra) {
    case AlgebraId::Wq: central("u ut", rep.z); break;
    case AlgebraId::Aq:
      worst = std::max(worst, (evaluate(P.word("e f") - Coefficient::q_pow(1) * P.word("k k"), P, rep, v) - rep.c * I).norm());
      break;
    case AlgebraId::GLq2Ext:
      central("theta b", 1.0);
      central("theta c", 1.0);
      worst = std::max(worst, (evaluate(P.word("a d") - Coefficient::q_pow(1) * P.word("b c"), P, rep, v) - rep.c * I).norm());
      break;
    default: break;
  }
  return worst;
}

namespace {
// (aux1, aux2, quantum) ordering.
CMat embed13(const CMat& L, int dim) {
  CMat out = CMat::Zero(4 * dim, 4 * dim);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 2; ++i2) out.block((2 * i1 + i2) * dim, (2 * j1 + i2) * dim, dim, dim) = L.block(i1 * dim, j1 * dim, dim, dim);
  return out;
}
CMat embed23(const CMat& L, int dim) {
  CMat out = CMat::Zero(4 * dim, 4 * dim);
  for (int i1 = 0; i1 < 2; ++i1) out.block(2 * i1 * dim, 2 * i1 * dim, 2 * dim, 2 * dim) = L;
  return out;
}
}  // namespace

double rll_residual_num(RKind r, LKind l, const MatrixRep& rep, cplx lam, cplx mu) {
  const LInfo& info = l_info(l);
  const Presentation& P = *build_presentation(info.algebra);
  const int N = rep.N;
  OpMatrix Ls = build_L(l, P);
  CMat L13 = embed13(evaluate_block(Ls, P, rep, rep.params(lam * mu)), N);
  CMat L23 = embed23(evaluate_block(Ls, P, rep, rep.params(mu)), N);
  OpMatrix Rs = build_R(r);
  CMat R4(4, 4);
  const ParamValues v = rep.params(lam);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const NCPoly& e = Rs(i, j);
      R4(i, j) = e.is_zero() ? cplx(0.0) : e.terms().begin()->second.evaluate(v);
    }
  CMat R12 = Eigen::kroneckerProduct(R4, CMat::Identity(N, N)).eval();
  return (R12 * L13 * L23 - L23 * L13 * R12).norm();
}

CMat transfer_matrix_num(LKind l, const MatrixRep& rep, int sites, cplx lam) {
  if (sites < 1) throw SizeError("transfer matrix needs at least one site");
  if (std::pow(rep.N, sites) > 1e4) throw SizeError("N^sites exceeds 1e4");
  const LInfo& info = l_info(l);
  const Presentation& P = *build_presentation(info.algebra);
  const int dim = static_cast<int>(std::pow(rep.N, sites));
  const ParamValues v = rep.params(lam);
  CMat prod = CMat::Identity(2 * dim, 2 * dim);
  for (int n = sites - 1; n >= 0; --n) {
    OpMatrix L = build_L(l, P, static_cast<std::uint16_t>(n));
    CMat B = evaluate_block(L, P, rep, v, sites);
    prod = (n == sites - 1) ? B : CMat(prod * B);
  }
  return prod.block(0, 0, dim, dim) + prod.block(dim, dim, dim, dim);
}

double transfer_commutator_num(LKind l, const MatrixRep& rep, int sites, cplx lam, cplx mu) {
  CMat A = transfer_matrix_num(l, rep, sites, lam), B = transfer_matrix_num(l, rep, sites, mu);
  return (A * B - B * A).norm() / (A.norm() * B.norm());
}

std::vector<std::pair<cplx, cplx>> unit_circle_points(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  std::vector<std::pair<cplx, cplx>> pts;
  for (int i = 0; i < count; ++i) {
    double a = ang(rng), b = ang(rng);
    pts.emplace_back(std::polar(1.0, a), std::polar(1.0, b));
  }
  return pts;
}

double rll_sweep(RKind r, LKind l, const MatrixRep& rep, const std::vector<std::pair<cplx, cplx>>& pts, bool parallel) {
  std::vector<double> res(pts.size());
  // build_presentation and build_L are cached / pure; warm the cache before the parallel region.
  build_presentation(l_info(l).algebra);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < pts.size(); ++i) res[i] = rll_residual_num(r, l, rep, pts[i].first, pts[i].second);
  return *std::max_element(res.begin(), res.end());
}

CheckResult rep_relations_check(double tol) {
  double worst = 0.0;
  std::string where;
  for (int N : {3, 5, 7})
    for (int m : {1, 2})
      for (const MatrixRep& rep : {weyl_rep(N, m, cplx(1.3, 0.4)), qosc_rep(N, m), glq2ext_rep(N, m)}) {
        double r = relation_residual(rep);
        if (r >= worst) {
          worst = r;
          where = std::string(algebra_name(rep.algebra)) + " N=" + std::to_string(N) + " m=" + std::to_string(m);
        }
      }
  return numeric_result(worst, tol, "worst at " + where);
}

CheckResult rll_num_suite(std::uint64_t seed, double tol) {
  const auto pts = unit_circle_points(seed, 20);
  double worst = 0.0;
  std::string where;
  int pairs = 0;
  for (const auto& info : l_kinds()) {
    if (!info.partner) continue;
    for (int N : {3, 5, 7}) {
      double r = rll_sweep(*info.partner, info.kind, rep_for(info.algebra, N), pts);
      ++pairs;
      if (r >= worst) {
        worst = r;
        where = std::string(r_kind_name(*info.partner)) + "/" + std::string(info.name) + " N=" + std::to_string(N);
      }
    }
  }
  return numeric_result(worst, tol,
                        std::to_string(pairs) + " (pairing, N) combinations x 20 points, worst at " + where);
}

CheckResult rll_num_negative_control(std::uint64_t seed, double floor) {
  const auto pts = unit_circle_points(seed, 5);
  double smallest = 1e300;
  std::string where;
  for (const auto& info : l_kinds()) {
    if (!info.partner) continue;
    RKind other = *info.partner == RKind::R ? RKind::Rhat : RKind::R;
    double r = rll_sweep(other, info.kind, rep_for(info.algebra, 5), pts);
    if (r < smallest) {
      smallest = r;
      where = std::string(r_kind_name(other)) + "/" + std::string(info.name);
    }
  }
  CheckResult res;
  res.residual_kind = "norm";
  res.residual = smallest;
  res.tolerance = floor;
  res.status = smallest > floor ? Status::pass : Status::fail;
  res.detail = "smallest wrong-partner residual " + fmt(smallest) + " at " + where + " (must exceed the tolerance)";
  return res;
}

CheckResult transfer_commutator_num_check(std::uint64_t seed, int sites, double tol) {
  const auto pts = unit_circle_points(seed, 5);
  double worst = 0.0;
  std::string where;
  for (LKind k : {LKind::rg, LKind::g, LKind::ghat, LKind::LA, LKind::LqDST, LKind::gprime, LKind::gpp, LKind::LrT}) {
    MatrixRep rep = rep_for(l_info(k).algebra, 3);
    for (const auto& [a, b] : pts) {
      double r = transfer_commutator_num(k, rep, sites, a, b);
      if (r >= worst) {
        worst = r;
        where = std::string(l_info(k).name);
      }
    }
  }
  return numeric_result(worst, tol, std::to_string(sites) + " sites, N=3, worst at " + where);
}

CheckResult qdst_fit_check(int sites, double tol) {
  const Presentation& aq = *build_presentation(AlgebraId::Aq);
  double worst = 0.0;
  for (int N : {3, 5}) {
    MatrixRep rep = qosc_rep(N, 1);
    // T(l) has l-degrees in [-sites, sites]; M > 2 sites + 1 points make the DFT exact.
    const int M = 4 * sites + 4;
    std::vector<CMat> samples;
    std::vector<cplx> ls;
    for (int j = 0; j < M; ++j) {
      ls.push_back(std::polar(1.0, 2.0 * kPi * j / M));
      samples.push_back(transfer_matrix_num(LKind::LqDST, rep, sites, ls.back()));
    }
    auto coeff = [&](int k) {
      CMat c = CMat::Zero(samples[0].rows(), samples[0].cols());
      for (int j = 0; j < M; ++j) c += samples[static_cast<std::size_t>(j)] * std::pow(ls[static_cast<std::size_t>(j)], -k);
      return CMat(c / static_cast<double>(M));
    };
    NCPoly Q = aq.one();
    for (int n = 0; n < sites; ++n) Q = free_mul(Q, aq.g("k", static_cast<std::uint16_t>(n)));
    NCPoly H(aq.tag());
    for (int n = 0; n < sites; ++n) {
      auto s = static_cast<std::uint16_t>(n), s1 = static_cast<std::uint16_t>((n + 1) % sites);
      H += free_mul(aq.g("kinv", s), aq.g("kinv", s));
      H += free_mul(free_mul(aq.g("kinv", s), aq.g("e", s)), free_mul(aq.g("kinv", s1), aq.g("f", s1)));
    }
    const ParamValues v = rep.params();
    CMat Qn = evaluate(Q, aq, rep, v, sites), Hn = evaluate(H, aq, rep, v, sites);
    worst = std::max(worst, (coeff(-sites) - Qn).norm());
    worst = std::max(worst, (coeff(2 - sites) - Qn * Hn).norm());
  }
  return numeric_result(worst, tol, std::to_string(sites) + " sites, N in {3,5}");
}

}  // namespace qbax
