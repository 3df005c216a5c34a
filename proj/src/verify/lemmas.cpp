#include "verify/lemmas.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "flagged_formulas/raising.hpp"
#include "ring/actions.hpp"
#include "ring/blocks.hpp"
#include "ring/relations.hpp"

namespace amen {

namespace {

using Rng = std::mt19937_64;

int uni(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

std::string fmt_vec(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(LemmaOutcome& out) : out_(out) {}
  void check(bool ok, const std::function<std::string()>& what) {
    ++out_.instances;
    if (ok) ++out_.passed;
    else if (out_.failures.size() < 5) out_.failures.push_back(what());
  }

 private:
  LemmaOutcome& out_;
};

LemmaOutcome outcome(std::string name, std::string mode) {
  LemmaOutcome o;
  o.name = std::move(name);
  o.mode = std::move(mode);
  return o;
}

bool same(Flavor fl, const QPoly& a, const QPoly& b) {
  if (a == b) return true;
  RelationContext ctx;
  ctx.flavor = fl;
  return eq_mod_relations(ctx, a, b);
}

uint64_t prime_of(const LemmaConfig& cfg) { return cfg.prime ? cfg.prime : kDefaultPrime; }

// ---------------------------------------------------------------------------
// Divided differences of the building blocks (exact).

LemmaOutcome h_block_dd(const LemmaConfig& cfg) {
  LemmaOutcome out = outcome("h-block divided differences", "exact");
  Recorder rec(out);
  Rng g(cfg.seed * 0x9e3779b97f4a7c15ULL + 1);
  PolyEnv<Rational> env(CMode::None);
  Blocks<QPoly> B(env);
  for (int t = 0; t < cfg.trials; ++t) {
    const bool yside = t & 1;
    int i = uni(g, 1, 4), r = uni(g, -4, 4), s = uni(g, -4, 4), p = uni(g, 0, 5);
    // hit the nonzero branch about half the time
    if (uni(g, 0, 1)) (yside ? s : r) = uni(g, 0, 1) ? i : -i;
    QPoly got = ddiff(Flavor::A, i, yside ? Side::Y : Side::X, B.h(r, s, p));
    QPoly want;
    if (!yside && (r == i || r == -i)) want = B.h(r + 1, s, p - 1);
    if (yside && (s == i || s == -i)) want = B.h(r, s - 1, p - 1);
    rec.check(got == want, [&] {
      std::ostringstream os;
      os << (yside ? "y" : "x") << " i=" << i << " r=" << r << " s=" << s << " p=" << p;
      return os.str();
    });
  }
  return out;
}

LemmaOutcome c_block_dd(const LemmaConfig&) {
  LemmaOutcome out = outcome("c-block divided differences", "exhaustive exact");
  Recorder rec(out);
  PolyEnv<Rational> env(CMode::FreeC);
  Blocks<QPoly> B(env);
  for (int i = 0; i <= 4; ++i)
    for (int r = -4; r <= 4; ++r)
      for (int s = -4; s <= 4; ++s)
        for (int p = 0; p <= 4; ++p) {
          const QPoly f = B.c(r, s, p);
          QPoly want = (r == i || r == -i) ? B.c(r - 1, s, p - 1) : QPoly();
          rec.check(same(Flavor::BC, ddiff(Flavor::BC, i, Side::X, f), want), [&] {
            return "x i=" + std::to_string(i) + " r=" + std::to_string(r) + " s=" + std::to_string(s) +
                   " p=" + std::to_string(p);
          });
          want = (s == i || s == -i) ? B.c(r, s + 1, p - 1) : QPoly();
          rec.check(same(Flavor::BC, ddiff(Flavor::BC, i, Side::Y, f), want), [&] {
            return "y i=" + std::to_string(i) + " r=" + std::to_string(r) + " s=" + std::to_string(s) +
                   " p=" + std::to_string(p);
          });
        }
  return out;
}

QPoly no_extra(int, int, int, int, int) { return QPoly(); }

// d^y_i (r c^{-i}_p  s c^i_q) = (1 + R12) applied to (r,s) c^{(-i+1,i+1)}_{(p-1,q)},
// plus extra(i, r, s, p, q).
template <class MakeFirst, class Extra = decltype(&no_extra)>
void product_rule_instances(LemmaOutcome& out, Rng& g, int trials, Flavor fl, Blocks<QPoly>& B, int r_lo, int i_lo,
                            MakeFirst&& first, Extra&& extra = no_extra) {
  Recorder rec(out);
  for (int t = 0; t < trials; ++t) {
    int i = uni(g, i_lo, 3), r = uni(g, r_lo, 3), s = uni(g, std::max(1, r_lo), 3), p = uni(g, 0, 5), q = uni(g, 0, 4);
    // make the hatted corrections live on one side or the other
    const int pick = uni(g, 0, 2);
    if (pick == 1) p = r + i;
    if (pick == 2) p = r + i - 1;
    QPoly lhs = ddiff(fl, i, Side::Y, first(r, -i, p) * B.c(s, i, q));
    QPoly rhs = first(r, -i + 1, p - 1) * B.c(s, i + 1, q) + first(r, -i + 1, p) * B.c(s, i + 1, q - 1) +
                extra(i, r, s, p, q);
    rec.check(same(fl, lhs, rhs), [&] {
      std::ostringstream os;
      os << "i=" << i << " r=" << r << " s=" << s << " p=" << p << " q=" << q;
      return os.str();
    });
  }
}

LemmaOutcome c_block_products(const LemmaConfig& cfg) {
  LemmaOutcome out = outcome("c-block products, y side", "exact");
  Rng g(cfg.seed * 0x9e3779b97f4a7c15ULL + 2);
  PolyEnv<Rational> env(CMode::FreeC);
  Blocks<QPoly> B(env);
  product_rule_instances(out, g, cfg.trials, Flavor::BC, B, 0, 1, [&](int r, int s, int p) { return B.c(r, s, p); });
  return out;
}

LemmaOutcome orth_c_block_dd(const LemmaConfig&) {
  LemmaOutcome out = outcome("even orthogonal c-block divided differences", "exhaustive exact");
  Recorder rec(out);
  PolyEnv<Rational> env(CMode::FreeB);
  Blocks<QPoly> B(env);
  for (int r = 1; r <= 4; ++r)
    for (int q = -4; q <= 4; ++q)
      for (int p = 0; p <= 4; ++p) {
        const QPoly f = B.c(r, q, p);
        auto label = [&](const std::string& side, int i) {
          return side + " i=" + (i == kBox ? std::string("box") : std::to_string(i)) + " r=" + std::to_string(r) +
                 " q=" + std::to_string(q) + " p=" + std::to_string(p);
        };
        for (int i = 1; i <= 4; ++i) {
          QPoly want = (r == i || r == -i) ? B.c(r - 1, q, p - 1) : QPoly();
          rec.check(same(Flavor::D, ddiff(Flavor::D, i, Side::X, f), want), [&] { return label("x", i); });
          want = (q == i || q == -i) ? B.c(r, q + 1, p - 1) : QPoly();
          rec.check(same(Flavor::D, ddiff(Flavor::D, i, Side::Y, f), want), [&] { return label("y", i); });
        }
        QPoly want;
        if (q == 1) want = B.c(r, 2, p - 1);
        if (q == 0) want = B.c(r, 2, p - 1) * Rational(2);
        if (q == -1) want = B.c(r, 1, p - 1) * Rational(2) - B.c(r, 0, p - 1);
        rec.check(same(Flavor::D, ddiff(Flavor::D, kBox, Side::Y, f), want), [&] { return label("y", kBox); });
      }
  return out;
}

LemmaOutcome orth_c_block_products(const LemmaConfig& cfg) {
  LemmaOutcome out = outcome("even orthogonal c-block products, y side", "exact");
  Rng g(cfg.seed * 0x9e3779b97f4a7c15ULL + 3);
  PolyEnv<Rational> env(CMode::FreeB);
  Blocks<QPoly> B(env);
  product_rule_instances(out, g, cfg.trials, Flavor::D, B, 1, 1, [&](int r, int s, int p) { return B.c(r, s, p); });
  return out;
}

const char* family_name(FFamily f) {
  switch (f) {
    case FFamily::B: return "b";
    case FFamily::BTilde: return "bt";
    case FFamily::HalfC: return "c/2";
  }
  return "?";
}

// The x-side rule is checked with the nonzero case at i = r (see notes).
LemmaOutcome hat_block_dd(const LemmaConfig&) {
  LemmaOutcome out = outcome("hatted c-block divided differences", "exhaustive exact");
  Recorder rec(out);
  PolyEnv<Rational> env(CMode::FreeB);
  Blocks<QPoly> B(env);
  for (FFamily fam : {FFamily::B, FFamily::BTilde, FFamily::HalfC})
    for (int r = 1; r <= 3; ++r)
      for (int p = r + 1; p <= r + 4; ++p) {
        const QPoly f = B.c_hat_family(fam, r, r - p, p);
        auto label = [&](const std::string& side, int i) {
          return side + " f=" + family_name(fam) + " i=" + (i == kBox ? std::string("box") : std::to_string(i)) +
                 " r=" + std::to_string(r) + " p=" + std::to_string(p);
        };
        for (int i = 1; i <= 4; ++i) {
          QPoly want = i == r ? B.c_hat_family(fam, r - 1, r - p, p - 1) : QPoly();
          rec.check(same(Flavor::D, ddiff(Flavor::D, i, Side::X, f), want), [&] { return label("x", i); });
          want = QPoly();
          if (i == p - r && i >= 2) want = B.c_hat_family(fam, r, r - p + 1, p - 1);
          if (i == p - r && i == 1) want = B.f(fam, r) * Rational(2);
          rec.check(same(Flavor::D, ddiff(Flavor::D, i, Side::Y, f), want), [&] { return label("y", i); });
        }
        QPoly want;
        if (r - p == -1) want = (B.c(r, r) - B.f(fam, r) * Rational(2) + B.f_up(fam, r, 1)) * Rational(2);
        rec.check(same(Flavor::D, ddiff(Flavor::D, kBox, Side::Y, f), want), [&] { return label("y", kBox); });
      }
  return out;
}

LemmaOutcome hat_block_products(const LemmaConfig& cfg) {
  LemmaOutcome out = outcome("hatted c-block products, y side", "exact");
  Rng g(cfg.seed * 0x9e3779b97f4a7c15ULL + 4);
  PolyEnv<Rational> env(CMode::FreeB);
  Blocks<QPoly> B(env);
  for (int t = 0; t < cfg.trials; ++t) {
    FFamily fam = static_cast<FFamily>(t % 3);
    LemmaOutcome part;
    // At p = r + i - 1 the second term on the right carries a correction
    // the left side lacks; it is subtracted back out.
    auto extra = [&](int i, int r, int s, int p, int q) {
      if (p != r + i - 1 || p <= r) return QPoly();
      QPoly corr = (B.f(fam, r) * Rational(2) - B.c(r, r)) * env.ey(i - 1, i - 1);
      return -(corr * B.c(s, i + 1, q - 1));
    };
    product_rule_instances(
        part, g, 1, Flavor::D, B, 1, 2, [&](int r, int s, int p) { return B.c_hat_family(fam, r, s, p); }, extra);
    out.instances += part.instances;
    out.passed += part.passed;
    for (auto& f : part.failures)
      if (out.failures.size() < 5) out.failures.push_back(std::string("f=") + family_name(fam) + " " + f);
  }
  return out;
}

QPoly random_poly(Rng& g, Flavor fl) {
  std::vector<Var> vars = {xv(1), xv(2), xv(3), yv(1), yv(2)};
  if (fl == Flavor::BC) vars.insert(vars.end(), {cv(1), cv(2), cv(3)});
  if (fl == Flavor::D) vars.insert(vars.end(), {bv(1), bv(2), bv(3)});
  QPoly f;
  const int terms = uni(g, 1, 4);
  for (int t = 0; t < terms; ++t) {
    QPoly m = QPoly::constant(Rational(uni(g, -3, 3)));
    const int deg = uni(g, 0, 3);
    for (int d = 0; d < deg; ++d) m = m * QPoly::var(vars[uni(g, 0, static_cast<int>(vars.size()) - 1)]);
    f += m;
  }
  return f;
}

LemmaOutcome leibniz(const LemmaConfig& cfg) {
  LemmaOutcome out = outcome("Leibniz rules", "exact");
  Recorder rec(out);
  Rng g(cfg.seed * 0x9e3779b97f4a7c15ULL + 5);
  for (int t = 0; t < cfg.trials; ++t) {
    const Flavor fl = t & 1 ? Flavor::D : Flavor::BC;
    const Side side = t & 2 ? Side::Y : Side::X;
    const int i = fl == Flavor::D ? (uni(g, 0, 3) == 0 ? kBox : uni(g, 1, 3)) : uni(g, 0, 3);
    QPoly f = random_poly(g, fl), h = random_poly(g, fl);
    QPoly lhs = ddiff(fl, i, side, f * h);
    QPoly rhs = ddiff(fl, i, side, f) * h + weyl_act(fl, i, side, f) * ddiff(fl, i, side, h);
    rec.check(lhs == rhs, [&] {
      return std::string(flavor_name(fl)) + (side == Side::Y ? " y" : " x") + " i=" + std::to_string(i) + " f=" +
             f.str() + " g=" + h.str();
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relations, at random points of the prime field.

struct Point {
  std::unique_ptr<NumericEnv> env;
  std::unique_ptr<Blocks<Fp>> blocks;
};

Point draw_point(Rng& g, int nx, int num_z, int max_degree) {
  std::vector<Fp> x, y, z;
  for (int i = 0; i < nx; ++i) x.push_back(random_fp(g)), y.push_back(random_fp(g));
  for (int i = 0; i < num_z; ++i) z.push_back(random_fp(g));
  Point pt;
  pt.env = std::make_unique<NumericEnv>(std::move(x), std::move(y), std::move(z), max_degree);
  pt.blocks = std::make_unique<Blocks<Fp>>(*pt.env);
  return pt;
}

// Evaluates the relation p of the sequence seq at every point; the
// relation is sq(p) + 2 sum_i (-1)^i seq(p+i) seq(p-i).
template <class Seq, class Sq>
Fp relation_value(int p, Seq&& seq, Sq&& sq) {
  Fp acc = sq(p);
  for (int i = 1; i <= p; ++i) {
    Fp term = Fp(2) * seq(p + i) * seq(p - i);
    acc = i % 2 ? acc - term : acc + term;
  }
  return acc;
}

LemmaOutcome basic_relations(const LemmaConfig& cfg) {
  LemmaOutcome out = outcome("basic relations", "randomized");
  Recorder rec(out);
  PrimeScope scope(prime_of(cfg));
  Rng g(cfg.seed * 0x9e3779b97f4a7c15ULL + 6);
  for (int t = 0; t < cfg.trials; ++t) {
    const int p = uni(g, 1, 10);
    const bool in_b = t & 1;
    RelationContext ctx;
    ctx.flavor = in_b ? Flavor::D : Flavor::BC;
    ctx.prime = prime_of(cfg);
    ctx.seed = g();
    auto res = eq_mod_relations_detail(ctx, in_b ? relation_b(p) : relation_c(p), QPoly());
    out.points += res.trials;
    rec.check(res.equal, [&] { return std::string(in_b ? "b" : "c") + " relation p=" + std::to_string(p); });
  }
  return out;
}

LemmaOutcome twisted_relations(const LemmaConfig& cfg, bool boundary) {
  LemmaOutcome out = outcome(boundary ? "twisted relation at p = r + s" : "twisted relations above r + s", "randomized");
  Recorder rec(out);
  PrimeScope scope(prime_of(cfg));
  Rng g(cfg.seed * 0x9e3779b97f4a7c15ULL + (boundary ? 8 : 7));
  for (int t = 0; t < cfg.trials; ++t) {
    const int r = uni(g, 0, 3), s = uni(g, 0, 3);
    const int p = boundary ? r + s : r + s + uni(g, 1, 4);
    if (p == 0) {
      --t;
      continue;
    }
    const int deg = 2 * p;
    const int points = trials_needed(deg, prime_of(cfg));
    bool ok = true;
    for (int k = 0; k < points && ok; ++k) {
      Point pt = draw_point(g, 4, deg + 1, deg);
      auto seq = [&](int q) { return pt.blocks->c(r, -s, q); };
      Fp d = pt.env->ex(r, r) * pt.env->ey(s, s);
      auto sq = [&](int q) {
        Fp c = seq(q);
        return boundary ? (c + d) * (c - d) : c * c;
      };
      ok = Field<Fp>::is_zero(relation_value(p, seq, sq));
      ++out.points;
    }
    rec.check(ok, [&] { return "r=" + std::to_string(r) + " s=" + std::to_string(s) + " p=" + std::to_string(p); });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alternation of raising operator expressions, in formal row families.

// Random order ideal D = {(i,j) : i < j <= b_i} with b weakly decreasing.
PairSet random_ideal(Rng& g, int ell) {
  PairSet d;
  int b = uni(g, 1, ell);
  for (int i = 1; i <= ell; ++i) {
    b = uni(g, 1, b);
    for (int j = i + 1; j <= b; ++j) d.insert({i, j});
  }
  return d;
}

// Hypotheses of the two alternation settings: (j,j+1) outside D with the
// columns j and j+1 matching above, or inside D with rows j, j+1 matching.
bool free_rows_hyp(const PairSet& d, int j) {
  if (d.count({j, j + 1})) return false;
  for (int h = 1; h < j; ++h)
    if (d.count({h, j}) != d.count({h, j + 1})) return false;
  return true;
}
bool tied_rows_hyp(const PairSet& d, int j, int ell) {
  if (!d.count({j, j + 1})) return false;
  for (int h = j + 2; h <= ell; ++h)
    if (d.count({j, h}) != d.count({j + 1, h})) return false;
  return true;
}

std::string pairs_str(const PairSet& d) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [i, j] : d) {
    os << (first ? "" : ",") << i << j;
    first = false;
  }
  os << '}';
  return os.str();
}

// Values of the formal families at one random point. Families are keyed
// by an id; s-values at index 0 are 1, u-values vanish at indices <= 0.
class FormalPoint {
 public:
  explicit FormalPoint(Rng& g) : g_(g) {}
  Fp s(int id, int p) {
    if (p < 0) return Fp(0);
    if (p == 0) return Fp(1);
    return lookup(s_, id, p);
  }
  Fp u(int id, int p) {
    if (p <= 0) return Fp(0);
    return lookup(u_, id, p);
  }

 private:
  Fp lookup(std::map<std::pair<int, int>, Fp>& m, int id, int p) {
    auto it = m.find({id, p});
    if (it == m.end()) it = m.emplace(std::make_pair(id, p), random_fp(g_)).first;
    return it->second;
  }
  Rng& g_;
  std::map<std::pair<int, int>, Fp> s_, u_;
};

using RowValue = std::function<Fp(int row, int p)>;

Fp raise_value(const std::vector<RaisingTerm>& terms, const RowValue& plain) {
  Fp acc(0);
  for (const auto& [idx, c] : collect_by_index(terms)) {
    Fp prod = Field<Fp>::from_rational(Rational(static_cast<long>(c)));
    for (size_t i = 0; i < idx.size(); ++i) prod *= plain(static_cast<int>(i) + 1, idx[i]);
    acc += prod;
  }
  return acc;
}

// R star s_hat: rows in supp_d(R) take the plain family, the others the hatted one.
Fp star_value(const std::vector<RaisingTerm>& terms, int d, const RowValue& plain, const RowValue& hat) {
  Fp acc(0);
  for (const auto& t : terms) {
    const std::set<int> supp = t.support(d);
    Fp prod = Field<Fp>::from_rational(Rational(static_cast<long>(t.coeff)));
    for (size_t i = 0; i < t.index.size(); ++i) {
      const int row = static_cast<int>(i) + 1;
      prod *= supp.count(row) ? plain(row, t.index[i]) : hat(row, t.index[i]);
    }
    acc += prod;
  }
  return acc;
}

struct AltInstance {
  std::vector<int> lambda, mu;
  int j = 0, ell = 0, k = 0, d = 0;
  PairSet D;
  std::vector<int> with(int r, int s) const {
    std::vector<int> v = lambda;
    v.push_back(r);
    v.push_back(s);
    v.insert(v.end(), mu.begin(), mu.end());
    return v;
  }
  std::string str() const {
    std::ostringstream os;
    os << "lambda=" << fmt_vec(lambda) << " mu=" << fmt_vec(mu) << " D=" << pairs_str(D) << " k=" << k << " d=" << d;
    return os.str();
  }
};

AltInstance random_alt(Rng& g, bool tied, bool star) {
  for (;;) {
    AltInstance a;
    a.lambda.resize(uni(g, 0, 2));
    a.mu.resize(uni(g, 0, 2));
    for (int& v : a.lambda) v = uni(g, 0, 4);
    for (int& v : a.mu) v = uni(g, 0, 3);
    a.j = static_cast<int>(a.lambda.size()) + 1;
    a.ell = a.j + 1 + static_cast<int>(a.mu.size());
    a.k = uni(g, 0, 2);
    a.D = random_ideal(g, a.ell);
    if (tied ? !tied_rows_hyp(a.D, a.j, a.ell) : !free_rows_hyp(a.D, a.j)) continue;
    if (star) {
      // free rows need j > d, tied rows need j < d
      if (tied) a.d = uni(g, a.j + 1, a.ell + 1);
      else a.d = uni(g, 0, a.j - 1);
    }
    return a;
  }
}

int total(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += std::max(x, 0);
  return s;
}

// Runs `trials` instances; each instance compares lhs(point) with rhs(point)
// at enough random points for the error bound.
template <class Make>
LemmaOutcome alternation(const LemmaConfig& cfg, const std::string& name, uint64_t salt, Make&& make) {
  LemmaOutcome out = outcome(name, "randomized");
  Recorder rec(out);
  PrimeScope scope(prime_of(cfg));
  Rng g(cfg.seed * 0x9e3779b97f4a7c15ULL + salt);
  for (int t = 0; t < cfg.trials; ++t) {
    std::string label;
    bool ok = make(g, out.points, label);
    rec.check(ok, [&] { return label; });
  }
  return out;
}

// Free rows: both sides in Z[s] (or Z[s,u] with the star action).
LemmaOutcome alt_free(const LemmaConfig& cfg, bool star, bool part_b) {
  std::string name = std::string(star ? "star " : "") + "alternation, free rows" + (part_b ? " (shifted row)" : "");
  return alternation(cfg, name, 20 + star * 2 + part_b, [&](Rng& g, int& points, std::string& label) {
    AltInstance a = random_alt(g, false, star);
    int r = uni(g, -1, 4), s = uni(g, -1, 4);
    if (part_b) s = r = uni(g, 0, 4);
    const auto lhs_idx = a.with(r, s);
    const auto rhs_idx = part_b ? a.with(r, r) : a.with(s - 1, r + 1);
    auto lhs_terms = expand_RD(a.D, a.ell, lhs_idx);
    auto rhs_terms = expand_RD(a.D, a.ell, rhs_idx);
    label = a.str() + " r=" + std::to_string(r) + " s=" + std::to_string(s);
    const int deg = a.ell + 2;
    const int npts = trials_needed(deg, Fp::modulus());
    for (int k = 0; k < npts; ++k) {
      ++points;
      FormalPoint pt(g);
      const Fp z = random_fp(g);
      auto fam = [&](int row) { return row == a.j + 1 ? a.j : row; };
      RowValue plain = [&](int row, int p) { return pt.s(fam(row), p); };
      RowValue hat = [&](int row, int p) {
        Fp u = row <= a.d ? pt.u(row, p) : Fp(0);
        return row % 2 ? pt.s(fam(row), p) - u : pt.s(fam(row), p) + u;
      };
      // tau: row j shifted by z times the previous index
      RowValue tplain = [&](int row, int p) { return row == a.j ? plain(row, p) + z * plain(row, p - 1) : plain(row, p); };
      RowValue that = [&](int row, int p) { return row == a.j ? hat(row, p) + z * hat(row, p - 1) : hat(row, p); };
      Fp lhs, rhs;
      if (!star) {
        lhs = raise_value(lhs_terms, part_b ? tplain : plain);
        rhs = raise_value(rhs_terms, plain);
      } else {
        lhs = star_value(lhs_terms, a.d, part_b ? tplain : plain, part_b ? that : hat);
        rhs = star_value(rhs_terms, a.d, plain, hat);
      }
      if (!part_b) rhs = -rhs;
      if (!(lhs == rhs)) return false;
    }
    return true;
  });
}

// Tied rows: rows j and j+1 both carry a family satisfying the relations
// above k. Theta setting: c_p = ^k c_p. Star setting: c_p = ^{k+1} c_p with
// d_{k+1} = x_1...x_{k+1}, free d_1..d_k, and d_p = 0 above k+1.
enum class TiedCheck { Antisym, Vanish, Shift };

LemmaOutcome alt_tied(const LemmaConfig& cfg, bool star, TiedCheck what) {
  std::string name = std::string(star ? "star " : "") + "alternation modulo relations";
  if (what == TiedCheck::Vanish) name = "star vanishing at k+1 modulo relations";
  if (what == TiedCheck::Shift) name += " (shifted row)";
  return alternation(cfg, name, 40 + star * 4 + static_cast<int>(what), [&](Rng& g, int& points, std::string& label) {
    AltInstance a = random_alt(g, true, star);
    const int k = a.k;
    const int floor = star ? 2 * k + 2 : 2 * k;
    int r = 0, s = 0;
    if (what == TiedCheck::Antisym) {
      do {
        r = uni(g, 0, floor + 3);
        s = uni(g, 0, floor + 3);
      } while (r + s <= floor);
    } else if (what == TiedCheck::Vanish) {
      r = s = k + 1;
    } else {
      r = uni(g, k + 1, k + 3) + 1;
      s = r - 1;
    }
    const auto lhs_idx = a.with(r, s);
    const auto rhs_idx = what == TiedCheck::Antisym ? a.with(s, r) : a.with(r, s);
    auto lhs_terms = expand_RD(a.D, a.ell, lhs_idx);
    auto rhs_terms = expand_RD(a.D, a.ell, rhs_idx);
    label = a.str() + " r=" + std::to_string(r) + " s=" + std::to_string(s);
    const int deg = total(lhs_idx) + a.ell + 2;
    const int npts = trials_needed(deg, Fp::modulus());
    const int kk = star ? k + 1 : k;
    for (int t = 0; t < npts; ++t) {
      ++points;
      Point num = draw_point(g, kk + 1, deg + 1, deg + 1);
      FormalPoint pt(g);
      const Fp z = random_fp(g);
      auto tied = [&](int row) { return row == a.j || row == a.j + 1; };
      auto cfam = [&](int p) { return num.blocks->c(kk, 0, p); };
      auto dfam = [&](int p) {
        if (p <= 0 || p > k + 1) return Fp(0);
        if (p == k + 1) return num.env->ex(k + 1, k + 1);
        return pt.u(0, p);
      };
      RowValue plain = [&](int row, int p) { return tied(row) ? cfam(p) : pt.s(row, p); };
      RowValue hat = [&](int row, int p) {
        Fp u(0);
        if (tied(row)) u = dfam(p);
        else if (row <= a.d) u = pt.u(row, p);
        return row % 2 ? plain(row, p) - u : plain(row, p) + u;
      };
      RowValue tplain = [&](int row, int p) { return row == a.j ? plain(row, p) + z * plain(row, p - 1) : plain(row, p); };
      RowValue that = [&](int row, int p) { return row == a.j ? hat(row, p) + z * hat(row, p - 1) : hat(row, p); };
      const bool shift = what == TiedCheck::Shift;
      Fp lhs = star ? star_value(lhs_terms, a.d, shift ? tplain : plain, shift ? that : hat)
                    : raise_value(lhs_terms, shift ? tplain : plain);
      Fp rhs(0);
      if (what != TiedCheck::Vanish) rhs = star ? star_value(rhs_terms, a.d, plain, hat) : raise_value(rhs_terms, plain);
      if (what == TiedCheck::Antisym) rhs = -rhs;
      if (!(lhs == rhs)) return false;
    }
    return true;
  });
}

struct Entry {
  const char* name;
  std::function<LemmaOutcome(const LemmaConfig&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"h-block-dd", h_block_dd},
      {"c-block-dd", c_block_dd},
      {"c-block-products", c_block_products},
      {"orth-c-block-dd", orth_c_block_dd},
      {"orth-c-block-products", orth_c_block_products},
      {"hat-block-dd", hat_block_dd},
      {"hat-block-products", hat_block_products},
      {"leibniz", leibniz},
      {"basic-relations", basic_relations},
      {"twisted-relations", [](const LemmaConfig& c) { return twisted_relations(c, false); }},
      {"twisted-relation-boundary", [](const LemmaConfig& c) { return twisted_relations(c, true); }},
      {"alt-free", [](const LemmaConfig& c) { return alt_free(c, false, false); }},
      {"alt-free-shift", [](const LemmaConfig& c) { return alt_free(c, false, true); }},
      {"alt-tied", [](const LemmaConfig& c) { return alt_tied(c, false, TiedCheck::Antisym); }},
      {"alt-tied-shift", [](const LemmaConfig& c) { return alt_tied(c, false, TiedCheck::Shift); }},
      {"star-alt-free", [](const LemmaConfig& c) { return alt_free(c, true, false); }},
      {"star-alt-free-shift", [](const LemmaConfig& c) { return alt_free(c, true, true); }},
      {"star-alt-tied", [](const LemmaConfig& c) { return alt_tied(c, true, TiedCheck::Antisym); }},
      {"star-vanish", [](const LemmaConfig& c) { return alt_tied(c, true, TiedCheck::Vanish); }},
      {"star-alt-tied-shift", [](const LemmaConfig& c) { return alt_tied(c, true, TiedCheck::Shift); }},
  };
  return r;
}

}  // namespace

std::vector<std::string> lemma_names() {
  std::vector<std::string> out;
  for (const auto& e : registry()) out.push_back(e.name);
  return out;
}

LemmaOutcome run_lemma(const std::string& name, const LemmaConfig& cfg) {
  for (const auto& e : registry())
    if (name == e.name) return e.run(cfg);
  throw std::invalid_argument("unknown lemma check '" + name + "'");
}

std::vector<LemmaOutcome> lemma_suite(const LemmaConfig& cfg) {
  std::vector<LemmaOutcome> out;
  for (const auto& e : registry()) out.push_back(e.run(cfg));
  return out;
}

}  // namespace amen
