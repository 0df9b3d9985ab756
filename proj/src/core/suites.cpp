#include "suites.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <json.hpp>

#include "freegroup.hpp"
#include "johnson.hpp"
#include "pointpush.hpp"
#include "rng.hpp"

namespace surfcoh {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

SeededRng task_rng(const SuiteConfig& cfg, const std::string& purpose, int g, int n) {
  return SeededRng::for_task(cfg.seed,
                             fnv1a(fmt::format("{}/g{}n{}", purpose, g, n)));
}

void add_check(std::vector<CheckRecord>& checks, std::string id, std::string claim,
               std::string inputs, std::string expected, std::string actual) {
  bool pass = expected == actual;
  checks.push_back({std::move(id), std::move(claim), std::move(inputs),
                    std::move(expected), std::move(actual), pass});
}

std::string yn(bool b) { return b ? "true" : "false"; }

std::size_t rank_formula(std::size_t g, std::size_t n) {
  return binomial(n, 2) * (2 * g) * (2 * g) + n - binomial(n, 2);
}

ConfClass1 sample_crossing(SeededRng& rng, const ConfSpaceModel& model) {
  std::size_t n = model.points();
  std::size_t blocks = n >= 3 ? static_cast<std::size_t>(rng.int_in(2, 3)) : 2;
  std::vector<std::size_t> chosen;
  while (chosen.size() < blocks) {
    std::size_t i = static_cast<std::size_t>(rng.int_in(1, static_cast<long>(n)));
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) chosen.push_back(i);
  }
  RationalVector coords(model.dim());
  for (std::size_t i : chosen) {
    RationalVector blk = rng.nonzero_small_vector(model.block_dim());
    std::size_t off = model.block_offset(i);
    for (std::size_t s = 0; s < blk.size(); ++s) coords[off + s] = blk[s];
  }
  return ConfClass1(model, std::move(coords));
}

// Crossing line, or an isotropic subspace inside a single block: the span of
// a_1..a_d moved by a few random transvections (symplectic maps preserve
// isotropy) and embedded at a random point.
Subspace sample_isotropic(SeededRng& rng, const ConfSpaceModel& model) {
  const SymplecticSpace& sp = model.space();
  bool crossing_line = model.points() >= 2 && rng.next() % 2 == 0;
  if (crossing_line) {
    return Subspace::line(sample_crossing(rng, model).coords());
  }
  std::size_t d = static_cast<std::size_t>(rng.int_in(1, static_cast<long>(sp.genus())));
  std::vector<RationalVector> vectors;
  for (std::size_t k = 1; k <= d; ++k) vectors.push_back(sp.unit_a(k));
  std::vector<RationalMatrix> list = sp.transvections();
  long moves = rng.int_in(0, 4);
  for (long m = 0; m < moves; ++m) {
    const RationalMatrix& t =
        list[static_cast<std::size_t>(rng.int_in(0, static_cast<long>(list.size() - 1)))];
    for (auto& v : vectors) v = t * v;
  }
  std::size_t block =
      static_cast<std::size_t>(rng.int_in(1, static_cast<long>(model.points())));
  std::vector<RationalVector> rows;
  for (const auto& v : vectors) {
    rows.push_back(ConfClass1::in_block(model, block, v).coords());
  }
  return Subspace::from_vectors(rows, model.dim());
}

// ------------------------------------------------------------------
// cup suite
// ------------------------------------------------------------------

void run_cup(const SuiteConfig& cfg, int g, int n, std::vector<CheckRecord>& checks) {
  ConfSpaceModel model(g, n);
  H2Presentation minus(model, RelationSign::Minus);
  H2Presentation plus(model, RelationSign::Plus);
  const H2Presentation& pres =
      cfg.relation_sign == RelationSign::Minus ? minus : plus;
  std::string in = fmt::format("g={} n={}", g, n);

  add_check(checks, fmt::format("cup/g{}n{}/relation-rank-minus", g, n),
            "relation independence", in, std::to_string(minus.relation_count()),
            std::to_string(minus.relation_rank()));
  add_check(checks, fmt::format("cup/g{}n{}/relation-rank-plus", g, n),
            "relation independence", in, std::to_string(plus.relation_count()),
            std::to_string(plus.relation_rank()));

  // Each relation touches its two point classes and 2g tensor coordinates.
  bool shape_ok = true;
  for (std::size_t i = 1; i <= model.points() && shape_ok; ++i) {
    for (std::size_t j = i + 1; j <= model.points() && shape_ok; ++j) {
      RationalVector r = pres.relation(i, j);
      std::size_t tensor_nnz = 0;
      for (std::size_t c = model.points(); c < r.size(); ++c) {
        if (!r[c].is_zero()) ++tensor_nnz;
      }
      shape_ok = !r[pres.p_index(i)].is_zero() && !r[pres.p_index(j)].is_zero() &&
                 tensor_nnz == 2 * model.genus();
    }
  }
  add_check(checks, fmt::format("cup/g{}n{}/relation-shape", g, n),
            "relation support: both point classes and 2g tensor terms", in, "true",
            yn(shape_ok));

  std::size_t rank_m = image_rank(minus);
  std::size_t rank_p = image_rank(plus);
  add_check(checks, fmt::format("cup/g{}n{}/image-rank", g, n),
            "cup image rank identity", in, std::to_string(rank_formula(g, n)),
            std::to_string(rank_m));
  add_check(checks, fmt::format("cup/g{}n{}/image-rank-sign-independent", g, n),
            "cup image rank identity", in, std::to_string(rank_m),
            std::to_string(rank_p));

  // frozen single-block example: a_1 cup b_1 in block 1 is the point class
  {
    const SymplecticSpace& sp = model.space();
    ConfClass1 x = ConfClass1::in_block(model, 1, sp.unit_a(1));
    ConfClass1 y = ConfClass1::in_block(model, 1, sp.unit_b(1));
    RationalVector p1(pres.ambient_dim());
    p1[pres.p_index(1)] = Rational(1);
    add_check(checks, fmt::format("cup/g{}n{}/block-pairing", g, n),
              "single-block cup is the intersection pairing", in, "true",
              yn(cup(x, y, pres) == H2Class(pres, p1)));
  }
  if (n >= 2) {
    const SymplecticSpace& sp = model.space();
    ConfClass1 x = ConfClass1::in_block(model, 1, sp.unit_a(1));
    ConfClass1 y = ConfClass1::in_block(model, 2, sp.unit_a(1));
    add_check(checks, fmt::format("cup/g{}n{}/cross-tensor-nonzero", g, n),
              "cross-block cup survives reduction", in, "true",
              yn(!cup(x, y, pres).is_zero()));
  }

  SeededRng rng = task_rng(cfg, "cup", g, n);
  int fail_anti = 0, fail_self = 0, fail_bilin = 0;
  for (int s = 0; s < cfg.samples; ++s) {
    ConfClass1 x(model, rng.small_vector(model.dim()));
    ConfClass1 y(model, rng.small_vector(model.dim()));
    ConfClass1 z(model, rng.small_vector(model.dim()));
    RationalVector anti = cup_ambient(x, y, pres);
    add_scaled(anti, Rational(1), cup_ambient(y, x, pres));
    if (!is_zero_vector(anti)) ++fail_anti;
    if (!cup(x, x, pres).is_zero()) ++fail_self;
    Rational lambda = rng.small_rational();
    RationalVector combo = x.coords();
    for (auto& c : combo) c *= lambda;
    add_scaled(combo, Rational(1), z.coords());
    RationalVector lhs = cup_ambient(ConfClass1(model, combo), y, pres);
    RationalVector rhs = cup_ambient(x, y, pres);
    for (auto& c : rhs) c *= lambda;
    add_scaled(rhs, Rational(1), cup_ambient(z, y, pres));
    if (lhs != rhs) ++fail_bilin;
  }
  std::string sample_in = fmt::format("g={} n={} samples={}", g, n, cfg.samples);
  add_check(checks, fmt::format("cup/g{}n{}/anticommutativity", g, n),
            "cup anticommutativity", sample_in, "0 failures",
            fmt::format("{} failures", fail_anti));
  add_check(checks, fmt::format("cup/g{}n{}/self-cup-zero", g, n),
            "cup of a class with itself vanishes", sample_in, "0 failures",
            fmt::format("{} failures", fail_self));
  add_check(checks, fmt::format("cup/g{}n{}/bilinearity", g, n), "cup bilinearity",
            sample_in, "0 failures", fmt::format("{} failures", fail_bilin));

  if (n >= 2) {
    // Projecting a relation combination to one tensor block recovers that
    // relation's tensor part.
    SeededRng prng = task_rng(cfg, "cup-projection", g, n);
    bool proj_ok = true;
    for (int rep = 0; rep < 8 && proj_ok; ++rep) {
      std::vector<Rational> k(binomial(n, 2));
      for (auto& c : k) c = prng.small_rational();
      RationalVector v(pres.ambient_dim());
      std::size_t idx = 0;
      for (std::size_t i = 1; i <= model.points(); ++i) {
        for (std::size_t j = i + 1; j <= model.points(); ++j) {
          add_scaled(v, k[idx++], pres.relation(i, j));
        }
      }
      idx = 0;
      for (std::size_t i = 1; i <= model.points() && proj_ok; ++i) {
        for (std::size_t j = i + 1; j <= model.points() && proj_ok; ++j) {
          RationalVector rel = pres.relation(i, j);
          for (std::size_t s = 0; s < model.block_dim() && proj_ok; ++s) {
            for (std::size_t t = 0; t < model.block_dim(); ++t) {
              std::size_t c = pres.tensor_index(i, j, s, t);
              if (v[c] != k[idx] * rel[c]) {
                proj_ok = false;
                break;
              }
            }
          }
          ++idx;
        }
      }
    }
    add_check(checks, fmt::format("cup/g{}n{}/relation-projection", g, n),
              "tensor-block projection isolates one relation", in, "true",
              yn(proj_ok));
  }
}

// ------------------------------------------------------------------
// crossing suite
// ------------------------------------------------------------------

void run_crossing(const SuiteConfig& cfg, int g, int n,
                  std::vector<CheckRecord>& checks) {
  ConfSpaceModel model(g, n);
  H2Presentation pres(model, cfg.relation_sign);
  SeededRng rng = task_rng(cfg, "crossing", g, n);
  int failures = 0;
  int first_bad = -1;
  for (int s = 0; s < cfg.samples; ++s) {
    ConfClass1 x = sample_crossing(rng, model);
    Subspace ann = annihilator(x, pres);
    bool ok = ann.dim() == 1 && ann == Subspace::line(x.coords());
    if (!ok) {
      ++failures;
      if (first_bad < 0) first_bad = s;
    }
  }
  std::string actual = failures == 0
                           ? "0 failures"
                           : fmt::format("{} failures (first at sample {})", failures,
                                         first_bad);
  add_check(checks, fmt::format("crossing/g{}n{}/annihilator-is-line", g, n),
            "crossing elements have line annihilators",
            fmt::format("g={} n={} samples={}", g, n, cfg.samples), "0 failures",
            actual);
}

// ------------------------------------------------------------------
// push suite
// ------------------------------------------------------------------

void run_push(const SuiteConfig& cfg, int g, int n, std::vector<CheckRecord>& checks) {
  (void)cfg;
  PuncturedH1 space(g, n);
  std::string in = fmt::format("g={} n={}", g, n);
  Subspace inv = dual_invariants(space);
  add_check(checks, fmt::format("push/g{}n{}/invariants-dim", g, n),
            "point-push invariants have surface rank", in, std::to_string(2 * g),
            std::to_string(inv.dim()));
  add_check(checks, fmt::format("push/g{}n{}/invariants-are-c-annihilator", g, n),
            "invariant functionals kill the puncture classes", in, "true",
            yn(inv == c_annihilator(space)));
  add_check(checks, fmt::format("push/g{}n{}/quotient-trivial", g, n),
            "trivial action on the functional quotient", in, "true",
            yn(quotient_action_trivial(space)));
  add_check(checks, fmt::format("push/g{}n{}/punctures-fixed", g, n),
            "pushes fix every puncture class", in, "true",
            yn(punctures_fixed_by_pushes(space)));

  bool unipotent = true;
  for (const PushGenerator& gen : push_generators(space)) {
    RationalMatrix a = push_action(gen, space);
    RationalMatrix d = a - RationalMatrix::identity(space.dim());
    if (!(d * d).is_zero()) {
      unipotent = false;
      break;
    }
  }
  add_check(checks, fmt::format("push/g{}n{}/unipotent", g, n),
            "push matrices are unipotent", in, "true", yn(unipotent));

  if (n >= 2) {
    RationalVector f(space.dim());
    f[space.c_coord(1)] = Rational(1);
    bool moved = false;
    for (const PushGenerator& gen : push_generators(space)) {
      if (dual_action(push_action(gen, space)) * f != f) {
        moved = true;
        break;
      }
    }
    add_check(checks, fmt::format("push/g{}n{}/c1-dual-moved", g, n),
              "the functional dual to a puncture class is not invariant", in, "true",
              yn(moved));
  }
}

// ------------------------------------------------------------------
// sym suite
// ------------------------------------------------------------------

void run_sym(const SuiteConfig& cfg, int g, int n, std::vector<CheckRecord>& checks) {
  (void)cfg;
  ConfSpaceModel model(g, n);
  Subspace inv = sym_invariants(model);
  std::string in = fmt::format("g={} n={}", g, n);
  add_check(checks, fmt::format("sym/g{}n{}/dim", g, n),
            "symmetric invariants have surface rank", in, std::to_string(2 * g),
            std::to_string(inv.dim()));
  add_check(checks, fmt::format("sym/g{}n{}/is-diagonal", g, n),
            "symmetric invariants are the diagonal", in, "true",
            yn(inv == diagonal_subspace(model)));
}

// ------------------------------------------------------------------
// isotropic suite
// ------------------------------------------------------------------

void run_isotropic(const SuiteConfig& cfg, int g, int n,
                   std::vector<CheckRecord>& checks) {
  ConfSpaceModel model(g, n);
  H2Presentation pres(model, cfg.relation_sign);
  SeededRng rng = task_rng(cfg, "isotropic", g, n);
  int bad_samples = 0, unmoved = 0;
  for (int s = 0; s < cfg.samples; ++s) {
    Subspace sub = sample_isotropic(rng, model);
    if (sub.dim() == 0 || !is_isotropic(sub, pres)) {
      ++bad_samples;
      continue;
    }
    if (!find_moving_transvection(sub, model).has_value()) ++unmoved;
  }
  std::string in = fmt::format("g={} n={} samples={}", g, n, cfg.samples);
  add_check(checks, fmt::format("isotropic/g{}n{}/sampler-sound", g, n),
            "sampled subspaces are nonzero and isotropic", in, "0 bad",
            fmt::format("{} bad", bad_samples));
  add_check(checks, fmt::format("isotropic/g{}n{}/mover-exists", g, n),
            "no invariant isotropic subspace", in, "0 unmoved",
            fmt::format("{} unmoved", unmoved));
}

// ------------------------------------------------------------------
// johnson suite (includes the free-nilpotent obstruction checks)
// ------------------------------------------------------------------

void run_johnson_for_genus(const SuiteConfig& cfg, int g,
                           std::vector<CheckRecord>& checks) {
  SymplecticSpace space(g);
  std::string in = fmt::format("g={}", g);
  JohnsonImage ji = johnson_image(space);
  std::size_t expected_quotient =
      g >= 3 ? binomial(2 * g, 3) - 2 * g : 0;
  add_check(checks, fmt::format("johnson/g{}/quotient-dim", g),
            "Johnson image dimension", in, std::to_string(expected_quotient),
            std::to_string(ji.quotient_dim()));
  add_check(checks, fmt::format("johnson/g{}/embed-dim", g),
            "the embedded copy of H has full rank", in, std::to_string(2 * g),
            std::to_string(ji.embedded_h.dim()));
  add_check(checks, fmt::format("johnson/g{}/embed-inside-image", g),
            "the embedded copy of H lies in the image", in, "true",
            yn(ji.image.contains(ji.embedded_h)));
  if (g >= 3) {
    add_check(checks, fmt::format("johnson/g{}/contract-injective", g),
              "contraction is injective on 3-forms", in,
              std::to_string(binomial(2 * g, 3)), std::to_string(ji.image.dim()));
  }

  WedgeTwoModOmega target =
      mod_omega(space, wedge2(space, space.unit_a(1), space.unit_a(2)));
  bool hits = tau_hits(space, space.unit_b(1), target);
  add_check(checks, fmt::format("johnson/g{}/tau-hits-a1a2", g),
            "Johnson solvability at b_1", in, yn(g >= 3), yn(hits));
  if (hits) {
    auto witness = tau_witness(space, space.unit_b(1), target);
    std::string desc = "none";
    if (witness) {
      std::string terms;
      std::size_t nnz = 0;
      for (std::size_t i = 0; i < witness->size(); ++i) {
        if ((*witness)[i] != 0) {
          if (!terms.empty()) terms += " ";
          terms += fmt::format("{}:{}", i, (*witness)[i].get_str());
          ++nnz;
        }
      }
      desc = fmt::format("integral, {} nonzero coords [{}]", nnz, terms);
    }
    add_check(checks, fmt::format("johnson/g{}/tau-witness", g),
              "integral witness after clearing denominators", in,
              desc == "none" ? "witness" : desc, desc);
  }

  SeededRng rng = task_rng(cfg, "johnson-equivariance", g, 0);
  int fail_eq = 0;
  int reps = std::min(cfg.samples, 10);
  std::vector<RationalMatrix> list = space.transvections();
  for (int rep = 0; rep < reps; ++rep) {
    RationalVector x = rng.small_vector(space.dim());
    RationalVector y = rng.small_vector(space.dim());
    RationalVector z = rng.small_vector(space.dim());
    const RationalMatrix& m =
        list[static_cast<std::size_t>(rng.int_in(0, static_cast<long>(list.size() - 1)))];
    RationalVector c = rng.small_vector(space.dim());
    WedgeTwoModOmega lhs =
        contract(space, wedge3(space, m * x, m * y, m * z)).apply(space, m * c);
    WedgeTwoModOmega inner = contract(space, wedge3(space, x, y, z)).apply(space, c);
    WedgeTwoModOmega rhs =
        mod_omega(space, map_wedge2(space, m, inner.representative()));
    if (lhs != rhs) ++fail_eq;
  }
  add_check(checks, fmt::format("johnson/g{}/equivariance", g),
            "contraction commutes with the symplectic action",
            fmt::format("g={} samples={}", g, reps), "0 failures",
            fmt::format("{} failures", fail_eq));
}

void run_nil2(const SuiteConfig& cfg, std::vector<CheckRecord>& checks) {
  // rank-2 commutator witness
  FreeWord x1 = FreeWord::generator(2, 1);
  FreeWord x2 = FreeWord::generator(2, 2);
  NilClass2 c12 = nil2_class(commutator(x1, x2));
  bool witness = c12.abelian_is_zero() && c12.commutator_part() ==
                                              std::vector<mpz_class>{mpz_class(1)};
  add_check(checks, "johnson/nil2/commutator-x1x2",
            "the basic commutator survives in degree two", "rank=2", "true",
            yn(witness));

  add_check(checks, "johnson/nil2/fh-obstruction-x1-x2",
            "free nilpotent obstruction", "images x1, x2", "true",
            yn(fh_obstruction(x1, x2)));
  add_check(checks, "johnson/nil2/fh-obstruction-degenerate",
            "free nilpotent obstruction", "images x1, x1", "false",
            yn(fh_obstruction(x1, x1)));
  add_check(checks, "johnson/nil2/fh-obstruction-x1x2-x2",
            "free nilpotent obstruction", "images x1x2, x2", "true",
            yn(fh_obstruction(x1 * x2, x2)));

  // homomorphism self-test on random words
  SeededRng rng = task_rng(cfg, "nil2-hom", 0, 0);
  int fails = 0;
  int reps = std::min(cfg.samples, 100);
  for (int rep = 0; rep < reps; ++rep) {
    std::size_t rank = static_cast<std::size_t>(rng.int_in(2, 4));
    auto random_word = [&](long maxlen) {
      std::vector<std::pair<std::size_t, long>> raw;
      long len = rng.int_in(0, maxlen);
      for (long i = 0; i < len; ++i) {
        raw.push_back({static_cast<std::size_t>(rng.int_in(1, static_cast<long>(rank))),
                       rng.next() % 2 == 0 ? 1L : -1L});
      }
      return FreeWord::from_letters(rank, raw);
    };
    FreeWord u = random_word(20);
    FreeWord v = random_word(20);
    if (!(nil2_class(u * v) == nil2_class(u) * nil2_class(v))) ++fails;
  }
  add_check(checks, "johnson/nil2/homomorphism", "nil2_class is a homomorphism",
            fmt::format("samples={}", reps), "0 failures",
            fmt::format("{} failures", fails));

  // deep commutators die
  FreeWord x3 = FreeWord::generator(3, 1);
  FreeWord y3 = FreeWord::generator(3, 2);
  FreeWord z3 = FreeWord::generator(3, 3);
  add_check(checks, "johnson/nil2/depth-three-trivial",
            "triple commutators vanish in the quotient", "[[x1,x2],x3]", "true",
            yn(nil2_class(commutator(commutator(x3, y3), z3)).is_trivial()));
}

// ------------------------------------------------------------------
// cover suite
// ------------------------------------------------------------------

void run_cover(const SuiteConfig& cfg, int g, int n,
               std::vector<CheckRecord>& checks) {
  (void)cfg;
  std::size_t r = cover_genus(g, n);
  std::size_t expected = static_cast<std::size_t>(n) * (g - 1) + 1;
  bool strict = (r > static_cast<std::size_t>(g)) == (n > 1) &&
                (r == static_cast<std::size_t>(g)) == (n == 1);
  add_check(checks, fmt::format("cover/g{}n{}/genus", g, n),
            "cover genus arithmetic", fmt::format("g={} n={}", g, n),
            std::to_string(expected), std::to_string(r));
  add_check(checks, fmt::format("cover/g{}n{}/strictness", g, n),
            "covers of more than one sheet raise the genus",
            fmt::format("g={} n={}", g, n), "true", yn(strict));
}

void validate(const SuiteConfig& cfg) {
  const auto& ids = suite_ids();
  if (std::find(ids.begin(), ids.end(), cfg.suite) == ids.end()) {
    throw ConfigError(fmt::format("unknown suite '{}'", cfg.suite));
  }
  if (cfg.g_lo < 2 || cfg.g_lo > cfg.g_hi) {
    throw ConfigError("genus range must satisfy 2 <= lo <= hi");
  }
  if (cfg.n_lo < 1 || cfg.n_lo > cfg.n_hi) {
    throw ConfigError("points range must satisfy 1 <= lo <= hi");
  }
  if (!cfg.allow_large && (cfg.g_hi > kGenusCap || cfg.n_hi > kPointsCap)) {
    throw ConfigError(
        fmt::format("range exceeds desk-scale caps (g <= {}, n <= {}); "
                    "pass --unsafe-large to override",
                    kGenusCap, kPointsCap));
  }
  if (cfg.samples < 1 || cfg.samples > 1000000) {
    throw ConfigError("samples must be in 1..1000000");
  }
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "cup", "crossing", "push", "sym", "isotropic", "johnson", "cover", "all"};
  return ids;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckRecord> checks;
  auto want = [&](const char* id) { return cfg.suite == "all" || cfg.suite == id; };

  for (int g = cfg.g_lo; g <= cfg.g_hi; ++g) {
    for (int n = cfg.n_lo; n <= cfg.n_hi; ++n) {
      if (want("cup")) run_cup(cfg, g, n, checks);
      if (want("crossing") && n >= 2) run_crossing(cfg, g, n, checks);
      if (want("push")) run_push(cfg, g, n, checks);
      if (want("sym") && n >= 2) run_sym(cfg, g, n, checks);
      if (want("isotropic")) run_isotropic(cfg, g, n, checks);
      if (want("cover")) run_cover(cfg, g, n, checks);
    }
    if (want("johnson")) run_johnson_for_genus(cfg, g, checks);
  }
  if (want("johnson")) run_nil2(cfg, checks);

  std::sort(checks.begin(), checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return SuiteReport(cfg, std::move(checks), wall);
}

SuiteReport::SuiteReport(SuiteConfig config, std::vector<CheckRecord> checks,
                         std::int64_t wall_ms)
    : config_(std::move(config)), checks_(std::move(checks)), wall_ms_(wall_ms) {}

std::size_t SuiteReport::failure_count() const {
  std::size_t f = 0;
  for (const auto& c : checks_) {
    if (!c.pass) ++f;
  }
  return f;
}

std::string SuiteReport::to_json() const {
  ordered_json j;
  j["config"] = {
      {"suite", config_.suite},
      {"g_lo", config_.g_lo},
      {"g_hi", config_.g_hi},
      {"n_lo", config_.n_lo},
      {"n_hi", config_.n_hi},
      {"samples", config_.samples},
      {"seed", config_.seed},
      {"relation_sign",
       config_.relation_sign == RelationSign::Minus ? "minus" : "plus"},
  };
  j["checks"] = ordered_json::array();
  for (const auto& c : checks_) {
    j["checks"].push_back({{"id", c.id},
                           {"claim", c.claim},
                           {"inputs", c.inputs},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"pass", c.pass}});
  }
  j["summary"] = {{"total", checks_.size()},
                  {"passed", checks_.size() - failure_count()},
                  {"failed", failure_count()},
                  {"pass", passed()}};
  return j.dump(2) + "\n";
}

std::string SuiteReport::to_text() const {
  std::string out =
      fmt::format("suite: {}   g: {}..{}   n: {}..{}   samples: {}   seed: {}   "
                  "relation sign: {}\n",
                  config_.suite, config_.g_lo, config_.g_hi, config_.n_lo,
                  config_.n_hi, config_.samples, config_.seed,
                  config_.relation_sign == RelationSign::Minus ? "minus" : "plus");
  for (const auto& c : checks_) {
    out += fmt::format("[{}] {}  ({})  expected: {}  actual: {}\n",
                       c.pass ? "PASS" : "FAIL", c.id, c.inputs, c.expected,
                       c.actual);
  }
  out += fmt::format("summary: {}/{} checks passed ({} ms)\n",
                     checks_.size() - failure_count(), checks_.size(), wall_ms_);
  out += fmt::format("result: {}\n", passed() ? "PASS" : "FAIL");
  return out;
}

std::string rank_table(int g_lo, int g_hi, int n_lo, int n_hi, bool as_json,
                       bool allow_large) {
  if (g_lo < 2 || g_lo > g_hi || n_lo < 1 || n_lo > n_hi) {
    throw ConfigError("rank table: bad ranges");
  }
  if (!allow_large && (g_hi > kGenusCap || n_hi > kPointsCap)) {
    throw ConfigError(
        fmt::format("range exceeds desk-scale caps (g <= {}, n <= {}); "
                    "pass --unsafe-large to override",
                    kGenusCap, kPointsCap));
  }
  struct Cell {
    int g, n;
    std::size_t computed, formula;
  };
  std::vector<Cell> cells;
  for (int g = g_lo; g <= g_hi; ++g) {
    for (int n = n_lo; n <= n_hi; ++n) {
      cells.push_back({g, n, image_rank(ConfSpaceModel(g, n)), rank_formula(g, n)});
    }
  }
  if (as_json) {
    ordered_json j;
    j["cells"] = ordered_json::array();
    bool all_match = true;
    for (const auto& c : cells) {
      bool match = c.computed == c.formula;
      all_match = all_match && match;
      j["cells"].push_back({{"g", c.g},
                            {"n", c.n},
                            {"computed", c.computed},
                            {"formula", c.formula},
                            {"match", match}});
    }
    j["all_match"] = all_match;
    return j.dump(2) + "\n";
  }
  std::string out = fmt::format("{:>3} {:>3} {:>10} {:>10}  {}\n", "g", "n",
                                "computed", "formula", "match");
  for (const auto& c : cells) {
    out += fmt::format("{:>3} {:>3} {:>10} {:>10}  {}\n", c.g, c.n, c.computed,
                       c.formula, c.computed == c.formula ? "yes" : "NO");
  }
  return out;
}

}  // namespace surfcoh
