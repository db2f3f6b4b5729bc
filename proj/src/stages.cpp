#include "sp62v/stages.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "sp62v/belyi.hpp"
#include "sp62v/census.hpp"
#include "sp62v/constants.hpp"
#include "sp62v/dedekind.hpp"
#include "sp62v/gfp.hpp"
#include "sp62v/nielsen.hpp"
#include "sp62v/symplectic.hpp"

namespace sp62v {

using nlohmann::ordered_json;

namespace {

struct PipelineState {
  explicit PipelineState(ConstantsFile c) : consts(std::move(c)) {}

  ConstantsFile consts;
  std::optional<Perm> y_;
  std::optional<Sp62Model> model_;
  std::optional<GroupCensus> census_;
  std::optional<ClassVectorHandles> cv_;
  std::optional<NielsenEngine> engine_;
  std::vector<ClassTuple> nielsen_reps;

  const Perm& y()
  {
    if (!y_)
      y_ = consts.x.inverse() * consts.z.inverse();
    return *y_;
  }
  const Sp62Model& model()
  {
    if (!model_)
      model_ = build_sp62_model();
    return *model_;
  }
  const GroupCensus& census()
  {
    if (!census_)
      census_ = GroupCensus::build(model().chain36, model().gens36, kSp62Order);
    return *census_;
  }
  const ClassVectorHandles& cv()
  {
    if (!cv_)
      cv_ = locate_class_vector(census());
    return *cv_;
  }
  NielsenEngine& engine()
  {
    if (!engine_)
      engine_.emplace(census(), model().gens36);
    return *engine_;
  }
};

void run_claim(VerificationReport& report, const char* id, ClaimStatus ok_status,
               const std::function<ordered_json()>& body)
{
  ClaimResult r;
  r.id = id;
  try {
    r.witness = body();
    r.status = ok_status;
  } catch (const std::exception& e) {
    r.status = ClaimStatus::Failed;
    r.diagnostic = e.what();
  }
  report.add_claim(std::move(r));
}

void require(bool cond, const std::string& msg)
{
  if (!cond)
    throw std::runtime_error(msg);
}

// ---------------------------------------------------------------- triple --

void stage_triple(PipelineState& st, VerificationReport& report)
{
  run_claim(report, "triple.x-type", ClaimStatus::VerifiedExact, [&] {
    CycleType t = cycle_type(st.consts.x);
    require(t.str() == "6^12", "cycle type of x is " + t.str());
    return ordered_json{{"cycle_type", t.str()}};
  });
  run_claim(report, "triple.z-type", ClaimStatus::VerifiedExact, [&] {
    CycleType t = cycle_type(st.consts.z);
    require(t.str() == "2^6.4.8^7", "cycle type of z is " + t.str());
    return ordered_json{{"cycle_type", t.str()}};
  });
  run_claim(report, "triple.y-type", ClaimStatus::VerifiedExact, [&] {
    const Perm& y = st.y();
    require(((st.consts.x * y) * st.consts.z).is_identity(), "xyz != 1");
    CycleType t = cycle_type(y);
    require(t.str() == "1^24.2^24", "cycle type of y is " + t.str());
    return ordered_json{{"cycle_type", t.str()}, {"product_check", "xyz = 1"}};
  });
  run_claim(report, "triple.transitive", ClaimStatus::VerifiedExact, [&] {
    require(is_transitive({st.consts.x, st.consts.z}, 72), "<x,z> is not transitive");
    return ordered_json{{"degree", 72}};
  });
  run_claim(report, "triple.block-system", ClaimStatus::VerifiedExact, [&] {
    auto systems = minimal_blocks({st.consts.x, st.consts.z}, 72);
    bool found = false;
    ordered_json sizes = ordered_json::array();
    for (const auto& part : systems) {
      std::set<int> ids(part.begin(), part.end());
      sizes.push_back(ids.size());
      if (ids.size() == 2) {
        int count0 = static_cast<int>(std::count(part.begin(), part.end(), *ids.begin()));
        if (count0 == 36)
          found = true;
      }
    }
    require(found, "no 2-block system of size 36 found");
    return ordered_json{{"block_counts", sizes}};
  });
  run_claim(report, "triple.wreath-order", ClaimStatus::VerifiedExact, [&] {
    StabilizerChain chain = StabilizerChain::build({st.consts.x, st.consts.z});
    Integer wreath = Integer(2) * Integer(kSp62Order) * Integer(kSp62Order);
    require(mpz_divisible_p(wreath.get_mpz_t(), chain.order().get_mpz_t()) != 0,
            "order does not divide 2*|PSp6(2)|^2");
    return ordered_json{{"group_order", chain.order().get_str()},
                        {"divides", "2 * 1451520^2"}};
  });
}

// ---------------------------------------------------------------- census --

void stage_census(PipelineState& st, VerificationReport& report)
{
  run_claim(report, "census.group-order", ClaimStatus::VerifiedExact, [&] {
    const Sp62Model& m = st.model();
    require(m.chain63.order() == Integer(static_cast<unsigned long>(kSp62Order)),
            "63-point order is " + m.chain63.order().get_str());
    require(is_transitive(m.gens63, 63), "63-point action is not transitive");
    return ordered_json{{"order", kSp62Order},
                        {"transvection_generators", m.generators.size()},
                        {"transitive_on_63", true}};
  });
  run_claim(report, "census.form-orbits", ClaimStatus::VerifiedExact, [&] {
    const Sp62Model& m = st.model();
    std::vector<Perm> gens64;
    for (const auto& mat : m.generators)
      gens64.push_back(action_on_forms(mat, m.all_forms));
    auto parts = orbits(gens64, 64);
    require(parts.size() == 2, "expected 2 form orbits");
    std::vector<size_t> sizes{parts[0].size(), parts[1].size()};
    std::sort(sizes.begin(), sizes.end());
    require(sizes[0] == 28 && sizes[1] == 36, "orbit sizes are not {36, 28}");
    for (const auto& orbit : parts) {
      int arf = arf_invariant(m.all_forms[static_cast<size_t>(orbit[0])]);
      for (int f : orbit)
        require(arf_invariant(m.all_forms[static_cast<size_t>(f)]) == arf,
                "Arf invariant not constant on a form orbit");
      require((orbit.size() == 36) == (arf == 0), "Arf value does not separate the orbits");
    }
    require(m.chain36.order() == Integer(static_cast<unsigned long>(kSp62Order)),
            "36-point action is not faithful of full order");
    return ordered_json{{"polarizing_forms", 64},
                        {"orbit_sizes", {28, 36}},
                        {"arf0_count", 36},
                        {"faithful_order", kSp62Order}};
  });
  run_claim(report, "census.unique-types", ClaimStatus::VerifiedExact, [&] {
    const GroupCensus& census = st.census();
    uint64_t total = 0;
    for (const auto& c : census.classes())
      total += c.size;
    require(total == kSp62Order, "class sizes sum to " + std::to_string(total));
    const ClassVectorHandles& cv = st.cv();  // errors unless all three unique
    ordered_json table = ordered_json::array();
    for (const auto& c : census.classes())
      table.push_back(ordered_json{{"type", c.type.str()}, {"size", c.size}});
    return ordered_json{{"classes", census.classes().size()},
                        {"size_sum", total},
                        {"c1_size", census.classes()[cv.c1].size},
                        {"c2_size", census.classes()[cv.c2].size},
                        {"c3_size", census.classes()[cv.c3].size},
                        {"table", table}};
  });
  run_claim(report, "census.two-transitive", ClaimStatus::VerifiedExact, [&] {
    auto stats = st.census().fix_statistics();
    require(stats.sum_fix == kSp62Order, "sum fix != |G|");
    require(stats.sum_fix2 == 2 * kSp62Order, "sum fix^2 != 2|G|");
    auto blocks = minimal_blocks(st.model().gens36, 36);
    require(blocks.empty(), "unexpected nontrivial block system at degree 36");
    return ordered_json{{"sum_fix", stats.sum_fix},
                        {"sum_fix2", stats.sum_fix2},
                        {"two_transitive", true},
                        {"primitive", true}};
  });
  run_claim(report, "census.rational-classes", ClaimStatus::VerifiedExact, [&] {
    const GroupCensus& census = st.census();
    const ClassVectorHandles& cv = st.cv();
    ordered_json checked = ordered_json::array();
    for (size_t idx : {cv.c1, cv.c2, cv.c3}) {
      const Perm& rep = census.classes()[idx].rep;
      int order = 1;
      for (auto [len, cnt] : census.classes()[idx].type.parts())
        order = std::lcm(order, len);
      for (int k = 1; k < order; ++k) {
        if (std::gcd(k, order) != 1)
          continue;
        Perm power = Perm::identity(rep.degree());
        for (int i = 0; i < k; ++i)
          power = power * rep;
        require(census.same_class(power, idx),
                "power " + std::to_string(k) + " left class " + census.classes()[idx].type.str());
      }
      checked.push_back(ordered_json{{"type", census.classes()[idx].type.str()},
                                     {"element_order", order}});
    }
    return ordered_json{{"classes_checked", checked}};
  });
}

// --------------------------------------------------------------- nielsen --

void stage_nielsen(PipelineState& st, VerificationReport& report)
{
  run_claim(report, "nielsen.length", ClaimStatus::VerifiedExact, [&] {
    const GroupCensus& census = st.census();
    const ClassVectorHandles& cv = st.cv();
    NielsenEngine& engine = st.engine();
    auto count = engine.count_tuples({cv.c1, cv.c2, cv.c2, cv.c3});
    require(count.nielsen_length == Rational(2),
            "nielsen length is " + rational_str(count.nielsen_length));
    std::set<std::vector<uint8_t>> canon_keys;
    std::vector<ClassTuple> reps;
    for (const auto& tuple : count.generating_tuples) {
      require(engine.tuple_centralizer_size(tuple) == 1, "tuple centralizer is nontrivial");
      ClassTuple canon = engine.canonicalize(tuple);
      std::vector<uint8_t> key;
      for (const Perm& s : canon.sigma)
        key.insert(key.end(), s.images().begin(), s.images().end());
      if (canon_keys.insert(std::move(key)).second)
        reps.push_back(canon);
    }
    require(reps.size() == 2, "found " + std::to_string(reps.size()) + " canonical forms");
    st.nielsen_reps = reps;
    ordered_json reps_json = ordered_json::array();
    for (const auto& r : reps) {
      ordered_json tj = ordered_json::array();
      for (const Perm& s : r.sigma)
        tj.push_back(s.cycle_str());
      reps_json.push_back(std::move(tj));
    }
    return ordered_json{{"raw_count", count.raw},
                        {"generating_count", count.generating},
                        {"c1_size", census.classes()[cv.c1].size},
                        {"nielsen_length", 2},
                        {"representatives", reps_json}};
  });
  run_claim(report, "nielsen.braid-orbit", ClaimStatus::VerifiedExact, [&] {
    require(st.nielsen_reps.size() == 2, "nielsen representatives unavailable");
    auto orbits = st.engine().braid_orbits(st.nielsen_reps);
    require(orbits.size() == 1, std::to_string(orbits.size()) + " braid orbits");
    return ordered_json{{"orbit_count", 1},
                        {"representatives_joined", orbits[0].size()}};
  });
}

// ----------------------------------------------------------------- belyi --

void stage_belyi(PipelineState& st, VerificationReport& report)
{
  run_claim(report, "belyi.map-profile", ClaimStatus::VerifiedExact, [&] {
    auto profile = verify_belyi(st.consts.belyi_p, st.consts.belyi_q, st.consts.belyi_scale);
    const char* expect[3] = {"6^12", "1^24.2^24", "2^6.4.8^7"};
    ordered_json pts = ordered_json::array();
    for (size_t i = 0; i < 3; ++i) {
      const auto& bp = profile.branch_points[i];
      require(bp.type.str() == expect[i],
              "profile over " + bp.label + " is " + bp.type.str() + ", expected " + expect[i]);
      pts.push_back(ordered_json{{"point", bp.label},
                                 {"type", bp.type.str()},
                                 {"fiber_size", bp.fiber_size}});
    }
    return ordered_json{{"degree", profile.map_degree},
                        {"branch_points", pts},
                        {"riemann_hurwitz", profile.total_defect()}};
  });
  run_claim(report, "belyi.monodromy-match", ClaimStatus::VerifiedExact, [&] {
    auto profile = verify_belyi(st.consts.belyi_p, st.consts.belyi_q, st.consts.belyi_scale);
    require(profile.branch_points[0].type == cycle_type(st.consts.x),
            "profile over 0 differs from the type of x");
    require(profile.branch_points[1].type == cycle_type(st.y()),
            "profile over 1 differs from the type of y");
    require(profile.branch_points[2].type == cycle_type(st.consts.z),
            "profile over infinity differs from the type of z");
    return ordered_json{{"matched", {"x <-> 0", "y <-> 1", "z <-> infinity"}}};
  });
  run_claim(report, "belyi.square-structure", ClaimStatus::VerifiedExact, [&] {
    auto cert = verify_square_root_structure(st.consts.belyi_p, st.consts.belyi_q,
                                             st.consts.belyi_scale);
    return ordered_json{{"sqrt_p_degree", cert.sqrt_p.degree()},
                        {"sqrt_q_degree", cert.sqrt_q.degree()},
                        {"scale_root", rational_str(cert.scale_root)},
                        {"scale", rational_str(st.consts.belyi_scale)}};
  });
}

// ---------------------------------------------------------------- family --

std::vector<Rational> parse_a0_list(const std::vector<std::string>& texts)
{
  std::vector<Rational> out;
  for (const auto& s : texts) {
    Rational a0 = parse_rational(s);
    if (a0 == 0 || a0 == Rational(1, 512))
      throw UsageError("a0 must avoid 0 and 1/512");
    out.push_back(a0);
  }
  if (out.empty())
    throw UsageError("at least one a0 value is required");
  return out;
}

void stage_family(PipelineState& st, VerificationReport& report, const PipelineConfig& config)
{
  auto a0s = parse_a0_list(config.a0_values);
  // Computed once, shared by the claims below.
  std::vector<UniPoly> computed;
  std::string disc_error;
  try {
    for (const auto& a0 : a0s)
      computed.push_back(discriminant_in_t(st.consts.family_p, st.consts.family_q, a0));
  } catch (const std::exception& e) {
    disc_error = e.what();
  }
  auto need_disc = [&]() {
    if (!disc_error.empty())
      throw std::runtime_error(disc_error);
  };

  run_claim(report, "family.delta", ClaimStatus::VerifiedExact, [&] {
    need_disc();
    ordered_json per_a0 = ordered_json::array();
    for (size_t i = 0; i < a0s.size(); ++i) {
      UniPoly printed = st.consts.delta.specialize(a0s[i]);
      if (!(printed == computed[i])) {
        for (int k = 0; k <= std::max(printed.degree(), computed[i].degree()); ++k) {
          if (printed.coeff(k) != computed[i].coeff(k))
            throw std::runtime_error("delta mismatch at a0 = " + rational_str(a0s[i]) +
                                     ", t-coefficient " + std::to_string(k) + ": printed " +
                                     rational_str(printed.coeff(k)) + " vs computed " +
                                     rational_str(computed[i].coeff(k)));
        }
      }
      per_a0.push_back(ordered_json{{"a0", rational_str(a0s[i])},
                                    {"t_degree", computed[i].degree()},
                                    {"match", "exact"}});
    }
    return ordered_json{{"checked", per_a0}};
  });
  run_claim(report, "family.four-branch-points", ClaimStatus::VerifiedExact, [&] {
    need_disc();
    ordered_json per_a0 = ordered_json::array();
    for (size_t i = 0; i < a0s.size(); ++i) {
      auto sq = squarefree_decomposition(computed[i]);
      int finite_values = 0;
      ordered_json factors = ordered_json::array();
      for (const auto& fac : sq.factors) {
        finite_values += (fac.factor == UniPoly::monomial(1)) ? 1 : fac.factor.degree();
        factors.push_back(ordered_json{{"degree", fac.factor.degree()},
                                       {"multiplicity", fac.multiplicity}});
      }
      require(finite_values == 3, "expected 3 finite branch values, found " +
                                      std::to_string(finite_values));
      per_a0.push_back(ordered_json{{"a0", rational_str(a0s[i])},
                                    {"finite_branch_values", finite_values},
                                    {"with_infinity", 4},
                                    {"delta_factors", factors}});
    }
    return ordered_json{{"checked", per_a0}};
  });
  run_claim(report, "family.branch-types", ClaimStatus::VerifiedExact, [&] {
    need_disc();
    const char* expect[4] = {"3^12", "1^12.2^12", "1^12.2^12", "1^6.2.4^7"};
    ordered_json per_a0 = ordered_json::array();
    for (size_t i = 0; i < a0s.size(); ++i) {
      auto data = verify_family_branch_data(st.consts.family_p, st.consts.family_q, a0s[i],
                                            computed[i]);
      // profile order: t=0, r1, r2, infinity
      ordered_json pts = ordered_json::array();
      for (size_t k = 0; k < 4; ++k) {
        const auto& bp = data.profile.branch_points[k];
        require(bp.type.str() == expect[k], "profile at " + bp.label + " is " + bp.type.str() +
                                                ", expected " + expect[k]);
        pts.push_back(ordered_json{{"point", bp.label}, {"type", bp.type.str()}});
      }
      per_a0.push_back(ordered_json{{"a0", rational_str(a0s[i])},
                                    {"split_prime", data.split_prime},
                                    {"profiles", pts},
                                    {"riemann_hurwitz", data.profile.total_defect()}});
    }
    return ordered_json{{"checked", per_a0}};
  });
  run_claim(report, "family.class-vector-match", ClaimStatus::VerifiedExact, [&] {
    need_disc();
    const GroupCensus& census = st.census();
    const ClassVectorHandles& cv = st.cv();
    auto data = verify_family_branch_data(st.consts.family_p, st.consts.family_q, a0s[0],
                                          computed[0]);
    const CycleType& t1 = census.classes()[cv.c1].type;
    const CycleType& t2 = census.classes()[cv.c2].type;
    const CycleType& t3 = census.classes()[cv.c3].type;
    require(data.profile.branch_points[0].type == t1, "t=0 profile is not the C1 type");
    require(data.profile.branch_points[1].type == t2, "t=r1 profile is not the C2 type");
    require(data.profile.branch_points[2].type == t2, "t=r2 profile is not the C2 type");
    require(data.profile.branch_points[3].type == t3, "t=infinity profile is not the C3 type");
    return ordered_json{{"class_vector", {t1.str(), t2.str(), t2.str(), t3.str()}}};
  });
  run_claim(report, "family.delta-square", ClaimStatus::VerifiedExact, [&] {
    need_disc();
    ordered_json exps = ordered_json::array();
    for (long e : st.consts.delta.exponents()) {
      require(e % 2 == 0, "printed exponent " + std::to_string(e) + " is odd");
      exps.push_back(e);
    }
    ordered_json per_a0 = ordered_json::array();
    for (size_t i = 0; i < a0s.size(); ++i) {
      auto sq = squarefree_decomposition(computed[i]);
      for (const auto& fac : sq.factors)
        require(fac.multiplicity % 2 == 0, "odd multiplicity in delta at a0 = " +
                                               rational_str(a0s[i]));
      Rational root;
      require(rational_is_square(computed[i].leading(), &root),
              "leading coefficient of delta is not a square at a0 = " + rational_str(a0s[i]));
      per_a0.push_back(ordered_json{{"a0", rational_str(a0s[i])}, {"square_in_Qt", true}});
    }
    return ordered_json{{"printed_exponents", exps}, {"checked", per_a0}};
  });
}

// -------------------------------------------------------------- dedekind --

void stage_dedekind(PipelineState& st, VerificationReport& report, const PipelineConfig& config)
{
  UniPoly p1 = st.consts.family_p.specialize(Rational(1));
  UniPoly q1 = st.consts.family_q.specialize(Rational(1));
  std::vector<uint64_t> primes = config.primes;
  if (primes.empty())
    primes = good_primes(p1, q1, 25);

  std::vector<SampleRecord> records;
  std::string sample_error;
  StatSummary stats;
  try {
    records = sample_frobenius(p1, q1, primes, config.samples_per_prime, config.seed);
    stats = statistics(records, st.census().distinct_types(), 200);
  } catch (const std::exception& e) {
    sample_error = e.what();
  }
  auto need_samples = [&]() {
    if (!sample_error.empty())
      throw std::runtime_error(sample_error);
  };

  run_claim(report, "dedekind.patterns", ClaimStatus::VerifiedStatistical, [&] {
    need_samples();
    require(stats.unknown_types == 0,
            std::to_string(stats.unknown_types) + " accepted patterns outside the census list");
    ordered_json table = ordered_json::array();
    for (const auto& rec : records) {
      ordered_json row;
      row["p"] = rec.prime;
      row["t0"] = rec.t0;
      row["accepted"] = rec.accepted;
      if (rec.accepted)
        row["pattern"] = rec.pattern.str();
      table.push_back(std::move(row));
    }
    return ordered_json{{"primes", primes},
                        {"samples_per_prime", config.samples_per_prime},
                        {"seed", config.seed},
                        {"accepted", stats.accepted},
                        {"unknown_patterns", stats.unknown_types},
                        {"samples", table}};
  });
  run_claim(report, "dedekind.mean-fix", ClaimStatus::VerifiedStatistical, [&] {
    need_samples();
    double dev = std::abs(stats.mean_fix - 1.0);
    require(dev <= config.tol_fix, "mean fix " + std::to_string(stats.mean_fix) +
                                       " deviates beyond " + std::to_string(config.tol_fix));
    return ordered_json{{"mean_fix", stats.mean_fix}, {"tolerance", config.tol_fix}};
  });
  run_claim(report, "dedekind.mean-fix2", ClaimStatus::VerifiedStatistical, [&] {
    need_samples();
    double dev = std::abs(stats.mean_fix2 - 2.0);
    require(dev <= config.tol_fix2, "mean fix^2 " + std::to_string(stats.mean_fix2) +
                                        " deviates beyond " + std::to_string(config.tol_fix2));
    return ordered_json{{"mean_fix2", stats.mean_fix2}, {"tolerance", config.tol_fix2}};
  });
  run_claim(report, "dedekind.coverage", ClaimStatus::VerifiedStatistical, [&] {
    need_samples();
    require(static_cast<int>(stats.distinct_types) >= config.min_distinct_types,
            "only " + std::to_string(stats.distinct_types) + " distinct types observed");
    return ordered_json{{"distinct_types", stats.distinct_types},
                        {"required", config.min_distinct_types},
                        {"census_types", st.census().distinct_types().size()}};
  });
  run_claim(report, "dedekind.square-disc-37", ClaimStatus::VerifiedExact, [&] {
    UniPoly delta1 = st.consts.delta.specialize(Rational(1));
    auto res = square_disc_check(delta1, 37);
    return ordered_json{{"prime", 37},
                        {"square_in_Qt", res.leading_is_square},
                        {"square_in_F37t", res.leading_is_residue_mod_p}};
  });
  run_claim(report, "dedekind.ff-irreducibility", ClaimStatus::CitedTheorem, [&] {
    return ordered_json{{"note", "function-field irreducibility over F_37(t) is certified in the "
                                 "source by computer algebra and is not reproduced here; the "
                                 "statistical checks above are evidence, not proof"}};
  });
}

// --------------------------------------------------------------- index63 --

void stage_index63(PipelineState& st, VerificationReport& report)
{
  run_claim(report, "index63.stabilizer", ClaimStatus::VerifiedExact, [&] {
    const Sp62Model& m = st.model();
    require(m.chain63.first_orbit_size() == 63, "63-point orbit size is not 63");
    return ordered_json{{"orbit_size", 63},
                        {"group_order", kSp62Order},
                        {"stabilizer_order", kSp62Order / 63},
                        {"stabilizer_index", 63}};
  });
  run_claim(report, "index63.divisors", ClaimStatus::VerifiedExact, [&] {
    std::vector<int> divisors;
    for (int d = 2; d <= 63; ++d)
      if (63 % d == 0)
        divisors.push_back(d);
    require(divisors == std::vector<int>({3, 7, 9, 21, 63}), "divisor list mismatch");
    return ordered_json{{"divisors_of_63_above_1", divisors}};
  });
  run_claim(report, "index63.an-minimal", ClaimStatus::VerifiedExact, [&] {
    ordered_json results = ordered_json::array();
    for (int n = 5; n <= 7; ++n) {
      int idx = min_faithful_degree_check(n);
      require(idx == n, "A_" + std::to_string(n) + " minimal index came out as " +
                            std::to_string(idx));
      results.push_back(ordered_json{{"n", n}, {"minimal_proper_subgroup_index", idx}});
    }
    return ordered_json{{"alternating_groups", results},
                        {"a36", "cited, not computed"}};
  });
}

// ----------------------------------------------------------------- cited --

void stage_cited(VerificationReport& report)
{
  for (const char* id :
       {"cited.malle", "cited.beckmann", "cited.a36-minimal-degree", "cited.lemma-proof"}) {
    run_claim(report, id, ClaimStatus::CitedTheorem, [&] {
      return ordered_json{{"note", "recorded as a citation; never counted as computational "
                                   "verification"}};
    });
  }
}

}  // namespace

PipelineOutcome run_pipeline(const PipelineConfig& config)
{
  static const std::vector<std::string> kOrder = {"triple",  "census",   "nielsen", "belyi",
                                                  "family",  "dedekind", "index63", "cited"};
  std::set<std::string> wanted;
  for (const auto& s : config.stages) {
    if (s == "all") {
      wanted.insert(kOrder.begin(), kOrder.end());
    } else if (std::find(kOrder.begin(), kOrder.end(), s) != kOrder.end()) {
      wanted.insert(s);
    } else {
      std::string names;
      for (const auto& n : kOrder)
        names += (names.empty() ? "" : ", ") + n;
      throw UsageError("unknown stage '" + s + "'; valid stages: all, " + names);
    }
  }
  // Prerequisites: the census feeds nielsen, family and dedekind.
  if (wanted.count("nielsen") || wanted.count("family") || wanted.count("dedekind"))
    wanted.insert("census");

  ConstantsFile consts;
  try {
    consts = ConstantsFile::load(config.constants_path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }

  ordered_json config_json;
  {
    ordered_json stages = ordered_json::array();
    for (const auto& s : kOrder)
      if (wanted.count(s))
        stages.push_back(s);
    config_json["stages"] = stages;
    config_json["seed"] = config.seed;
    config_json["primes"] = config.primes.empty() ? ordered_json("default-25")
                                                  : ordered_json(config.primes);
    config_json["samples_per_prime"] = config.samples_per_prime;
    config_json["a0"] = config.a0_values;
    config_json["tolerance_fix"] = config.tol_fix;
    config_json["tolerance_fix2"] = config.tol_fix2;
    config_json["min_distinct_types"] = config.min_distinct_types;
  }

  PipelineOutcome out{VerificationReport(std::move(config_json)), "", 0};
  PipelineState state(std::move(consts));

  std::ostringstream timings;
  for (const auto& stage : kOrder) {
    if (!wanted.count(stage))
      continue;
    auto start = std::chrono::steady_clock::now();
    if (stage == "triple")
      stage_triple(state, out.report);
    else if (stage == "census")
      stage_census(state, out.report);
    else if (stage == "nielsen")
      stage_nielsen(state, out.report);
    else if (stage == "belyi")
      stage_belyi(state, out.report);
    else if (stage == "family")
      stage_family(state, out.report, config);
    else if (stage == "dedekind")
      stage_dedekind(state, out.report, config);
    else if (stage == "index63")
      stage_index63(state, out.report);
    else if (stage == "cited")
      stage_cited(out.report);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    timings << "stage " << stage << ": " << std::fixed << secs << "s\n";
  }
  out.console = out.report.summary() + timings.str();
  out.exit_code = out.report.all_ok() ? 0 : 1;
  return out;
}

}  // namespace sp62v
