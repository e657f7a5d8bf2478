#include "rankcert/certify.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rankcert/digest.hpp"

#ifndef RANKCERT_VERSION
#define RANKCERT_VERSION "0.0.0"
#endif

namespace rankcert {

using nlohmann::json;

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

long sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

bool has_one(const std::vector<int>& v) { return std::find(v.begin(), v.end(), 1) != v.end(); }

// Integer square root of a rational square, if it is one.
std::optional<BigRat> rational_sqrt(const BigRat& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rat(n, d);
}

// First witness class among the linear factors of a 2-torsion resolvent.
std::string j2_witness(const TwoTorsionResolvent& r, const FactorizationQ& fac) {
  for (const auto& [poly, mult] : fac.factors) {
    if (poly.degree() != 1) continue;
    if (auto k = label_index_of(r.labels, -poly.coeff(0))) return "class " + describe_mask(r.classes[*k].mask);
  }
  return "linear factor of the 2-torsion resolvent";
}

std::vector<int> degrees_of(const IntPoly& chi) { return factor_over_q(chi).degrees(); }

}  // namespace

std::string tool_version() { return std::string("rankcert ") + RANKCERT_VERSION; }

Deg1Evidence user_assertion(std::string note) {
  Deg1Evidence e;
  e.kind = EvidenceKind::UserAssertion;
  e.note = std::move(note);
  return e;
}

std::optional<Deg1Evidence> find_deg1_class(const HyperellipticCurve& curve, unsigned long height_bound) {
  if (curve.parity == ModelParity::Odd || curve.lc_is_square) {
    Deg1Evidence e;
    e.kind = EvidenceKind::InfinitePlace;
    return e;
  }
  // f = unit * g with g primitive; f(p/q) is a square iff a*b*q^deg*g(p/q) is,
  // where unit = a/b and deg is even here.
  const auto [g, unit] = primitive_integer(curve.f);
  const BigInt ab = unit.get_num() * unit.get_den();
  const int n = g.degree();
  std::vector<BigInt> pp(n + 1), qp(n + 1);
  for (unsigned long q = 1; q <= height_bound; ++q) {
    qp[0] = 1;
    for (int i = 1; i <= n; ++i) qp[i] = qp[i - 1] * q;
    for (unsigned long a = 0; a <= height_bound; ++a) {
      if (std::gcd(a, q) != 1) continue;
      for (int sign : {1, -1}) {
        if (a == 0 && sign == -1) continue;
        const BigInt p = BigInt(static_cast<long>(a)) * sign;
        pp[0] = 1;
        for (int i = 1; i <= n; ++i) pp[i] = pp[i - 1] * p;
        BigInt value = 0;
        for (int i = 0; i <= n; ++i) value += g.coeff(i) * pp[i] * qp[n - i];
        value *= ab;
        if (value < 0 || mpz_perfect_square_p(value.get_mpz_t()) == 0) continue;
        Deg1Evidence e;
        e.kind = EvidenceKind::RationalPoint;
        e.x = make_rat(p, BigInt(static_cast<long>(q)));
        e.y = *rational_sqrt(curve.f(e.x));
        return e;
      }
    }
  }
  return std::nullopt;
}

bool evidence_holds(const Deg1Evidence& e, const RatPoly& f) {
  switch (e.kind) {
    case EvidenceKind::RationalPoint:
      return e.y * e.y == f(e.x);
    case EvidenceKind::InfinitePlace: {
      if (f.degree() % 2 == 1) return true;
      return rational_sqrt(f.leading()).has_value();
    }
    case EvidenceKind::UserAssertion:
      return true;
  }
  return false;
}

std::uint64_t j2_count(int genus) { return (std::uint64_t{1} << (2 * genus)) - 1; }
std::uint64_t theta_odd_count(int genus) {
  return (std::uint64_t{1} << (genus - 1)) * ((std::uint64_t{1} << genus) - 1);
}
std::uint64_t theta_even_count(int genus) {
  return (std::uint64_t{1} << (genus - 1)) * ((std::uint64_t{1} << genus) + 1);
}

void validate(const OrbitReport& r) {
  if (r.genus < 1 || r.genus > 20) throw ReportError("malformed report: genus must be between 1 and 20");
  auto check = [&](const std::vector<int>& v, std::uint64_t expected, const char* what) {
    for (int d : v)
      if (d < 1) throw ReportError(std::string("malformed report: nonpositive orbit size in ") + what);
    if (static_cast<std::uint64_t>(sum_of(v)) != expected)
      throw ReportError(std::string("malformed report: ") + what + " orbit sizes sum to " +
                        std::to_string(sum_of(v)) + ", expected " + std::to_string(expected));
  };
  check(r.j2, j2_count(r.genus), "j2");
  if (r.theta_odd.has_value() != r.theta_even.has_value())
    throw ReportError("malformed report: theta orbits must be given for both parities");
  if (r.theta_odd) check(*r.theta_odd, theta_odd_count(r.genus), "theta_odd");
  if (r.theta_even) check(*r.theta_even, theta_even_count(r.genus), "theta_even");
}

std::string to_string(Verdict v) { return v == Verdict::RankAtLeastOne ? "RankAtLeastOne" : "Inconclusive"; }
std::string to_string(Path p) { return p == Path::Prop1 ? "Prop1" : "Cor3"; }
std::string to_string(ReasonKind k) {
  switch (k) {
    case ReasonKind::RationalTwoTorsion: return "RationalTwoTorsion";
    case ReasonKind::RationalTheta: return "RationalTheta";
    case ReasonKind::NoDeg1Class: return "NoDeg1Class";
    case ReasonKind::GenusTooSmall: return "GenusTooSmall";
    case ReasonKind::NeedsThetaData: return "NeedsThetaData";
  }
  return "";
}
std::string to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::RationalPoint: return "rational_point";
    case EvidenceKind::InfinitePlace: return "infinite_place";
    case EvidenceKind::UserAssertion: return "user_assertion";
  }
  return "";
}

ResolventRecord make_record(std::string role, const IntPoly& chi, Labeling labeling) {
  return {std::move(role), chi, labeling.c, sha256_hex(canonical_encoding(chi)), labeling.shift};
}

Certificate decide_prop1(const OrbitReport& report, const std::optional<Deg1Evidence>& evidence) {
  validate(report);
  if (!report.theta_odd) throw ReportError("the three-condition criterion needs theta orbit data");
  Certificate c;
  c.path = Path::Prop1;
  c.report = report;
  c.evidence = evidence;
  if (has_one(report.j2)) c.reasons.push_back({ReasonKind::RationalTwoTorsion, "size-1 orbit in j2"});
  if (has_one(*report.theta_odd))
    c.reasons.push_back({ReasonKind::RationalTheta, "size-1 orbit in theta_odd"});
  else if (has_one(*report.theta_even))
    c.reasons.push_back({ReasonKind::RationalTheta, "size-1 orbit in theta_even"});
  if (!evidence) c.reasons.push_back({ReasonKind::NoDeg1Class, ""});
  c.verdict = c.reasons.empty() ? Verdict::RankAtLeastOne : Verdict::Inconclusive;
  return c;
}

Certificate decide_cor3(bool chi_irreducible, int genus, const std::optional<Deg1Evidence>& evidence) {
  Certificate c;
  c.path = Path::Cor3;
  c.report.genus = genus;
  c.evidence = evidence;
  if (genus <= 1) c.reasons.push_back({ReasonKind::GenusTooSmall, "genus " + std::to_string(genus)});
  if (!chi_irreducible) c.reasons.push_back({ReasonKind::NeedsThetaData, "2-torsion resolvent is reducible"});
  if (!evidence) c.reasons.push_back({ReasonKind::NoDeg1Class, ""});
  c.verdict = c.reasons.empty() ? Verdict::RankAtLeastOne : Verdict::Inconclusive;
  return c;
}

CurveOrbits compute_orbits(const HyperellipticCurve& curve, bool with_theta) {
  CurveOrbits out{{}, resolvent_j2(curve), std::nullopt};
  out.report.genus = curve.genus;
  out.report.j2 = orbit_decomposition(out.j2);
  if (with_theta) {
    out.theta = resolvent_theta(curve);
    out.report.theta_odd = degrees_of(out.theta->chi_odd);
    out.report.theta_even = degrees_of(out.theta->chi_even);
  }
  return out;
}

Certificate certify_hyperelliptic(const RatPoly& f, const CertifyOptions& options, const std::string& input_text) {
  const HyperellipticCurve curve = build_curve(f);
  std::optional<Deg1Evidence> evidence = find_deg1_class(curve, options.height_bound);
  if (!evidence && options.assert_deg1) evidence = user_assertion();

  const TwoTorsionResolvent j2 = resolvent_j2(curve);
  const FactorizationQ j2_fac = factor_over_q(j2.chi);
  const bool irreducible = j2_fac.factors.size() == 1;
  const bool need_theta =
      options.theta == ThetaPolicy::Always || (options.theta == ThetaPolicy::WhenNeeded && !irreducible);

  OrbitReport report{curve.genus, j2_fac.degrees(), std::nullopt, std::nullopt};
  std::optional<ThetaResolvents> theta;
  RationalTheta theta_witness;
  if (need_theta) {
    theta = resolvent_theta(curve);
    report.theta_odd = degrees_of(theta->chi_odd);
    report.theta_even = degrees_of(theta->chi_even);
    theta_witness = rational_theta_from_resolvents(*theta);
  }

  std::vector<std::string> notes = curve.warnings;
  Certificate c;
  if (irreducible || !need_theta) {
    c = decide_cor3(irreducible, curve.genus, evidence);
    if (theta) {
      const Certificate full = decide_prop1(report, evidence);
      notes.push_back("criterion re-run with theta data: " + to_string(full.verdict));
      if (c.verdict == Verdict::RankAtLeastOne && full.verdict != Verdict::RankAtLeastOne)
        notes.push_back("inconsistency: irreducible resolvent but the full criterion is inconclusive");
    }
  } else {
    c = decide_prop1(report, evidence);
    for (auto& reason : c.reasons) {
      if (reason.kind == ReasonKind::RationalTwoTorsion) reason.witness = j2_witness(j2, j2_fac);
      if (reason.kind == ReasonKind::RationalTheta) {
        if (curve.parity == ModelParity::Odd) {
          reason.witness = "(g-1)inf";
          const RationalTheta fast = has_rational_theta(curve);
          notes.push_back("rational theta characteristic (g-1)inf is the class " +
                          describe_theta(*fast.witness, curve) + "; linear factor in the theta resolvents: " +
                          (theta_witness.found ? "yes" : "no"));
        } else if (theta_witness.witness) {
          reason.witness = "class " + describe_theta(*theta_witness.witness, curve);
        }
      }
    }
  }
  c.report = report;
  c.evidence = evidence;
  c.input_kind = "hyperelliptic";
  c.input = input_text.empty() ? canonical_encoding(f) : input_text;
  c.input_sha256 = sha256_hex(c.input);
  c.curve = f;
  c.resolvents.push_back(make_record("j2", j2.chi, j2.labeling));
  if (theta) {
    c.resolvents.push_back(make_record("theta_odd", theta->chi_odd, theta->labeling));
    c.resolvents.push_back(make_record("theta_even", theta->chi_even, theta->labeling));
  }
  if (evidence && evidence->kind == EvidenceKind::UserAssertion)
    notes.push_back("the degree-1 class hypothesis is a user assertion, not verified");
  c.notes = std::move(notes);
  c.tool_version = tool_version();
  return c;
}

Certificate certify_chi(const RatPoly& chi, int genus, bool assert_deg1, const std::optional<RatPoly>& theta_odd,
                        const std::optional<RatPoly>& theta_even, const std::string& input_text) {
  if (genus < 1 || genus > kMaxGenus) throw ReportError("genus must be between 1 and " + std::to_string(kMaxGenus));
  if (theta_odd.has_value() != theta_even.has_value())
    throw ReportError("theta resolvents must be given for both parities");
  auto prepare = [](const RatPoly& p, std::uint64_t degree, const char* what) {
    if (p.is_zero()) throw ReportError(std::string(what) + " is zero");
    IntPoly q = primitive_integer(p).first;
    if (static_cast<std::uint64_t>(q.degree()) != degree)
      throw ReportError(std::string(what) + " has degree " + std::to_string(q.degree()) + ", expected " +
                        std::to_string(degree));
    if (!is_squarefree(q)) throw ReportError(std::string(what) + " is not squarefree");
    return q;
  };
  const IntPoly j2 = prepare(chi, j2_count(genus), "chi");
  std::vector<std::string> notes;
  const bool by_patterns = irreducible_by_degree_patterns(j2, 40);
  const FactorizationQ fac = factor_over_q(j2);
  const bool irreducible = fac.factors.size() == 1;
  notes.push_back(std::string("irreducibility by degree patterns: ") + (by_patterns ? "proved" : "not established"));
  notes.push_back("full factorization degrees: " + join_ints(fac.degrees()));

  OrbitReport report{genus, fac.degrees(), std::nullopt, std::nullopt};
  std::vector<ResolventRecord> records{make_record("j2", j2)};
  if (theta_odd) {
    const IntPoly odd = prepare(*theta_odd, theta_odd_count(genus), "theta_odd");
    const IntPoly even = prepare(*theta_even, theta_even_count(genus), "theta_even");
    report.theta_odd = degrees_of(odd);
    report.theta_even = degrees_of(even);
    records.push_back(make_record("theta_odd", odd));
    records.push_back(make_record("theta_even", even));
  }
  const std::optional<Deg1Evidence> evidence =
      assert_deg1 ? std::optional<Deg1Evidence>(user_assertion()) : std::nullopt;
  Certificate c = (irreducible || !theta_odd) ? decide_cor3(irreducible, genus, evidence)
                                              : decide_prop1(report, evidence);
  c.report = report;
  c.evidence = evidence;
  c.input_kind = "chi";
  c.input = input_text.empty() ? canonical_encoding(j2) : input_text;
  c.input_sha256 = sha256_hex(c.input);
  c.resolvents = std::move(records);
  if (assert_deg1) notes.push_back("the degree-1 class hypothesis is a user assertion, not verified");
  c.notes = std::move(notes);
  c.tool_version = tool_version();
  return c;
}

Certificate certify_orbits(const OrbitReport& report, bool assert_deg1, const std::string& input_text) {
  const std::optional<Deg1Evidence> evidence =
      assert_deg1 ? std::optional<Deg1Evidence>(user_assertion()) : std::nullopt;
  Certificate c = decide_prop1(report, evidence);
  c.input_kind = "orbits";
  c.input = input_text;
  c.input_sha256 = sha256_hex(c.input);
  c.notes.push_back("orbit sums checked: j2 " + std::to_string(sum_of(report.j2)) + " = " +
                    std::to_string(j2_count(report.genus)) + ", theta_odd " +
                    std::to_string(sum_of(*report.theta_odd)) + " = " +
                    std::to_string(theta_odd_count(report.genus)) + ", theta_even " +
                    std::to_string(sum_of(*report.theta_even)) + " = " +
                    std::to_string(theta_even_count(report.genus)));
  if (assert_deg1) c.notes.push_back("the degree-1 class hypothesis is a user assertion, not verified");
  c.tool_version = tool_version();
  return c;
}

// ---- serialization

namespace {

json int_list(const std::vector<int>& v) { return json(v); }

json coeff_list(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json coeff_list(const RatPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

BigRat parse_rat(const std::string& s) {
  BigRat q;
  if (q.set_str(s, 10) != 0) throw ReportError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ReportError("malformed rational '" + s + "'");
  q.canonicalize();
  return q;
}

BigInt parse_int(const std::string& s) {
  BigInt z;
  if (z.set_str(s, 10) != 0) throw ReportError("malformed integer '" + s + "'");
  return z;
}

template <class E>
E enum_from(const std::string& s, std::initializer_list<E> values) {
  for (E v : values)
    if (to_string(v) == s) return v;
  throw ReportError("unknown value '" + s + "'");
}

}  // namespace

std::string certificate_json(const Certificate& c, const Timings* timings) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = c.tool_version;
  j["input"] = {{"kind", c.input_kind}, {"text", c.input}, {"sha256", c.input_sha256}};
  j["curve"] = c.curve ? json{{"f", coeff_list(*c.curve)}} : json(nullptr);
  j["genus"] = c.report.genus;
  if (c.evidence) {
    json e{{"kind", to_string(c.evidence->kind)}};
    if (c.evidence->kind == EvidenceKind::RationalPoint) {
      e["x"] = c.evidence->x.get_str();
      e["y"] = c.evidence->y.get_str();
    }
    if (c.evidence->kind == EvidenceKind::UserAssertion) e["note"] = c.evidence->note;
    j["evidence"] = e;
  } else {
    j["evidence"] = nullptr;
  }
  j["j2_orbits"] = int_list(c.report.j2);
  j["theta_odd_orbits"] = c.report.theta_odd ? int_list(*c.report.theta_odd) : json(nullptr);
  j["theta_even_orbits"] = c.report.theta_even ? int_list(*c.report.theta_even) : json(nullptr);
  j["verdict"] = to_string(c.verdict);
  j["path"] = to_string(c.path);
  json reasons = json::array();
  for (const auto& r : c.reasons) reasons.push_back({{"kind", to_string(r.kind)}, {"witness", r.witness}});
  j["reasons"] = reasons;
  json res = json::array();
  for (const auto& r : c.resolvents)
    res.push_back({{"role", r.role},
                   {"labeling", r.labeling},
                   {"labeling_shift", r.labeling_shift},
                   {"degree", r.chi.degree()},
                   {"coefficients", coeff_list(r.chi)},
                   {"sha256", r.sha256}});
  j["resolvents"] = res;
  j["notes"] = c.notes;
  if (timings) j["timings"] = {{"total_ms", timings->total_ms}};
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ReportError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw ReportError("unsupported schema_version");
    Certificate c;
    c.tool_version = j.at("tool_version").get<std::string>();
    const auto& in = j.at("input");
    c.input_kind = in.at("kind").get<std::string>();
    c.input = in.at("text").get<std::string>();
    c.input_sha256 = in.at("sha256").get<std::string>();
    if (!j.at("curve").is_null()) {
      std::vector<BigRat> coeffs;
      for (const auto& s : j.at("curve").at("f")) coeffs.push_back(parse_rat(s.get<std::string>()));
      c.curve = RatPoly(std::move(coeffs));
    }
    c.report.genus = j.at("genus").get<int>();
    if (!j.at("evidence").is_null()) {
      const auto& e = j.at("evidence");
      Deg1Evidence ev;
      ev.kind = enum_from(e.at("kind").get<std::string>(),
                          {EvidenceKind::RationalPoint, EvidenceKind::InfinitePlace, EvidenceKind::UserAssertion});
      if (ev.kind == EvidenceKind::RationalPoint) {
        ev.x = parse_rat(e.at("x").get<std::string>());
        ev.y = parse_rat(e.at("y").get<std::string>());
      }
      if (ev.kind == EvidenceKind::UserAssertion) ev.note = e.at("note").get<std::string>();
      c.evidence = ev;
    }
    c.report.j2 = j.at("j2_orbits").get<std::vector<int>>();
    if (!j.at("theta_odd_orbits").is_null()) c.report.theta_odd = j.at("theta_odd_orbits").get<std::vector<int>>();
    if (!j.at("theta_even_orbits").is_null())
      c.report.theta_even = j.at("theta_even_orbits").get<std::vector<int>>();
    c.verdict = enum_from(j.at("verdict").get<std::string>(), {Verdict::RankAtLeastOne, Verdict::Inconclusive});
    c.path = enum_from(j.at("path").get<std::string>(), {Path::Prop1, Path::Cor3});
    for (const auto& r : j.at("reasons"))
      c.reasons.push_back({enum_from(r.at("kind").get<std::string>(),
                                     {ReasonKind::RationalTwoTorsion, ReasonKind::RationalTheta,
                                      ReasonKind::NoDeg1Class, ReasonKind::GenusTooSmall,
                                      ReasonKind::NeedsThetaData}),
                           r.at("witness").get<std::string>()});
    for (const auto& r : j.at("resolvents")) {
      std::vector<BigInt> coeffs;
      for (const auto& s : r.at("coefficients")) coeffs.push_back(parse_int(s.get<std::string>()));
      ResolventRecord rec{r.at("role").get<std::string>(), IntPoly(std::move(coeffs)),
                          r.at("labeling").get<unsigned>(), r.at("sha256").get<std::string>(),
                          r.at("labeling_shift").get<unsigned>()};
      if (rec.chi.degree() != r.at("degree").get<int>()) throw ReportError("resolvent degree field mismatch");
      c.resolvents.push_back(std::move(rec));
    }
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
  } catch (const json::exception& e) {
    throw ReportError(std::string("malformed certificate: ") + e.what());
  }
}

std::string render_text(const Certificate& c) {
  std::ostringstream os;
  os << "verdict: " << to_string(c.verdict) << "\n";
  os << "path: "
     << (c.path == Path::Prop1 ? "no rational 2-torsion, no rational theta characteristic, rational degree-1 class"
                               : "irreducible 2-torsion resolvent, genus > 1, rational degree-1 class")
     << "\n";
  os << "input: " << c.input_kind << " " << c.input << "\n";
  os << "genus: " << c.report.genus << "\n";
  os << "2-torsion orbits: " << join_ints(c.report.j2) << "\n";
  if (c.report.theta_odd) os << "odd theta orbits: " << join_ints(*c.report.theta_odd) << "\n";
  if (c.report.theta_even) os << "even theta orbits: " << join_ints(*c.report.theta_even) << "\n";

  auto reason_of = [&](ReasonKind k) -> const Reason* {
    for (const auto& r : c.reasons)
      if (r.kind == k) return &r;
    return nullptr;
  };
  auto line = [&](const char* label, ReasonKind k) {
    const Reason* r = reason_of(k);
    os << "  " << label << ": " << (r ? "FAILED" : "ok");
    if (r && !r->witness.empty()) os << " (witness " << r->witness << ")";
    os << "\n";
  };
  os << "conditions:\n";
  if (c.path == Path::Prop1) {
    line("no rational nonzero 2-torsion point", ReasonKind::RationalTwoTorsion);
    line("no rational theta characteristic", ReasonKind::RationalTheta);
  } else {
    line("genus above 1", ReasonKind::GenusTooSmall);
    line("2-torsion resolvent irreducible", ReasonKind::NeedsThetaData);
  }
  os << "  rational degree-1 class: ";
  if (!c.evidence) {
    os << "FAILED (none found)\n";
  } else {
    switch (c.evidence->kind) {
      case EvidenceKind::RationalPoint:
        os << "ok (point x = " << c.evidence->x.get_str() << ", y = " << c.evidence->y.get_str() << ")\n";
        break;
      case EvidenceKind::InfinitePlace:
        os << "ok (rational place at infinity)\n";
        break;
      case EvidenceKind::UserAssertion:
        os << "ASSERTED (" << c.evidence->note << ")\n";
        break;
    }
  }
  for (const auto& r : c.resolvents) {
    os << "resolvent " << r.role << ": degree " << r.chi.degree() << ", labeling c = " << r.labeling;
    if (r.labeling_shift) os << " shift " << r.labeling_shift;
    os << ", sha256 " << r.sha256 << "\n";
  }
  for (const auto& n : c.notes) os << "note: " << n << "\n";
  os << "tool: " << c.tool_version << "\n";
  return os.str();
}

// ---- verification

VerifyResult verify_certificate(const Certificate& c) {
  VerifyResult v;
  auto check = [&](bool ok, const std::string& what) {
    (ok ? v.checks : v.failures).push_back(what);
    if (!ok) v.ok = false;
  };

  try {
    validate(c.report);
    check(true, "orbit sums match the class counts");
  } catch (const ReportError& e) {
    check(false, e.what());
  }
  check(sha256_hex(c.input) == c.input_sha256, "input digest");

  const ResolventRecord* j2 = nullptr;
  for (const auto& r : c.resolvents) {
    check(sha256_hex(canonical_encoding(r.chi)) == r.sha256, r.role + " coefficient digest");
    check(is_squarefree(r.chi), r.role + " squarefree");
    std::optional<std::vector<int>> expected;
    std::uint64_t count = 0;
    if (r.role == "j2") {
      j2 = &r;
      expected = c.report.j2;
      count = j2_count(c.report.genus);
    } else if (r.role == "theta_odd") {
      expected = c.report.theta_odd;
      count = theta_odd_count(c.report.genus);
    } else if (r.role == "theta_even") {
      expected = c.report.theta_even;
      count = theta_even_count(c.report.genus);
    } else {
      check(false, "unknown resolvent role " + r.role);
      continue;
    }
    check(static_cast<std::uint64_t>(r.chi.degree()) == count, r.role + " degree");
    check(expected && degrees_of(r.chi) == *expected, r.role + " factor degrees equal the reported orbits");
  }

  if (c.curve) {
    std::optional<HyperellipticCurve> curve;
    try {
      curve = build_curve(*c.curve);
    } catch (const std::exception& e) {
      check(false, std::string("curve: ") + e.what());
    }
    if (curve) {
      check(curve->genus == c.report.genus, "genus of the curve");
      if (c.evidence) check(evidence_holds(*c.evidence, *c.curve), "degree-1 evidence on the curve");
      for (const auto& r : c.resolvents) {
        int agreed = 0;
        bool all = true;
        for (std::uint64_t p = 3; p < 2000 && agreed < 5; p = next_prime(p + 1)) {
          try {
            const auto pattern = degree_pattern(r.chi, p).degrees;
            std::vector<int> oracle;
            if (r.role == "j2") {
              oracle = frobenius_orbit_oracle(*curve, p);
            } else {
              const auto t = theta_frobenius_oracle(*curve, p);
              oracle = r.role == "theta_odd" ? t.odd : t.even;
            }
            all = all && pattern == oracle;
            ++agreed;
          } catch (const BadPrime&) {
          }
        }
        check(all && agreed == 5, r.role + " Frobenius cycle types agree with the curve at 5 primes");
      }
    }
  } else if (c.evidence) {
    check(c.evidence->kind == EvidenceKind::UserAssertion, "evidence without a curve must be an assertion");
  }

  if (c.path == Path::Cor3 && c.verdict == Verdict::RankAtLeastOne) {
    check(j2 != nullptr, "2-torsion resolvent embedded");
    if (j2) check(is_irreducible_over_q(j2->chi), "2-torsion resolvent irreducible (re-tested)");
  }

  try {
    const Certificate again = c.path == Path::Prop1
                                  ? decide_prop1(c.report, c.evidence)
                                  : decide_cor3(c.report.j2.size() == 1, c.report.genus, c.evidence);
    check(again.verdict == c.verdict, "verdict recomputed from the report");
    std::vector<ReasonKind> a, b;
    for (const auto& r : again.reasons) a.push_back(r.kind);
    for (const auto& r : c.reasons) b.push_back(r.kind);
    check(a == b, "reasons recomputed from the report");
  } catch (const ReportError& e) {
    check(false, e.what());
  }
  return v;
}

}  // namespace rankcert
