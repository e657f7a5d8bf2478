#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rankcert/certify.hpp"
#include "rankcert/polytext.hpp"

using namespace rankcert;

namespace {

HyperellipticCurve curve_of(std::initializer_list<long> coeffs) {
  std::vector<BigRat> c;
  for (long v : coeffs) c.emplace_back(v);
  return build_curve(RatPoly(std::move(c)));
}

std::vector<ReasonKind> kinds(const Certificate& c) {
  std::vector<ReasonKind> k;
  for (const auto& r : c.reasons) k.push_back(r.kind);
  return k;
}

const OrbitReport kQuartic{3, {3, 12, 48}, std::vector<int>{4, 24}, std::vector<int>{12, 24}};

}  // namespace

TEST_CASE("degree-1 class search") {
  CHECK(find_deg1_class(curve_of({1, -1, 0, 0, 0, 1}))->kind == EvidenceKind::InfinitePlace);
  CHECK(find_deg1_class(curve_of({1, 1, 0, 0, 0, 0, 1}))->kind == EvidenceKind::InfinitePlace);

  // 3x^6 + 2x^2 + 5 at height 2: independent exhaustive check first.
  const RatPoly f = parse_poly("3*x^6 + 2*x^2 + 5");
  int squares = 0;
  for (long q = 1; q <= 2; ++q)
    for (long p = -2; p <= 2; ++p) {
      const BigRat v = f(make_rat(p, q));
      squares += mpz_perfect_square_p(v.get_num_mpz_t()) && mpz_perfect_square_p(v.get_den_mpz_t());
    }
  CHECK(squares == 0);
  CHECK_FALSE(find_deg1_class(build_curve(f), 2).has_value());

  // 2x^6 + 2 has the point (1, 2).
  const auto pt = find_deg1_class(curve_of({2, 0, 0, 0, 0, 0, 2}), 5);
  REQUIRE(pt);
  CHECK(pt->kind == EvidenceKind::RationalPoint);
  CHECK(evidence_holds(*pt, parse_poly("2*x^6 + 2")));
  CHECK(pt->y * pt->y == parse_poly("2*x^6 + 2")(pt->x));
}

TEST_CASE("criterion on orbit data") {
  const auto ok = decide_prop1(kQuartic, user_assertion());
  CHECK(ok.verdict == Verdict::RankAtLeastOne);
  CHECK(ok.reasons.empty());

  const OrbitReport torsion{2, {1, 2, 12}, std::vector<int>{6}, std::vector<int>{10}};
  const auto t = decide_prop1(torsion, user_assertion());
  CHECK(t.verdict == Verdict::Inconclusive);
  CHECK(kinds(t) == std::vector<ReasonKind>{ReasonKind::RationalTwoTorsion});

  const OrbitReport none{3, {63}, std::vector<int>{28}, std::vector<int>{36}};
  CHECK(kinds(decide_prop1(none, std::nullopt)) == std::vector<ReasonKind>{ReasonKind::NoDeg1Class});

  const OrbitReport all{2, {1, 14}, std::vector<int>{1, 5}, std::vector<int>{10}};
  CHECK(kinds(decide_prop1(all, std::nullopt)) ==
        std::vector<ReasonKind>{ReasonKind::RationalTwoTorsion, ReasonKind::RationalTheta,
                                ReasonKind::NoDeg1Class});
}

TEST_CASE("malformed reports") {
  CHECK_THROWS_AS(decide_prop1(OrbitReport{3, {3, 12, 47}, std::vector<int>{4, 24}, std::vector<int>{12, 24}},
                               std::nullopt),
                  ReportError);
  CHECK_THROWS_AS(decide_prop1(OrbitReport{3, {63}, std::nullopt, std::nullopt}, std::nullopt), ReportError);
  CHECK_THROWS_AS(validate(OrbitReport{2, {15, 0}, std::nullopt, std::nullopt}), ReportError);
}

TEST_CASE("monotonicity: removing a size-1 orbit never loses a conclusion") {
  // Merge the size-1 orbit into another; the result may only improve.
  const OrbitReport with{2, {1, 2, 12}, std::vector<int>{6}, std::vector<int>{10}};
  const OrbitReport without{2, {3, 12}, std::vector<int>{6}, std::vector<int>{10}};
  CHECK(decide_prop1(with, user_assertion()).verdict == Verdict::Inconclusive);
  CHECK(decide_prop1(without, user_assertion()).verdict == Verdict::RankAtLeastOne);
}

TEST_CASE("irreducible-resolvent shortcut") {
  CHECK(decide_cor3(true, 3, user_assertion()).verdict == Verdict::RankAtLeastOne);
  CHECK(kinds(decide_cor3(true, 1, user_assertion())) == std::vector<ReasonKind>{ReasonKind::GenusTooSmall});
  CHECK(kinds(decide_cor3(false, 2, user_assertion())) == std::vector<ReasonKind>{ReasonKind::NeedsThetaData});
  CHECK(decide_cor3(true, 2, std::nullopt).verdict == Verdict::Inconclusive);
}

TEST_CASE("shortcut conclusions agree with the full criterion on real data") {
  for (const char* f : {"x^6 + x + 1", "x^6 + 3*x + 1", "x^6 - x + 2", "x^6 + 2*x^5 + x + 1"}) {
    CertifyOptions opts;
    opts.theta = ThetaPolicy::Always;
    const auto c = certify_hyperelliptic(parse_poly(f), opts);
    if (c.path != Path::Cor3 || c.verdict != Verdict::RankAtLeastOne) continue;
    CAPTURE(f);
    CHECK(decide_prop1(c.report, c.evidence).verdict == Verdict::RankAtLeastOne);
    CHECK(std::count(c.report.theta_odd->begin(), c.report.theta_odd->end(), 1) == 0);
  }
}

TEST_CASE("hyperelliptic pipeline") {
  const auto c = certify_hyperelliptic(parse_poly("x^6 + x + 1"));
  CHECK(c.verdict == Verdict::RankAtLeastOne);
  CHECK(c.path == Path::Cor3);
  CHECK(c.report.j2 == std::vector<int>{15});
  CHECK(verify_certificate(c).ok);

  const auto odd = certify_hyperelliptic(parse_poly("x^5 - x + 1"));
  CHECK(odd.verdict == Verdict::Inconclusive);
  REQUIRE(kinds(odd) == std::vector<ReasonKind>{ReasonKind::RationalTheta});
  CHECK(odd.reasons[0].witness == "(g-1)inf");
  CHECK(verify_certificate(odd).ok);

  const auto torsion = certify_hyperelliptic(parse_poly("x*(x-1)*(x^4+x+2)"));
  CHECK(torsion.verdict == Verdict::Inconclusive);
  REQUIRE_FALSE(torsion.reasons.empty());
  CHECK(torsion.reasons[0].kind == ReasonKind::RationalTwoTorsion);
  CHECK(torsion.reasons[0].witness.rfind("class {", 0) == 0);
  CHECK(verify_certificate(torsion).ok);
}

TEST_CASE("certificate document round trip") {
  for (const char* f : {"x^6 + x + 1", "x^5 - x + 1", "3*x^6 + 2*x^2 + 5"}) {
    CertifyOptions opts;
    opts.assert_deg1 = true;
    opts.height_bound = 3;
    const auto c = certify_hyperelliptic(parse_poly(f), opts, f);
    const std::string doc = certificate_json(c);
    CHECK(certificate_from_json(doc) == c);
    CHECK(certificate_json(certificate_from_json(doc)) == doc);
  }
  const auto orbit = certify_orbits(kQuartic, true, "quartic");
  CHECK(certificate_from_json(certificate_json(orbit)) == orbit);
  CHECK_THROWS_AS(certificate_from_json("{}"), ReportError);
  CHECK_THROWS_AS(certificate_from_json("not json"), ReportError);
}

TEST_CASE("text rendering") {
  const auto c = certify_orbits(kQuartic, true, "quartic");
  const std::string text = render_text(c);
  CHECK(text.find("no rational nonzero 2-torsion point: ok") != std::string::npos);
  CHECK(text.find("no rational theta characteristic: ok") != std::string::npos);
  CHECK(text.find("rational degree-1 class: ASSERTED") != std::string::npos);

  const auto odd = certify_hyperelliptic(parse_poly("x^5 - x + 1"));
  CHECK(render_text(odd).find("(witness (g-1)inf)") != std::string::npos);
}

TEST_CASE("verifier rejects tampering") {
  const auto c = certify_hyperelliptic(parse_poly("x^6 + x + 1"));
  REQUIRE(verify_certificate(c).ok);

  auto bad_verdict = c;
  bad_verdict.evidence.reset();
  CHECK_FALSE(verify_certificate(bad_verdict).ok);

  auto bad_hash = c;
  bad_hash.resolvents[0].sha256[0] = bad_hash.resolvents[0].sha256[0] == 'a' ? 'b' : 'a';
  CHECK_FALSE(verify_certificate(bad_hash).ok);

  auto bad_chi = c;
  bad_chi.resolvents[0].chi = IntPoly{1, 1} * IntPoly{2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
  bad_chi.resolvents[0].sha256 = make_record("j2", bad_chi.resolvents[0].chi).sha256;
  CHECK_FALSE(verify_certificate(bad_chi).ok);

  auto bad_curve = c;
  bad_curve.curve = parse_poly("x^6 + 2*x + 1");
  CHECK_FALSE(verify_certificate(bad_curve).ok);

  auto bad_point = c;
  bad_point.evidence = Deg1Evidence{EvidenceKind::RationalPoint, BigRat(1), BigRat(2), ""};
  CHECK_FALSE(verify_certificate(bad_point).ok);

  auto bad_input = c;
  bad_input.input += " ";
  CHECK_FALSE(verify_certificate(bad_input).ok);
}

TEST_CASE("external resolvent mode") {
  // x^15 - 2 style irreducible stand-in of the right degree for genus 2.
  const RatPoly chi = parse_poly("x^15 - 2");
  const auto c = certify_chi(chi, 2, true);
  CHECK(c.verdict == Verdict::RankAtLeastOne);
  CHECK(c.path == Path::Cor3);
  CHECK(verify_certificate(c).ok);
  CHECK_THROWS_AS(certify_chi(parse_poly("x^14 - 2"), 2, true), ReportError);
  CHECK_THROWS_AS(certify_chi(parse_poly("(x^5-2)^3"), 2, true), ReportError);
  CHECK(certify_chi(chi, 2, false).verdict == Verdict::Inconclusive);
}
