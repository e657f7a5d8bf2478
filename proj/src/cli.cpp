#include "rankcert/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rankcert/certify.hpp"
#include "rankcert/digest.hpp"
#include "rankcert/family.hpp"
#include "rankcert/polytext.hpp"

namespace rankcert {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int verdict_code(const Certificate& c) {
  return c.verdict == Verdict::RankAtLeastOne ? kExitCertified : kExitInconclusive;
}

void emit(const Certificate& c, bool as_json, const Timings* t, std::ostream& out) {
  if (as_json) out << certificate_json(c, t);
  else out << render_text(c);
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like A..B");
  std::size_t used = 0;
  const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
  const long lo = std::stol(a, &used);
  if (used != a.size()) throw std::invalid_argument("malformed range start '" + a + "'");
  const long hi = std::stol(b, &used);
  if (used != b.size()) throw std::invalid_argument("malformed range end '" + b + "'");
  if (lo > hi) throw std::invalid_argument("empty range " + s);
  return {lo, hi};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifies that the Jacobian of a curve over Q has positive Mordell-Weil rank.", "rankcert"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  // certify
  auto* certify = app.add_subcommand("certify", "Certify rank >= 1");
  certify->require_subcommand(1);

  std::string f_text;
  bool assert_deg1 = false, as_json = false, full_prop1 = false, timings = false;
  unsigned long height_bound = kDefaultHeightBound;

  auto* hyper = certify->add_subcommand("hyperelliptic", "y^2 = f(x)");
  hyper->add_option("--f", f_text, "f(x) as polynomial text")->required();
  hyper->add_flag("--assert-deg1-class", assert_deg1, "Assume a rational degree-1 class when no point is found");
  hyper->add_option("--height-bound", height_bound, "Height bound for the rational point search")
      ->check(CLI::PositiveNumber);
  hyper->add_flag("--full-prop1", full_prop1, "Always compute theta resolvents");
  hyper->add_flag("--json", as_json, "Print the certificate document");
  hyper->add_flag("--timings", timings, "Include wall time in the document");

  std::string chi_path, theta_odd_path, theta_even_path;
  int genus = 0;
  auto* chi = certify->add_subcommand("chi", "Externally computed 2-torsion resolvent");
  chi->add_option("--file", chi_path, "Coefficient file")->required()->check(CLI::ExistingFile);
  chi->add_option("--genus", genus, "Genus")->required();
  chi->add_flag("--assert-deg1-class", assert_deg1, "Assume a rational degree-1 class");
  auto* odd_opt = chi->add_option("--theta-odd", theta_odd_path, "Odd theta resolvent file")->check(CLI::ExistingFile);
  auto* even_opt =
      chi->add_option("--theta-even", theta_even_path, "Even theta resolvent file")->check(CLI::ExistingFile);
  odd_opt->needs(even_opt);
  even_opt->needs(odd_opt);
  chi->add_flag("--json", as_json, "Print the certificate document");
  chi->add_flag("--timings", timings, "Include wall time in the document");

  std::vector<int> j2_list, odd_list, even_list;
  auto* orbits_cmd = certify->add_subcommand("orbits", "Orbit sizes given directly");
  orbits_cmd->add_option("--j2", j2_list, "2-torsion orbit sizes")->required()->delimiter(',');
  orbits_cmd->add_option("--theta-odd", odd_list, "Odd theta orbit sizes")->required()->delimiter(',');
  orbits_cmd->add_option("--theta-even", even_list, "Even theta orbit sizes")->required()->delimiter(',');
  orbits_cmd->add_option("--genus", genus, "Genus")->required();
  orbits_cmd->add_flag("--assert-deg1-class", assert_deg1, "Assume a rational degree-1 class");
  orbits_cmd->add_flag("--json", as_json, "Print the certificate document");

  // orbits
  auto* orbits = app.add_subcommand("orbits", "Galois orbit decompositions");
  orbits->require_subcommand(1);
  bool with_theta = false;
  auto* orbits_hyper = orbits->add_subcommand("hyperelliptic", "y^2 = f(x)");
  orbits_hyper->add_option("--f", f_text, "f(x) as polynomial text")->required();
  orbits_hyper->add_flag("--theta", with_theta, "Include theta characteristics");
  orbits_hyper->add_flag("--json", as_json, "JSON output");

  // family
  auto* family = app.add_subcommand("family", "One-parameter families");
  family->require_subcommand(1);
  std::string ft_text, range_text, fiber_text, emit_dir;
  auto* fscan = family->add_subcommand("scan", "Certify integer fibers");
  fscan->add_option("--f-t", ft_text, "f_t(x) as polynomial text in x and t")->required();
  fscan->add_option("--range", range_text, "A..B")->required();
  fscan->add_option("--fiber-check", fiber_text, "Designated good fiber");
  fscan->add_flag("--full-prop1", full_prop1, "Theta resolvents for fibers with reducible resolvent");
  fscan->add_option("--height-bound", height_bound, "Height bound for the rational point search")
      ->check(CLI::PositiveNumber);
  fscan->add_option("--emit-dir", emit_dir, "Write each certified fiber's certificate here");
  fscan->add_flag("--json", as_json, "JSON output");

  // oracle
  int primes = 20;
  auto* oracle = app.add_subcommand("oracle", "Frobenius cross-check of the resolvents");
  oracle->add_option("--f", f_text, "f(x) as polynomial text")->required();
  oracle->add_option("--primes", primes, "Number of good primes")->check(CLI::PositiveNumber);
  oracle->add_flag("--theta", with_theta, "Also check the theta resolvents");
  oracle->add_flag("--json", as_json, "JSON output");

  // verify
  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate document");
  verify->add_option("--certificate", cert_path, "Certificate file")->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitCertified : kExitError;
  }

  try {
    const auto start = Clock::now();
    if (*hyper) {
      const RatPoly f = parse_poly(f_text);
      CertifyOptions opts;
      opts.assert_deg1 = assert_deg1;
      opts.height_bound = height_bound;
      opts.theta = full_prop1 ? ThetaPolicy::Always : ThetaPolicy::WhenNeeded;
      const Certificate c = certify_hyperelliptic(f, opts, format_poly(f));
      Timings t{ms_since(start)};
      emit(c, as_json, timings ? &t : nullptr, out);
      return verdict_code(c);
    }
    if (*chi) {
      const RatPoly poly = load_chi_fixture(chi_path);
      std::optional<RatPoly> odd, even;
      if (!theta_odd_path.empty()) {
        odd = load_chi_fixture(theta_odd_path);
        even = load_chi_fixture(theta_even_path);
      }
      const Certificate c = certify_chi(poly, genus, assert_deg1, odd, even);
      Timings t{ms_since(start)};
      emit(c, as_json, timings ? &t : nullptr, out);
      return verdict_code(c);
    }
    if (*orbits_cmd) {
      OrbitReport report{genus, j2_list, odd_list, even_list};
      const std::string input = "--j2 " + join(j2_list) + " --theta-odd " + join(odd_list) + " --theta-even " +
                                join(even_list) + " --genus " + std::to_string(genus);
      const Certificate c = certify_orbits(report, assert_deg1, input);
      emit(c, as_json, nullptr, out);
      return verdict_code(c);
    }
    if (*orbits_hyper) {
      const HyperellipticCurve curve = build_curve(parse_poly(f_text));
      const CurveOrbits o = compute_orbits(curve, with_theta);
      if (as_json) {
        json j;
        j["curve"] = format_poly(curve.f);
        j["genus"] = curve.genus;
        j["j2_orbits"] = o.report.j2;
        j["j2_resolvent_sha256"] = sha256_hex(canonical_encoding(o.j2.chi));
        j["labeling"] = o.j2.labeling.c;
        j["labeling_shift"] = o.j2.labeling.shift;
        if (o.theta) {
          j["theta_odd_orbits"] = *o.report.theta_odd;
          j["theta_even_orbits"] = *o.report.theta_even;
        }
        out << j.dump(2) << "\n";
      } else {
        out << "curve: y^2 = " << format_poly(curve.f) << "\n";
        out << "genus: " << curve.genus << "\n";
        out << "2-torsion orbits: {" << join(o.report.j2) << "}\n";
        if (o.theta) {
          out << "odd theta orbits: {" << join(*o.report.theta_odd) << "}\n";
          out << "even theta orbits: {" << join(*o.report.theta_even) << "}\n";
        }
      }
      return kExitCertified;
    }
    if (*fscan) {
      const BiPoly ft = parse_bipoly(ft_text);
      FamilyCurve fam = family_from_bipoly(ft);
      if (!fiber_text.empty()) {
        BigRat b;
        if (b.set_str(fiber_text, 10) != 0 || b.get_den() == 0)
          throw std::invalid_argument("malformed fiber value '" + fiber_text + "'");
        b.canonicalize();
        fam.good_fiber = b;
      }
      const auto [lo, hi] = parse_range(range_text);
      ScanOptions opts;
      opts.full_prop1 = full_prop1;
      opts.height_bound = height_bound;
      const ScanReport report = scan(fam, lo, hi, opts);
      if (!emit_dir.empty()) {
        std::filesystem::create_directories(emit_dir);
        for (const auto& [a, c] : report.certified) {
          std::ofstream file(std::filesystem::path(emit_dir) / ("fiber_" + a.get_str() + ".json"));
          file << certificate_json(c);
        }
      }
      auto rats = [](const std::vector<BigRat>& v) {
        std::vector<std::string> s;
        for (const auto& q : v) s.push_back(q.get_str());
        return s;
      };
      if (as_json) {
        json j;
        j["family"] = format_bipoly(ft);
        j["range"] = {lo, hi};
        j["z1"] = rats(report.exclusions.z1);
        j["z2"] = rats(report.exclusions.z2);
        json cert = json::array();
        for (const auto& [a, c] : report.certified)
          cert.push_back({{"t", a.get_str()}, {"path", to_string(c.path)},
                          {"certificate_sha256", sha256_hex(certificate_json(c))}});
        j["certified"] = cert;
        json skipped = json::array();
        for (const auto& s : report.skipped)
          skipped.push_back({{"t", s.a.get_str()}, {"reason", to_string(s.kind)}, {"details", s.details}});
        j["skipped"] = skipped;
        if (report.good_fiber)
          j["good_fiber"] = {{"t", report.good_fiber->b.get_str()},
                             {"transitive", report.good_fiber->transitive},
                             {"j2_orbits", report.good_fiber->report.j2}};
        out << j.dump(2) << "\n";
      } else {
        out << "family: y^2 = " << format_bipoly(ft) << "\n";
        auto list = [](const std::vector<std::string>& v) {
          std::string s;
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
          return "{" + s + "}";
        };
        out << "Z1: " << list(rats(report.exclusions.z1)) << "\n";
        out << "Z2: " << list(rats(report.exclusions.z2)) << "\n";
        if (report.good_fiber)
          out << "good fiber t = " << report.good_fiber->b.get_str() << ": 2-torsion orbits {"
              << join(report.good_fiber->report.j2) << "}"
              << (report.good_fiber->transitive ? ", transitive" : ", not transitive") << "\n";
        for (const auto& [a, c] : report.certified)
          out << "t = " << a.get_str() << ": RankAtLeastOne (" << to_string(c.path) << ")\n";
        for (const auto& s : report.skipped)
          out << "t = " << s.a.get_str() << ": skipped, " << to_string(s.kind)
              << (s.details.empty() ? "" : " (" + s.details + ")") << "\n";
        out << "certified " << report.certified.size() << " of " << (hi - lo + 1) << " fibers\n";
      }
      return report.certified.empty() ? kExitInconclusive : kExitCertified;
    }
    if (*oracle) {
      const HyperellipticCurve curve = build_curve(parse_poly(f_text));
      const CurveOrbits o = compute_orbits(curve, with_theta);
      json rows = json::array();
      bool all = true;
      int found = 0;
      for (std::uint64_t p = 3; found < primes && p < 100000; p = next_prime(p + 1)) {
        try {
          json row{{"p", p}};
          const auto pat = degree_pattern(o.j2.chi, p).degrees;
          const auto orc = frobenius_orbit_oracle(curve, p);
          row["j2_pattern"] = pat;
          row["j2_oracle"] = orc;
          bool agree = pat == orc;
          if (o.theta) {
            const auto t = theta_frobenius_oracle(curve, p);
            const auto po = degree_pattern(o.theta->chi_odd, p).degrees;
            const auto pe = degree_pattern(o.theta->chi_even, p).degrees;
            row["theta_odd_pattern"] = po;
            row["theta_even_pattern"] = pe;
            agree = agree && po == t.odd && pe == t.even;
          }
          row["agree"] = agree;
          all = all && agree;
          rows.push_back(row);
          ++found;
        } catch (const BadPrime&) {
        }
      }
      if (as_json) {
        out << json{{"curve", format_poly(curve.f)}, {"primes", rows}, {"all_agree", all}}.dump(2) << "\n";
      } else {
        for (const auto& row : rows)
          out << "p = " << row["p"].get<std::uint64_t>() << ": chi " << row["j2_pattern"].dump() << ", oracle "
              << row["j2_oracle"].dump() << (row["agree"].get<bool>() ? " agree" : " DISAGREE") << "\n";
        out << (all ? "all primes agree" : "disagreement found") << "\n";
      }
      return all ? kExitCertified : kExitError;
    }
    if (*verify) {
      const Certificate c = certificate_from_json(read_file(cert_path));
      const VerifyResult v = verify_certificate(c);
      for (const auto& s : v.checks) out << "ok: " << s << "\n";
      for (const auto& s : v.failures) out << "FAILED: " << s << "\n";
      out << (v.ok ? "certificate verified" : "certificate rejected") << "\n";
      return v.ok ? kExitCertified : kExitError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace rankcert
