#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hfk/arith.hpp"
#include "hfk/errors.hpp"
#include "hfk/hc.hpp"
#include "hfk/record.hpp"
#include "hfk/seifert.hpp"
#include "hfk/witness.hpp"

namespace hfk::cli {

namespace {

struct SurfaceArgs {
  std::string p, q, a, b, c, u, v;

  void bind(CLI::App& cmd) {
    cmd.add_option("p", p, "order of H_1")->required();
    cmd.add_option("q", q, "surgery coefficient numerator")->required();
    cmd.add_option("a", a)->required();
    cmd.add_option("b", b)->required();
    cmd.add_option("c", c)->required();
    cmd.add_option("u", u)->required();
    cmd.add_option("v", v)->required();
  }

  LensSpace space(bool normalize) const {
    LensSpace s(parse_int(p), parse_int(q));
    return normalize ? s.normalized() : s;
  }
  SurfaceParams params() const { return {parse_int(a), parse_int(b), parse_int(c), parse_int(u), parse_int(v)}; }
};

std::string join(const std::vector<Int>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += values[i].get_str();
  }
  return s + "]";
}

std::vector<Int> parse_list(const std::string& text) {
  std::vector<Int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) values.push_back(parse_int(item));
  }
  return values;
}

void print_record(std::ostream& out, const CertificateRecord& record, bool json) {
  if (json) {
    out << to_json_line(record) << '\n';
  } else {
    out << describe(record);
  }
}

void print_hc(std::ostream& out, const HcResult& r) {
  out << r.render() << '\n' << "reason: " << to_string(r.reason) << '\n';
  if (r.lens_certificate) {
    const SurfaceParams& s = r.lens_certificate->params;
    out << "witness: (a,b,c,u,v) = (" << s.a.get_str() << ", " << s.b.get_str() << ", " << s.c.get_str() << ", "
        << s.u.get_str() << ", " << s.v.get_str() << ")\n";
  }
  if (r.connsum_params) {
    const ConnSumSurfaceParams& s = *r.connsum_params;
    out << "witness: (a,b,c,u1,u2,v1,v2) = (" << s.a.get_str() << ", " << s.b.get_str() << ", " << s.c.get_str()
        << ", " << s.u1.get_str() << ", " << s.u2.get_str() << ", " << s.v1.get_str() << ", " << s.v2.get_str()
        << ")\n";
  }
}

struct TableJob {
  LensSpace space;
  std::optional<CertificateRecord> record;
  std::string failure;
};

int write_table(const Int& p_max, const std::string& path, const WitnessOptions& options, unsigned jobs,
                std::ostream& out, std::ostream& err) {
  if (p_max < 2) {
    err << "table: p_max must be >= 2\n";
    return kInvalidInput;
  }
  std::vector<TableJob> work;
  for (Int p = 2; p <= p_max; ++p) {
    for (Int q = 1; q < p; ++q) {
      Int g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g == 1) work.push_back({LensSpace(p, q), std::nullopt, {}});
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        CertificateRecord rec = make_record(construct_witness(work[i].space, options));
        if (!record_is_sound(rec)) {
          work[i].failure = "certificate failed re-verification";
        } else {
          work[i].record = std::move(rec);
        }
      } catch (const SearchExhausted& e) {
        work[i].failure = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& job : work) {
    if (!job.record) {
      err << "table: " << job.space.name() << ": " << job.failure << '\n';
      return job.failure.rfind("certificate", 0) == 0 ? kVerificationFailed : kSearchExhausted;
    }
  }

  std::ofstream file(path);
  if (!file) {
    err << "table: cannot open '" << path << "' for writing\n";
    return kInvalidInput;
  }
  for (const auto& job : work) file << to_json_line(*job.record) << '\n';
  file.close();
  if (!file) {
    err << "table: write to '" << path << "' failed\n";
    return kInvalidInput;
  }
  out << "wrote " << work.size() << " records to " << path << '\n';
  return kOk;
}

int recheck_table(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    err << "recheck: cannot open '" << path << "'\n";
    return kInvalidInput;
  }
  std::string line;
  std::size_t count = 0;
  std::size_t line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    if (line.empty()) continue;
    CertificateRecord rec = parse_json_line(line);
    if (!record_is_sound(rec)) {
      err << "recheck: line " << line_no << " (" << rec.certificate.space.name() << ") does not verify\n";
      return kVerificationFailed;
    }
    ++count;
  }
  out << "verified " << count << " records\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus-one homologically fibered knots in lens spaces", "hfk"};
  app.require_subcommand(1);
  std::function<int()> action;

  // witness
  auto* witness = app.add_subcommand("witness", "construct and verify a genus-one witness in L(p,q)");
  std::string w_p, w_q;
  bool w_json = false, w_brute = false, w_normalize = false;
  std::string w_bound = default_prime_bound().get_str();
  long w_box = WitnessOptions{}.fallback_box;
  witness->add_option("p", w_p)->required();
  witness->add_option("q", w_q)->required();
  witness->add_flag("--json", w_json, "print the certificate as a JSON line");
  witness->add_option("--bound", w_bound, "largest prime tried by the prime search");
  witness->add_flag("--brute", w_brute, "skip the construction and search the parameter box directly");
  witness->add_option("--box", w_box, "largest box for the exhaustive search")->check(CLI::NonNegativeNumber);
  witness->add_flag("--normalize", w_normalize, "reduce q into [1, p-1] first");
  witness->callback([&] {
    action = [&]() -> int {
      LensSpace space(parse_int(w_p), parse_int(w_q));
      if (w_normalize) space = space.normalized();
      WitnessCertificate cert = [&] {
        if (!w_brute) return construct_witness(space, {parse_int(w_bound), w_box});
        auto found = brute_search_growing(space, w_box);
        if (!found) throw SearchExhausted("brute search found no witness for " + space.name() + " in box " +
                                          std::to_string(w_box));
        return *found;
      }();
      print_record(out, make_record(cert), w_json);
      return kOk;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check the witness identity for Sigma_{a,b,c,u,v} in L(p,q)");
  SurfaceArgs v_args;
  bool v_json = false, v_normalize = false;
  v_args.bind(*verify);
  verify->add_flag("--json", v_json);
  verify->add_flag("--normalize", v_normalize, "reduce q into [1, p-1] first");
  verify->callback([&] {
    action = [&]() -> int {
      const LensSpace space = v_args.space(v_normalize);
      const SurfaceParams params = v_args.params();
      auto cert = verify_witness(space, params);
      if (!cert) {
        out << "identity_value: " << Int(abs(signed_identity(space, params))).get_str() << '\n';
        return kVerificationFailed;
      }
      print_record(out, make_record(*cert), v_json);
      return kOk;
    };
  });

  // alexander
  auto* alex = app.add_subcommand("alexander", "Alexander polynomial of the boundary of Sigma_{a,b,c,u,v}");
  SurfaceArgs a_args;
  bool a_json = false;
  a_args.bind(*alex);
  alex->add_flag("--json", a_json, "print the coefficient map");
  alex->callback([&] {
    action = [&]() -> int {
      const LensSpace space = a_args.space(false);
      LaurentPoly poly = alexander(seifert_matrix_lens(space, a_args.params()), space.p());
      out << (a_json ? poly.to_json() : poly.to_string()) << '\n';
      return kOk;
    };
  });

  // hc
  auto* hc = app.add_subcommand("hc", "the hc invariant for the supported families");
  hc->require_subcommand(1);
  std::string h_p, h_q, h_p2, h_q2, h_rank, h_factors;
  long h_box = 2;
  auto* hc_lens_cmd = hc->add_subcommand("lens", "L(p,q)");
  hc_lens_cmd->add_option("p", h_p)->required();
  hc_lens_cmd->add_option("q", h_q)->required();
  hc_lens_cmd->callback([&] {
    action = [&]() -> int {
      print_hc(out, hfk::hc_lens(LensSpace(parse_int(h_p), parse_int(h_q))));
      return kOk;
    };
  });
  auto* hc_connsum_cmd = hc->add_subcommand("connsum", "L(p1,q1) # L(p2,q2)");
  hc_connsum_cmd->add_option("p1", h_p)->required();
  hc_connsum_cmd->add_option("q1", h_q)->required();
  hc_connsum_cmd->add_option("p2", h_p2)->required();
  hc_connsum_cmd->add_option("q2", h_q2)->required();
  hc_connsum_cmd->add_option("--box", h_box, "search box for genus-one surfaces")->check(CLI::NonNegativeNumber);
  hc_connsum_cmd->callback([&] {
    action = [&]() -> int {
      print_hc(out, hfk::hc_connsum(LensSpace(parse_int(h_p), parse_int(h_q)),
                                    LensSpace(parse_int(h_p2), parse_int(h_q2)), h_box));
      return kOk;
    };
  });
  auto* hc_free_cmd = hc->add_subcommand("free-rank", "H_1 free abelian of the given rank");
  hc_free_cmd->add_option("n", h_rank)->required();
  hc_free_cmd->callback([&] {
    action = [&]() -> int {
      print_hc(out, hfk::hc_free_abelian(parse_int(h_rank)));
      return kOk;
    };
  });
  auto* hc_trivial_cmd = hc->add_subcommand("trivial", "H_1 = 0");
  hc_trivial_cmd->callback([&] {
    action = [&]() -> int {
      print_hc(out, hfk::hc_trivial());
      return kOk;
    };
  });
  auto* hc_zzp_cmd = hc->add_subcommand("z-zp", "H_1 = Z + Z/p with linking form (q/p)");
  hc_zzp_cmd->add_option("p", h_p)->required();
  hc_zzp_cmd->add_option("q", h_q)->required();
  hc_zzp_cmd->callback([&] {
    action = [&]() -> int {
      print_hc(out, hfk::hc_z_plus_zp(parse_int(h_p), parse_int(h_q)));
      return kOk;
    };
  });
  auto* hc_qhs_cmd = hc->add_subcommand("qhs", "rational homology sphere with invariant factors f1,f2,...");
  hc_qhs_cmd->add_option("factors", h_factors, "comma-separated divisibility chain")->required();
  hc_qhs_cmd->callback([&] {
    action = [&]() -> int {
      print_hc(out, hfk::hc_qhs_bound(parse_list(h_factors)));
      return kOk;
    };
  });

  // table
  auto* table = app.add_subcommand("table", "write certificates for every L(p,q) with p <= p_max as JSON Lines");
  std::string t_pmax, t_path;
  std::string t_bound = default_prime_bound().get_str();
  long t_box = WitnessOptions{}.fallback_box;
  unsigned t_jobs = 1;
  table->add_option("p_max", t_pmax)->required();
  table->add_option("out_path", t_path)->required();
  table->add_option("--bound", t_bound, "largest prime tried by the prime search");
  table->add_option("--box", t_box, "largest fallback search box")->check(CLI::NonNegativeNumber);
  table->add_option("--jobs", t_jobs, "worker threads")->check(CLI::PositiveNumber);
  table->callback([&] {
    action = [&]() -> int { return write_table(parse_int(t_pmax), t_path, {parse_int(t_bound), t_box}, t_jobs, out, err); };
  });

  // recheck
  auto* recheck = app.add_subcommand("recheck", "re-verify every record of a JSON Lines table");
  std::string r_path;
  recheck->add_option("path", r_path)->required();
  recheck->callback([&] {
    action = [&]() -> int { return recheck_table(r_path, out, err); };
  });

  // lemma34
  auto* scan = app.add_subcommand(
      "lemma34", "list n <= n_max with both sqrt(n(n+4)) and sqrt(n(n-4)) in the n-th cyclotomic field");
  std::string l_nmax;
  scan->add_option("n_max", l_nmax)->required();
  scan->callback([&] {
    action = [&]() -> int {
      const Int n_max = parse_int(l_nmax);
      if (n_max < 1) {
        err << "lemma34: n_max must be >= 1\n";
        return kInvalidInput;
      }
      out << "violations: " << join(cyclotomic_exception_scan(n_max)) << '\n';
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    return action();
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ModulusTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const HypothesisViolated& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kSearchExhausted;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace hfk::cli
