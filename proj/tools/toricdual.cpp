// Command-line front end: polar duals, Picard lattice analysis, coupling-pair
// duality checks, certificate verification, and a from-scratch Table 1.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toricdual/builtin.hpp"
#include "toricdual/io.hpp"

namespace td = toricdual;
using td::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotReflexive = 3;
constexpr int kExitToricContribution = 4;

std::string gram_str(const td::IntMatrix& g) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (j) os << ", ";
      os << g(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string sig_str(const td::Signature& s) {
  std::ostringstream os;
  os << "(" << s.pos << "," << s.neg << ")";
  return os.str();
}

// direct sums rendered with the circled-plus the tables use
std::string expr_pretty(const td::NamedLatticeExpr& e) {
  std::string flat = td::lattice_expr_string(e);
  std::string out;
  for (char c : flat) {
    if (c == '+')
      out += "\xE2\x8A\x95";  // U+2295
    else
      out += c;
  }
  return out;
}

json report_envelope(const std::string& command, json results, json warnings, int status) {
  json j;
  j["command"] = command;
  j["results"] = std::move(results);
  j["warnings"] = std::move(warnings);
  j["status"] = status;
  return j;
}

json picard_report_json(const td::PicardReport& rep) {
  json j;
  j["l0"] = td::int_to_json(rep.l0);
  if (!rep.l0_trivial) return j;
  j["rho"] = td::int_to_json(rep.rho);
  j["rho_formula"] = td::int_to_json(rep.rho_formula);
  j["gram"] = td::matrix_to_json(rep.gram_basis);
  j["signature"] = json::array({rep.sig.pos, rep.sig.neg});
  j["disc"] = td::int_to_json(rep.disc);
  json inv = json::array();
  for (const auto& x : rep.disc_group) inv.push_back(td::int_to_json(x));
  j["disc_group"] = std::move(inv);
  j["matched"] = rep.matched ? json(td::lattice_expr_string(*rep.matched)) : json(nullptr);
  if (rep.u_split) {
    j["u_split"] = {{"complement_rank", rep.u_split->complement_rank},
                    {"complement_disc", td::int_to_json(rep.u_split->complement_disc)}};
  }
  return j;
}

void print_picard_report(const td::PicardReport& rep, std::ostream& os) {
  os << "  L0 (toric contribution) = " << rep.l0 << "\n";
  if (!rep.l0_trivial) return;
  os << "  rho = " << rep.rho << "   (edge/vertex formula value: " << rep.rho_formula << ")\n";
  os << "  Gram (basis) = " << gram_str(rep.gram_basis) << "\n";
  os << "  signature " << sig_str(rep.sig) << ", disc " << rep.disc << ", A_L = [";
  for (std::size_t i = 0; i < rep.disc_group.size(); ++i)
    os << (i ? "," : "") << rep.disc_group[i];
  os << "]\n";
  if (rep.matched) os << "  identified: " << expr_pretty(*rep.matched) << "\n";
  if (rep.u_split)
    os << "  U splits off; complement rank " << rep.u_split->complement_rank << ", disc "
       << rep.u_split->complement_disc << "\n";
}

std::string verdict_line(const td::DualityVerdict& v) {
  std::ostringstream os;
  os << "polytope_dual=" << (v.polytope_dual_ok ? "ok" : "FAIL")
     << " l0_trivial=" << (v.l0_trivial_ok ? "ok" : "FAIL")
     << " expected=" << (v.expected_match_ok ? "ok" : "FAIL")
     << " duality=" << (v.lattice_duality_ok ? "ok" : "FAIL");
  if (v.certificates_ok) os << " certificates=" << (*v.certificates_ok ? "ok" : "FAIL");
  return os.str();
}

json verdict_json(const td::DualityVerdict& v) {
  json j;
  j["polytope_dual_ok"] = v.polytope_dual_ok;
  j["l0_trivial_ok"] = v.l0_trivial_ok;
  j["expected_match_ok"] = v.expected_match_ok;
  j["lattice_duality_ok"] = v.lattice_duality_ok;
  j["certificates_ok"] = v.certificates_ok ? json(*v.certificates_ok) : json(nullptr);
  j["pic_delta"] = picard_report_json(v.delta);
  j["pic_delta_prime"] = picard_report_json(v.delta_prime);
  j["all_ok"] = v.all_ok();
  return j;
}

std::vector<td::CouplingPair> dataset() {
  if (const char* path = std::getenv("TORICDUAL_DATA")) return td::load_pairs_file(path);
  return td::builtin_pairs();
}

const td::CouplingPair& find_pair(const std::vector<td::CouplingPair>& pairs,
                                  const std::string& id) {
  for (const auto& p : pairs)
    if (p.id == id || p.id.starts_with(id + "/") || p.id.starts_with(id + "-")) return p;
  throw td::ParseError("no builtin pair matches id '" + id + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toricdual: Picard lattices of K3 families from reflexive 3-polytopes"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a JSON report on stdout");
  int search_bound = 5;
  app.add_option("--search-bound", search_bound, "coefficient box bound for the U-split search");

  auto* cmd_dual = app.add_subcommand("dual", "polar dual, reflexivity, toric contribution");
  std::string dual_file;
  bool require_reflexive = false;
  cmd_dual->add_option("file", dual_file, "polytope JSON file")->required();
  cmd_dual->add_flag("--require-reflexive", require_reflexive, "exit 3 when not reflexive");

  auto* cmd_analyze = app.add_subcommand("analyze", "Picard lattice of the family of a polytope");
  std::string analyze_file;
  cmd_analyze->add_option("file", analyze_file, "polytope JSON file")->required();

  auto* cmd_check = app.add_subcommand("check-pair", "lattice-duality verdict for a coupling pair");
  std::string check_file, check_id;
  bool check_all = false;
  cmd_check->add_option("file", check_file, "pair JSON file");
  cmd_check->add_option("--builtin", check_id, "builtin pair id (e.g. 26/1 or 35-37)");
  cmd_check->add_flag("--all", check_all, "run every builtin pair");

  auto* cmd_cert = app.add_subcommand("verify-cert", "verify stored basis certificates");
  std::string cert_file, cert_id;
  cmd_cert->add_option("file", cert_file, "pair JSON file");
  cmd_cert->add_option("--builtin", cert_id, "builtin pair id");

  auto* cmd_table = app.add_subcommand("table", "recompute the full coupling-pair table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_dual) {
      td::Polytope3 p = td::load_polytope(dual_file);
      auto dual = p.polar_dual_checked();
      bool reflexive = p.is_reflexive();
      if (require_reflexive && !reflexive) {
        std::cerr << "not reflexive\n";
        return kExitNotReflexive;
      }
      json warnings = json::array();
      if (!dual.integral) warnings.push_back("polar dual is not integral");
      td::Int l0 = reflexive ? td::toric_contribution(p) : td::Int(0);
      if (as_json) {
        json res;
        res["dual"] = td::polytope_to_json(dual.dual);
        res["dual_integral"] = dual.integral;
        res["reflexive"] = reflexive;
        if (reflexive) res["l0"] = td::int_to_json(l0);
        std::cout << report_envelope("dual", res, warnings, 0).dump(2) << "\n";
      } else {
        std::cout << "dual vertices:\n";
        for (const auto& v : dual.dual.vertices())
          std::cout << "  (" << v[0] << ", " << v[1] << ", " << v[2] << ")\n";
        std::cout << "reflexive: " << (reflexive ? "yes" : "no") << "\n";
        if (reflexive) std::cout << "L0 = " << l0 << "\n";
      }
      return 0;
    }

    if (*cmd_analyze) {
      td::Polytope3 p = td::load_polytope(analyze_file);
      if (!p.is_reflexive()) {
        std::cerr << "input polytope is not reflexive\n";
        return kExitNotReflexive;
      }
      td::PicardReport rep = td::analyze_family(p, search_bound);
      if (as_json)
        std::cout << report_envelope("analyze", picard_report_json(rep), json::array(),
                                     rep.l0_trivial ? 0 : kExitToricContribution)
                         .dump(2)
                  << "\n";
      else
        print_picard_report(rep, std::cout);
      return rep.l0_trivial ? 0 : kExitToricContribution;
    }

    if (*cmd_check) {
      std::vector<td::CouplingPair> pairs;
      if (check_all)
        pairs = dataset();
      else if (!check_id.empty())
        pairs.push_back(find_pair(dataset(), check_id));
      else if (!check_file.empty())
        pairs.push_back(td::load_pair(check_file));
      else
        throw td::ParseError("check-pair needs a file, --builtin, or --all");

      bool all_ok = true;
      json rows = json::array();
      std::size_t pass = 0;
      for (const auto& p : pairs) {
        td::DualityVerdict v = td::check_pair(p, search_bound);
        all_ok = all_ok && v.all_ok();
        pass += v.all_ok() ? 1 : 0;
        if (as_json) {
          json row = verdict_json(v);
          row["id"] = p.id;
          rows.push_back(std::move(row));
        } else {
          std::cout << "No. " << p.id << ": " << (v.all_ok() ? "PASS" : "FAIL") << "  ["
                    << verdict_line(v) << "]\n";
          if (pairs.size() == 1) {
            std::cout << " Pic(Delta):\n";
            print_picard_report(v.delta, std::cout);
            std::cout << " Pic(Delta'):\n";
            print_picard_report(v.delta_prime, std::cout);
          }
        }
      }
      if (as_json)
        std::cout << report_envelope("check-pair", rows, json::array(), all_ok ? 0 : kExitFail)
                         .dump(2)
                  << "\n";
      else if (pairs.size() > 1)
        std::cout << pass << "/" << pairs.size() << " pair-cases pass\n";
      return all_ok ? 0 : kExitFail;
    }

    if (*cmd_cert) {
      td::CouplingPair pair =
          !cert_id.empty() ? find_pair(dataset(), cert_id) : td::load_pair(cert_file);
      if (pair.certificates.empty()) {
        std::cout << "no certificates stored for " << pair.id << "\n";
        return 0;
      }
      bool all_ok = true;
      json rows = json::array();
      for (const auto& c : pair.certificates) {
        bool ok = td::verify_pair_certificate(pair, c);
        all_ok = all_ok && ok;
        if (as_json) {
          rows.push_back({{"side", c.side},
                          {"target", td::lattice_expr_string(c.target)},
                          {"ok", ok}});
        } else {
          std::cout << pair.id << " [" << c.side << "] -> " << expr_pretty(c.target) << ": "
                    << (ok ? "PASS" : "FAIL") << "\n";
        }
      }
      if (as_json)
        std::cout << report_envelope("verify-cert", rows, json::array(), all_ok ? 0 : kExitFail)
                         .dump(2)
                  << "\n";
      return all_ok ? 0 : kExitFail;
    }

    if (*cmd_table) {
      json rows = json::array();
      if (!as_json)
        std::cout << "No.        Pic(Delta')          (rk,|d|)   Pic(Delta)           (rk,|d|)\n";
      for (const auto& p : dataset()) {
        td::PicardReport a = td::analyze_family(td::monomials_to_polytope(p.delta.spec), search_bound);
        td::PicardReport b =
            td::analyze_family(td::monomials_to_polytope(p.delta_prime.spec), search_bound);
        auto name = [](const td::PicardReport& r) {
          if (r.matched) return expr_pretty(*r.matched);
          std::ostringstream os;
          os << "U(+)L~[disc " << (r.u_split ? r.u_split->complement_disc : td::Int(0)) << "]";
          return os.str();
        };
        if (as_json) {
          json row;
          row["id"] = p.id;
          row["pic_delta"] = picard_report_json(a);
          row["pic_delta_prime"] = picard_report_json(b);
          rows.push_back(std::move(row));
        } else {
          std::ostringstream col1, col2;
          col1 << name(b);
          col2 << name(a);
          std::cout.width(10);
          std::cout << std::left << p.id;
          std::cout << " ";
          std::cout.width(20);
          std::cout << std::left << col1.str();
          std::cout << " (" << b.rank() << "," << td::abs(b.disc) << ")";
          std::cout << "     ";
          std::cout.width(20);
          std::cout << std::left << col2.str();
          std::cout << " (" << a.rank() << "," << td::abs(a.disc) << ")\n";
        }
      }
      if (as_json) std::cout << report_envelope("table", rows, json::array(), 0).dump(2) << "\n";
      return 0;
    }
  } catch (const td::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const td::MonomialDegreeMismatch& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const td::NotReflexive& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotReflexive;
  } catch (const td::NontrivialToricContribution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitToricContribution;
  } catch (const td::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return 0;
}
