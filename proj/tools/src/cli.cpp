#include "qseries_cli/cli.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "qseries/arithmetic.hpp"
#include "qseries/congruence.hpp"
#include "qseries/eta_theta.hpp"
#include "qseries/json_io.hpp"
#include "qseries/partitions.hpp"

namespace qseries::cli {
namespace {

enum class Format { Text, Json, Csv };

// Thrown for bad input that CLI11 cannot see (unknown ids, missing params).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<bool> right_aligned;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& out) const {
    std::vector<std::size_t> width(right_aligned.size(), 0);
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c != 0) line += "  ";
        const std::string pad(width[c] - row[c].size(), ' ');
        line += right_aligned[c] ? pad + row[c] : row[c] + pad;
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << '\n';
    }
  }
};

struct Common {
  bool json = false;
  bool csv = false;
  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

void add_format_flags(CLI::App& cmd, Common& common) {
  auto* j = cmd.add_flag("--json", common.json, "one JSON object per line");
  auto* c = cmd.add_flag("--csv", common.csv, "comma-separated output");
  j->excludes(c);
}

SequenceRef sequence_from(const std::string& name, std::optional<std::uint64_t> ell,
                          std::optional<std::uint64_t> k) {
  auto need = [](std::optional<std::uint64_t> v, const char* flag, const std::string& seq) {
    if (!v) throw UsageError("sequence " + seq + " needs " + flag);
    return *v;
  };
  try {
    if (name == "p") return SequenceRef::p();
    if (name == "pbar") return SequenceRef::pbar();
    if (name == "b") return SequenceRef::regular(need(ell, "--ell", name));
    if (name == "A") return SequenceRef::overpartition(need(ell, "--ell", name));
    if (name == "r") return SequenceRef::squares(need(k, "--k", name));
    if (name == "dstar") return SequenceRef::d_star();
    if (name == "sigma3m") return SequenceRef::sigma3_minus();
    if (name == "chi") return SequenceRef::chi();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown sequence \"" + name +
                   "\" (expected p, pbar, b, A, r, dstar, sigma3m or chi)");
}

BigInt sequence_value(const SequenceRef& seq, std::uint64_t n) {
  switch (seq.name()) {
    case SequenceName::R_squares:
      return BigInt(std::to_string(r_formula(static_cast<unsigned>(*seq.param()), n)));
    case SequenceName::DStar:
    case SequenceName::Sigma3Minus:
      if (n == 0) throw UsageError(seq.to_string() + " is undefined at 0");
      return BigInt(std::to_string(seq.name() == SequenceName::DStar ? d_star(n)
                                                                      : sigma3_minus(n)));
    case SequenceName::Chi:
      return BigInt(chi(n));
    default:
      return sequence_series(seq, CoefficientRing::integers(), n).coefficient(n);
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string detail(const VerificationReport& r) {
  if (r.status == Status::Skipped) return r.reason;
  if (!r.counterexample) return "";
  std::string out;
  for (const auto& p : r.counterexample->params) out += p.name + "=" + std::to_string(p.value) + " ";
  return out + "index=" + std::to_string(r.counterexample->index) +
         " lhs=" + r.counterexample->lhs.get_str() + " rhs=" + r.counterexample->rhs.get_str();
}

int print_reports(const std::vector<VerificationReport>& reports, Format format,
                  std::ostream& out) {
  bool failed = false;
  Table table{{false, false, true, true, false}, {}};
  if (format == Format::Csv) out << "id,status,bound,instances,index,lhs,rhs\n";
  if (format == Format::Text) table.rows.push_back({"id", "status", "instances", "bound", "detail"});
  for (const auto& r : reports) {
    failed = failed || r.status == Status::Fail;
    if (format == Format::Json) {
      out << report_to_json(r) << '\n';
    } else if (format == Format::Csv) {
      const auto& ce = r.counterexample;
      out << r.claim_id << ',' << to_string(r.status) << ',' << r.bound << ',' << r.instances
          << ',' << (ce ? std::to_string(ce->index) : "") << ',' << (ce ? ce->lhs.get_str() : "")
          << ',' << (ce ? ce->rhs.get_str() : "") << '\n';
    } else {
      table.rows.push_back({r.claim_id, to_string(r.status), std::to_string(r.instances),
                            std::to_string(r.bound), detail(r)});
    }
  }
  table.print(out);
  return failed ? kExitFailed : kExitOk;
}

std::vector<const RegistryEntry*> select_entries(const std::vector<std::string>& ids,
                                                 bool identities_only) {
  std::vector<const RegistryEntry*> entries;
  const bool all = ids.empty() || (ids.size() == 1 && ids[0] == "all");
  if (all) {
    for (const auto& e : builtin_registry()) {
      if (!identities_only || std::holds_alternative<IdentityClaim>(e)) entries.push_back(&e);
    }
    return entries;
  }
  for (const auto& id : ids) {
    const RegistryEntry* e = find_entry(id);
    if (e == nullptr || (identities_only && !std::holds_alternative<IdentityClaim>(*e))) {
      throw UsageError("unknown claim: " + id);
    }
    entries.push_back(e);
  }
  return entries;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated q-series arithmetic and congruence verification", "qseries"};
  app.require_subcommand(1);

  // expand
  Common expand_fmt;
  std::string spec_text;
  std::size_t expand_order = 20;
  std::optional<std::uint64_t> expand_mod;
  auto* expand = app.add_subcommand("expand", "coefficients of an eta quotient");
  expand->add_option("spec", spec_text, "e.g. \"5^2 2^1 1^-2 10^-1\"")->required();
  expand->add_option("--order", expand_order, "last coefficient index")->capture_default_str();
  expand->add_option("--mod", expand_mod, "reduce coefficients mod m");
  add_format_flags(*expand, expand_fmt);

  // value
  Common value_fmt;
  std::string value_seq;
  std::optional<std::uint64_t> value_ell, value_k;
  std::uint64_t value_n = 0;
  auto* value = app.add_subcommand("value", "one term of a named sequence");
  value->add_option("seq", value_seq, "p, pbar, b, A, r, dstar, sigma3m or chi")->required();
  value->add_option("--ell", value_ell, "ell for b and A");
  value->add_option("--k", value_k, "number of squares for r");
  value->add_option("--n", value_n, "index")->required();
  add_format_flags(*value, value_fmt);

  // verify
  Common verify_fmt;
  std::vector<std::string> verify_ids;
  std::uint64_t bound = 2000;
  std::uint64_t prime_cap = 20;
  std::uint64_t k_cap = 1;
  std::size_t verify_identity_order = kDefaultIdentityOrder;
  auto* verify = app.add_subcommand("verify", "check registry claims");
  verify->add_option("ids", verify_ids, "claim ids, or all")->required();
  verify->add_option("--bound", bound, "largest index checked")->capture_default_str();
  verify->add_option("--prime-cap", prime_cap, "largest prime in families")->capture_default_str();
  verify->add_option("--k-cap", k_cap, "largest exponent step in families")->capture_default_str();
  verify->add_option("--identity-order", verify_identity_order,
                     "order cap for identities (checked at min(bound, cap))")
      ->capture_default_str();
  add_format_flags(*verify, verify_fmt);

  // hunt
  Common hunt_fmt;
  std::string hunt_seq;
  std::optional<std::uint64_t> hunt_ell, hunt_k;
  std::uint64_t hunt_mod = 0;
  std::uint64_t max_step = 10;
  std::uint64_t hunt_bound = 2000;
  std::uint64_t min_instances = 20;
  auto* hunt_cmd = app.add_subcommand("hunt", "search for vanishing progressions");
  hunt_cmd->add_option("seq", hunt_seq, "p, pbar, b, A, r, dstar, sigma3m or chi")->required();
  hunt_cmd->add_option("--ell", hunt_ell, "ell for b and A");
  hunt_cmd->add_option("--k", hunt_k, "number of squares for r");
  hunt_cmd->add_option("--mod", hunt_mod, "modulus")->required();
  hunt_cmd->add_option("--max-step", max_step, "largest a")->capture_default_str();
  hunt_cmd->add_option("--bound", hunt_bound, "largest index checked")->capture_default_str();
  hunt_cmd->add_option("--min-instances", min_instances, "fewest checked values per hit")
      ->capture_default_str();
  add_format_flags(*hunt_cmd, hunt_fmt);

  // identities
  Common id_fmt;
  std::vector<std::string> identity_ids;
  std::size_t identity_order = kDefaultIdentityOrder;
  auto* identities = app.add_subcommand("identities", "check series identities only");
  identities->add_option("ids", identity_ids, "identity ids (default all)");
  identities->add_option("--order", identity_order, "last coefficient compared")
      ->capture_default_str();
  add_format_flags(*identities, id_fmt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*expand) {
      const EtaQuotientSpec spec = parse_eta_spec(spec_text);
      CoefficientRing ring =
          expand_mod ? CoefficientRing::modulo(*expand_mod) : CoefficientRing::integers();
      const Series s = eta_quotient(spec, ring, expand_order);
      switch (expand_fmt.format()) {
        case Format::Json:
          out << series_to_json(s) << '\n';
          break;
        case Format::Csv:
          out << "n,coefficient\n";
          for (std::size_t n = 0; n <= s.order(); ++n) out << n << ',' << s.coefficient(n) << '\n';
          break;
        case Format::Text: {
          Table t{{true, true}, {}};
          for (std::size_t n = 0; n <= s.order(); ++n) {
            t.rows.push_back({std::to_string(n), s.coefficient(n).get_str()});
          }
          t.print(out);
        }
      }
      return kExitOk;
    }

    if (*value) {
      const SequenceRef seq = sequence_from(value_seq, value_ell, value_k);
      const BigInt v = sequence_value(seq, value_n);
      switch (value_fmt.format()) {
        case Format::Json:
          out << "{\"seq\":" << quoted(seq.to_string()) << ",\"n\":" << value_n
              << ",\"value\":" << v.get_str() << "}\n";
          break;
        case Format::Csv:
          out << "n,value\n" << value_n << ',' << v.get_str() << '\n';
          break;
        case Format::Text:
          out << v.get_str() << '\n';
      }
      return kExitOk;
    }

    if (*verify) {
      const auto entries = select_entries(verify_ids, false);
      const std::size_t order =
          std::max<std::size_t>(1, std::min<std::size_t>(bound, verify_identity_order));
      return print_reports(verify_entries(entries, bound, {prime_cap, k_cap}, order),
                           verify_fmt.format(), out);
    }

    if (*identities) {
      const auto entries = select_entries(identity_ids, true);
      return print_reports(verify_entries(entries, identity_order, {}, identity_order),
                           id_fmt.format(), out);
    }

    if (*hunt_cmd) {
      const SequenceRef seq = sequence_from(hunt_seq, hunt_ell, hunt_k);
      const auto hits = hunt(seq, hunt_mod, max_step, hunt_bound, min_instances);
      if (hunt_fmt.format() == Format::Json) {
        for (const auto& h : hits) {
          out << "{\"a\":" << h.a << ",\"b\":" << h.b << ",\"instances\":" << h.instances << "}\n";
        }
      } else if (hunt_fmt.format() == Format::Csv) {
        out << "a,b,instances\n";
        for (const auto& h : hits) out << h.a << ',' << h.b << ',' << h.instances << '\n';
      } else {
        Table t{{true, true, true}, {{"a", "b", "instances"}}};
        for (const auto& h : hits) {
          t.rows.push_back({std::to_string(h.a), std::to_string(h.b), std::to_string(h.instances)});
        }
        t.print(out);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "qseries: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // Parse errors, bad parameters, non-invertible constant terms.
    err << "qseries: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qseries::cli
