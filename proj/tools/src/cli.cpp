#include "cli.hpp"

#include "ainfty/cohomology.hpp"
#include "ainfty/corpus.hpp"
#include "ainfty/errors.hpp"
#include "ainfty/hodge.hpp"
#include "ainfty/io.hpp"
#include "ainfty/transfer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace ainfty::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputFailure = 2;

/// A path to a DGA, complex or Lie file; failing that, a corpus entry name.
DGA load_input(const std::string& arg, bool validate = true) {
  if (std::filesystem::exists(arg)) return load_dga(read_file(arg), validate);
  if (find_corpus_entry(arg)) return load_dga(corpus_file(arg), validate);
  throw ParseError("cannot read '" + arg + "' (not a file or corpus entry)");
}

ordered_json terms_json(const GradedVectorSpace& space, const Element& e) {
  ordered_json terms = ordered_json::array();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (sgn(e[i]) != 0) terms.push_back({{"basis", space.label(i)}, {"coeff", to_string(e[i])}});
  return terms;
}

std::string tuple_text(const GradedVectorSpace& space, const std::vector<std::size_t>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + space.label(t[i]);
  return s;
}

std::string join(const std::vector<std::size_t>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

Report to_report(const ValidationReport& v) {
  Report r{"dga_axioms", {}};
  for (const auto& a : v.axioms) {
    CheckResult c{a.axiom, a.passed, {}, {}};
    if (!a.passed) c.witnesses.push_back(a.witness);
    r.add(std::move(c));
  }
  return r;
}

void print_report(std::ostream& out, const Report& r, const std::string& format) {
  out << (format == "json" ? r.to_json() : r.to_text());
}

int cmd_check(const std::string& path, const std::string& format, std::ostream& out) {
  const DGA dga = load_input(path, false);
  const Report report = to_report(validate_dga(dga));
  print_report(out, report, format);
  return report.passed() ? kOk : kMathFailure;
}

int cmd_cohomology(const std::string& path, const std::string& format, std::ostream& out) {
  const DGA dga = load_input(path);
  const CohomologyRing ring = cohomology_ring(dga);
  const HodgeData h = build_hodge(dga);
  const auto betti = ring.betti_numbers();
  const auto harmonic = h.harmonic_dims();
  const bool agree = betti == harmonic;

  std::vector<std::tuple<std::size_t, std::size_t, Element>> products;
  for (std::size_t i = 0; i < ring.space.total_dim(); ++i)
    for (std::size_t j = 0; j < ring.space.total_dim(); ++j) {
      Element p = ring.product.get(i, j);
      if (!p.is_zero()) products.emplace_back(i, j, std::move(p));
    }

  if (format == "json") {
    ordered_json doc;
    doc["betti"] = betti;
    doc["harmonic_dims"] = harmonic;
    doc["agree"] = agree;
    ordered_json reps = ordered_json::object();
    for (std::size_t i = 0; i < ring.representatives.size(); ++i)
      reps[ring.space.label(i)] = terms_json(dga.space, ring.representatives[i]);
    doc["representatives"] = reps;
    ordered_json prod = ordered_json::array();
    for (const auto& [i, j, p] : products)
      prod.push_back({{"left", ring.space.label(i)}, {"right", ring.space.label(j)}, {"result", terms_json(ring.space, p)}});
    doc["products"] = prod;
    out << doc.dump(2) << "\n";
  } else {
    out << "degree  dim  betti  harmonic\n";
    for (int n = 0; n <= dga.space.top(); ++n)
      out << std::left << std::setw(8) << n << std::setw(5) << dga.space.dim(n) << std::setw(7)
          << betti[static_cast<std::size_t>(n)] << harmonic[static_cast<std::size_t>(n)] << "\n";
    out << "betti (" << join(betti, ",") << ")" << (agree ? "" : " DISAGREES with harmonic dims") << "\n";
    out << "representatives:\n";
    for (std::size_t i = 0; i < ring.representatives.size(); ++i)
      out << "  " << ring.space.label(i) << " = " << format_element(dga.space, ring.representatives[i]) << "\n";
    out << "products:\n";
    for (const auto& [i, j, p] : products)
      out << "  " << ring.space.label(i) << " * " << ring.space.label(j) << " = " << format_element(ring.space, p)
          << "\n";
  }
  return agree ? kOk : kMathFailure;
}

SignVariant parse_variant(const std::string& v) {
  return v == "uniform" ? SignVariant::uniform : SignVariant::printed;
}

void print_structure(std::ostream& out, const AInfinityStructure& s, const std::string& format) {
  const GradedVectorSpace& ambient = s.hodge->space();
  if (format == "json") {
    ordered_json doc;
    doc["max_arity"] = s.max_arity;
    doc["sign_variant"] = to_string(s.variant);
    doc["harmonic_dims"] = s.space.dims();
    ordered_json basis = ordered_json::object();
    for (int n = 0; n <= s.space.top(); ++n) basis[std::to_string(n)] = s.space.labels(n);
    doc["harmonic_basis"] = basis;
    ordered_json vectors = ordered_json::object();
    for (std::size_t i = 0; i < s.dim(); ++i) vectors[s.space.label(i)] = terms_json(ambient, s.harmonic[i]);
    doc["harmonic_vectors"] = vectors;
    ordered_json tables = ordered_json::object();
    for (std::size_t k = 2; k <= s.max_arity; ++k) {
      ordered_json entries = ordered_json::array();
      for (const auto& [tuple, value] : s.tables[k]) {
        std::vector<std::string> inputs;
        for (auto i : tuple) inputs.push_back(s.space.label(i));
        entries.push_back({{"inputs", inputs}, {"output", terms_json(s.space, Element(value))}});
      }
      tables[std::to_string(k)] = entries;
    }
    doc["tables"] = tables;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "harmonic basis (dims " << join(s.space.dims(), ",") << "; sign variant " << to_string(s.variant)
      << "; max arity " << s.max_arity << ")\n";
  for (std::size_t i = 0; i < s.dim(); ++i)
    out << "  " << s.space.label(i) << " [" << s.degrees[i] << "] = " << format_element(ambient, s.harmonic[i])
        << "\n";
  for (std::size_t k = 2; k <= s.max_arity; ++k) {
    out << "m" << k << ": " << s.tables[k].size() << " nonzero entries\n";
    for (const auto& [tuple, value] : s.tables[k])
      out << "  m" << k << "(" << tuple_text(s.space, tuple) << ") = " << format_element(s.space, Element(value))
          << "\n";
  }
}

int cmd_transfer(const std::string& path, const TransferOptions& options, const std::string& format,
                 std::ostream& out) {
  const auto h = std::make_shared<const HodgeData>(build_hodge(load_input(path)));
  print_structure(out, transfer_structure(h, options), format);
  return kOk;
}

int cmd_stasheff(const std::string& path, const TransferOptions& options, const std::string& format,
                 std::ostream& out) {
  const auto h = std::make_shared<const HodgeData>(build_hodge(load_input(path)));
  const AInfinityStructure s = transfer_structure(h, options);
  Report report{"stasheff", {}};
  for (std::size_t n = 1; n <= options.max_arity; ++n)
    for (auto& r : stasheff_check(s, n).results) report.add(std::move(r));
  print_report(out, report, format);
  return report.passed() ? kOk : kMathFailure;
}

/// "0", or comma-separated terms "label" / "coeff*label".
Element parse_argument(const GradedVectorSpace& space, const std::string& text) {
  Element e(space.total_dim());
  if (text == "0") return e;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, ',')) {
    const auto star = term.find('*');
    const std::string label = star == std::string::npos ? term : term.substr(star + 1);
    Rational c = 1;
    try {
      if (star != std::string::npos) c = parse_rational(term.substr(0, star));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad coefficient in '" + term + "'");
    }
    const auto idx = space.index_of(label);
    if (!idx) throw ParseError("unknown basis label '" + label + "'");
    e[*idx] += c;
  }
  return e;
}

int cmd_massey(const std::string& path, const std::array<std::string, 3>& names, std::ostream& out,
               std::ostream& err) {
  const auto h = std::make_shared<const HodgeData>(build_hodge(load_input(path)));
  const auto& space = h->space();
  std::array<Element, 3> args;
  for (std::size_t i = 0; i < 3; ++i) args[i] = parse_argument(space, names[i]);

  const std::string triple = "<" + names[0] + ", " + names[1] + ", " + names[2] + ">";
  MasseyProduct mp;
  try {
    mp = massey_triple(*h, args[0], args[1], args[2]);
  } catch (const NotDefined& e) {
    err << triple << " is not defined: " << e.what() << "\n";
    return kMathFailure;
  }
  const AInfinityStructure s = transfer_structure(h, {3, 1, SignVariant::printed});
  const HarmonicCoordinates coords(*h);
  const std::array<Vector, 3> c{coords(args[0]), coords(args[1]), coords(args[2])};
  const Element m3 = s.to_ambient(s.m(std::span<const Vector>(c)));

  const bool plus = in_span(m3 - mp.representative, mp.indeterminacy);
  const bool minus = in_span(m3 + mp.representative, mp.indeterminacy);
  out << triple << ": defined; indeterminacy dim " << mp.indeterminacy_dim << "\n";
  out << "massey representative: " << format_element(space, mp.representative) << "\n";
  out << "m3 = " << format_element(space, m3) << "\n";
  if (plus && minus)
    out << "m3 matches +Massey and -Massey\n";
  else if (plus || minus)
    out << "m3 matches " << (plus ? "+" : "-") << "Massey\n";
  else
    out << "m3 does not match +-Massey modulo indeterminacy\n";
  return plus || minus ? kOk : kMathFailure;
}

int cmd_corpus_list(std::ostream& out) {
  std::size_t width = 0;
  for (const auto& e : corpus()) width = std::max(width, e.name.size());
  for (const auto& e : corpus()) out << std::left << std::setw(static_cast<int>(width + 2)) << e.name << e.description << "\n";
  return kOk;
}

int cmd_corpus_emit(const std::string& name, const std::string& path, std::ostream& err) {
  if (!find_corpus_entry(name)) {
    err << "unknown corpus entry '" << name << "'\n";
    return kMathFailure;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << corpus_file(name))) {
    err << "cannot write '" << path << "'\n";
    return kInputFailure;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hodge decomposition and transferred A-infinity structures of finite DGAs", "ainfty"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "table";
  std::size_t max_arity = 4;
  std::size_t threads = 1;
  std::string variant = "printed";
  std::array<std::string, 3> massey_args;
  std::string corpus_name;
  std::string corpus_path;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", path, "DGA, simplicial complex or Lie structure file, or a corpus entry name")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_transfer = [&](CLI::App* sub) {
    sub->add_option("--max-arity", max_arity, "Largest k for which m_k is computed")->check(CLI::Range(2, 16));
    sub->add_option("--threads", threads, "Worker threads for the m_k tables")->check(CLI::Range(1, 256));
    sub->add_option("--variant", variant, "Sign layout of the lambda recursion")
        ->check(CLI::IsMember({"printed", "uniform"}));
  };

  auto* check = app.add_subcommand("check", "Validate the DGA axioms");
  add_input(check);
  add_format(check);
  auto* cohomology = app.add_subcommand("cohomology", "Betti numbers (quotient and harmonic) and the cohomology ring");
  add_input(cohomology);
  add_format(cohomology);
  auto* transfer = app.add_subcommand("transfer", "Transferred A-infinity structure on the harmonic space");
  add_input(transfer);
  add_format(transfer);
  add_transfer(transfer);
  auto* stasheff = app.add_subcommand("stasheff", "Check the Stasheff identities up to the given arity");
  add_input(stasheff);
  add_format(stasheff);
  add_transfer(stasheff);
  auto* massey = app.add_subcommand("massey", "Compare m3 with the Massey triple product");
  add_input(massey);
  massey->add_option("a", massey_args[0], "Harmonic element: 0, or terms label / coeff*label joined by commas")->required();
  massey->add_option("b", massey_args[1])->required();
  massey->add_option("c", massey_args[2])->required();
  auto* corpus_cmd = app.add_subcommand("corpus", "The built-in example corpus");
  corpus_cmd->require_subcommand(1);
  auto* list = corpus_cmd->add_subcommand("list", "List entries");
  auto* emit = corpus_cmd->add_subcommand("emit", "Write an entry's file");
  emit->add_option("name", corpus_name)->required();
  emit->add_option("path", corpus_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInputFailure;
  }

  const TransferOptions options{max_arity, threads, parse_variant(variant)};
  try {
    if (check->parsed()) return cmd_check(path, format, out);
    if (cohomology->parsed()) return cmd_cohomology(path, format, out);
    if (transfer->parsed()) return cmd_transfer(path, options, format, out);
    if (stasheff->parsed()) return cmd_stasheff(path, options, format, out);
    if (massey->parsed()) return cmd_massey(path, massey_args, out, err);
    if (list->parsed()) return cmd_corpus_list(out);
    if (emit->parsed()) return cmd_corpus_emit(corpus_name, corpus_path, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  }
  return kInputFailure;
}

}  // namespace ainfty::cli
