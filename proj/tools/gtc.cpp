// Command-line front end: derive, verify, homology, decompose and
// search-quotient over the certificate library. Exit codes are a contract:
// 0 success/valid, 1 verification failure, 2 usage/parse/hypothesis error,
// 3 search exhaustion.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gtc/derive.hpp"
#include "gtc/errors.hpp"
#include "gtc/serialize.hpp"

namespace {

constexpr long long kPretzelCliCap = 64;

struct FamilyOptions {
  long long m = 5;
  long long n = 1;
  std::string r = "5/2";
  long long pretzel_n = 0;
  long long max_degree = 6;
};

void check_pretzel_cap(long long n) {
  if (n < -kPretzelCliCap || n > kPretzelCliCap) {
    throw gtc::HypothesisError("pretzel parameter capped at |n| <= " +
                               std::to_string(kPretzelCliCap) + " on the command line");
  }
}

gtc::Presentation family_presentation(const std::string& family, const FamilyOptions& opt) {
  if (family == "whitehead") {
    return gtc::whitehead_filled(gtc::Slope(opt.m, opt.n));
  }
  if (family == "weeks") {
    return gtc::double_filled(gtc::Slope(opt.m, opt.n), gtc::Slope::parse(opt.r));
  }
  check_pretzel_cap(opt.pretzel_n);
  return gtc::pretzel(opt.pretzel_n);
}

void print_witness_kind(const gtc::GtCertificate& cert) {
  if (const auto* abelian = std::get_if<gtc::AbelianWitness>(&cert.nontriviality)) {
    std::cout << "witness: abelian\n";
    std::cout << "H1: " << abelian->group.str() << "\n";
  } else {
    const auto& quotient = std::get<gtc::QuotientWitness>(cert.nontriviality);
    std::cout << "witness: quotient (degree " << quotient.degree << ")\n";
  }
}

int run_derive(const std::string& family, const FamilyOptions& opt, const std::string& out_path) {
  gtc::CertificateMetadata meta;
  meta.family = family;
  std::optional<gtc::GtCertificate> cert;
  if (family == "whitehead") {
    cert = gtc::whitehead_certificate(opt.m, opt.n);
    meta.m = opt.m;
    meta.n = opt.n;
  } else if (family == "weeks") {
    gtc::Slope r = gtc::Slope::parse(opt.r);
    cert = gtc::filled_quotient_certificate(opt.m, opt.n, r);
    meta.m = opt.m;
    meta.n = opt.n;
    meta.r = r.str();
  } else {
    check_pretzel_cap(opt.pretzel_n);
    if (opt.max_degree < 2) {
      throw gtc::HypothesisError("--max-degree must be >= 2");
    }
    cert = gtc::pretzel_certificate(opt.pretzel_n, static_cast<std::size_t>(opt.max_degree));
    meta.n = opt.pretzel_n;
  }

  std::cout << "family: " << family << "\n";
  std::cout << "generators:";
  for (const auto& g : cert->presentation.generators()) {
    std::cout << " " << g.name;
  }
  std::cout << "\nrelators: " << cert->presentation.relators().size() << "\n";
  std::cout << "element: " << cert->element.str() << "\n";
  std::cout << "conjugators: " << cert->conjugators.size() << "\n";
  print_witness_kind(*cert);
  std::cout << "certificate: VALID\n";

  if (!out_path.empty()) {
    gtc::write_certificate_file(
        out_path, gtc::CertificateDocument{gtc::kFormatVersion, std::move(*cert), meta});
    std::cout << "wrote: " << out_path << "\n";
  }
  return 0;
}

int run_verify(const std::string& path) {
  gtc::CertificateDocument doc = gtc::read_certificate_file(path);
  gtc::VerificationReport report = gtc::verify_certificate(doc.certificate);
  auto line = [](const char* name, bool ok) {
    std::cout << "check " << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
  };
  line("nonempty-product", report.nonempty_product);
  line("start-word", report.start_matches);
  line("identity-proof", report.proof_valid);
  line("witness", report.witness_valid);
  for (const std::string& f : report.failures) {
    std::cout << "  " << f << "\n";
  }
  std::cout << "replayed steps: " << report.replay_steps << "\n";
  std::cout << "certificate: " << (report.valid() ? "VALID" : "INVALID") << "\n";
  return report.valid() ? 0 : 1;
}

int run_homology(const std::string& family, const FamilyOptions& opt) {
  std::cout << gtc::homology(family_presentation(family, opt)).str() << "\n";
  return 0;
}

int run_decompose(const std::string& text) {
  gtc::Word w = gtc::Word::parse(text);
  std::vector<gtc::Word> conjugators = gtc::decompose_commutator(w);
  const gtc::Word a = gtc::Word::parse("a");
  const gtc::Word b = gtc::Word::parse("b");
  const gtc::Word base = gtc::commutator(a, b);
  gtc::Word product;
  for (const gtc::Word& c : conjugators) {
    product = product * gtc::conjugate(base, c);
  }
  if (product != gtc::commutator(a, w)) {
    throw std::logic_error("internal: decomposition identity failed");
  }
  std::cout << "word: " << w.str() << "\n";
  std::cout << "factors: " << conjugators.size() << "\n";
  for (const gtc::Word& c : conjugators) {
    std::cout << "conjugator: " << c.str() << "\n";
  }
  std::cout << "identity: [a," << w.str()
            << "] = product of [a,b] conjugates, verified by free reduction\n";
  return 0;
}

int run_search_quotient(const std::string& family, const FamilyOptions& opt,
                        const std::string& element_text) {
  gtc::Presentation p = family_presentation(family, opt);
  gtc::Word element = gtc::Word::parse(element_text);
  if (opt.max_degree < 2) {
    throw gtc::HypothesisError("--max-degree must be >= 2");
  }
  gtc::SearchStats stats;
  auto witness =
      gtc::find_quotient_witness(p, element, static_cast<std::size_t>(opt.max_degree), &stats);
  std::uint64_t examined = 0;
  for (auto [degree, count] : stats.candidates_per_degree) {
    (void)degree;
    examined += count;
  }
  if (!witness) {
    std::cout << "no quotient witness for " << element.str() << " up to degree " << opt.max_degree
              << " (" << examined << " candidates examined)\n";
    return 3;
  }
  std::cout << "degree: " << witness->degree << "\n";
  for (const auto& [gen, perm] : witness->images) {
    std::cout << gen.name << " ->";
    for (int v : perm.images()) {
      std::cout << " " << v + 1;
    }
    std::cout << "\n";
  }
  std::cout << "candidates examined: " << examined << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and verify generalized-torsion certificates for Dehn fillings of the "
               "Whitehead link exterior and for pretzel link groups"};
  app.require_subcommand(1);

  FamilyOptions opt;
  std::string out_path;
  std::string verify_path;
  std::string decompose_text;
  std::string element_text = "ABab";
  std::string chosen_family;

  auto add_family = [&](CLI::App* parent, bool with_out) {
    for (const char* family : {"whitehead", "weeks", "pretzel"}) {
      CLI::App* sub = parent->add_subcommand(family);
      if (family == std::string("pretzel")) {
        sub->add_option("--n", opt.pretzel_n, "number of half-twist pairs in the last band")
            ->required();
        sub->add_option("--max-degree", opt.max_degree,
                        "largest symmetric-group degree searched for a witness");
      } else {
        bool is_weeks = family == std::string("weeks");
        auto* m_option = sub->add_option("--m", opt.m, "slope numerator");
        sub->add_option("--n", opt.n, "slope denominator");
        if (is_weeks) {
          sub->add_option("--r", opt.r, "second filling slope, written p/q");
        } else {
          m_option->required();
        }
      }
      if (with_out) {
        sub->add_option("--out", out_path, "write the certificate document here");
      }
      sub->callback([&chosen_family, family] { chosen_family = family; });
    }
    parent->require_subcommand(1);
  };

  CLI::App* derive = app.add_subcommand("derive", "derive a certificate for a known family");
  add_family(derive, true);

  CLI::App* verify = app.add_subcommand("verify", "verify a certificate document");
  verify->add_option("path", verify_path, "certificate file")->required();

  CLI::App* homology = app.add_subcommand("homology", "print the first homology of a family");
  add_family(homology, false);

  CLI::App* decompose =
      app.add_subcommand("decompose", "decompose [a,w] into conjugates of [a,b]");
  decompose->add_option("word", decompose_text, "word over A and b, e.g. \"b A b b b A b\"")
      ->required();

  CLI::App* search =
      app.add_subcommand("search-quotient", "search for a finite permutation quotient witness");
  add_family(search, false);
  search->add_option("--element", element_text, "element whose image must be non-trivial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (derive->parsed()) {
      return run_derive(chosen_family, opt, out_path);
    }
    if (verify->parsed()) {
      return run_verify(verify_path);
    }
    if (homology->parsed()) {
      return run_homology(chosen_family, opt);
    }
    if (decompose->parsed()) {
      return run_decompose(decompose_text);
    }
    return run_search_quotient(chosen_family, opt, element_text);
  } catch (const gtc::SearchExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const gtc::HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gtc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
