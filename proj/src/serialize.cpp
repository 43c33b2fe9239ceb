#include "gtc/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "gtc/errors.hpp"

namespace gtc {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return *it;
}

long long as_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string(what) + ": expected an integer");
  }
  return j.get<long long>();
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) {
    throw ParseError(std::string(what) + ": expected a string");
  }
  return j.get<std::string>();
}

json word_to_json(const Word& w, const Presentation& p) {
  json arr = json::array();
  for (const Letter& l : w.letters()) {
    auto idx = p.generator_index(l.gen);
    if (!idx) {
      throw std::invalid_argument("cannot serialize a word using generator '" + l.gen.name +
                                  "' outside the presentation");
    }
    arr.push_back(static_cast<long long>(*idx + 1) * l.sign);
  }
  return arr;
}

Word word_from_json(const json& j, const Presentation& p, const char* what) {
  if (!j.is_array()) {
    throw ParseError(std::string(what) + ": expected an array of signed letter indices");
  }
  std::vector<Letter> raw;
  raw.reserve(j.size());
  for (const json& e : j) {
    long long v = as_integer(e, what);
    long long mag = v < 0 ? -v : v;
    if (v == 0 || mag > static_cast<long long>(p.generators().size())) {
      throw ParseError(std::string(what) + ": letter index " + std::to_string(v) +
                       " out of range");
    }
    raw.push_back(Letter{p.generators()[static_cast<std::size_t>(mag - 1)], v > 0 ? +1 : -1});
  }
  return Word(std::move(raw));
}

json big_to_json(const Int& v) { return v.str(); }

Int big_from_json(const json& j, const char* what) {
  std::string s = as_string(j, what);
  if (s.empty() || (s[0] == '-' && s.size() == 1)) {
    throw ParseError(std::string(what) + ": malformed integer literal");
  }
  for (std::size_t i = (s[0] == '-') ? 1 : 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw ParseError(std::string(what) + ": malformed integer literal '" + s + "'");
    }
  }
  return Int(s);
}

json big_vector_to_json(const std::vector<Int>& v) {
  json arr = json::array();
  for (const Int& x : v) {
    arr.push_back(big_to_json(x));
  }
  return arr;
}

std::vector<Int> big_vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) {
    throw ParseError(std::string(what) + ": expected an array");
  }
  std::vector<Int> out;
  out.reserve(j.size());
  for (const json& e : j) {
    out.push_back(big_from_json(e, what));
  }
  return out;
}

json witness_to_json(const NontrivialityWitness& w) {
  json out;
  if (const auto* abelian = std::get_if<AbelianWitness>(&w)) {
    out["kind"] = "abelian";
    out["group"]["free_rank"] = abelian->group.free_rank;
    out["group"]["torsion"] = big_vector_to_json(abelian->group.torsion);
    out["image"]["free"] = big_vector_to_json(abelian->image.free_coords);
    out["image"]["torsion"] = big_vector_to_json(abelian->image.torsion_coords);
    return out;
  }
  const auto& quotient = std::get<QuotientWitness>(w);
  out["kind"] = "quotient";
  out["degree"] = quotient.degree;
  json images = json::object();
  for (const auto& [gen, perm] : quotient.images) {
    json line = json::array();
    for (int v : perm.images()) {
      line.push_back(v + 1); // one-based on disk
    }
    images[gen.name] = line;
  }
  out["images"] = images;
  return out;
}

NontrivialityWitness witness_from_json(const json& j, const Presentation& p) {
  std::string kind = as_string(field(j, "kind"), "witness.kind");
  if (kind == "abelian") {
    AbelianWitness w;
    const json& group = field(j, "group");
    long long rank = as_integer(field(group, "free_rank"), "witness.group.free_rank");
    if (rank < 0) {
      throw ParseError("witness.group.free_rank: must be non-negative");
    }
    w.group.free_rank = static_cast<std::size_t>(rank);
    w.group.torsion = big_vector_from_json(field(group, "torsion"), "witness.group.torsion");
    const json& image = field(j, "image");
    w.image.free_coords = big_vector_from_json(field(image, "free"), "witness.image.free");
    w.image.torsion_coords = big_vector_from_json(field(image, "torsion"), "witness.image.torsion");
    return w;
  }
  if (kind == "quotient") {
    QuotientWitness w;
    long long degree = as_integer(field(j, "degree"), "witness.degree");
    if (degree < 1) {
      throw ParseError("witness.degree: must be >= 1");
    }
    w.degree = static_cast<std::size_t>(degree);
    const json& images = field(j, "images");
    if (!images.is_object()) {
      throw ParseError("witness.images: expected an object");
    }
    for (auto it = images.begin(); it != images.end(); ++it) {
      Generator gen{it.key()};
      if (!p.generator_index(gen)) {
        throw ParseError("witness.images: unknown generator '" + it.key() + "'");
      }
      if (!it.value().is_array() || it.value().size() != w.degree) {
        throw ParseError("witness.images: permutation for '" + it.key() +
                         "' does not match the degree");
      }
      std::vector<int> line;
      line.reserve(w.degree);
      for (const json& e : it.value()) {
        line.push_back(static_cast<int>(as_integer(e, "witness.images")) - 1);
      }
      try {
        w.images.emplace(std::move(gen), Permutation(std::move(line)));
      } catch (const std::invalid_argument& e) {
        throw ParseError("witness.images: " + std::string(e.what()));
      }
    }
    return w;
  }
  throw ParseError("witness.kind: expected 'abelian' or 'quotient'");
}

} // namespace

std::string serialize_certificate(const CertificateDocument& doc) {
  const Presentation& p = doc.certificate.presentation;
  json j;
  j["format_version"] = doc.format_version;

  json generators = json::array();
  for (const Generator& g : p.generators()) {
    generators.push_back(g.name);
  }
  json relators = json::array();
  for (const Word& r : p.relators()) {
    relators.push_back(word_to_json(r, p));
  }
  j["presentation"]["generators"] = generators;
  j["presentation"]["relators"] = relators;

  j["element"] = word_to_json(doc.certificate.element, p);
  json conjugators = json::array();
  for (const Word& c : doc.certificate.conjugators) {
    conjugators.push_back(word_to_json(c, p));
  }
  j["conjugators"] = conjugators;

  j["proof"]["start"] = word_to_json(doc.certificate.triviality.start, p);
  json steps = json::array();
  for (const ProofStep& s : doc.certificate.triviality.steps) {
    json step;
    step["position"] = s.position;
    step["relator"] = s.relator_index;
    step["sign"] = s.sign;
    step["conjugator"] = word_to_json(s.conjugator, p);
    steps.push_back(step);
  }
  j["proof"]["steps"] = steps;

  j["witness"] = witness_to_json(doc.certificate.nontriviality);

  json meta;
  meta["family"] = doc.metadata.family;
  if (doc.metadata.m) {
    meta["m"] = *doc.metadata.m;
  }
  if (doc.metadata.n) {
    meta["n"] = *doc.metadata.n;
  }
  if (doc.metadata.r) {
    meta["r"] = *doc.metadata.r;
  }
  meta["tool_version"] = doc.metadata.tool_version;
  j["metadata"] = meta;

  return j.dump(2) + "\n";
}

CertificateDocument parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ParseError("certificate document must be a JSON object");
  }

  int version = static_cast<int>(as_integer(field(j, "format_version"), "format_version"));
  if (version != kFormatVersion) {
    throw ParseError("unsupported format_version " + std::to_string(version));
  }

  const json& jp = field(j, "presentation");
  const json& jgens = field(jp, "generators");
  if (!jgens.is_array() || jgens.empty()) {
    throw ParseError("presentation.generators: expected a non-empty array");
  }
  std::vector<Generator> generators;
  for (const json& e : jgens) {
    generators.push_back(Generator{as_string(e, "presentation.generators")});
  }
  // Build a relator-free shell first so letter arrays can be resolved.
  Presentation shell = [&] {
    try {
      return Presentation(generators, {});
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("presentation: ") + e.what());
    }
  }();

  const json& jrels = field(jp, "relators");
  if (!jrels.is_array()) {
    throw ParseError("presentation.relators: expected an array");
  }
  std::vector<Word> relators;
  for (const json& e : jrels) {
    relators.push_back(word_from_json(e, shell, "presentation.relators"));
  }
  Presentation presentation = [&] {
    try {
      return Presentation(std::move(generators), std::move(relators));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("presentation: ") + e.what());
    }
  }();

  Word element = word_from_json(field(j, "element"), presentation, "element");

  const json& jconj = field(j, "conjugators");
  if (!jconj.is_array()) {
    throw ParseError("conjugators: expected an array");
  }
  std::vector<Word> conjugators;
  for (const json& e : jconj) {
    conjugators.push_back(word_from_json(e, presentation, "conjugators"));
  }

  const json& jproof = field(j, "proof");
  IdentityProof proof;
  proof.start = word_from_json(field(jproof, "start"), presentation, "proof.start");
  const json& jsteps = field(jproof, "steps");
  if (!jsteps.is_array()) {
    throw ParseError("proof.steps: expected an array");
  }
  for (const json& e : jsteps) {
    ProofStep step;
    long long position = as_integer(field(e, "position"), "proof.steps.position");
    long long relator = as_integer(field(e, "relator"), "proof.steps.relator");
    if (position < 0 || relator < 0) {
      throw ParseError("proof.steps: position and relator must be non-negative");
    }
    step.position = static_cast<std::size_t>(position);
    step.relator_index = static_cast<std::size_t>(relator);
    step.sign = static_cast<int>(as_integer(field(e, "sign"), "proof.steps.sign"));
    if (step.sign != 1 && step.sign != -1) {
      throw ParseError("proof.steps.sign: must be 1 or -1");
    }
    step.conjugator = word_from_json(field(e, "conjugator"), presentation, "proof.steps.conjugator");
    proof.steps.push_back(std::move(step));
  }

  NontrivialityWitness witness = witness_from_json(field(j, "witness"), presentation);

  const json& jmeta = field(j, "metadata");
  CertificateMetadata metadata;
  metadata.family = as_string(field(jmeta, "family"), "metadata.family");
  if (jmeta.contains("m")) {
    metadata.m = as_integer(jmeta["m"], "metadata.m");
  }
  if (jmeta.contains("n")) {
    metadata.n = as_integer(jmeta["n"], "metadata.n");
  }
  if (jmeta.contains("r")) {
    metadata.r = as_string(jmeta["r"], "metadata.r");
  }
  metadata.tool_version = as_string(field(jmeta, "tool_version"), "metadata.tool_version");

  GtCertificate certificate{std::move(presentation), std::move(element), std::move(conjugators),
                            std::move(proof), std::move(witness)};
  return CertificateDocument{version, std::move(certificate), std::move(metadata)};
}

void write_certificate_file(const std::string& path, const CertificateDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << serialize_certificate(doc);
  if (!out) {
    throw std::runtime_error("failed to write '" + path + "'");
  }
}

CertificateDocument read_certificate_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_certificate(buffer.str());
}

} // namespace gtc
