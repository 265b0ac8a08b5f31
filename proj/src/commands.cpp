// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include "invogen/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "invogen/json_io.hpp"
#include "invogen/synthesis.hpp"

namespace invogen::cli {

namespace {

int exit_code_for(const error& e) {
  switch (e.code()) {
    case errc::symplectic_rank2_obstruction:
      return exit_obstruction;
    case errc::parse_error:
    case errc::invalid_argument:
    case errc::shape_mismatch:
    case errc::size_mismatch:
    case errc::not_a_permutation:
    case errc::axiom_failure:
    case errc::neither_symmetric_nor_skew:
    case errc::not_proportional:
    case errc::not_inner:
    case errc::odd_dimension:
    case errc::zero_entry:
    case errc::not_symmetric:
    case errc::not_skew:
      return exit_bad_input;
    default:
      return exit_numeric;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::parse_error, "cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(errc::invalid_argument, "cannot write file: " + path);
  out << content;
  if (!out) raise(errc::invalid_argument, "write failed: " + path);
}

std::string format_blocks(const algebra_shape& shape) {
  std::string s = "[";
  for (size_t i = 0; i < shape.blocks.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(shape.blocks[i]);
  }
  return s + "]";
}

std::string format_dims(const std::vector<int>& dims) {
  std::string s = "[";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(dims[i]);
  }
  return s + "]";
}

certificate_document make_certificate(const algebra_document& doc,
                                      const synthesis_result& result,
                                      std::uint64_t seed) {
  certificate_document cert;
  cert.input_digest = document_digest(doc);
  cert.seed = seed;
  cert.shape = doc.shape;
  cert.element = result.element.parts;
  cert.closure_dims = result.certificate.closure.dims;
  cert.rounds = result.certificate.closure.rounds;
  cert.invertibility_margin = result.certificate.invertibility_margin;
  cert.involution_residual = result.certificate.involution_residual;
  cert.pass = result.certificate.certified;
  return cert;
}

}  // namespace

int cmd_verify(const std::string& input_path, std::ostream& out,
               std::ostream& err) {
  try {
    const algebra_document doc = parse_algebra_document(read_file(input_path));
    const tolerance tol;
    const involution_report rep =
        verify_involution(doc.involution, doc.shape, tol);
    const orbit_pairing pairing =
        pair_orbits(doc.involution, doc.shape, tol);

    out << "input: " << input_path << " (" << document_digest(doc) << ")\n";
    out << "blocks: " << format_blocks(doc.shape) << "\n";
    out << "orbits:";
    for (const auto& o : pairing.orbits) {
      if (o.is_pair())
        out << " swap(" << o.i << "," << *o.j << ")";
      else
        out << " fixed(" << o.i << ")";
    }
    out << "\n";
    out << "linear residual:              " << rep.linear_residual << "\n";
    out << "anti multiplicative residual: " << rep.anti_multiplicative_residual
        << "\n";
    out << "involutive residual:          " << rep.involutive_residual << "\n";
    out << "unital residual:              " << rep.unital_residual << "\n";
    out << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
    if (!rep.pass) return exit_bad_input;
    return exit_ok;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_synthesize(const synthesize_options& opts, std::ostream& out,
                   std::ostream& err) {
  try {
    const algebra_document doc =
        parse_algebra_document(read_file(opts.input_path));
    std::uint64_t seed = 1;
    if (doc.seed.has_value()) seed = *doc.seed;
    if (opts.seed.has_value()) seed = *opts.seed;
    synthesis_config cfg = synthesis_config::defaults(seed);
    if (opts.retry_budget.has_value()) cfg.retry_budget = *opts.retry_budget;

    const synthesis_result result =
        synthesize_generator(doc.shape, doc.involution, cfg);
    const certificate_document cert = make_certificate(doc, result, seed);
    const std::string text = serialize_certificate_document(cert);

    std::ostream& note = opts.output_path.has_value() ? out : err;
    note << "input: " << opts.input_path << " (" << cert.input_digest << ")\n";
    note << "blocks: " << format_blocks(doc.shape) << ", seed: " << seed << "\n";
    note << "closure dims: " << format_dims(cert.closure_dims) << "\n";
    note << "invertibility margin: " << cert.invertibility_margin << "\n";
    note << "verdict: " << (cert.pass ? "pass" : "fail") << "\n";
    if (opts.output_path.has_value()) {
      write_file(*opts.output_path, text);
      note << "certificate: " << *opts.output_path << "\n";
    } else {
      out << text;
    }
    return cert.pass ? exit_ok : exit_not_certified;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_certify(const std::string& input_path,
                const std::string& certificate_path, std::ostream& out,
                std::ostream& err) {
  try {
    const algebra_document doc = parse_algebra_document(read_file(input_path));
    const certificate_document cert =
        parse_certificate_document(read_file(certificate_path));
    if (!(cert.shape == doc.shape))
      raise(errc::shape_mismatch,
            "certificate blocks differ from the algebra blocks");
    const std::string digest = document_digest(doc);
    if (!cert.input_digest.empty() && cert.input_digest != digest)
      raise(errc::parse_error, "certificate was produced for digest " +
                                   cert.input_digest + ", input has " + digest);

    const tolerance tol;
    const algebra_element a = element_from_certificate(cert);
    const generation_certificate fresh =
        certify_generation(doc.shape, doc.involution, a, tol);

    out << "input: " << input_path << " (" << digest << ")\n";
    out << "closure dims: " << format_dims(fresh.closure.dims) << "\n";
    if (!cert.closure_dims.empty())
      out << "stored dims match: "
          << (cert.closure_dims == fresh.closure.dims ? "yes" : "no") << "\n";
    out << "invertibility margin: " << fresh.invertibility_margin
        << " (threshold " << fresh.invertibility_threshold << ")\n";
    out << "involution residual: " << fresh.involution_residual << "\n";
    out << "verdict: " << (fresh.certified ? "pass" : "fail") << "\n";
    return fresh.certified ? exit_ok : exit_not_certified;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_demo_counterexample(int n, std::uint64_t seed, std::ostream& out,
                            std::ostream& err) {
  try {
    if (n < 2 || n > 12)
      raise(errc::invalid_argument, "demo size must be between 2 and 12");
    const tolerance tol;
    const algebra_shape shape{{n}};
    const algebra_element a = random_element(shape, seed);
    const closure_report cl = span_closure(shape, {a}, tol);
    const polynomial mp = minimal_polynomial(a.parts[0], tol);

    double commut = 0.0;
    for (Eigen::Index i = 0; i < cl.basis.cols(); ++i)
      for (Eigen::Index j = i + 1; j < cl.basis.cols(); ++j) {
        const matrix x = devectorize(shape, cl.basis.col(i)).parts[0];
        const matrix y = devectorize(shape, cl.basis.col(j)).parts[0];
        commut = std::max(commut, (x * y - y * x).norm());
      }

    out << "assumption: the subobject generated by a single element is, at "
           "this level, the non-unital polynomial algebra it generates; the "
           "check below runs at the matrix level.\n";
    out << "matrix size: " << n << ", seed: " << seed << "\n";
    out << "closure dims of {a}: " << format_dims(cl.dims) << "\n";
    out << "minimal polynomial degree: " << mp.degree() << "\n";
    out << "algebra generated by a alone: dimension " << cl.final_dim
        << " of " << n * n << " (commutative, commutator residual " << commut
        << ")\n";
    out << "a single element can never generate the full matrix algebra for "
           "size >= 2; a second generator such as the involution image is "
           "essential.\n";
    if (cl.final_dim > n)
      raise(errc::numeric_failure, "single-element closure exceeded the "
                                   "degree bound");
    if (commut > tol.residual_rel * 100)
      raise(errc::numeric_failure, "single-element closure failed the "
                                   "commutativity check");
    return exit_ok;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_demo_tensor(int d, std::uint64_t seed, std::ostream& out,
                    std::ostream& err) {
  try {
    if (d < 2 || d > 4)
      raise(errc::invalid_argument, "tensor demo dimension must be 2, 3 or 4");
    const int n = d * d;
    // The flip that exchanges the two tensor factors of C^d (x) C^d,
    // F e_{i d + j} = e_{j d + i}; conjugating the transpose by it gives
    // the involution sending x (x) y to y^T (x) x^T.
    matrix f = matrix::Zero(n, n);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) f(j * d + i, i * d + j) = cxd(1.0);

    algebra_document doc;
    doc.shape = algebra_shape{{n}};
    doc.involution =
        involution_spec::from_orbits({fixed_orbit_spec{0, f}});
    doc.name = "tensor-flip-" + std::to_string(d);

    const synthesis_config cfg = synthesis_config::defaults(seed);
    const synthesis_result result =
        synthesize_generator(doc.shape, doc.involution, cfg);

    out << "algebra: full matrix algebra on C^" << d << " (x) C^" << d
        << ", involution x (x) y -> y^T (x) x^T\n";
    out << "involution type: "
        << block_involution_type_name(result.normalization.orbits[0].type)
        << "\n";
    out << "closure dims: " << format_dims(result.certificate.closure.dims)
        << "\n";
    out << "final dimension: " << result.certificate.closure.final_dim
        << " of " << n * n << "\n";
    out << "verdict: " << (result.certificate.certified ? "pass" : "fail")
        << "\n";
    return result.certificate.certified ? exit_ok : exit_not_certified;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"generator synthesis for block matrix algebras with an "
               "involutive anti-automorphism"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(0, 1);

  std::string verify_input;
  auto* verify = app.add_subcommand(
      "verify", "check the involution axioms of an algebra document");
  verify->add_option("input", verify_input, "algebra document (JSON)")
      ->required();

  synthesize_options sopts;
  std::uint64_t ssee = 0;
  int sretries = 0;
  std::string sout;
  auto* synth = app.add_subcommand(
      "synthesize", "produce one element that generates together with its "
                    "involution image, with a certificate");
  synth->add_option("input", sopts.input_path, "algebra document (JSON)")
      ->required();
  auto* seed_opt =
      synth->add_option("--seed", ssee, "sampling seed (default 1, or the "
                                        "document metadata seed)");
  auto* retry_opt =
      synth->add_option("--retries", sretries, "sampling retry budget")
          ->check(CLI::PositiveNumber);
  synth->add_option("--out", sout, "write the certificate to this file");

  std::string cert_input, cert_path;
  auto* certify = app.add_subcommand(
      "certify", "replay the generation check of a certificate");
  certify->add_option("input", cert_input, "algebra document (JSON)")
      ->required();
  certify->add_option("certificate", cert_path, "certificate document (JSON)")
      ->required();

  int demo_n = 4;
  std::uint64_t demo_seed = 1;
  auto* counter = app.add_subcommand(
      "demo-counterexample",
      "show that a single element generates only a commutative algebra");
  counter->add_option("--size", demo_n, "matrix size (default 4)");
  counter->add_option("--seed", demo_seed, "sampling seed");

  int tensor_d = 2;
  std::uint64_t tensor_seed = 1;
  auto* tensor = app.add_subcommand(
      "demo-tensor", "synthesize a generator for the tensor square with the "
                     "factor flip involution");
  tensor->add_option("--dim", tensor_d, "tensor factor dimension (2 to 4)");
  tensor->add_option("--seed", tensor_seed, "sampling seed");

  std::vector<std::string> argv_store = args;
  std::vector<const char*> argv;
  argv.push_back("invogen");
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_ok : exit_bad_input;
  }

  if (verify->parsed()) return cmd_verify(verify_input, out, err);
  if (synth->parsed()) {
    if (seed_opt->count() > 0) sopts.seed = ssee;
    if (retry_opt->count() > 0) sopts.retry_budget = sretries;
    if (!sout.empty()) sopts.output_path = sout;
    return cmd_synthesize(sopts, out, err);
  }
  if (certify->parsed()) return cmd_certify(cert_input, cert_path, out, err);
  if (counter->parsed())
    return cmd_demo_counterexample(demo_n, demo_seed, out, err);
  if (tensor->parsed()) return cmd_demo_tensor(tensor_d, tensor_seed, out, err);

  out << app.help();
  return exit_bad_input;
}

}  // namespace invogen::cli
