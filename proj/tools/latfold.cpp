// latfold: encodes 2D lattice heteropolymer instances as pseudo-boolean
// energy polynomials, reduces them to QUBO/Ising and exports solver files.

#include "latfold/csp_export.hpp"
#include "latfold/diamond.hpp"
#include "latfold/encoding.hpp"
#include "latfold/lattice.hpp"
#include "latfold/pbpoly.hpp"
#include "latfold/reduction.hpp"
#include "latfold/solve.hpp"
#include "latfold/turn_ancilla.hpp"
#include "latfold/turn_circuit.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace latfold;

struct Options {
  std::string encoding = "turn-ancilla";
  std::string seq;
  std::string model = "hp";
  std::string j_file;
  long long lambda_overlap = 0;  // 0: derived from the J matrix
  int cutoff = 0;                // 0: chain length - 1
  std::string to = "qubo";
  std::string solver = "exhaustive";
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

void add_instance_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--seq", opt.seq, "residue sequence, e.g. HPPHP or PSVKMA");
  cmd->add_option("--model", opt.model, "interaction model: hp, mj or file")
      ->check(CLI::IsMember({"hp", "mj", "file"}));
  cmd->add_option("--j-file", opt.j_file, "instance file (required with --model file)");
}

void add_encoding_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--encoding", opt.encoding, "turn-ancilla, turn-circuit or diamond")
      ->check(CLI::IsMember({"turn-ancilla", "turn-circuit", "diamond"}));
  cmd->add_option("--lambda-overlap", opt.lambda_overlap, "overlap penalty (default: 1 + |sum J|)");
  cmd->add_option("--cutoff", opt.cutoff, "diamond register radius (default: N-1)");
  cmd->add_option("--out-dir", opt.out_dir, "output directory");
}

Instance load_instance(const Options& opt) {
  if (opt.model == "file") {
    if (opt.j_file.empty()) throw CLI::ValidationError("--model file requires --j-file");
    std::ifstream in(opt.j_file);
    if (!in) throw CLI::ValidationError("cannot open " + opt.j_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return Instance::parse(buf.str());
  }
  if (opt.seq.empty()) throw CLI::ValidationError("--seq is required unless --model file is used");
  return opt.model == "hp" ? Instance::hp(opt.seq) : Instance::mj(opt.seq);
}

Encoding build_encoding(const Instance& inst, const Options& opt) {
  const EncodingKind kind = encoding_kind_from_name(opt.encoding);
  long long lambda = opt.lambda_overlap;
  const long long floor_lambda = 1 + std::llabs(inst.j_sum());
  if (lambda == 0) lambda = floor_lambda;
  if (lambda < floor_lambda)
    std::cerr << "warning: --lambda-overlap " << lambda << " is below the safe bound "
              << floor_lambda << "; overlapping folds may win\n";
  switch (kind) {
    case EncodingKind::TurnAncilla:
      return turn_ancilla::encode(inst, turn_ancilla::Penalties{lambda, lambda});
    case EncodingKind::TurnCircuit:
      return turn_circuit::encode(inst, lambda);
    case EncodingKind::Diamond: {
      diamond::DiamondPenalties pen = diamond::choose_lambdas(inst);
      if (opt.lambda_overlap != 0) {
        pen.lambda_overlap = lambda;
        pen.lambda_connect = lambda;
        pen.lambda_one = 8 * lambda + std::llabs(inst.j_sum()) + 1;
      }
      return diamond::encode(inst, opt.cutoff, pen);
    }
  }
  throw std::logic_error("unreachable");
}

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  std::cout << "wrote " << path.string() << "\n";
}

void print_encoding_summary(const Encoding& enc) {
  std::cout << "encoding " << encoding_kind_name(enc.kind) << ": " << enc.num_vars << " variables ("
            << enc.num_info_bits << " info), degree " << enc.poly.degree() << ", "
            << enc.poly.terms().size() << " terms\n";
}

std::string solution_json(const Encoding& enc, const solve::SolveResult& r) {
  std::ostringstream os;
  os << "{\n  \"value\": " << r.best_value.numerator() << ",\n  \"bits\": [";
  for (int v = 1; v <= r.best.num_vars(); ++v) os << (v > 1 ? "," : "") << r.best.get(v);
  os << "],\n  \"valid\": " << (r.valid ? "true" : "false");
  if (r.fold) {
    os << ",\n  \"fold\": [";
    for (std::size_t i = 0; i < r.fold->turns.size(); ++i)
      os << (i ? "," : "") << '"' << dir_name(r.fold->turns[i]) << '"';
    os << "]";
  }
  if (r.placement) {
    os << ",\n  \"placement\": [";
    for (std::size_t i = 0; i < r.placement->coords.size(); ++i)
      os << (i ? "," : "") << "[" << r.placement->coords[i].first << ","
         << r.placement->coords[i].second << "]";
    os << "]";
  }
  os << "\n}\n";
  return os.str();
}

void report_solution(const Encoding& enc, const solve::SolveResult& r) {
  std::cout << "minimum energy " << r.best_value.numerator() << "\n";
  if (r.fold) {
    std::cout << "fold:";
    for (Dir d : r.fold->turns) std::cout << ' ' << dir_name(d);
    std::cout << "\n";
  }
  if (enc.kind == EncodingKind::Diamond) {
    if (r.placement) {
      std::cout << "placement:";
      for (const auto& [x, y] : r.placement->coords) std::cout << " (" << x << "," << y << ")";
      std::cout << "\n";
    } else {
      std::cout << "placement: invalid (register not one-hot)\n";
    }
  }
}

int run_encode(const Options& opt) {
  const Instance inst = load_instance(opt);
  const Encoding enc = build_encoding(inst, opt);
  print_encoding_summary(enc);
  write_file(opt.out_dir, "poly.json", poly_to_json(enc.poly, enc.num_vars));
  write_file(opt.out_dir, "layout.json", layout_to_json(enc));
  return 0;
}

int run_reduce(const Options& opt) {
  const Instance inst = load_instance(opt);
  const Encoding enc = build_encoding(inst, opt);
  const auto red = reduction::reduce_to_2local(enc.poly, enc.num_vars);
  const Encoding reduced = reduction::reduced_encoding(enc, red);
  print_encoding_summary(reduced);
  std::cout << red.gadgets.size() << " gadget ancillae\n";
  write_file(opt.out_dir, "qubo.txt", red.qubo.to_file());
  write_file(opt.out_dir, "qubo_matrix.txt", red.qubo.to_dense_matrix());
  write_file(opt.out_dir, "layout.json", layout_to_json(reduced));
  return 0;
}

int run_export(const Options& opt) {
  const Instance inst = load_instance(opt);
  const Encoding enc = build_encoding(inst, opt);
  if (opt.to == "poly") {
    write_file(opt.out_dir, "poly.json", poly_to_json(enc.poly, enc.num_vars));
    return 0;
  }
  if (opt.to == "wcnf") {
    write_file(opt.out_dir, "problem.wcnf", csp::wcnf_to_file(csp::pb_to_wcnf(enc.poly, enc.num_vars)));
    return 0;
  }
  if (opt.to == "lp") {
    const auto ilp = csp::wcnf_to_ilp(csp::pb_to_wcnf(enc.poly, enc.num_vars));
    write_file(opt.out_dir, "problem.lp", csp::ilp_to_lp_file(ilp));
    return 0;
  }
  const auto red = reduction::reduce_to_2local(enc.poly, enc.num_vars);
  if (opt.to == "qubo") {
    write_file(opt.out_dir, "qubo.txt", red.qubo.to_file());
    write_file(opt.out_dir, "qubo_matrix.txt", red.qubo.to_dense_matrix());
  } else {
    write_file(opt.out_dir, "ising.txt", reduction::qubo_to_ising(red.qubo).to_file());
  }
  return 0;
}

int run_solve(const Options& opt) {
  const Instance inst = load_instance(opt);
  const Encoding enc = build_encoding(inst, opt);
  solve::SolveResult result;
  if (opt.solver == "anneal") {
    const auto red = reduction::reduce_to_2local(enc.poly, enc.num_vars);
    const Encoding reduced = reduction::reduced_encoding(enc, red);
    solve::AnnealParams params;
    params.seed = opt.seed;
    result = solve::anneal(red.qubo, params);
    if (reduced.kind != EncodingKind::Diamond)
      result.fold = solve::decode_fold(result.best, reduced);
    else {
      result.placement = solve::decode_placement(result.best, reduced);
      result.valid = result.placement.has_value();
    }
  } else {
    result = solve::exhaustive_min(enc);
  }
  report_solution(enc, result);
  write_file(opt.out_dir, "solution.json", solution_json(enc, result));
  return 0;
}

int run_verify(const Options& opt) {
  const Instance inst = load_instance(opt);
  const auto report = solve::verify_encoding(inst, encoding_kind_from_name(opt.encoding));
  std::cout << "ground energy " << report.ground_energy << ", encoding minimum "
            << report.encoding_min.numerator() << ", " << report.minimizer_count << " minimizers\n";
  for (const auto& f : report.failures) std::cout << "FAIL: " << f << "\n";
  std::cout << (report.pass ? "verify: pass" : "verify: fail") << "\n";
  return report.pass ? 0 : 1;
}

int run_pipeline(const Options& opt) {
  const Instance inst = load_instance(opt);
  const Encoding enc = build_encoding(inst, opt);
  print_encoding_summary(enc);
  write_file(opt.out_dir, "poly.json", poly_to_json(enc.poly, enc.num_vars));
  write_file(opt.out_dir, "layout.json", layout_to_json(enc));

  const auto red = reduction::reduce_to_2local(enc.poly, enc.num_vars);
  const Encoding reduced = reduction::reduced_encoding(enc, red);
  write_file(opt.out_dir, "qubo.txt", red.qubo.to_file());
  write_file(opt.out_dir, "qubo_matrix.txt", red.qubo.to_dense_matrix());

  if (opt.to == "ising")
    write_file(opt.out_dir, "ising.txt", reduction::qubo_to_ising(red.qubo).to_file());
  if (opt.to == "wcnf")
    write_file(opt.out_dir, "problem.wcnf", csp::wcnf_to_file(csp::pb_to_wcnf(enc.poly, enc.num_vars)));
  if (opt.to == "lp") {
    const auto ilp = csp::wcnf_to_ilp(csp::pb_to_wcnf(enc.poly, enc.num_vars));
    write_file(opt.out_dir, "problem.lp", csp::ilp_to_lp_file(ilp));
  }

  if (opt.solver != "none") {
    solve::SolveResult result;
    if (opt.solver == "anneal") {
      solve::AnnealParams params;
      params.seed = opt.seed;
      result = solve::anneal(red.qubo, params);
      if (reduced.kind != EncodingKind::Diamond)
        result.fold = solve::decode_fold(result.best, reduced);
    } else {
      result = solve::exhaustive_min(reduced);
    }
    report_solution(enc, result);
    write_file(opt.out_dir, "solution.json", solution_json(enc, result));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice heteropolymer energy-function compiler"};
  app.require_subcommand(1);
  Options opt;

  auto* encode = app.add_subcommand("encode", "build the energy polynomial");
  auto* reduce = app.add_subcommand("reduce", "encode and reduce to a 2-local QUBO");
  auto* exp = app.add_subcommand("export", "write a solver input file");
  auto* solve_cmd = app.add_subcommand("solve", "encode and minimize");
  auto* verify = app.add_subcommand("verify", "check an encoding against brute-force enumeration");
  auto* pipeline = app.add_subcommand("pipeline", "encode, reduce, export and solve");

  for (auto* cmd : {encode, reduce, exp, solve_cmd, verify, pipeline}) {
    add_instance_flags(cmd, opt);
    add_encoding_flags(cmd, opt);
  }
  for (auto* cmd : {exp, pipeline})
    cmd->add_option("--to", opt.to, "poly, qubo, ising, wcnf or lp")
        ->check(CLI::IsMember({"poly", "qubo", "ising", "wcnf", "lp"}));
  for (auto* cmd : {solve_cmd, pipeline}) {
    cmd->add_option("--solve", opt.solver, "exhaustive, anneal or none")
        ->check(CLI::IsMember({"exhaustive", "anneal", "none"}));
    cmd->add_option("--seed", opt.seed, "annealer seed");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (encode->parsed()) return run_encode(opt);
    if (reduce->parsed()) return run_reduce(opt);
    if (exp->parsed()) return run_export(opt);
    if (solve_cmd->parsed()) return run_solve(opt);
    if (verify->parsed()) return run_verify(opt);
    if (pipeline->parsed()) return run_pipeline(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
