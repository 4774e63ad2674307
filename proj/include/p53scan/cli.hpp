#ifndef P53SCAN_CLI_HPP
#define P53SCAN_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "p53scan/report.hpp"

namespace p53scan::cli {

enum class OutputMode { Text, Structured };

struct CliConfig {
  double gc_threshold = kDefaultGcThreshold;
  ScoringScheme dna_scheme = ScoringScheme::dna_default();
  ScoringScheme protein_scheme = ScoringScheme::protein_default();
  std::string db_path;
  std::string refstore_path;
  std::string column_map_path;
  OutputMode output = OutputMode::Text;
  std::vector<std::string> where_clauses;
};

/// "match,mismatch,gap_open,gap_extend", e.g. "2,-1,-5,-1".
inline ScoringScheme parse_scheme(const std::string& text) {
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    auto n = detail::parse_int(std::string_view(text).substr(pos, comma - pos));
    if (!n) throw Error(Errc::InvalidScheme, "bad scoring scheme '" + text + "'");
    v.push_back(static_cast<int>(*n));
    pos = comma + 1;
  }
  if (v.size() != 4)
    throw Error(Errc::InvalidScheme, "scoring scheme needs 4 comma-separated integers");
  ScoringScheme s{v[0], v[1], v[2], v[3]};
  s.validate();
  return s;
}

inline CLI::Validator scheme_validator() {
  return CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          parse_scheme(s);
          return {};
        } catch (const Error& e) {
          return std::string(e.detail());
        }
      },
      "SCHEME");
}

namespace detail {

inline const Sequence& only_record(const FastaDocument& doc, const std::string& path) {
  if (doc.size() != 1)
    throw Error(Errc::InvalidArgument,
                "'" + path + "' holds " + std::to_string(doc.size()) + " records, expected 1");
  return doc[0];
}

inline Database open_db(const CliConfig& cfg) {
  ColumnMapping mapping;
  if (!cfg.column_map_path.empty())
    mapping = ColumnMapping::parse(read_text_file(cfg.column_map_path));
  return load_db(cfg.db_path, mapping);
}

}  // namespace detail

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 1 domain error (named on `err`), 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  std::string dna_scheme = "2,-1,-5,-1", protein_scheme = "4,-2,-10,-1", output = "text";

  CLI::App app{
      "p53scan: offline TP53 mutation screening.\n"
      "Codon numbers are 1-based from the first base of the supplied CDS.",
      "p53scan"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--output,-o", output, "text or structured (JSON)")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--dna-scheme", dna_scheme, "match,mismatch,gap_open,gap_extend for DNA")
      ->check(scheme_validator());
  app.add_option("--protein-scheme", protein_scheme, "match,mismatch,gap_open,gap_extend for protein")
      ->check(scheme_validator());
  app.add_option("--gc-threshold", cfg.gc_threshold, "minimum reference GC% (inclusive)")
      ->check(CLI::Range(0.0, 100.0));

  std::string fasta, ref_fasta, subj_fasta;
  int frame = 0;
  bool protein = false, allow_partial = false;
  std::string gene(kDefaultGene);
  std::size_t rank_cap = kDefaultRankPrefixCap;

  auto* gc = app.add_subcommand("gc", "nucleotide composition and reference GC gate");
  gc->add_option("fasta", fasta, "DNA FASTA file")->required();

  auto* align = app.add_subcommand("align", "optimal global alignment of a two-record FASTA");
  align->add_option("fasta", fasta, "FASTA file with exactly two records")->required();
  align->add_flag("--protein", protein, "records are protein sequences");

  auto* tr = app.add_subcommand("translate", "translate CDS records to protein FASTA");
  tr->add_option("fasta", fasta, "DNA FASTA file")->required();
  tr->add_option("--frame", frame, "reading frame offset")->check(CLI::Range(0, 2));

  auto* call = app.add_subcommand("call", "codon-level mutations of a subject against a reference");
  call->add_option("reference", ref_fasta, "reference CDS FASTA (one record)")->required();
  call->add_option("subject", subj_fasta, "subject CDS FASTA (one record)")->required();

  auto* query = app.add_subcommand("query", "filter the mutation database");
  query->add_option("--db", cfg.db_path, "mutation database TSV")->required();
  query->add_option("--where,-w", cfg.where_clauses, "field=value clause; repeatable");
  query->add_option("--column-map", cfg.column_map_path, "TSV mapping canonical fields to columns");

  auto* pred = app.add_subcommand("predict", "full screening pipeline for each subject record");
  pred->add_option("--refstore", cfg.refstore_path, "reference store directory")->required();
  pred->add_option("--db", cfg.db_path, "mutation database TSV")->required();
  pred->add_option("--column-map", cfg.column_map_path, "TSV mapping canonical fields to columns");
  pred->add_option("--gene", gene, "gene symbol to look up in the store");
  pred->add_option("--rank-cap", rank_cap, "prefix length used to rank homologs")
      ->check(CLI::PositiveNumber);
  pred->add_flag("--allow-partial", allow_partial, "truncate sequences to whole codons");
  pred->add_option("subject", subj_fasta, "subject CDS FASTA")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  cfg.output = output == "structured" ? OutputMode::Structured : OutputMode::Text;
  const bool structured = cfg.output == OutputMode::Structured;

  try {
    cfg.dna_scheme = parse_scheme(dna_scheme);
    cfg.protein_scheme = parse_scheme(protein_scheme);

    if (gc->parsed()) {
      const FastaDocument doc = read_fasta(fasta, Alphabet::Dna);
      json all = json::array();
      for (const auto& rec : doc.records()) {
        const CompositionReport r = composition(rec);
        const GateDecision d = reference_gate(r, cfg.gc_threshold);
        if (structured) {
          all.push_back({{"id", rec.id()},
                         {"composition", r},
                         {"gate", {{"threshold", cfg.gc_threshold}, {"decision", gate_name(d)}}}});
        } else {
          out << render_text(r, rec.id()) << "  gate       " << gate_name(d) << " (threshold "
              << p53scan::detail::fixed2(cfg.gc_threshold) << "%)\n";
        }
      }
      if (structured) out << all.dump(2) << '\n';
    } else if (align->parsed()) {
      const FastaDocument doc = read_fasta(fasta, protein ? Alphabet::Protein : Alphabet::Dna);
      if (doc.size() != 2)
        throw Error(Errc::InvalidArgument, "'" + fasta + "' holds " + std::to_string(doc.size()) +
                                               " records, expected 2");
      const AlignmentResult r =
          align_global(doc[0], doc[1], protein ? cfg.protein_scheme : cfg.dna_scheme);
      out << (structured ? to_structured(r) : render_text(r));
    } else if (tr->parsed()) {
      const FastaDocument doc = read_fasta(fasta, Alphabet::Dna);
      FastaDocument proteins;
      for (const auto& rec : doc.records()) {
        Translation t = translate(rec, frame);
        if (t.trailing_bases)
          err << "warning: " << rec.id() << ": " << t.trailing_bases
              << " trailing base(s) ignored\n";
        proteins.add(std::move(t.protein));
      }
      out << write_fasta(proteins);
    } else if (call->parsed()) {
      const FastaDocument rdoc = read_fasta(ref_fasta, Alphabet::Dna);
      const FastaDocument sdoc = read_fasta(subj_fasta, Alphabet::Dna);
      const MutationCallSet calls = call_mutations(detail::only_record(rdoc, ref_fasta),
                                                   detail::only_record(sdoc, subj_fasta),
                                                   cfg.dna_scheme);
      out << (structured ? to_structured(calls) : render_text(calls));
    } else if (query->parsed()) {
      const Database db = detail::open_db(cfg);
      FilterQuery q;
      for (const auto& w : cfg.where_clauses) q.where(w);
      const AnnotationResult r = db.query(q);
      out << (structured ? to_structured(r) : render_text(r));
    } else if (pred->parsed()) {
      const ReferenceStore store = load_store(cfg.refstore_path);
      const Database db = detail::open_db(cfg);
      const FastaDocument subjects = read_fasta(subj_fasta, Alphabet::Dna);
      PredictConfig pc;
      pc.gc_threshold = cfg.gc_threshold;
      pc.dna_scheme = cfg.dna_scheme;
      pc.protein_scheme = cfg.protein_scheme;
      pc.rank_prefix_cap = rank_cap;
      pc.allow_partial = allow_partial;

      std::vector<PredictionReport> reports;
      for (const auto& s : subjects.records()) reports.push_back(predict(store, db, s, gene, pc));
      if (structured) {
        out << (reports.size() == 1 ? json(reports[0]) : json(reports)).dump(2) << '\n';
      } else {
        for (std::size_t i = 0; i < reports.size(); ++i)
          out << (i ? "\n" : "") << render_text(reports[i]);
      }
    }
  } catch (const NoReferenceError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& g : e.gate_trace())
      err << "  " << g.source << ' ' << g.sequence_id << "  GC "
          << p53scan::detail::fixed2(g.gc_percent) << "%  " << gate_name(g.decision) << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace p53scan::cli

#endif  // P53SCAN_CLI_HPP
