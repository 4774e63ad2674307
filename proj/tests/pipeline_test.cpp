#include <gtest/gtest.h>

#include <random>

#include "invariants.hpp"
#include "p53scan/report.hpp"
#include "support.hpp"

using namespace p53scan;

namespace {

Sequence dna(const std::string& r, const std::string& id = "subject") {
  return Sequence::make(id, r, Alphabet::Dna);
}

std::string with_codon(std::string cds, std::size_t n, const std::string& codon) {
  cds.replace(3 * (n - 1), 3, codon);
  return cds;
}

struct Fixture {
  ReferenceStore store = load_store(oracle::data_path("refstore"));
  Database db = load_db(oracle::data_path("tp53_mutdb.tsv"));
  std::string ref = support::reference_cds();

  PredictionReport run(const std::string& subj, const PredictConfig& cfg = {}) const {
    return predict(store, db, dna(subj), "TP53", cfg);
  }
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST(Predict, IdenticalSubjectIsNoRisk) {
  const auto r = fx().run(fx().ref);
  EXPECT_EQ(r.verdict.kind, VerdictKind::NoRisk);
  EXPECT_TRUE(r.verdict.mutations.dna_identical);
  EXPECT_FALSE(r.verdict.protein.has_value());
  EXPECT_TRUE(support::verdict_violations(r.verdict).empty());
}

TEST(Predict, CodonR248WIsPreCancerMatch) {
  const auto r = fx().run(with_codon(fx().ref, 248, "TGG"));
  const Verdict& v = r.verdict;
  EXPECT_EQ(v.kind, VerdictKind::PreCancerMatch);
  ASSERT_EQ(v.mutations.mutations.size(), 1u);
  EXPECT_EQ(v.mutations.mutations[0],
            (CodonMutation{248, "CGG", "TGG", 'R', 'W', MutationKind::Missense}));
  ASSERT_TRUE(v.annotations.has_value());
  EXPECT_FALSE(v.annotations->distinct_tumor_types.empty());
  for (const auto& m : v.annotations->matches) EXPECT_EQ(m.mut_codon, "TGG");
  ASSERT_EQ(v.classifications.size(), 1u);
  EXPECT_TRUE(v.classifications[0].matched);
  EXPECT_EQ(v.reference_used.sequence_id, "TP53_NCBI");
  EXPECT_NEAR(v.gc_report.gc_percent, 54.85, 0.01);
  ASSERT_TRUE(v.protein.has_value());
  EXPECT_LT(v.protein->identity_percent, 100.0);
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_TRUE(support::verdict_violations(v).empty());
}

TEST(Predict, SynonymousChangeIsSilentOnly) {
  const auto r = fx().run(with_codon(fx().ref, 5, "CGA"));
  EXPECT_EQ(r.verdict.kind, VerdictKind::SilentOnly);
  ASSERT_EQ(r.verdict.mutations.mutations.size(), 1u);
  EXPECT_EQ(r.verdict.mutations.mutations[0].kind, MutationKind::Silent);
  ASSERT_TRUE(r.verdict.protein.has_value());
  EXPECT_DOUBLE_EQ(r.verdict.protein->identity_percent, 100.0);
}

TEST(Predict, MissenseAbsentFromDatabaseIsUnknownCancer) {
  const auto r = fx().run(with_codon(fx().ref, 100, "TGG"));
  EXPECT_EQ(r.verdict.kind, VerdictKind::UnknownCancer);
  ASSERT_EQ(r.verdict.classifications.size(), 1u);
  EXPECT_FALSE(r.verdict.classifications[0].matched);
  EXPECT_FALSE(r.verdict.annotations.has_value());
}

TEST(Predict, BundledSubjectFiles) {
  const auto& f = fx();
  const std::vector<std::pair<std::string, VerdictKind>> cases = {
      {"tp53_subject_normal.fasta", VerdictKind::NoRisk},
      {"tp53_subject_r248w.fasta", VerdictKind::PreCancerMatch},
      {"tp53_subject_silent.fasta", VerdictKind::SilentOnly},
      {"tp53_subject_unknown.fasta", VerdictKind::UnknownCancer}};
  for (const auto& [file, kind] : cases) {
    auto doc = read_fasta(oracle::data_path(file), Alphabet::Dna);
    EXPECT_EQ(predict(f.store, f.db, doc[0], "TP53").verdict.kind, kind) << file;
  }
}

TEST(Predict, IndelIsNotSilent) {
  std::string subj = fx().ref;
  subj.erase(600, 3);
  const auto r = fx().run(subj);
  EXPECT_TRUE(r.verdict.mutations.has_indel);
  EXPECT_NE(r.verdict.kind, VerdictKind::SilentOnly);
  EXPECT_NE(r.verdict.kind, VerdictKind::NoRisk);
  EXPECT_TRUE(support::verdict_violations(r.verdict).empty());
}

TEST(Predict, AllReferencesRejected) {
  support::TempDir dir;
  std::mt19937_64 rng(20);
  std::vector<support::StoreEntry> entries;
  for (int k = 0; k < 3; ++k) {
    // 20% G/C
    std::string s(1179, 'A');
    for (auto& c : s) c = rng() % 5 == 0 ? "GC"[rng() % 2] : "AT"[rng() % 2];
    entries.push_back({"e" + std::to_string(k) + ".fa", "AT_RICH_" + std::to_string(k), "TP53",
                       "src" + std::to_string(k), k + 1, s});
  }
  support::write_store(dir, entries);
  for (const auto& e : entries) EXPECT_LT(oracle::count_gc(e.residues).gc_percent(), 38.0);
  const auto store = load_store(dir.path());
  try {
    predict(store, fx().db, dna(fx().ref), "TP53");
    FAIL();
  } catch (const NoReferenceError& e) {
    EXPECT_EQ(e.code(), Errc::NoReferenceAccepted);
    ASSERT_EQ(e.gate_trace().size(), 3u);
    for (const auto& g : e.gate_trace()) EXPECT_EQ(g.decision, GateDecision::Reject);
  }
}

TEST(Predict, FallsBackToNextReference) {
  const auto [low, ok] = support::fallback_pair();
  ASSERT_LT(oracle::count_gc(low).gc_percent(), 38.0);
  ASSERT_GE(oracle::count_gc(ok).gc_percent(), 38.0);
  support::TempDir dir;
  support::write_store(dir, {{"low.fa", "LOW_GC", "TP53", "ncbi-export", 1, low},
                             {"ok.fa", "OK_GC", "TP53", "ebi-export", 2, ok}});
  const auto store = load_store(dir.path());
  const auto r = predict(store, fx().db, dna(fx().ref), "TP53");
  const auto& trace = r.verdict.gate_trace;
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[0].sequence_id, "LOW_GC");
  EXPECT_EQ(trace[0].decision, GateDecision::Reject);
  EXPECT_EQ(trace[1].sequence_id, "OK_GC");
  EXPECT_EQ(trace[1].decision, GateDecision::Accept);
  EXPECT_EQ(r.verdict.reference_used.source, "ebi-export");
  EXPECT_TRUE(support::verdict_violations(r.verdict).empty());
}

TEST(Predict, FrameChecks) {
  const std::string subj = fx().ref + "A";
  try {
    fx().run(subj);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInFrame);
  }
  PredictConfig cfg;
  cfg.allow_partial = true;
  const auto r = fx().run(subj, cfg);
  EXPECT_EQ(r.verdict.kind, VerdictKind::NoRisk);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Predict, InvalidConfigAndGene) {
  PredictConfig cfg;
  cfg.gc_threshold = 120.0;
  EXPECT_THROW(fx().run(fx().ref, cfg), Error);
  try {
    predict(fx().store, fx().db, dna(fx().ref), "MDM2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::GeneNotFound);
  }
}

TEST(Predict, DeterministicModuloTimestamp) {
  const std::string subj = with_codon(with_codon(fx().ref, 248, "TGG"), 175, "CAC");
  auto a = fx().run(subj), b = fx().run(subj);
  a.generated_at = b.generated_at = "";
  EXPECT_EQ(to_structured(a), to_structured(b));
}

TEST(Predict, RandomSubjectsSatisfyInvariants) {
  const auto& f = fx();
  const auto table = oracle::read_tsv(oracle::data_path("tp53_mutdb.tsv"));
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const std::string subj = support::mutated_subject(f.ref, rng, table);
    const auto r = f.run(subj);
    EXPECT_TRUE(support::verdict_violations(r.verdict).empty());
    EXPECT_EQ(support::non_silent_codons(r.verdict), oracle::aa_disagreements(f.ref, subj));
  }
}
