#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "p53scan/composition.hpp"

using namespace p53scan;

namespace {
Sequence dna(const std::string& r) { return Sequence::make("s", r, Alphabet::Dna); }
}  // namespace

TEST(Composition, AllGc) {
  auto r = composition(dna("GCGC"));
  EXPECT_DOUBLE_EQ(r.gc_percent, 100.0);
  EXPECT_DOUBLE_EQ(r.at_percent, 0.0);
  EXPECT_EQ(r.length, 4u);
}

TEST(Composition, AllAt) {
  auto r = composition(dna("ATAT"));
  EXPECT_DOUBLE_EQ(r.gc_percent, 0.0);
  EXPECT_DOUBLE_EQ(r.at_percent, 100.0);
}

TEST(Composition, Balanced) { EXPECT_DOUBLE_EQ(composition(dna("ACGT")).gc_percent, 50.0); }

TEST(Composition, NExcludedFromDenominator) {
  auto r = composition(dna("GCNNAT"));
  EXPECT_DOUBLE_EQ(r.gc_percent, 50.0);
  EXPECT_EQ(r.counts.at('N'), 2u);
  EXPECT_EQ(r.length, 6u);
}

TEST(Composition, AllAmbiguousFails) {
  try {
    composition(dna("NNN"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AllAmbiguous);
  }
}

TEST(Composition, BundledHomologMatchesCountingOracle) {
  const std::string residues = oracle::first_record_residues(oracle::data_path("tp53_reference.fasta"));
  const auto expect = oracle::count_gc(residues);
  auto doc = read_fasta(oracle::data_path("tp53_reference.fasta"), Alphabet::Dna);
  auto r = composition(doc[0]);
  EXPECT_NEAR(expect.gc_percent(), 54.85, 0.01);
  EXPECT_DOUBLE_EQ(r.gc_percent, expect.gc_percent());
  EXPECT_NEAR(r.gc_percent, 54.85, 0.01);
  EXPECT_EQ(reference_gate(r), GateDecision::Accept);
}

TEST(ReferenceGate, BoundaryIsInclusive) {
  EXPECT_EQ(reference_gate(54.85), GateDecision::Accept);
  EXPECT_EQ(reference_gate(38.0), GateDecision::Accept);
  EXPECT_EQ(reference_gate(37.999), GateDecision::Reject);
  EXPECT_EQ(reference_gate(50.0, 60.0), GateDecision::Reject);
}

TEST(ReferenceGate, ExactBoundaryFromCounts) {
  // 19 of 50 determined bases are G/C: exactly 38%.
  std::string s = std::string(19, 'G') + std::string(31, 'A');
  EXPECT_EQ(reference_gate(composition(dna(s))), GateDecision::Accept);
}

TEST(Composition, Properties) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    std::string s(1 + rng() % 300, 'A');
    for (auto& c : s) c = "ACGT"[rng() % 4];
    auto r = composition(dna(s));
    std::uint64_t sum = 0;
    for (const auto& [b, n] : r.counts) sum += n;
    EXPECT_EQ(sum, r.length);
    EXPECT_NEAR(r.gc_percent + r.at_percent, 100.0, 1e-12);

    std::shuffle(s.begin(), s.end(), rng);
    EXPECT_EQ(composition(dna(s)), r);

    const double g = r.gc_percent;
    if (reference_gate(g) == GateDecision::Accept)
      EXPECT_EQ(reference_gate(g + static_cast<double>(rng() % 50)), GateDecision::Accept);
  }
}
