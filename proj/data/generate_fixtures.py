#!/usr/bin/env python3
"""Regenerates the bundled synthetic fixtures under data/.

The reference CDS is a back-translation of a p53-like 393 residue protein.
Codon choices are seeded so the output is reproducible, and the GC content of
the determined bases is pinned to 645/1176 (54.85%). The final codon is NNN.
"""

import os
import random

HERE = os.path.dirname(os.path.abspath(__file__))

PROTEIN = (
    "MEEPQSDPSVEPPLSQETFSDLWKLLPENNVLSPLPSQAMDDLMLSPDDIEQWFTEDPGP"
    "DEAPRMPEAAPPVAPAPAAPTPAAPAPAPSWPLSSSVPSQKTYQGSYGFRLGFLHSGTAK"
    "SVTCTYSPALNKMFCQLAKTCPVQLWVDSTPPPGTRVRAMAIYKQSQHMTEVVRRCPHHE"
    "RCSDSDGLAPPQHLIRVEGNLRVEYLDDRNTFRHSVVVPYEPPEVGSDCTTIHYNYMCNS"
    "SCMGGMNRRPILTIITLEDSSGNLLGRNSFEVRVCACPGRDRRTEEENLRKKGEPHHELP"
    "PGSTKRALPNNTSSSPQPKKKPLDGEYFTLQIRGRERFEMFRELNEALELKDAQAGKEPG"
    "GSRAHSSHLKSKKGQSTSRHKKLMFKTEGPDSD"
)

# codon number -> fixed codon (1-based)
FIXED = {
    1: "ATG",
    3: "CAG",
    5: "CGG",
    158: "CGC",
    175: "CGC",
    196: "CGA",
    213: "CGA",
    220: "TAT",
    245: "GGC",
    248: "CGG",
    249: "AGG",
    273: "CGT",
    282: "CGG",
}

BASES = "TCAG"
CODE = (
    "FFLLSSSSYY**CC*W"
    "LLLLPPPPHHQQRRRR"
    "IIIMTTTTNNKKSSRR"
    "VVVVAAAADDEEGGGG"
)


def codon_table():
    table = {}
    i = 0
    for a in BASES:
        for b in BASES:
            for c in BASES:
                table[a + b + c] = CODE[i]
                i += 1
    return table


def gc(s):
    return sum(1 for ch in s if ch in "GC")


def build_reference():
    table = codon_table()
    synonyms = {}
    for codon, aa in table.items():
        synonyms.setdefault(aa, []).append(codon)

    protein = list(PROTEIN[:392])
    for n, codon in FIXED.items():
        protein[n - 1] = table[codon]
    assert len(protein) == 392 and "*" not in protein

    rng = random.Random(53)
    codons = []
    for n, aa in enumerate(protein, start=1):
        codons.append(FIXED.get(n) or rng.choice(synonyms[aa]))

    target = 645
    free = [n for n in range(1, 393) if n not in FIXED]
    total = sum(gc(c) for c in codons)
    while total != target:
        n = rng.choice(free)
        cur = codons[n - 1]
        options = [c for c in synonyms[table[cur]]
                   if (gc(c) > gc(cur)) == (total < target) and gc(c) != gc(cur)]
        if not options:
            continue
        new = min(options, key=lambda c: abs(gc(c) - gc(cur)))
        total += gc(new) - gc(cur)
        codons[n - 1] = new

    cds = "".join(codons) + "NNN"
    assert len(cds) == 1179
    assert cds[3 * 247:3 * 248] == "CGG"
    return cds


def mutate(cds, codon_number, new_codon):
    i = 3 * (codon_number - 1)
    return cds[:i] + new_codon + cds[i + 3:]


def write_fasta(path, records, width=60):
    with open(path, "w") as f:
        for header, residues in records:
            f.write(">" + header + "\n")
            for i in range(0, len(residues), width):
                f.write(residues[i:i + width] + "\n")


DB_COLUMNS = ["record_id", "codon", "exon", "wt_codon", "mut_codon", "wt_aa",
              "mut_aa", "mutation_event", "tumor_type", "cell_line", "origin"]

# codon, wt, mut, event, tumor type, origin
DB_ROWS = [
    (175, "CGC", "CAC", "G>A transition", "Breast carcinoma", "somatic"),
    (175, "CGC", "CAC", "G>A transition", "Colorectal carcinoma", "somatic"),
    (175, "CGC", "CAC", "G>A transition", "Li-Fraumeni syndrome", "germline"),
    (175, "CGC", "CAC", "G>A transition", "Ovarian carcinoma", "somatic"),
    (175, "CGC", "CTC", "G>T transversion", "Lung adenocarcinoma", "somatic"),
    (175, "CGC", "TGC", "C>T transition", "Gastric carcinoma", "somatic"),
    (158, "CGC", "CAC", "G>A transition", "Lung squamous cell carcinoma", "somatic"),
    (158, "CGC", "CTC", "G>T transversion", "Lung adenocarcinoma", "somatic"),
    (196, "CGA", "TGA", "C>T transition", "Esophageal carcinoma", "somatic"),
    (196, "CGA", "TGA", "C>T transition", "Colorectal carcinoma", "somatic"),
    (213, "CGA", "TGA", "C>T transition", "Bladder carcinoma", "somatic"),
    (213, "CGA", "TGA", "C>T transition", "Breast carcinoma", "somatic"),
    (213, "CGA", "CAA", "G>A transition", "Head and neck carcinoma", "somatic"),
    (220, "TAT", "TGT", "A>G transition", "Breast carcinoma", "somatic"),
    (220, "TAT", "TGT", "A>G transition", "Ovarian carcinoma", "somatic"),
    (220, "TAT", "TGT", "A>G transition", "Lung adenocarcinoma", "somatic"),
    (245, "GGC", "AGC", "G>A transition", "Colorectal carcinoma", "somatic"),
    (245, "GGC", "AGC", "G>A transition", "Li-Fraumeni syndrome", "germline"),
    (245, "GGC", "GAC", "G>A transition", "Pancreatic carcinoma", "somatic"),
    (245, "GGC", "GTC", "G>T transversion", "Lung squamous cell carcinoma", "somatic"),
    (248, "CGG", "TGG", "C>T transition", "Colorectal carcinoma", "somatic"),
    (248, "CGG", "TGG", "C>T transition", "Colorectal carcinoma", "somatic"),
    (248, "CGG", "TGG", "C>T transition", "Breast carcinoma", "somatic"),
    (248, "CGG", "TGG", "C>T transition", "Glioblastoma", "somatic"),
    (248, "CGG", "TGG", "C>T transition", "Li-Fraumeni syndrome", "germline"),
    (248, "CGG", "TGG", "C>T transition", "Acute myeloid leukemia", "somatic"),
    (248, "CGG", "TGG", "C>T transition", "Skin squamous cell carcinoma", "somatic"),
    (248, "CGG", "CAG", "G>A transition", "Ovarian carcinoma", "somatic"),
    (248, "CGG", "CAG", "G>A transition", "Colorectal carcinoma", "somatic"),
    (248, "CGG", "CAG", "G>A transition", "Esophageal carcinoma", "somatic"),
    (248, "CGG", "CAG", "G>A transition", "Lung adenocarcinoma", "somatic"),
    (248, "CGG", "CTG", "G>T transversion", "Lung squamous cell carcinoma", "somatic"),
    (248, "CGG", "CTG", "G>T transversion", "Liver carcinoma", "somatic"),
    (249, "AGG", "AGT", "G>T transversion", "Hepatocellular carcinoma", "somatic"),
    (249, "AGG", "AGT", "G>T transversion", "Hepatocellular carcinoma", "somatic"),
    (249, "AGG", "ATG", "G>T transversion", "Lung squamous cell carcinoma", "somatic"),
    (249, "AGG", "AGC", "G>C transversion", "Esophageal carcinoma", "somatic"),
    (273, "CGT", "CAT", "G>A transition", "Colorectal carcinoma", "somatic"),
    (273, "CGT", "CAT", "G>A transition", "Glioblastoma", "somatic"),
    (273, "CGT", "CAT", "G>A transition", "Breast carcinoma", "somatic"),
    (273, "CGT", "TGT", "C>T transition", "Pancreatic carcinoma", "somatic"),
    (273, "CGT", "TGT", "C>T transition", "Burkitt lymphoma", "somatic"),
    (273, "CGT", "CTT", "G>T transversion", "Lung adenocarcinoma", "somatic"),
    (282, "CGG", "TGG", "C>T transition", "Colorectal carcinoma", "somatic"),
    (282, "CGG", "TGG", "C>T transition", "Breast carcinoma", "somatic"),
    (282, "CGG", "TGG", "C>T transition", "Bladder carcinoma", "somatic"),
    (282, "CGG", "CAG", "G>A transition", "Head and neck carcinoma", "somatic"),
    (3, "CAG", "TAG", "C>T transition", "Acute lymphoblastic leukemia", "somatic"),
    (5, "CGG", "TGG", "C>T transition", "Medulloblastoma", "somatic"),
    (5, "CGG", "CCG", "G>C transversion", "Osteosarcoma", "somatic"),
]


def exon_of(codon):
    # coarse exon boundaries of the canonical transcript, codon units
    bounds = [(1, 2), (26, 3), (33, 4), (126, 5), (187, 6), (225, 7),
              (261, 8), (307, 9), (332, 10), (367, 11)]
    exon = 2
    for start, e in bounds:
        if codon >= start:
            exon = e
    return exon


def write_db(path):
    table = codon_table()
    with open(path, "w") as f:
        f.write("\t".join(DB_COLUMNS) + "\n")
        for i, (codon, wt, mut, event, tumor, origin) in enumerate(DB_ROWS, 1):
            row = [
                "UMDFX-%04d" % i, str(codon), str(exon_of(codon)), wt, mut,
                table[wt], table[mut], event, tumor, "CL-%03d" % (i * 7 % 97),
                origin,
            ]
            f.write("\t".join(row) + "\n")


def main():
    ref = build_reference()
    write_fasta(os.path.join(HERE, "tp53_reference.fasta"),
                [("TP53_REF synthetic p53-like CDS, 393 codons", ref)])

    subjects = {
        "tp53_subject_r248w.fasta": ("patient_r248w", mutate(ref, 248, "TGG")),
        "tp53_subject_normal.fasta": ("patient_normal", ref),
        "tp53_subject_silent.fasta": ("patient_silent", mutate(ref, 5, "CGA")),
        "tp53_subject_unknown.fasta": ("patient_unknown", mutate(ref, 100, "TGG")),
    }
    for name, (sid, seq) in subjects.items():
        write_fasta(os.path.join(HERE, name), [(sid, seq)])

    store = os.path.join(HERE, "refstore")
    os.makedirs(store, exist_ok=True)
    write_fasta(os.path.join(store, "tp53_ncbi.fasta"),
                [("TP53_NCBI normal homolog export", ref)])
    with open(os.path.join(store, "manifest.tsv"), "w") as f:
        f.write("file\tgene\tsource\tpriority\n")
        f.write("tp53_ncbi.fasta\tTP53\tncbi-export\t1\n")

    write_db(os.path.join(HERE, "tp53_mutdb.tsv"))


if __name__ == "__main__":
    main()
